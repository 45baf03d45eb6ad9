/*
 * Copyright 2026 The substal Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "substal/algebra.hpp"
#include "substal/logic.hpp"
#include "substal/random.hpp"
#include "substal/setalg.hpp"
#include "substal/terms.hpp"

using namespace substal;

namespace {

bool has_label(std::vector<Equation> const& es, std::string const& prefix) {
  return std::any_of(es.begin(), es.end(), [&](Equation const& e) {
    return e.label.rfind(prefix, 0) == 0;
  });
}

Equation const& by_label(std::vector<Equation> const& es, std::string const& label) {
  auto it = std::find_if(es.begin(), es.end(),
                         [&](Equation const& e) { return e.label == label; });
  REQUIRE(it != es.end());
  return *it;
}

}  // namespace

TEST_CASE("parse builds the expected tree") {
  auto t = parse_term("p0 & s[0|1] ~p0", 2);
  REQUIRE(t.kind() == Term::Kind::meet);
  CHECK(t.left() == Term::var(0));
  auto s = t.right();
  REQUIRE(s.kind() == Term::Kind::sub);
  CHECK(s.gen() == GenSym::replacement(0, 1));
  CHECK(s.child() == ~Term::var(0));

  auto d = parse_term("d(0,1)", 2, SignatureMode::full_diagonal);
  REQUIRE(d.kind() == Term::Kind::diag);
  CHECK(d.diag_i() == 0);
  CHECK(d.diag_j() == 1);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_term("s[0,2] p1", 2), ParseError);
  CHECK_THROWS_AS(parse_term("d(0,1)", 2), ParseError);
  CHECK_THROWS_AS(parse_term("p0 &", 2), ParseError);
  CHECK_THROWS_AS(parse_term("(p0", 2), ParseError);
  CHECK_THROWS_AS(parse_term("s[0|1] p0", 2, SignatureMode::transpositions), ParseError);
  try {
    (void)parse_term("p0 & q1", 2);
    FAIL("no error");
  } catch (ParseError const& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("implication and precedence") {
  auto t = parse_term("p0 -> p1 | p2 & p3", 2);
  CHECK(t == implies(Term::var(0), Term::var(1) | (Term::var(2) & Term::var(3))));
  CHECK(parse_term("~p0 & p1", 2) == (~Term::var(0) & Term::var(1)));
  CHECK(parse_term("s[0,1] p0 & p1", 2)
        == (Term::sub(GenSym::transposition(0, 1), Term::var(0)) & Term::var(1)));
}

TEST_CASE("print and parse round trip") {
  Rng rng(3);
  for (auto mode : {SignatureMode::full, SignatureMode::full_diagonal,
                    SignatureMode::replacements, SignatureMode::transpositions}) {
    for (int trial = 0; trial < 400; ++trial) {
      int size = 1 + static_cast<int>(rng() % 14);
      auto t = random_term(rng, 3, mode, 3, size);
      REQUIRE(term_size(t) == static_cast<std::size_t>(size));
      auto back = parse_term(to_string(t), 3, mode);
      REQUIRE(back == t);
    }
  }
}

TEST_CASE("axiom lists") {
  auto ax2 = sigma_axioms(2, SignatureMode::full);
  auto const& a11 = by_label(ax2, "A11.01");
  CHECK(a11.lhs == parse_term("s[1|0] s[1|0] p0", 2));
  CHECK(a11.rhs == parse_term("s[1|0] p0", 2));
  CHECK_FALSE(has_label(ax2, "A3."));
  CHECK_FALSE(has_label(ax2, "A7."));
  CHECK(has_label(sigma_axioms(4, SignatureMode::full), "A3."));

  auto ax3d = sigma_axioms(3, SignatureMode::full_diagonal);
  auto const& d1 = by_label(ax3d, "D1.0");
  CHECK(d1.lhs == Term::diag(0, 0));
  CHECK(d1.rhs == Term::one());

  for (auto const& e : sigma_axioms(3, SignatureMode::transpositions)) {
    CHECK(e.label.rfind("A", 0) != 0);
  }
  for (auto const& e : sigma_axioms(3, SignatureMode::replacements)) {
    CHECK(e.label.rfind("P", 0) != 0);
  }
}

TEST_CASE("evaluation in A_22") {
  auto A = small_algebra(2, 2);
  auto x = A.element({Point(2, {0, 1})});
  CHECK(eval_term(A, Term::one(), {}) == A.one());
  CHECK(eval_term(A, parse_term("s[0|1] p0", 2), {x}).none());
  CHECK(eval_term(A, parse_term("s[0,1] p0", 2), {x}) == A.element({Point(2, {1, 0})}));
  CHECK_THROWS_AS(eval_term(A, Term::var(1), {x}), UnboundVariable);
}

TEST_CASE("exhaustive equation checks") {
  auto A21 = small_algebra(2, 1);
  auto A22 = small_algebra(2, 2);
  for (auto const& e : sigma_axioms(2, SignatureMode::full)) {
    CHECK(equation_holds_exhaustive(A21, e));
    CHECK(equation_holds_exhaustive(A22, e));
  }
  auto swap = parse_equation("p0 = s[0,1] p0", 2);
  auto cex = find_counterexample(A22, swap);
  REQUIRE(cex);
  CHECK(eval_term(A22, swap.lhs, *cex) != eval_term(A22, swap.rhs, *cex));
  CHECK(equation_holds_exhaustive(A22, parse_equation("p0 = p0", 2)));
}

TEST_CASE("axioms hold in every small algebra") {
  for (int n = 2; n <= 3; ++n) {
    for (int k = 1; k <= n; ++k) {
      if (n == 3 && k == 3) continue;
      auto A = small_algebra(n, k, SignatureMode::full_diagonal);
      for (auto const& e : sigma_axioms(n, SignatureMode::full_diagonal)) {
        if (var_count(e) * A.unit_size() > 22) continue;
        INFO(e.label);
        REQUIRE(equation_holds_exhaustive(A, e));
      }
    }
  }
}

TEST_CASE("the printed form of the last replacement axiom is refuted") {
  auto printed = parse_equation("s[1|0] s[0,1] p0 = s[0,1] p0", 2);
  CHECK_FALSE(valid(printed, 2));
  CHECK_FALSE(equation_holds_exhaustive(small_algebra(2, 2), printed));
  auto fixed = parse_equation("s[1|0] s[0,1] p0 = s[1|0] p0", 2);
  CHECK(valid(fixed, 2));
}

TEST_CASE("complements commute with substitutions") {
  auto A = small_algebra(3, 2);
  auto x = A.element({Point(2, {0, 1, 1}), Point(2, {1, 0, 0}), Point(2, {1, 1, 1})});
  for (auto const& g : generators(3, SignatureMode::full)) {
    CHECK(A.subst(g, A.complement(x)) == A.complement(A.subst(g, x)));
  }
}

TEST_CASE("quasi-equation schemas") {
  auto full = enumerate_monoid(2, SignatureMode::full);
  CHECK(quasi_axioms(2, full).size() == 2);
  auto S2 = enumerate_monoid(2, SignatureMode::transpositions);
  auto q = quasi_axioms(2, S2, SignatureMode::transpositions);
  REQUIRE(q.size() == 2);
  CHECK(q[0].premises.size() == 1);
  std::vector<Transformation> id{Transformation::identity(3)};
  auto qi = quasi_axioms(3, id);
  REQUIRE(qi.size() == 1);
  CHECK(qi[0].label == "Q.[0,1,2]");
  CHECK_THROWS_AS(quasi_axioms(2, std::vector<Transformation>{Transformation{1, 0}}),
                  InvalidInput);
}
