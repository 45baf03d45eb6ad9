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

#include <random>

#include "substal/algebra.hpp"
#include "substal/logic.hpp"
#include "substal/random.hpp"
#include "substal/setalg.hpp"

using namespace substal;

namespace {

// Every valuation of p0 over ^2 k, every world.
bool brute_sat(Term const& phi, int k) {
  auto F = point_frame(2, k);
  std::size_t space = F.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << space); ++mask) {
    Model M{F, {PointSet::from_mask(space, mask)}};
    for (std::uint32_t w = 0; w < space; ++w)
      if (model_check(M, w, phi)) return true;
  }
  return false;
}

std::vector<Term> small_terms(int nodes) {
  std::vector<std::vector<Term>> by(static_cast<std::size_t>(nodes) + 1);
  by[1] = {Term::var(0), Term::zero(), Term::one()};
  auto gens = generators(2, SignatureMode::full);
  for (int s = 2; s <= nodes; ++s) {
    for (auto const& t : by[s - 1]) {
      by[s].push_back(~t);
      for (auto g : gens) by[s].push_back(Term::sub(g, t));
    }
    for (int l = 1; l + 1 < s; ++l) {
      for (auto const& a : by[l])
        for (auto const& b : by[s - 1 - l]) {
          by[s].push_back(a & b);
          by[s].push_back(a | b);
        }
    }
  }
  std::vector<Term> all;
  for (auto const& v : by) all.insert(all.end(), v.begin(), v.end());
  return all;
}

}  // namespace

TEST_CASE("model checking") {
  Model M{point_frame(2, 2), {PointSet::from_indices(4, {Point(2, {0, 1}).index()})}};
  auto w = static_cast<std::uint32_t>(Point(2, {0, 1}).index());
  CHECK(model_check(M, w, Term::var(0)));
  CHECK_FALSE(model_check(M, w, parse_term("s[0|1] p0", 2)));
  CHECK(model_check(M, w, Term::one()));
  CHECK(model_check(M, static_cast<std::uint32_t>(Point(2, {1, 0}).index()),
                    parse_term("s[0,1] p0", 2)));
}

TEST_CASE("unfolding") {
  auto phi = parse_term("p0 & s[0|1] ~p0", 2);
  auto u = unfold(phi, Point(2, {0, 1}));
  CHECK(u.to_string() == "(p0@(0,1) & ~p0@(1,1))");
  CHECK(u.touched().size() == 2);
  auto d = unfold(phi, Point(2, {0, 0}));
  CHECK(d.to_string() == "(p0@(0,0) & ~p0@(0,0))");
  CHECK_FALSE(prop_sat(d));
  CHECK(unfold(Term::diag(0, 1), Point(2, {0, 1})).to_string() == "F");
}

TEST_CASE("propositional solver") {
  PropFormula c;
  auto a = c.atom(0, 0);
  c.set_root(c.conjunction(a, c.negation(c.atom(0, 0))));
  CHECK_FALSE(prop_sat(c));

  PropFormula d;
  auto x = d.atom(0, 0);
  auto y = d.atom(1, 0);
  d.set_root(d.conjunction(x, d.negation(y)));
  auto s = prop_sat(d);
  REQUIRE(s);
  CHECK((*s)[0]);
  CHECK_FALSE((*s)[1]);

  PropFormula f;
  f.set_root(f.constant(false));
  CHECK_FALSE(prop_sat(f));

  Rng rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    auto phi = random_term(rng, 3, SignatureMode::full, 3, 1 + static_cast<int>(rng() % 20));
    auto psi = unfold(phi, Point(3, {0, 1, 2}));
    auto fast = prop_sat(psi);
    auto slow = prop_sat_brute(psi);
    REQUIRE(fast.has_value() == slow.has_value());
    if (fast) REQUIRE(psi.evaluate(*fast));
  }
}

TEST_CASE("satisfiability examples") {
  auto r = satisfiable(parse_term("p0 & s[0|1] ~p0", 2), 2);
  REQUIRE(r.sat);
  CHECK(r.partition.to_string() == "[0,1]");
  CHECK(r.touched.size() == 2);
  CHECK(r.touched.size() <= r.modalities + 1);
  CHECK(r.tried == 2);
  CHECK_FALSE(satisfiable(parse_term("p0 & ~(s[0,1] s[0,1] p0)", 2), 2).sat);
  auto d = satisfiable(parse_term("~d(0,1)", 2, SignatureMode::full_diagonal), 2,
                       SignatureMode::full_diagonal);
  REQUIRE(d.sat);
  CHECK(d.partition.to_string() == "[0,1]");
  CHECK_THROWS_AS(satisfiable(Term::one(), 9), LimitExceeded);
}

TEST_CASE("validity") {
  for (auto const& e : sigma_axioms(3, SignatureMode::full)) {
    INFO(e.label);
    REQUIRE(valid(e, 3));
  }
  auto swap = parse_equation("p0 = s[0,1] p0", 2);
  CHECK_FALSE(valid(swap, 2));
  auto r = refute(swap, 2);
  REQUIRE(r.sat);
  CHECK(valid(parse_equation("1 = 1", 2), 2));
}

TEST_CASE("validity agrees with exhaustive checking on A_21 and A_22") {
  std::vector<Equation> corpus = sigma_axioms(2, SignatureMode::full);
  for (auto text : {"p0 = s[0,1] p0", "s[0|1] p0 = s[1|0] p0", "s[0|1] s[1|0] p0 = s[1|0] p0",
                    "s[0|1] s[0,1] p0 = s[0,1] s[1|0] p0", "s[0,1] (p0 & p1) = s[0,1] p0"}) {
    corpus.push_back(parse_equation(text, 2));
  }
  for (auto const& e : corpus) {
    bool exhaustive = equation_holds_exhaustive(small_algebra(2, 1), e)
                      && equation_holds_exhaustive(small_algebra(2, 2), e);
    INFO(to_string(e));
    REQUIRE(valid(e, 2) == exhaustive);
  }
}

TEST_CASE("truth lemma") {
  Rng rng(77);
  for (int trial = 0; trial < 10000; ++trial) {
    int n = 2 + static_cast<int>(rng() % 2);
    int k = 1 + static_cast<int>(rng() % n);
    auto F = point_frame(n, k);
    auto phi = random_term(rng, n, SignatureMode::full, 2, 1 + static_cast<int>(rng() % 12));
    Model M{F, {PointSet(F.size()), PointSet(F.size())}};
    for (auto& v : M.valuation)
      for (std::size_t p = 0; p < F.size(); ++p)
        if (rng() & 1u) v.set(p);
    auto w = static_cast<std::uint32_t>(rng() % F.size());
    auto psi = unfold(phi, Point::from_index(n, k, w));
    std::vector<bool> assignment;
    for (auto [var, p] : psi.atoms()) assignment.push_back(M.valuation[var].test(p));
    REQUIRE(psi.evaluate(assignment) == model_check(M, w, phi));
  }
}

TEST_CASE("satisfiable agrees with brute force on tiny formulas") {
  auto terms = small_terms(3);
  CHECK(terms.size() == 3 + 12 + (4 * 12 + 2 * 9 * 1));
  for (auto const& phi : terms) {
    bool brute = brute_sat(phi, 1) || brute_sat(phi, 2);
    CHECK_FALSE(brute_sat(phi, 0));
    INFO(to_string(phi));
    REQUIRE(satisfiable(phi, 2).sat == brute);
  }
}

TEST_CASE("polysize witnesses") {
  Rng rng(12);
  int found = 0;
  while (found < 300) {
    auto phi = random_term(rng, 3, SignatureMode::full, 2, 1 + static_cast<int>(rng() % 12));
    auto r = satisfiable(phi, 3);
    if (!r.sat) continue;
    ++found;
    REQUIRE(r.touched.size() <= r.modalities + 1);
  }
}
