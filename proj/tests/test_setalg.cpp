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
#include "substal/setalg.hpp"

using namespace substal;

namespace {

// { q in unit : q o tau in X } straight from the definition.
PointSet preimage_by_definition(ConcreteAlgebra const& A, Transformation const& tau,
                                PointSet const& X) {
  PointSet out = A.zero();
  for (std::size_t r = 0; r < A.unit_size(); ++r) {
    auto l = A.local_index(apply(A.point(r), tau));
    if (l && X.test(*l)) out.set(r);
  }
  return out;
}

PointSet random_element(std::mt19937& rng, ConcreteAlgebra const& A) {
  PointSet x = A.zero();
  for (std::size_t r = 0; r < A.unit_size(); ++r)
    if (rng() & 1u) x.set(r);
  return x;
}

}  // namespace

TEST_CASE("small algebras") {
  auto A = small_algebra(2, 2);
  CHECK(A.unit_size() == 4);
  CHECK(element_count(A) == 16);
  CHECK(A.is_full());
  auto E = small_algebra(2, 0);
  CHECK(E.unit_size() == 0);
  CHECK(E.zero() == E.one());
  CHECK(elements(E).size() == 1);
  CHECK(small_algebra(3, 3).unit_size() == 27);
  CHECK_THROWS_AS(small_algebra(8, 16), BudgetExceeded);
}

TEST_CASE("substitution tables") {
  auto A = small_algebra(2, 2);
  auto one1 = A.element({Point(2, {1, 1})});
  CHECK(A.subst(GenSym::replacement(0, 1), one1)
        == A.element({Point(2, {0, 1}), Point(2, {1, 1})}));
  CHECK(A.subst(GenSym::transposition(0, 1), A.element({Point(2, {0, 1})}))
        == A.element({Point(2, {1, 0})}));
  for (auto const& g : generators(2, SignatureMode::full)) {
    CHECK(A.subst(g, A.one()) == A.one());
    CHECK(A.subst(g, A.zero()) == A.zero());
  }

  std::mt19937 rng(5);
  for (int n = 2; n <= 3; ++n) {
    for (int k = 1; k <= 3; ++k) {
      auto B = small_algebra(n, k);
      for (int trial = 0; trial < 40; ++trial) {
        auto x = random_element(rng, B);
        for (auto const& tau : enumerate_monoid(n, SignatureMode::full)) {
          REQUIRE(B.subst(tau, x) == preimage_by_definition(B, tau, x));
        }
      }
    }
  }
}

TEST_CASE("substitution respects composition and the Boolean operations") {
  std::mt19937 rng(9);
  auto A = small_algebra(3, 3);
  auto monoid = enumerate_monoid(3, SignatureMode::full);
  for (int trial = 0; trial < 200; ++trial) {
    auto x = random_element(rng, A);
    auto y = random_element(rng, A);
    auto const& s = monoid[rng() % monoid.size()];
    auto const& t = monoid[rng() % monoid.size()];
    REQUIRE(A.subst(compose(s, t), x) == A.subst(s, A.subst(t, x)));
    REQUIRE(A.subst(s, x | y) == (A.subst(s, x) | A.subst(s, y)));
    REQUIRE(A.subst(s, x & y) == (A.subst(s, x) & A.subst(s, y)));
    REQUIRE(A.subst(s, A.complement(x)) == A.complement(A.subst(s, x)));
    auto w = canonical_word(s, SignatureMode::full);
    REQUIRE(subst_word(A, w, x) == A.subst(s, x));
  }
}

TEST_CASE("diagonals") {
  auto A = small_algebra(2, 2, SignatureMode::full_diagonal);
  CHECK(A.diag(0, 1) == A.element({Point(2, {0, 0}), Point(2, {1, 1})}));
  CHECK(A.diag(1, 1) == A.one());
  CHECK(small_algebra(2, 1, SignatureMode::full_diagonal).diag(0, 1)
        == small_algebra(2, 1, SignatureMode::full_diagonal).one());
  CHECK_THROWS_AS(small_algebra(2, 2).diag(0, 1), ModeMismatch);
}

TEST_CASE("relativized algebras") {
  std::vector<Point> V{Point(2, {0, 1}), Point(2, {1, 0})};
  auto B = make_relativized(2, 2, V, SignatureMode::transpositions);
  CHECK(B.unit_size() == 2);
  CHECK(B.subst(GenSym::transposition(0, 1), B.element({V[1]})) == B.element({V[0]}));
  try {
    (void)make_relativized(2, 2, V, SignatureMode::full);
    FAIL("accepted a unit that is not locally square");
  } catch (NotLocallySquare const& e) {
    CHECK(e.point() == Point(2, {0, 1}));
    CHECK(e.gen() == GenSym::replacement(0, 1));
  }
  auto all = make_relativized(2, 2, PointSet::full(4));
  CHECK(all.is_full());
}

TEST_CASE("relativization homomorphisms") {
  auto A = small_algebra(2, 2);
  auto D = A.element({Point(2, {0, 0}), Point(2, {1, 1})});
  auto r = relativization_hom(A, D);
  CHECK(r.report.ok);
  CHECK(r.report.exhaustive);
  CHECK(r.target.unit_size() == 2);
  CHECK(relativization_hom(A, A.one()).report.ok);
  auto e = relativization_hom(A, A.zero());
  CHECK(e.report.ok);
  CHECK(elements(e.target).size() == 1);

  auto Ad = small_algebra(3, 2, SignatureMode::full_diagonal);
  auto diag = Ad.diag(0, 1) & Ad.diag(1, 2);
  CHECK(relativization_hom(Ad, diag).report.ok);
}

TEST_CASE("a wrong map is caught") {
  auto A = small_algebra(2, 2);
  auto rep = check_homomorphism(A, A, [](PointSet const& x) { return x; });
  CHECK(rep.ok);
  auto swap = GenSym::transposition(0, 1);
  auto rep1 = check_homomorphism(A, A, [&](PointSet const& x) { return A.subst(swap, x); });
  CHECK_FALSE(rep1.ok);  // Boolean automorphism, but moves s[0|1] to s[1|0]
  auto rep2 = check_homomorphism(A, A, [&](PointSet const& x) {
    return A.subst(GenSym::replacement(0, 1), x);
  });
  CHECK_FALSE(rep2.ok);
}

TEST_CASE("generated subalgebras") {
  auto A = small_algebra(2, 2);
  auto triv = generate_subalgebra(A, {});
  CHECK(triv.size() == 2);
  auto x = A.element({Point(2, {0, 1})});
  auto S = generate_subalgebra(A, {x});
  CHECK(std::find(S.begin(), S.end(), A.subst(GenSym::transposition(0, 1), x)) != S.end());
  CHECK(S.size() <= 16);
  auto atoms = subalgebra_atoms(A, {x});
  CHECK(atoms.size() == S.size());
  auto orbit = substitution_orbit(A, {x});
  CHECK(boolean_closure(A, orbit).size() == S.size());
}

TEST_CASE("rectangles") {
  auto A = small_algebra(2, 3);
  auto R = rectangle(A, {0b001, 0b110});
  CHECK(A.subst(GenSym::transposition(0, 1), R) == rectangle(A, {0b110, 0b001}));
  CHECK(A.subst(GenSym::replacement(1, 0), rectangle(A, {0b011, 0b110}))
        == rectangle(A, {0b010, 0b111}));
  CHECK(A.subst(GenSym::replacement(0, 1), rectangle(A, {0b011, 0b110}))
        == rectangle(A, {0b111, 0b010}));
}

TEST_CASE("axioms hold in relativized algebras") {
  std::vector<Point> V{Point(2, {0, 1, 1}), Point(2, {1, 0, 1}), Point(2, {1, 1, 0})};
  auto B = make_relativized(3, 2, V, SignatureMode::transpositions);
  for (auto const& e : sigma_axioms(3, SignatureMode::transpositions)) {
    INFO(e.label);
    REQUIRE(equation_holds_exhaustive(B, e));
  }
}
