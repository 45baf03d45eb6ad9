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
#include "substal/frames.hpp"
#include "substal/random.hpp"
#include "substal/setalg.hpp"
#include "substal/terms.hpp"

using namespace substal;

namespace {

// Calls fn on every frame with the given number of worlds, every action an
// arbitrary self-map.
template <class Fn>
void for_each_frame(int n, SignatureMode mode, std::uint32_t worlds, Fn&& fn) {
  auto gens = generators(n, mode);
  std::size_t slots = gens.size() * worlds;
  std::vector<std::uint32_t> digits(slots, 0);
  while (true) {
    std::vector<WorldMap> acts(gens.size(), WorldMap(worlds));
    for (std::size_t s = 0; s < slots; ++s) acts[s / worlds][s % worlds] = digits[s];
    fn(Frame(n, mode, worlds, std::move(acts)));
    std::size_t pos = 0;
    while (pos < slots && ++digits[pos] == worlds) digits[pos++] = 0;
    if (pos == slots) return;
  }
}

bool axioms_hold(FinAlgebra const& A, std::vector<Equation> const& axioms) {
  for (auto const& e : axioms) {
    if (!equation_holds_exhaustive(A, e)) return false;
  }
  return true;
}

std::vector<Equation> non_boolean(std::vector<Equation> all) {
  std::vector<Equation> out;
  for (auto& e : all)
    if (e.label.rfind("B", 0) != 0 && e.label.rfind("E.", 0) != 0) out.push_back(std::move(e));
  return out;
}

}  // namespace

TEST_CASE("point frames are coherent") {
  for (auto mode : {SignatureMode::full, SignatureMode::transpositions,
                    SignatureMode::replacements, SignatureMode::full_diagonal}) {
    for (int n = 2; n <= 3; ++n) {
      for (int k = 1; k <= n; ++k) {
        auto r = frame_check(point_frame(n, k, mode));
        INFO(r.failure);
        CHECK(r.ok);
        CHECK(r.all_pairs);
      }
    }
  }
  auto one = Frame(2, SignatureMode::full, 1, {{0}, {0}, {0}});
  CHECK(frame_check(one).ok);
}

TEST_CASE("two worlds with a swap and two constants") {
  // s[0,1] = (a b), s[0|1] = const a, s[1|0] = const b
  Frame F(2, SignatureMode::full, 2, {{1, 0}, {0, 0}, {1, 1}});
  auto r = frame_check(F);
  auto ax = non_boolean(sigma_axioms(2, SignatureMode::full));
  CHECK(r.ok == axioms_hold(FinAlgebra(F), ax));
  CHECK_FALSE(r.ok);
  CHECK_THROWS_AS(complex_algebra(F), InvalidFrame);
}

TEST_CASE("frame_check agrees with the axioms on all small frames") {
  for (auto mode : {SignatureMode::full, SignatureMode::replacements,
                    SignatureMode::transpositions}) {
    auto ax = non_boolean(sigma_axioms(2, mode));
    std::uint64_t accepted = 0, total = 0;
    for (std::uint32_t w = 1; w <= 3; ++w) {
      for_each_frame(2, mode, w, [&](Frame const& F) {
        bool coherent = frame_check(F).ok;
        bool sound = axioms_hold(FinAlgebra(F), ax);
        ++total;
        accepted += coherent;
        if (coherent != sound) {
          FAIL("disagreement on a frame with " << w << " worlds in mode "
                                               << to_string(mode));
        }
      });
    }
    CHECK(accepted > 0);
    CHECK(accepted < total);
  }
}

TEST_CASE("complex algebras") {
  auto A = small_algebra(2, 2);
  auto C = complex_algebra(point_frame(2, 2));
  for (auto const& x : elements(A)) {
    for (auto const& g : generators(2, SignatureMode::full)) {
      REQUIRE(C.subst(g, x) == A.subst(g, x));
    }
  }
  auto S = complex_algebra(Frame(2, SignatureMode::full, 1, {{0}, {0}, {0}}));
  CHECK(elements(S).size() == 2);
  for (auto const& g : generators(2, SignatureMode::full)) {
    CHECK(S.subst(g, S.one()) == S.one());
    CHECK(S.subst(g, S.zero()) == S.zero());
    CHECK(C.subst(g, C.zero()).none());
  }
}

TEST_CASE("atom frames invert complex algebras") {
  auto P = point_frame(2, 2);
  auto back = atom_frame(small_algebra(2, 2));
  CHECK(back.actions() == P.actions());

  auto single = atom_frame(complex_algebra(Frame(2, SignatureMode::full, 1, {{0}, {0}, {0}})));
  CHECK(single.size() == 1);

  Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + trial % 2;
    auto F = random_coherent_frame(rng, n, SignatureMode::full);
    auto A = complex_algebra(F);
    auto G = atom_frame(A);
    CHECK(G.actions() == F.actions());
    // a proper subalgebra, through its atoms
    std::vector<PointSet> gens{A.atom(0)};
    auto sub = subalgebra_atoms(A, gens);
    auto H = atom_frame(A, sub);
    REQUIRE(frame_check(H).ok);
    auto e = inclusion(A, sub);
    CHECK(embedding_defect(e).empty());
  }
}

TEST_CASE("generated subframes, quotients and disjoint unions") {
  auto P = point_frame(3, 3);
  auto [sub, old_of] = generated_subframe(P, {static_cast<std::uint32_t>(Point(3, {0, 1, 2}).index())});
  CHECK(sub.size() == 27);
  auto [small, m] = generated_subframe(P, {static_cast<std::uint32_t>(Point(3, {0, 0, 1}).index())});
  CHECK(small.size() == 8);
  CHECK(frame_check(small).ok);
  auto [q, cls] = congruence_quotient(small, {{0, 7}});
  CHECK(frame_check(q).ok);
  CHECK(q.size() < small.size());

  auto U = disjoint_union({point_frame(2, 1), point_frame(2, 2)});
  CHECK(U.size() == 5);
  CHECK(frame_check(U).ok);
  CHECK(complex_algebra(U).atom_count() == 5);
  CHECK(disjoint_union({P}).actions() == P.actions());
}

TEST_CASE("random coherent frames") {
  Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    auto mode = std::array{SignatureMode::full, SignatureMode::replacements,
                           SignatureMode::transpositions}[trial % 3];
    auto F = random_coherent_frame(rng, 2 + trial % 2, mode);
    REQUIRE(F.size() <= 8);
    REQUIRE(frame_check(F).ok);
  }
}

TEST_CASE("equivariant maps pull back to homomorphisms") {
  auto P = point_frame(2, 2);
  auto [q, cls] = congruence_quotient(P, {{0, 3}});
  Equivariant e{P, q, cls};
  REQUIRE(is_equivariant(e));
  auto C = complex_algebra(q);
  auto D = complex_algebra(P);
  for (auto const& x : elements(C)) {
    for (auto const& g : generators(2, SignatureMode::full)) {
      REQUIRE(pull_back(e, C.subst(g, x)) == D.subst(g, pull_back(e, x)));
    }
  }
  Equivariant bad{P, P, {1, 0, 3, 2}};
  CHECK_FALSE(is_equivariant(bad));
}

TEST_CASE("INSEP products") {
  auto P = point_frame(2, 2);
  WorldMap id{0, 1, 2, 3};
  auto z = insep_zigzag({P, P, id}, {P, P, id});
  CHECK(z.frame.size() == 4);
  CHECK(z.left_surjective);
  CHECK(z.right_surjective);

  auto one = point_frame(2, 1);
  auto full = insep_zigzag({P, one, {0, 0, 0, 0}}, {P, one, {0, 0, 0, 0}});
  CHECK(full.frame.size() == 16);
  CHECK(frame_check(full.frame).ok);

  auto fiber = insep_zigzag({P, one, {0, 0, 0, 0}}, {one, one, {0}});
  CHECK(fiber.frame.size() == 4);
}

TEST_CASE("superamalgams") {
  auto A = complex_algebra(point_frame(2, 2));
  std::vector<PointSet> id_images;
  for (std::size_t w = 0; w < 4; ++w) id_images.push_back(A.atom(w));
  Embedding idf{A, A, id_images};
  auto s = superamalgam(idf, idf);
  CHECK(s.report.ok());
  CHECK(s.D.atom_count() == 4);

  SubAlgebra two{2, SignatureMode::full, {A.one()}, 4};
  auto f = inclusion(A, two);
  auto t = superamalgam(f, f);
  INFO(t.report.failure);
  CHECK(t.report.ok());
  CHECK(t.report.pairs == 256);
  CHECK(t.D.atom_count() == 16);

  Embedding broken{A, A, {A.atom(0), A.atom(0), A.atom(2), A.atom(3)}};
  CHECK_THROWS_AS(superamalgam(broken, idf), NotEmbedding);
}
