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

#include "substal/coloring.hpp"
#include "substal/gallery.hpp"
#include "substal/random.hpp"

using namespace substal;

TEST_CASE("alternating colorings") {
  auto two = alternating_coloring({1, 0});
  REQUIRE(two.solution);
  CHECK(two.solution->count() == 1);

  auto tri = alternating_coloring({1, 2, 0});
  CHECK_FALSE(tri.solution);
  CHECK_FALSE(tri.fixed_point);

  auto fix = alternating_coloring({1, 0, 2});
  CHECK_FALSE(fix.solution);
  CHECK(fix.fixed_point);
  CHECK(fix.obstruction == 2u);

  // a tail into an even cycle is fine
  auto tail = alternating_coloring({1, 0, 0, 2});
  REQUIRE(tail.solution);

  CHECK_THROWS_AS(alternating_coloring({3, 0}), InvalidInput);

  Rng rng(3);
  for (int trial = 0; trial < 2000; ++trial) {
    std::size_t m = 1 + rng() % 10;
    std::vector<std::uint32_t> g(m);
    for (auto& v : g) v = static_cast<std::uint32_t>(rng() % m);
    auto fast = alternating_coloring(g);
    auto slow = alternating_coloring_exhaustive(g);
    REQUIRE(fast.solution.has_value() == slow.has_value());
    if (fast.solution) {
      for (std::uint32_t q = 0; q < m; ++q)
        REQUIRE(fast.solution->test(q) != fast.solution->test(g[q]));
    }
  }
}

TEST_CASE("one-zero points and the pairing") {
  CHECK(one_zero_point(3, 1) == Point(2, {1, 0, 1}));
  CHECK(pairing_permutation(4).to_string() == "[1,0,3,2]");
  CHECK(pairing_permutation(5).to_string() == "[1,0,3,2,4]");
}

TEST_CASE("the two-dimensional witness") {
  auto r = not_a_variety_witness(2);
  CHECK(r.report.ok());
  CHECK(r.g_closed);
  CHECK(r.f.to_string() == "[1,0]");
  CHECK(r.X.count() == 1);
  CHECK(r.small_hold == std::vector<bool>{true, true});
  CHECK(r.alternative_witness);
  auto B = make_relativized(2, 2, {one_zero_point(2, 0), one_zero_point(2, 1)},
                            SignatureMode::transpositions);
  CHECK(r.X == B.element({Point(2, {1, 0})}));
  CHECK(B.subst(r.f, r.X) == B.element({Point(2, {0, 1})}));
}

TEST_CASE("even dimensions carry the witness") {
  for (int n : {4, 6}) {
    auto r = not_a_variety_witness(n);
    INFO(n);
    CHECK(r.report.ok());
    CHECK(r.shift);
    CHECK(r.witness);
  }
}

TEST_CASE("odd dimensions leave a fixed coordinate") {
  for (int n : {3, 5}) {
    auto r = not_a_variety_witness(n);
    INFO(n);
    CHECK(r.g_closed);
    CHECK_FALSE(r.witness);
    CHECK(r.report.failures.size() == 1);
    CHECK(r.alternative_witness);
    for (bool b : r.small_hold) CHECK(b);
  }
}

TEST_CASE("product identities") {
  for (int n : {2, 3}) {
    for (int k = 1; k <= 4; ++k) {
      auto r = product_identities(k, n);
      INFO(n << " " << k);
      CHECK(r.ok());
      CHECK(r.instances > 0);
    }
  }
  CHECK_THROWS_AS(product_identities(0), InvalidInput);
}

TEST_CASE("truncated partition algebra") {
  auto r = counter2_truncation({2, 4});
  for (auto const& f : r.failures) UNSCOPED_INFO(f);
  CHECK(r.ok());
  CHECK(r.instances > 0);

  IntSet fin{IntSet::Kind::finite, {1, 2}};
  IntSet cof{IntSet::Kind::cofinite, {1}};
  CHECK(fin.contains(2));
  CHECK_FALSE(fin.contains(3));
  CHECK(cof.contains(2));
  CHECK_FALSE(cof.contains(1));
  CHECK_FALSE(default_oracle(fin));
  CHECK(default_oracle(cof));
  CHECK_THROWS_AS(default_oracle(IntSet{IntSet::Kind::other, {}}), InvalidInput);

  auto wrong = counter2_truncation({2, 2}, [](IntSet const&) { return false; });
  CHECK_FALSE(wrong.ok());
  CHECK_THROWS_AS(counter2_truncation({2, 0}), InvalidInput);
}

TEST_CASE("truncation in three dimensions breaks symmetry") {
  auto r = counter2_truncation({3, 2});
  CHECK_FALSE(r.ok());
  for (auto const& f : r.failures)
    CHECK(f.find("symmetric") != std::string::npos);
}
