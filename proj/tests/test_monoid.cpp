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
#include <set>

#include "substal/monoid.hpp"

using namespace substal;

namespace {

std::uint64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::uint64_t ipow(int b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= static_cast<std::uint64_t>(b);
  return r;
}

// Bell numbers by the triangle, independent of partitions().
std::uint64_t bell(int n) {
  std::vector<std::uint64_t> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto x : row) next.push_back(next.back() + x);
    row = next;
  }
  return row.front();
}

Transformation random_map(std::mt19937& rng, int n) {
  std::vector<int> v(n);
  for (auto& x : v) x = static_cast<int>(rng() % n);
  return Transformation(v);
}

}  // namespace

TEST_CASE("compose evaluates sigma(tau(i))") {
  CHECK(compose(Transformation{1, 0}, Transformation{1, 1}) == Transformation{0, 0});
  auto r01 = Transformation::replacement(3, 0, 1);
  auto t12 = Transformation::transposition(3, 1, 2);
  CHECK(r01 == Transformation{1, 1, 2});
  CHECK(t12 == Transformation{0, 2, 1});
  CHECK(compose(r01, t12) == Transformation{1, 2, 1});
  auto tau = Transformation{2, 0, 0};
  CHECK(compose(tau, Transformation::identity(3)) == tau);
}

TEST_CASE("apply is the right action") {
  Point q(2, {0, 1});
  CHECK(apply(q, Transformation{1, 0}) == Point(2, {1, 0}));
  CHECK(apply(q, Transformation{1, 1}) == Point(2, {1, 1}));
  CHECK(apply(q, Transformation::identity(2)) == q);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    auto s = random_map(rng, n);
    auto t = random_map(rng, n);
    std::vector<int> c(n);
    for (auto& x : c) x = static_cast<int>(rng() % 3);
    Point p(3, std::span<const int>(c));
    REQUIRE(apply(p, compose(s, t)) == apply(apply(p, s), t));
  }
}

TEST_CASE("points are little-endian") {
  CHECK(Point(2, {0, 1}).index() == 2);
  CHECK(Point(3, {2, 0, 1}).index() == 2 + 9);
  for (std::uint64_t i = 0; i < 27; ++i) {
    CHECK(Point::from_index(3, 3, i).index() == i);
    CHECK(Transformation::from_index(3, i).index() == i);
  }
}

TEST_CASE("hat") {
  CHECK(hat(Word(2)).is_identity());
  CHECK(hat(parse_word("s[0,1] s[0|1]", 2)) == Transformation{0, 0});
  CHECK(hat(parse_word("s[0,1] s[0,1]", 2)).is_identity());

  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    auto gens = generators(n, SignatureMode::full);
    Word u(n), v(n), uv(n);
    for (int i = 0, m = static_cast<int>(rng() % 5); i < m; ++i) u.push_back(gens[rng() % gens.size()]);
    for (int i = 0, m = static_cast<int>(rng() % 5); i < m; ++i) v.push_back(gens[rng() % gens.size()]);
    for (auto g : u.symbols()) uv.push_back(g);
    for (auto g : v.symbols()) uv.push_back(g);
    REQUIRE(hat(uv) == compose(hat(u), hat(v)));
  }
}

TEST_CASE("canonical words") {
  CHECK(canonical_word(Transformation::identity(3), SignatureMode::full).empty());
  auto w = canonical_word(Transformation{1, 0}, SignatureMode::full);
  CHECK(w.to_string() == "s[0,1]");
  auto r = canonical_word(Transformation{1, 1, 2}, SignatureMode::full);
  CHECK(r.size() == 1);
  CHECK(r.to_string() == "s[0|1]");

  for (auto mode : {SignatureMode::full, SignatureMode::transpositions,
                    SignatureMode::replacements}) {
    for (int n = 2; n <= 4; ++n) {
      for (auto const& tau : enumerate_monoid(n, mode)) {
        auto cw = canonical_word(tau, mode);
        REQUIRE(hat(cw) == tau);
        for (auto g : cw.symbols()) REQUIRE(allows(mode, g));
      }
    }
  }
  CHECK_THROWS_AS(canonical_word(Transformation{1, 1}, SignatureMode::transpositions),
                  NotGenerated);
  CHECK_THROWS_AS(canonical_word(Transformation{1, 0}, SignatureMode::replacements),
                  NotGenerated);
}

TEST_CASE("word_equiv") {
  CHECK(word_equiv(parse_word("s[1|0] s[1|0]", 2), parse_word("s[1|0]", 2)));
  CHECK_FALSE(word_equiv(parse_word("s[0,1]", 2), parse_word("s[0|1]", 2)));
  CHECK(word_equiv(Word(2), parse_word("s[0,1] s[0,1]", 2)));
  CHECK_THROWS_AS(word_equiv(Word(2), Word(3)), DimensionMismatch);
}

TEST_CASE("monoid sizes") {
  CHECK(enumerate_monoid(2, SignatureMode::full).size() == 4);
  CHECK(enumerate_monoid(3, SignatureMode::transpositions).size() == 6);
  CHECK(enumerate_monoid(3, SignatureMode::full).size() == 27);
  for (int n = 2; n <= 5; ++n) {
    CHECK(enumerate_monoid(n, SignatureMode::full).size() == ipow(n, n));
    CHECK(enumerate_monoid(n, SignatureMode::transpositions).size() == factorial(n));
    // identity plus every non-bijective map
    CHECK(enumerate_monoid(n, SignatureMode::replacements).size()
          == ipow(n, n) - factorial(n) + 1);
  }
  CHECK_THROWS_AS(enumerate_monoid(7, SignatureMode::full), LimitExceeded);
}

TEST_CASE("partitions") {
  auto p2 = partitions(2);
  REQUIRE(p2.size() == 2);
  std::set<std::string> names;
  for (auto const& p : p2) names.insert(p.to_string());
  CHECK(names == std::set<std::string>{"[0,0]", "[0,1]"});
  for (int n = 1; n <= 7; ++n) CHECK(partitions(n).size() == bell(n));
}

TEST_CASE("parsing generators and words") {
  CHECK(parse_word("s[0,1]   s[2|0]", 3).size() == 2);
  CHECK_THROWS_AS(parse_word("s[0,3]", 3), ParseError);
  CHECK_THROWS_AS(parse_word("s[1,1]", 3), ParseError);
  CHECK_THROWS_AS(parse_word("s[0|1]", 2, SignatureMode::transpositions), ParseError);
  CHECK_THROWS_AS(parse_word("s[0,1]", 2, SignatureMode::replacements), ParseError);
  CHECK(GenSym::transposition(2, 0).to_string() == "s[0,2]");
  CHECK(parse_mode("pinter") == SignatureMode::replacements);
  CHECK(parse_mode("diag") == SignatureMode::full_diagonal);
  CHECK_THROWS(parse_mode("cylindric"));
}

TEST_CASE("submonoids and stabilizers") {
  auto Sn = enumerate_monoid(3, SignatureMode::transpositions);
  CHECK(is_submonoid(Sn));
  CHECK(bijective_stabilizer(Sn).size() == 6);
  auto full = enumerate_monoid(3, SignatureMode::full);
  CHECK(bijective_stabilizer(full).size() == 6);
  std::vector<Transformation> id{Transformation::identity(3)};
  CHECK(bijective_stabilizer(id).size() == 1);
  std::vector<Transformation> bad{Transformation{1, 0}};
  CHECK_FALSE(is_submonoid(bad));
}
