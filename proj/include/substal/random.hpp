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

// Seeded generators for formulas and coherent frames.

#ifndef SUBSTAL_RANDOM_HPP_
#define SUBSTAL_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "substal/frames.hpp"
#include "substal/monoid.hpp"
#include "substal/terms.hpp"

namespace substal {

using Rng = std::mt19937_64;

namespace detail {
  inline std::size_t pick(Rng& rng, std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  }
}  // namespace detail

/// A term with exactly size nodes over variables p0 .. p(vars-1).
inline Term random_term(Rng& rng, int n, SignatureMode mode, int vars, int size) {
  if (size < 1) {
    throw InvalidInput("random_term: size must be positive");
  }
  if (size == 1) {
    std::size_t leaves = static_cast<std::size_t>(vars) + 2
                         + (has_diagonals(mode) ? 1 : 0);
    auto c = detail::pick(rng, leaves);
    if (c < static_cast<std::size_t>(vars)) {
      return Term::var(static_cast<int>(c));
    }
    c -= static_cast<std::size_t>(vars);
    if (c == 0) {
      return Term::zero();
    }
    if (c == 1) {
      return Term::one();
    }
    int i = static_cast<int>(detail::pick(rng, static_cast<std::size_t>(n)));
    int j = static_cast<int>(detail::pick(rng, static_cast<std::size_t>(n)));
    return Term::diag(i, j);
  }
  auto gens = generators(n, mode);
  auto c = detail::pick(rng, size >= 3 ? 4 : 2);
  if (c == 0) {
    return ~random_term(rng, n, mode, vars, size - 1);
  }
  if (c == 1) {
    return Term::sub(gens[detail::pick(rng, gens.size())],
                     random_term(rng, n, mode, vars, size - 1));
  }
  int left = 1 + static_cast<int>(detail::pick(rng, static_cast<std::size_t>(size - 2)));
  auto l = random_term(rng, n, mode, vars, left);
  auto r = random_term(rng, n, mode, vars, size - 1 - left);
  return c == 2 ? (l & r) : (l | r);
}

/// A coherent frame with at most max_worlds worlds: the orbit of a random
/// point of ^n k for random k <= n, cut down by random congruence merges,
/// sometimes joined with a second such frame.  Not for mode diag.
inline Frame random_coherent_frame(Rng& rng, int n, SignatureMode mode,
                                   std::size_t max_worlds = 8) {
  if (has_diagonals(mode)) {
    throw InvalidInput("random_coherent_frame: mode diag is not supported");
  }
  auto one = [&](std::size_t cap) {
    int k = 1 + static_cast<int>(detail::pick(rng, static_cast<std::size_t>(n)));
    auto P = point_frame(n, k, mode);
    auto seed = static_cast<std::uint32_t>(detail::pick(rng, P.size()));
    auto F = generated_subframe(P, {seed}).first;
    while (F.size() > cap) {
      auto a = static_cast<std::uint32_t>(detail::pick(rng, F.size()));
      auto b = static_cast<std::uint32_t>(detail::pick(rng, F.size()));
      if (a != b) {
        F = congruence_quotient(F, {{a, b}}).first;
      }
    }
    return F;
  };
  auto F = one(max_worlds);
  if (F.size() < max_worlds && detail::pick(rng, 3) == 0) {
    auto G = one(max_worlds - F.size());
    F = disjoint_union({F, G});
  }
  return F;
}

}  // namespace substal

#endif  // SUBSTAL_RANDOM_HPP_
