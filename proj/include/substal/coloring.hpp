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

#ifndef SUBSTAL_COLORING_HPP_
#define SUBSTAL_COLORING_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "substal/error.hpp"
#include "substal/point_set.hpp"

namespace substal {

struct ColoringResult {
  /// X with q in X iff g(q) not in X, when one exists.
  std::optional<PointSet> solution;
  /// A fixed point of g, or a world on an odd cycle, when none exists.
  std::optional<std::uint32_t> obstruction;
  bool fixed_point = false;
};

/// Seeks X with q in X <=> g(q) notin X for every q, by 2-coloring the
/// undirected graph with edges {q, g(q)}.
inline ColoringResult alternating_coloring(std::vector<std::uint32_t> const& g) {
  std::size_t m = g.size();
  std::vector<std::vector<std::uint32_t>> adj(m);
  for (std::uint32_t q = 0; q < m; ++q) {
    if (g[q] >= m) {
      throw InvalidInput("alternating_coloring: map leaves the set");
    }
    if (g[q] == q) {
      return ColoringResult{std::nullopt, q, true};
    }
    adj[q].push_back(g[q]);
    adj[g[q]].push_back(q);
  }
  std::vector<int> color(m, -1);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t s = 0; s < m; ++s) {
    if (color[s] >= 0) {
      continue;
    }
    color[s] = 1;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto q = queue[head];
      for (auto r : adj[q]) {
        if (color[r] < 0) {
          color[r] = 1 - color[q];
          queue.push_back(r);
        } else if (color[r] == color[q]) {
          return ColoringResult{std::nullopt, q, false};
        }
      }
    }
  }
  PointSet X(m);
  for (std::uint32_t q = 0; q < m; ++q) {
    if (color[q] == 1) {
      X.set(q);
    }
  }
  return ColoringResult{X, std::nullopt, false};
}

/// Reference search over all 2^m subsets (m <= 24).
inline std::optional<PointSet> alternating_coloring_exhaustive(
    std::vector<std::uint32_t> const& g) {
  std::size_t m = g.size();
  if (m > 24) {
    throw BudgetExceeded("alternating_coloring_exhaustive: more than 24 worlds");
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    bool ok = true;
    for (std::size_t q = 0; q < m && ok; ++q) {
      ok = ((mask >> q) & 1u) != ((mask >> g[q]) & 1u);
    }
    if (ok) {
      return PointSet::from_mask(m, mask);
    }
  }
  return std::nullopt;
}

}  // namespace substal

#endif  // SUBSTAL_COLORING_HPP_
