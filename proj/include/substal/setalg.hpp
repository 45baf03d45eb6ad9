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

// Set algebras over locally square units V of ^n k.
//
// Elements are PointSets over the *local* index of V: local index r is the
// r-th point of V in increasing global index order.  When V is all of ^n k
// the two indexings coincide.

#ifndef SUBSTAL_SETALG_HPP_
#define SUBSTAL_SETALG_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "substal/algebra.hpp"
#include "substal/error.hpp"
#include "substal/monoid.hpp"
#include "substal/point_set.hpp"

namespace substal {

class NotLocallySquare : public Error {
 public:
  NotLocallySquare(Point q, GenSym g)
      : Error("unit not locally square: " + q.to_string() + " o "
              + g.to_string() + " leaves the unit"),
        q_(q),
        g_(g) {}

  [[nodiscard]] Point const& point() const noexcept { return q_; }
  [[nodiscard]] GenSym gen() const noexcept { return g_; }

 private:
  Point q_;
  GenSym g_;
};

inline constexpr std::uint64_t kDefaultPointBudget = std::uint64_t{1} << 22;

class ConcreteAlgebra {
 public:
  /// The unit is given by sorted or unsorted global point indices.
  ConcreteAlgebra(int n, int k, SignatureMode mode,
                  std::vector<std::uint64_t> unit,
                  std::uint64_t budget = kDefaultPointBudget)
      : n_(n), k_(k), mode_(mode) {
    detail::check_dim(n);
    if (n < 1 || k < 0) {
      throw InvalidInput("ConcreteAlgebra: need n >= 1 and k >= 0");
    }
    space_ = detail::checked_pow(static_cast<std::uint64_t>(k), n);
    if (space_ > budget) {
      throw BudgetExceeded("k^n = " + std::to_string(space_)
                           + " exceeds point budget");
    }
    std::sort(unit.begin(), unit.end());
    unit.erase(std::unique(unit.begin(), unit.end()), unit.end());
    for (auto idx : unit) {
      if (idx >= space_) {
        throw InvalidInput("unit point index " + std::to_string(idx)
                           + " outside ^n k");
      }
    }
    unit_ = std::move(unit);
    build();
  }

  [[nodiscard]] int dim() const noexcept { return n_; }
  [[nodiscard]] int base() const noexcept { return k_; }
  [[nodiscard]] SignatureMode mode() const noexcept { return mode_; }
  [[nodiscard]] std::uint64_t space_size() const noexcept { return space_; }
  [[nodiscard]] std::size_t unit_size() const noexcept { return unit_.size(); }
  [[nodiscard]] bool is_full() const noexcept { return unit_.size() == space_; }

  [[nodiscard]] std::vector<std::uint64_t> const& unit_indices() const noexcept {
    return unit_;
  }
  [[nodiscard]] Point point(std::size_t local) const {
    return Point::from_index(n_, k_, unit_[local]);
  }
  [[nodiscard]] std::optional<std::size_t> local_index(std::uint64_t global) const {
    auto it = std::lower_bound(unit_.begin(), unit_.end(), global);
    if (it == unit_.end() || *it != global) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - unit_.begin());
  }
  [[nodiscard]] std::optional<std::size_t> local_index(Point const& q) const {
    if (q.dim() != n_ || q.base() != k_) {
      throw DimensionMismatch("point " + q.to_string() + " is not in ^n k");
    }
    return local_index(q.index());
  }

  [[nodiscard]] PointSet zero() const { return PointSet(unit_.size()); }
  [[nodiscard]] PointSet one() const { return PointSet::full(unit_.size()); }
  [[nodiscard]] PointSet complement(PointSet const& x) const {
    check(x);
    return ~x;
  }

  /// { q in V : q o g in X }.
  [[nodiscard]] PointSet subst(GenSym g, PointSet const& x) const {
    check(x);
    auto const& tab = table(g);
    PointSet out(unit_.size());
    for (std::size_t r = 0; r < tab.size(); ++r) {
      if (x.test(tab[r])) {
        out.set(r);
      }
    }
    return out;
  }

  [[nodiscard]] PointSet subst(Transformation const& tau, PointSet const& x) const {
    check(x);
    if (tau.dim() != n_) {
      throw DimensionMismatch("subst: transformation of dimension "
                              + std::to_string(tau.dim()));
    }
    if (!monoid_contains(mode_, tau)) {
      throw NotGenerated(tau.to_string() + " is not generated in mode "
                         + std::string(to_string(mode_)));
    }
    PointSet out(unit_.size());
    for (std::size_t r = 0; r < unit_.size(); ++r) {
      auto q = apply(point(r), tau);
      auto l = local_index(q.index());
      if (!l) {
        throw NotLocallySquare(point(r), canonical_word(tau, mode_).symbols().front());
      }
      if (x.test(*l)) {
        out.set(r);
      }
    }
    return out;
  }

  /// D_ij = { q in V : q(i) = q(j) }.
  [[nodiscard]] PointSet diag(int i, int j) const {
    if (!has_diagonals(mode_)) {
      throw ModeMismatch("diagonal elements need mode diag");
    }
    return diag_unchecked(i, j);
  }

  [[nodiscard]] PointSet diag_unchecked(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) {
      throw InvalidInput("diagonal index out of range");
    }
    PointSet out(unit_.size());
    for (std::size_t r = 0; r < unit_.size(); ++r) {
      auto q = point(r);
      if (q[i] == q[j]) {
        out.set(r);
      }
    }
    return out;
  }

  [[nodiscard]] std::vector<PointSet> atoms() const {
    std::vector<PointSet> out;
    for (std::size_t r = 0; r < unit_.size(); ++r) {
      PointSet a(unit_.size());
      a.set(r);
      out.push_back(std::move(a));
    }
    return out;
  }

  /// Element from points of ^n k; points outside the unit are an error.
  [[nodiscard]] PointSet element(std::vector<Point> const& pts) const {
    PointSet out(unit_.size());
    for (auto const& q : pts) {
      auto l = local_index(q);
      if (!l) {
        throw InvalidInput("point " + q.to_string() + " not in the unit");
      }
      out.set(*l);
    }
    return out;
  }

  [[nodiscard]] PointSet element_from_global(
      std::vector<std::uint64_t> const& idx) const {
    PointSet out(unit_.size());
    for (auto g : idx) {
      auto l = local_index(g);
      if (!l) {
        throw InvalidInput("point index " + std::to_string(g)
                           + " not in the unit");
      }
      out.set(*l);
    }
    return out;
  }

  [[nodiscard]] std::vector<std::uint64_t> global_indices(PointSet const& x) const {
    check(x);
    std::vector<std::uint64_t> out;
    x.for_each([&](std::size_t r) { out.push_back(unit_[r]); });
    return out;
  }

  [[nodiscard]] std::vector<Point> points(PointSet const& x) const {
    std::vector<Point> out;
    x.for_each([&](std::size_t r) { out.push_back(point(r)); });
    return out;
  }

  [[nodiscard]] std::string format(PointSet const& x) const {
    std::string s = "{";
    bool first = true;
    x.for_each([&](std::size_t r) {
      s += (first ? "" : ",") + point(r).to_string();
      first = false;
    });
    return s + "}";
  }

  /// q o g as a local index, for each local q.
  [[nodiscard]] std::vector<std::uint32_t> const& table(GenSym g) const {
    for (std::size_t a = 0; a < gens_.size(); ++a) {
      if (gens_[a] == g) {
        return tables_[a];
      }
    }
    throw InvalidInput(g.to_string() + " not in the signature of mode "
                       + std::string(to_string(mode_)));
  }

  [[nodiscard]] std::vector<GenSym> const& signature() const noexcept {
    return gens_;
  }

 private:
  void check(PointSet const& x) const {
    if (x.size() != unit_.size()) {
      throw InvalidInput("element is not a subset of the unit");
    }
  }

  void build() {
    gens_ = n_ >= 2 ? generators(n_, mode_) : std::vector<GenSym>{};
    std::vector<std::size_t> order(unit_.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
      order[r] = r;
    }
    // Scan points in lexicographic coordinate order so that the reported
    // witness is the first one a reader would find.
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return point(a).coords() < point(b).coords();
    });
    tables_.assign(gens_.size(), std::vector<std::uint32_t>(unit_.size()));
    for (std::size_t r : order) {
      auto q = point(r);
      for (std::size_t a = 0; a < gens_.size(); ++a) {
        auto l = local_index(apply(q, gens_[a]).index());
        if (!l) {
          throw NotLocallySquare(q, gens_[a]);
        }
        tables_[a][r] = static_cast<std::uint32_t>(*l);
      }
    }
  }

  int n_ = 0;
  int k_ = 0;
  SignatureMode mode_ = SignatureMode::full;
  std::uint64_t space_ = 0;
  std::vector<std::uint64_t> unit_;
  std::vector<GenSym> gens_;
  std::vector<std::vector<std::uint32_t>> tables_;
};

/// A_nk: the full set algebra on ^n k.
inline ConcreteAlgebra small_algebra(int n, int k,
                                     SignatureMode mode = SignatureMode::full,
                                     std::uint64_t budget = kDefaultPointBudget) {
  auto space = detail::checked_pow(static_cast<std::uint64_t>(k), n);
  if (space > budget) {
    throw BudgetExceeded("small_algebra: k^n exceeds budget");
  }
  std::vector<std::uint64_t> unit(space);
  for (std::uint64_t i = 0; i < space; ++i) {
    unit[i] = i;
  }
  return ConcreteAlgebra(n, k, mode, std::move(unit), budget);
}

/// The algebra on unit V, with V given as a set over all of ^n k.
/// Throws NotLocallySquare when V is not closed under the generators.
inline ConcreteAlgebra make_relativized(int n, int k, PointSet const& V,
                                        SignatureMode mode = SignatureMode::full) {
  auto space = detail::checked_pow(static_cast<std::uint64_t>(k), n);
  if (V.size() != space) {
    throw DimensionMismatch("make_relativized: V is not a subset of ^n k");
  }
  std::vector<std::uint64_t> unit;
  V.for_each([&](std::size_t i) { unit.push_back(i); });
  return ConcreteAlgebra(n, k, mode, std::move(unit));
}

inline ConcreteAlgebra make_relativized(int n, int k,
                                        std::vector<Point> const& V,
                                        SignatureMode mode = SignatureMode::full) {
  std::vector<std::uint64_t> unit;
  for (auto const& q : V) {
    if (q.dim() != n || q.base() != k) {
      throw DimensionMismatch("make_relativized: point outside ^n k");
    }
    unit.push_back(q.index());
  }
  return ConcreteAlgebra(n, k, mode, std::move(unit));
}

inline PointSet subst_element(ConcreteAlgebra const& a, GenSym g, PointSet const& x) {
  return a.subst(g, x);
}

inline PointSet subst_element(ConcreteAlgebra const& a, Transformation const& tau,
                              PointSet const& x) {
  return a.subst(tau, x);
}

inline PointSet diag_element(ConcreteAlgebra const& a, int i, int j) {
  return a.diag(i, j);
}

////////////////////////////////////////////////////////////////////////
// Homomorphism checks
////////////////////////////////////////////////////////////////////////

struct HomReport {
  bool ok = true;
  bool exhaustive = true;
  std::uint64_t checked = 0;
  std::string failure;

  void fail(std::string why) {
    if (ok) {
      ok = false;
      failure = std::move(why);
    }
  }
};

inline constexpr std::size_t kExhaustiveAtomLimit = 8;
inline constexpr std::uint64_t kHomSamples = 10000;

/// Checks that h commutes with meet, complement and every generator of the
/// source's signature.  Exhaustive over all elements (and all pairs for
/// meets) when the source has at most 2^8 elements, otherwise over atoms
/// and kHomSamples seeded random elements.
template <FiniteSubstitutionAlgebra S, SubstitutionAlgebra T, class H>
HomReport check_homomorphism(S const& src, T const& dst, H&& h,
                             std::uint64_t seed = 1) {
  HomReport rep;
  auto atoms = src.atoms();
  std::size_t universe = src.one().size();
  std::vector<PointSet> sample;
  if (atoms.size() <= kExhaustiveAtomLimit) {
    sample = elements(src);
  } else {
    rep.exhaustive = false;
    sample = atoms;
    sample.push_back(src.zero());
    sample.push_back(src.one());
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < kHomSamples; ++s) {
      PointSet x(universe);
      for (auto const& a : atoms) {
        if (rng() & 1u) {
          x |= a;
        }
      }
      sample.push_back(std::move(x));
    }
  }
  std::vector<PointSet> images;
  images.reserve(sample.size());
  for (auto const& x : sample) {
    images.push_back(h(x));
  }
  if (images[0].size() != dst.one().size()) {
    rep.fail("image is not an element of the target");
    return rep;
  }
  auto gens = generators(src.dim(), src.mode());
  for (std::size_t a = 0; a < sample.size() && rep.ok; ++a) {
    auto const& x = sample[a];
    auto const& hx = images[a];
    ++rep.checked;
    if (h(src.complement(x)) != dst.complement(hx)) {
      rep.fail("complement fails at element " + x.to_string());
    }
    for (auto const& g : gens) {
      if (h(src.subst(g, x)) != dst.subst(g, hx)) {
        rep.fail(g.to_string() + " fails at element " + x.to_string());
        break;
      }
    }
  }
  if (h(src.one()) != dst.one()) {
    rep.fail("unit not preserved");
  }
  if (h(src.zero()) != dst.zero()) {
    rep.fail("zero not preserved");
  }
  if (rep.exhaustive) {
    for (std::size_t a = 0; a < sample.size() && rep.ok; ++a) {
      for (std::size_t b = a + 1; b < sample.size(); ++b) {
        ++rep.checked;
        if (h(sample[a] & sample[b]) != (images[a] & images[b])) {
          rep.fail("meet fails at " + sample[a].to_string() + ", "
                   + sample[b].to_string());
          break;
        }
      }
    }
  } else {
    std::mt19937_64 rng(seed ^ 0x5bd1e995u);
    std::uniform_int_distribution<std::size_t> pick(0, sample.size() - 1);
    for (std::uint64_t s = 0; s < kHomSamples && rep.ok; ++s) {
      std::size_t a = pick(rng), b = pick(rng);
      ++rep.checked;
      if (h(sample[a] & sample[b]) != (images[a] & images[b])) {
        rep.fail("meet fails at " + sample[a].to_string() + ", "
                 + sample[b].to_string());
      }
    }
  }
  return rep;
}

struct RelativizationResult {
  ConcreteAlgebra target;
  HomReport report;
};

/// h(x) = x intersected with G, from the full algebra onto the relativized
/// algebra on G.  G is a subset of full's unit, given in full's local
/// indexing.
inline RelativizationResult relativization_hom(ConcreteAlgebra const& full,
                                               PointSet const& G) {
  if (G.size() != full.unit_size()) {
    throw DimensionMismatch("relativization_hom: G is not a subset of the unit");
  }
  ConcreteAlgebra target(full.dim(), full.base(), full.mode(),
                         full.global_indices(G));
  auto h = [&](PointSet const& x) {
    return target.element_from_global(full.global_indices(x & G));
  };
  auto report = check_homomorphism(full, target, h);
  if (has_diagonals(full.mode())) {
    for (int i = 0; i < full.dim() && report.ok; ++i) {
      for (int j = 0; j < full.dim(); ++j) {
        if (h(full.diag(i, j)) != target.diag(i, j)) {
          report.fail("diagonal d(" + std::to_string(i) + ","
                      + std::to_string(j) + ") not preserved");
          break;
        }
      }
    }
  }
  return {std::move(target), std::move(report)};
}

/// Product X0 x X1 x ... over ^n k, each factor a subset of {0..k-1} given
/// as a bitmask.
inline PointSet rectangle(ConcreteAlgebra const& a,
                          std::vector<std::uint32_t> const& factors) {
  if (static_cast<int>(factors.size()) != a.dim()) {
    throw DimensionMismatch("rectangle needs one factor per coordinate");
  }
  PointSet out(a.unit_size());
  for (std::size_t r = 0; r < a.unit_size(); ++r) {
    auto q = a.point(r);
    bool in = true;
    for (int i = 0; i < a.dim() && in; ++i) {
      in = (factors[i] >> q[i]) & 1u;
    }
    if (in) {
      out.set(r);
    }
  }
  return out;
}

}  // namespace substal

#endif  // SUBSTAL_SETALG_HPP_
