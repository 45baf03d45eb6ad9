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

// Finite checks standing in for constructions that are infinite in
// general: rectangle identities, the truncated partition (Q_m) algebra and
// the witness that the transposition quasi-variety is not a variety.

#ifndef SUBSTAL_GALLERY_HPP_
#define SUBSTAL_GALLERY_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "substal/coloring.hpp"
#include "substal/error.hpp"
#include "substal/monoid.hpp"
#include "substal/repr.hpp"
#include "substal/setalg.hpp"

namespace substal {

struct GalleryReport {
  std::string check;
  std::uint64_t instances = 0;
  std::vector<std::string> failures;

  [[nodiscard]] bool ok() const { return failures.empty(); }

  void expect(bool cond, std::string const& what) {
    ++instances;
    if (!cond) {
      failures.push_back(what);
    }
  }
};

////////////////////////////////////////////////////////////////////////
// Not a variety
////////////////////////////////////////////////////////////////////////

struct NotAVarietyReport {
  GalleryReport report;
  int n = 0;
  Transformation f;
  /// X = { e_i : i odd } inside ℘(G), G the points of ^n 2 with one zero.
  PointSet X;
  bool g_closed = false;
  bool shift = false;
  bool witness = false;
  /// For each k = 1..n: no solution of s_f(x) = -x in A_nk.
  std::vector<bool> small_hold;
  /// Same check on the unit of all permutations of n inside ^n n, where
  /// [0,1] has no fixed point and a solution exists for every n.
  bool alternative_witness = false;
};

/// The point of ^n 2 that is 1 everywhere except 0 at i.
inline Point one_zero_point(int n, int i) {
  std::vector<int> c(n, 1);
  c[i] = 0;
  return Point(2, std::span<const int>(c));
}

/// [0,1] o [2,3] o ... over pairs (2t, 2t+1) with 2t+1 < n, except that
/// n = 3 keeps [0,1] only (as does every odd n, whose last index is left
/// fixed).
inline Transformation pairing_permutation(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  for (int t = 0; 2 * t + 1 < n; ++t) {
    std::swap(v[2 * t], v[2 * t + 1]);
  }
  return Transformation(v);
}

inline NotAVarietyReport not_a_variety_witness(int n) {
  if (n < 2) {
    throw InvalidInput("not_a_variety_witness needs n >= 2");
  }
  NotAVarietyReport out;
  out.n = n;
  out.report.check = "not-a-variety";
  auto mode = SignatureMode::transpositions;
  std::vector<Point> G;
  for (int i = 0; i < n; ++i) {
    G.push_back(one_zero_point(n, i));
  }
  std::optional<ConcreteAlgebra> B;
  try {
    B = make_relativized(n, 2, G, mode);
    out.g_closed = true;
  } catch (NotLocallySquare const&) {
    out.g_closed = false;
  }
  out.report.expect(out.g_closed, "G is not closed under transpositions");
  out.f = pairing_permutation(n);
  if (B) {
    std::vector<Point> odd, even;
    for (int i = 0; i < n; ++i) {
      (i % 2 ? odd : even).push_back(one_zero_point(n, i));
    }
    out.X = B->element(odd);
    out.shift = true;
    for (int i = 1; i < n; i += 2) {
      bool ok = apply(one_zero_point(n, i), out.f) == one_zero_point(n, i - 1);
      out.shift &= ok;
      out.report.expect(ok, "e_" + std::to_string(i) + " o f != e_"
                                + std::to_string(i - 1));
    }
    auto sf = B->subst(out.f, out.X);
    out.witness = sf == B->complement(out.X);
    out.report.expect(out.witness, "S_f(X) = " + B->format(sf) + " but -X = "
                                       + B->format(B->complement(out.X)));
  }
  for (int k = 1; k <= n; ++k) {
    auto A = small_algebra(n, k, mode);
    WorldMap g(A.unit_size());
    for (std::size_t r = 0; r < A.unit_size(); ++r) {
      g[r] = static_cast<std::uint32_t>(apply(A.point(r), out.f).index());
    }
    bool none = !alternating_coloring(g).solution.has_value();
    out.small_hold.push_back(none);
    out.report.expect(none, "s_f(x) = -x solvable in A_" + std::to_string(n)
                                + std::to_string(k));
  }
  {
    std::vector<Point> perms;
    for (auto const& p : enumerate_monoid(n, mode, kMaxDim)) {
      perms.push_back(Point::from_index(n, n, p.index()));
    }
    auto S = make_relativized(n, n, perms, mode);
    auto f01 = Transformation::transposition(n, 0, 1);
    WorldMap g(S.unit_size());
    for (std::size_t r = 0; r < S.unit_size(); ++r) {
      g[r] = static_cast<std::uint32_t>(*S.local_index(apply(S.point(r), f01)));
    }
    auto col = alternating_coloring(g);
    out.alternative_witness =
        col.solution && S.subst(f01, *col.solution) == S.complement(*col.solution);
  }
  return out;
}

////////////////////////////////////////////////////////////////////////
// Rectangles
////////////////////////////////////////////////////////////////////////

/// In ℘(^n k), n in {2, 3}, for all X, Y of {0..k-1} (third factor U):
///   s[1|0](X x Y) = (X n Y) x U      s[0|1](X x Y) = U x (X n Y)
///   s[0,1](X x Y) = Y x X            -(X x Y) = (-X x U) u (U x -Y)
///   s[1|0](X x -X) = 0               the union of all X x -X is -D_01
inline GalleryReport product_identities(int k, int n = 2) {
  if (n != 2 && n != 3) {
    throw InvalidInput("product_identities: n must be 2 or 3");
  }
  if (k < 1 || k > 6) {
    throw InvalidInput("product_identities: k must lie in [1, 6]");
  }
  GalleryReport rep;
  rep.check = "product-identities";
  auto A = small_algebra(n, k, SignatureMode::full);
  std::uint32_t U = (1u << k) - 1;
  auto rect = [&](std::uint32_t x, std::uint32_t y) {
    std::vector<std::uint32_t> f{x, y};
    if (n == 3) {
      f.push_back(U);
    }
    return rectangle(A, f);
  };
  auto r10 = GenSym::replacement(1, 0);
  auto r01 = GenSym::replacement(0, 1);
  auto sw = GenSym::transposition(0, 1);
  auto name = [](std::uint32_t x, std::uint32_t y) {
    return " at X=" + std::to_string(x) + ", Y=" + std::to_string(y);
  };
  PointSet cover = A.zero();
  for (std::uint32_t x = 0; x <= U; ++x) {
    for (std::uint32_t y = 0; y <= U; ++y) {
      auto R = rect(x, y);
      rep.expect(A.subst(r10, R) == rect(x & y, U), "s[1|0] rectangle" + name(x, y));
      rep.expect(A.subst(r01, R) == rect(U, x & y), "s[0|1] rectangle" + name(x, y));
      rep.expect(A.subst(sw, R) == rect(y, x), "s[0,1] rectangle" + name(x, y));
      rep.expect(A.complement(R) == (rect(U & ~x, U) | rect(U, U & ~y)),
                 "complement rectangle" + name(x, y));
    }
    auto off = rect(x, U & ~x);
    rep.expect(A.subst(r10, off).none(), "s[1|0](X x -X) != 0" + name(x, U & ~x));
    cover |= off;
  }
  rep.expect(cover == A.complement(A.diag_unchecked(0, 1)),
             "union of X x -X is not -D_01");
  return rep;
}

////////////////////////////////////////////////////////////////////////
// Truncated partition algebra
////////////////////////////////////////////////////////////////////////

/// A subset of the positive integers as the oracle sees it.
struct IntSet {
  enum class Kind { finite, cofinite, other };
  Kind kind = Kind::finite;
  /// Members when finite, non-members when cofinite.
  std::vector<int> listed;

  [[nodiscard]] bool contains(int m) const {
    bool listed_m = std::find(listed.begin(), listed.end(), m) != listed.end();
    return kind == Kind::finite ? listed_m : !listed_m;
  }
};

using UltrafilterOracle = std::function<bool(IntSet const&)>;

/// Finite sets are outside F, cofinite sets inside, anything else is
/// undecided.
inline bool default_oracle(IntSet const& X) {
  switch (X.kind) {
    case IntSet::Kind::finite:
      return false;
    case IntSet::Kind::cofinite:
      return true;
    default:
      throw InvalidInput("ultrafilter oracle cannot decide this set");
  }
}

struct TruncationSpec {
  int n = 2;
  int B = 1;
};

/// Over the points of ^n {0..B}: Q_0 = { s : s_0 = s_1 } and, for m >= 1,
/// Q_m = { s : s_0 != s_1 and sum s = m }.  R_X is the union of Q_m over X,
/// plus Q_0 when X is in F.
inline GalleryReport counter2_truncation(TruncationSpec spec,
                                         UltrafilterOracle const& oracle = default_oracle) {
  if (spec.B < 1) {
    throw InvalidInput("counter2_truncation: B must be at least 1");
  }
  if (spec.n < 2) {
    throw InvalidInput("counter2_truncation: n must be at least 2");
  }
  GalleryReport rep;
  rep.check = "counter2";
  int n = spec.n;
  auto A = small_algebra(n, spec.B + 1, SignatureMode::full);
  int top = n * spec.B;
  std::vector<PointSet> Q(static_cast<std::size_t>(top) + 1, A.zero());
  for (std::size_t r = 0; r < A.unit_size(); ++r) {
    auto s = A.point(r);
    int sum = 0;
    for (int i = 0; i < n; ++i) {
      sum += s[i];
    }
    Q[s[0] == s[1] ? 0 : sum].set(r);
  }
  {
    PointSet all = A.zero();
    bool disjoint = true;
    for (auto const& q : Q) {
      disjoint &= !q.intersects(all);
      all |= q;
    }
    rep.expect(disjoint, "Q_m are not pairwise disjoint");
    rep.expect(all == A.one(), "Q_m do not cover the truncation");
    rep.expect(Q[0] == A.diag_unchecked(0, 1), "Q_0 != D_01");
  }
  for (int m = 0; m <= top; ++m) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        rep.expect(A.subst(GenSym::transposition(i, j), Q[m]) == Q[m],
                   "Q_" + std::to_string(m) + " is not symmetric under s["
                       + std::to_string(i) + "," + std::to_string(j) + "]");
      }
    }
  }
  auto R = [&](IntSet const& X) {
    PointSet out = A.zero();
    for (int m = 1; m <= top; ++m) {
      if (X.contains(m)) {
        out |= Q[m];
      }
    }
    if (oracle(X)) {
      out |= Q[0];
    }
    return out;
  };
  auto s10 = GenSym::replacement(1, 0);
  auto s01 = GenSym::replacement(0, 1);
  std::vector<std::vector<int>> finite_sets;
  for (int a = 1; a <= top; ++a) {
    for (int b = a; b <= top; ++b) {
      std::vector<int> iv;
      for (int m = a; m <= b; ++m) {
        iv.push_back(m);
      }
      finite_sets.push_back(std::move(iv));
    }
  }
  finite_sets.push_back({});
  for (auto const& xs : finite_sets) {
    IntSet fin{IntSet::Kind::finite, xs};
    IntSet cof{IntSet::Kind::cofinite, xs};
    std::string label = "{";
    for (auto m : xs) {
      label += (label.size() > 1 ? "," : "") + std::to_string(m);
    }
    label += "}";
    rep.expect(!oracle(fin), "finite " + label + " is in F");
    rep.expect(oracle(cof), "cofinite complement of " + label + " is not in F");
    auto Rf = R(fin);
    auto Rc = R(cof);
    rep.expect(A.subst(s10, Rf).none() && A.subst(s01, Rf).none(),
               "S(R_X) != 0 for finite X = " + label);
    rep.expect(A.subst(s10, Rc) == A.one() && A.subst(s01, Rc) == A.one(),
               "S(R_X) != unit for X = complement of " + label);
    rep.expect(A.complement(Rf) == Rc, "-R_X != R_(-X) for X = " + label);
  }
  PointSet sum = A.zero();
  for (int m = 1; m <= top; ++m) {
    sum |= A.subst(s10, Q[m]);
  }
  rep.expect(sum.none(), "the join of S(R_{m}) is not 0");
  rep.expect(A.subst(s10, R(IntSet{IntSet::Kind::cofinite, {}})) == A.one(),
             "S(R_Z+) is not the unit");
  return rep;
}

}  // namespace substal

#endif  // SUBSTAL_GALLERY_HPP_
