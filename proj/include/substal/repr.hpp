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

// Representations of finite algebras on square units.
//
// An ultrafilter of a finite algebra is principal, so it is given by a
// world w of the atom frame.  The representation at w sends z to
// { tau : s_tau z contains w } = { tau : act(tau)(w) in z }, a subset of
// the monoid T of the signature (all of ^n n in modes full and diag).

#ifndef SUBSTAL_REPR_HPP_
#define SUBSTAL_REPR_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "substal/algebra.hpp"
#include "substal/coloring.hpp"
#include "substal/error.hpp"
#include "substal/frames.hpp"
#include "substal/monoid.hpp"
#include "substal/setalg.hpp"

namespace substal {

struct RepReport {
  bool homomorphism = false;
  bool injective = false;
  bool atom_cover = false;
  bool exhaustive = false;
  bool identity_in_image = false;
  /// diag_represent only.
  bool well_defined = true;
  bool diagonals = true;
  std::string failure;
};

/// A map from a finite algebra into a set algebra, stored by the images of
/// atoms.
struct RepMap {
  FinAlgebra source;
  ConcreteAlgebra target;
  std::vector<PointSet> atom_images;
  RepReport report;

  [[nodiscard]] PointSet operator()(PointSet const& z) const {
    PointSet out = target.zero();
    z.for_each([&](std::size_t w) { out |= atom_images[w]; });
    return out;
  }
};

namespace detail {
  // act(tau) for every tau of the signature's monoid, in sorted order.
  inline std::vector<WorldMap> monoid_actions(Frame const& F,
                                              std::vector<Transformation> const& T) {
    std::vector<WorldMap> out;
    out.reserve(T.size());
    for (auto const& t : T) {
      out.push_back(F.act(t));
    }
    return out;
  }

  inline bool images_partition(std::vector<PointSet> const& imgs,
                               PointSet const& unit) {
    PointSet seen(unit.size());
    for (auto const& i : imgs) {
      if (i.intersects(seen)) {
        return false;
      }
      seen |= i;
    }
    return seen == unit;
  }

  inline void finish_report(RepMap& r) {
    auto hom = check_homomorphism(r.source, r.target, r);
    r.report.homomorphism = hom.ok;
    r.report.exhaustive = hom.exhaustive;
    if (!hom.ok) {
      r.report.failure = hom.failure;
    }
    bool nonzero = std::all_of(r.atom_images.begin(), r.atom_images.end(),
                               [](auto const& x) { return x.any(); });
    r.report.injective = hom.ok && nonzero;
    if (hom.ok && nonzero && hom.exhaustive) {
      auto elems = elements(r.source);
      std::vector<PointSet> imgs;
      for (auto const& z : elems) {
        imgs.push_back(r(z));
      }
      std::sort(imgs.begin(), imgs.end());
      r.report.injective =
          std::adjacent_find(imgs.begin(), imgs.end()) == imgs.end();
    }
    r.report.atom_cover = images_partition(r.atom_images, r.target.one());
  }
}  // namespace detail

/// The representation at the principal ultrafilter of the least world of a.
inline RepMap represent_at(FinAlgebra const& A, PointSet const& a) {
  if (a.size() != A.atom_count()) {
    throw InvalidInput("represent_at: element of another algebra");
  }
  if (a.none()) {
    throw InvalidInput("represent_at: zero element");
  }
  int n = A.dim();
  auto w = static_cast<std::uint32_t>(*a.first());
  auto T = enumerate_monoid(n, A.mode());
  std::vector<std::uint64_t> unit;
  for (auto const& t : T) {
    unit.push_back(t.index());
  }
  ConcreteAlgebra target(n, n, A.mode(), unit);
  auto acts = detail::monoid_actions(A.frame(), T);
  std::vector<PointSet> imgs(A.atom_count(), target.zero());
  for (std::size_t t = 0; t < T.size(); ++t) {
    imgs[acts[t][w]].set(*target.local_index(T[t].index()));
  }
  RepMap r{A, std::move(target), std::move(imgs), {}};
  detail::finish_report(r);
  auto id = *r.target.local_index(Transformation::identity(n).index());
  r.report.identity_in_image = r(a).test(id);
  return r;
}

/// The product of represent_at over all atoms, on the disjoint union of
/// copies of T.  Copy c uses the values c*n ... c*n + n-1 inside the base
/// (atoms * n).
inline RepMap full_representation(FinAlgebra const& A) {
  std::size_t m = A.atom_count();
  if (m == 0) {
    throw InvalidInput("full_representation: trivial algebra");
  }
  int n = A.dim();
  auto T = enumerate_monoid(n, A.mode());
  int K = static_cast<int>(m) * n;
  auto global = [&](std::size_t c, Transformation const& t) {
    std::uint64_t idx = 0;
    for (int i = n - 1; i >= 0; --i) {
      idx = idx * static_cast<std::uint64_t>(K) + c * n + t[i];
    }
    return idx;
  };
  std::vector<std::uint64_t> unit;
  for (std::size_t c = 0; c < m; ++c) {
    for (auto const& t : T) {
      unit.push_back(global(c, t));
    }
  }
  ConcreteAlgebra target(n, K, A.mode(), unit);
  auto acts = detail::monoid_actions(A.frame(), T);
  std::vector<PointSet> imgs(m, target.zero());
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t t = 0; t < T.size(); ++t) {
      imgs[acts[t][c]].set(*target.local_index(global(c, T[t])));
    }
  }
  RepMap r{A, std::move(target), std::move(imgs), {}};
  detail::finish_report(r);
  r.report.identity_in_image = true;
  for (std::size_t c = 0; c < m; ++c) {
    auto id = *r.target.local_index(global(c, Transformation::identity(n)));
    r.report.identity_in_image &= r.atom_images[c].test(id);
  }
  return r;
}

/// full_representation; report().atom_cover states that the atom images
/// partition the unit.
inline RepMap complete_representation(FinAlgebra const& A) {
  auto r = full_representation(A);
  if (!r.report.atom_cover && r.report.failure.empty()) {
    r.report.failure = "atom images do not partition the unit";
  }
  return r;
}

struct PsiReport {
  bool ok = true;
  std::optional<GenSym> gen;
  std::optional<PointSet> witness;
};

/// For every generator g: the join of s_g over all atoms is the unit.  On
/// failure the witness is a nonzero element meeting no s_g(atom).
template <FiniteSubstitutionAlgebra A>
PsiReport check_psi(A const& alg) {
  PsiReport rep;
  auto atoms = alg.atoms();
  for (auto const& g : generators(alg.dim(), alg.mode())) {
    PointSet sum = alg.zero();
    for (auto const& x : atoms) {
      sum |= alg.subst(g, x);
    }
    if (sum != alg.one()) {
      rep.ok = false;
      rep.gen = g;
      rep.witness = alg.complement(sum);
      return rep;
    }
  }
  return rep;
}

struct CanonicalExtension {
  FinAlgebra extension;
  /// World of the extension for each atom (world) of the input.
  std::vector<std::uint32_t> iso;
  HomReport iso_check;
  bool bijective = false;
  RepMap representation;
};

inline CanonicalExtension canonical_extension(FinAlgebra const& A) {
  FinAlgebra ext(atom_frame(A));
  std::vector<std::uint32_t> iso(A.atom_count());
  auto atoms = A.atoms();
  for (std::size_t x = 0; x < atoms.size(); ++x) {
    iso[x] = static_cast<std::uint32_t>(x);
  }
  auto map = [&](PointSet const& z) {
    PointSet out = ext.zero();
    z.for_each([&](std::size_t w) { out.set(iso[w]); });
    return out;
  };
  auto rep = check_homomorphism(A, ext, map);
  std::vector<std::uint32_t> sorted = iso;
  std::sort(sorted.begin(), sorted.end());
  bool bij = ext.atom_count() == A.atom_count()
             && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  if (rep.ok && has_diagonals(A.mode())) {
    for (int i = 0; i < A.dim(); ++i) {
      for (int j = 0; j < A.dim(); ++j) {
        if (map(A.diag(i, j)) != ext.diag(i, j)) {
          rep.fail("diagonal not preserved");
        }
      }
    }
  }
  auto r = complete_representation(ext);
  return CanonicalExtension{std::move(ext), std::move(iso), std::move(rep), bij,
                            std::move(r)};
}

/// The representation at a world w of a diagonal frame on the quotient
/// square ^n m, where i ~ j iff w is in d_ij and m counts the blocks.
inline RepMap diag_represent(FinAlgebra const& A, PointSet const& a) {
  if (!has_diagonals(A.mode())) {
    throw ModeMismatch("diag_represent needs mode diag");
  }
  if (a.size() != A.atom_count() || a.none()) {
    throw InvalidInput("diag_represent: need a nonzero element of the algebra");
  }
  int n = A.dim();
  auto w = static_cast<std::uint32_t>(*a.first());
  std::vector<int> block(n, -1);
  std::vector<int> rep_of;
  for (int i = 0; i < n; ++i) {
    for (int b = 0; b < static_cast<int>(rep_of.size()) && block[i] < 0; ++b) {
      if (A.diag(i, rep_of[b]).test(w)) {
        block[i] = b;
      }
    }
    if (block[i] < 0) {
      block[i] = static_cast<int>(rep_of.size());
      rep_of.push_back(i);
    }
  }
  int m = static_cast<int>(rep_of.size());
  auto target = small_algebra(n, m, A.mode());
  RepReport report;
  // tau_p = section o p picks one tau with quotient p.
  auto space = target.unit_size();
  std::vector<PointSet> imgs(A.atom_count(), target.zero());
  std::vector<std::uint32_t> world_of(space);
  for (std::uint64_t p = 0; p < space; ++p) {
    auto q = Point::from_index(n, m, p);
    std::vector<int> vals(n);
    for (int i = 0; i < n; ++i) {
      vals[i] = rep_of[q[i]];
    }
    world_of[p] = A.frame().act(Transformation(vals))[w];
    imgs[world_of[p]].set(static_cast<std::size_t>(p));
  }
  for (auto const& tau : enumerate_monoid(n, A.mode())) {
    std::uint64_t p = 0;
    for (int i = n - 1; i >= 0; --i) {
      p = p * static_cast<std::uint64_t>(m) + block[tau[i]];
    }
    if (A.frame().act(tau)[w] != world_of[p]) {
      report.well_defined = false;
      report.failure = "quotient not well defined at " + tau.to_string();
      break;
    }
  }
  RepMap r{A, std::move(target), std::move(imgs), std::move(report)};
  bool wd = r.report.well_defined;
  std::string why = r.report.failure;
  detail::finish_report(r);
  r.report.well_defined = wd;
  if (!why.empty()) {
    r.report.failure = why;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (r(A.diag(i, j)) != r.target.diag(i, j)) {
        r.report.diagonals = false;
        if (r.report.failure.empty()) {
          r.report.failure = "d(" + std::to_string(i) + "," + std::to_string(j)
                             + ") not mapped onto D";
        }
      }
    }
  }
  auto id = Transformation::identity(n);
  std::uint64_t p = 0;
  for (int i = n - 1; i >= 0; --i) {
    p = p * static_cast<std::uint64_t>(m) + block[id[i]];
  }
  r.report.identity_in_image = r(a).test(static_cast<std::size_t>(p));
  return r;
}

////////////////////////////////////////////////////////////////////////
// Quasi-equations
////////////////////////////////////////////////////////////////////////

/// A submonoid T of ^n n with its bijective stabilizer
/// G = { xi in S_n : xi o sigma in T for all sigma in T }.
class SubMonoidCtx {
 public:
  explicit SubMonoidCtx(std::vector<Transformation> T) : T_(std::move(T)) {
    if (!is_submonoid(T_)) {
      throw InvalidInput("SubMonoidCtx: T is not a submonoid");
    }
    std::sort(T_.begin(), T_.end());
    G_ = bijective_stabilizer(T_);
  }

  static SubMonoidCtx of_mode(int n, SignatureMode mode) {
    return SubMonoidCtx(enumerate_monoid(n, mode));
  }

  [[nodiscard]] int dim() const { return T_.front().dim(); }
  [[nodiscard]] std::vector<Transformation> const& T() const noexcept { return T_; }
  [[nodiscard]] std::vector<Transformation> const& G() const noexcept { return G_; }
  [[nodiscard]] bool in_G(Transformation const& xi) const {
    return std::binary_search(G_.begin(), G_.end(), xi);
  }

 private:
  std::vector<Transformation> T_;
  std::vector<Transformation> G_;
};

struct QuasiReport {
  bool holds = true;
  /// s_f(x) = -x -> 0 = 1 for every f in G expressible in the signature.
  bool coloring_holds = true;
  /// The quasi-equations of quasi_axioms(n, T).
  bool sigma_q_holds = true;
  std::uint64_t instances = 0;
  std::optional<Transformation> f;
  std::optional<PointSet> witness;
  /// For a Sigma^q failure: xi, the world w0 and x_sigma = {act(xi o sigma)(w0)}.
  std::optional<Transformation> xi;
  std::optional<std::uint32_t> world;
  std::string failure;
};

namespace detail {
  inline void coloring_family(std::size_t worlds,
                              std::function<WorldMap(Transformation const&)> act,
                              SignatureMode mode, SubMonoidCtx const& ctx,
                              QuasiReport& rep) {
    if (worlds == 0) {
      return;
    }
    for (auto const& f : ctx.G()) {
      if (!monoid_contains(mode, f)) {
        continue;
      }
      ++rep.instances;
      auto res = alternating_coloring(act(f));
      if (res.solution) {
        rep.coloring_holds = false;
        rep.holds = false;
        rep.f = f;
        rep.witness = res.solution;
        rep.failure = "s_f(x) = -x has a solution for f = " + f.to_string();
        return;
      }
    }
  }

  // The premise  prod_sigma s_sigma(x_sigma) = 0  is antitone in the x's and
  // the conclusion fails at w0 iff act(xi o sigma)(w0) is in x_sigma for
  // all sigma, so the least candidates x_sigma = {act(xi o sigma)(w0)}
  // decide the instance: it fails iff no world w has
  // act(sigma)(w) = act(xi o sigma)(w0) for every sigma.
  inline void sigma_q_family(Frame const& F, SubMonoidCtx const& ctx,
                             QuasiReport& rep) {
    std::size_t W = F.size();
    auto const& T = ctx.T();
    std::vector<WorldMap> acts;
    for (auto const& s : T) {
      acts.push_back(F.act(s));
    }
    for (auto const& xi : ctx.G()) {
      std::vector<WorldMap> shifted;
      for (auto const& s : T) {
        shifted.push_back(F.act(compose(xi, s)));
      }
      for (std::uint32_t w0 = 0; w0 < W; ++w0) {
        ++rep.instances;
        bool found = false;
        for (std::uint32_t w = 0; w < W && !found; ++w) {
          bool all = true;
          for (std::size_t s = 0; s < T.size() && all; ++s) {
            all = acts[s][w] == shifted[s][w0];
          }
          found = all;
        }
        if (!found) {
          rep.sigma_q_holds = false;
          rep.holds = false;
          rep.xi = xi;
          rep.world = w0;
          rep.failure = "quasi-equation for xi = " + xi.to_string()
                        + " fails at world " + std::to_string(w0);
          return;
        }
      }
    }
  }

  inline void check_ctx(int n, SignatureMode mode, SubMonoidCtx const& ctx) {
    if (ctx.dim() != n) {
      throw DimensionMismatch("check_quasi: T has the wrong dimension");
    }
    for (auto const& t : ctx.T()) {
      if (!monoid_contains(mode, t)) {
        throw NotGenerated("check_quasi: " + t.to_string()
                           + " is outside the signature");
      }
    }
  }
}  // namespace detail

inline QuasiReport check_quasi(FinAlgebra const& A, SubMonoidCtx const& ctx) {
  detail::check_ctx(A.dim(), A.mode(), ctx);
  QuasiReport rep;
  detail::coloring_family(
      A.atom_count(), [&](Transformation const& f) { return A.frame().act(f); },
      A.mode(), ctx, rep);
  if (rep.holds) {
    detail::sigma_q_family(A.frame(), ctx, rep);
  }
  return rep;
}

/// On set algebras the coloring runs on the point map q -> q o f.
inline QuasiReport check_quasi(ConcreteAlgebra const& A, SubMonoidCtx const& ctx) {
  detail::check_ctx(A.dim(), A.mode(), ctx);
  QuasiReport rep;
  auto point_map = [&](Transformation const& f) {
    WorldMap g(A.unit_size());
    for (std::size_t r = 0; r < A.unit_size(); ++r) {
      auto l = A.local_index(apply(A.point(r), f).index());
      if (!l) {
        throw NotLocallySquare(A.point(r), canonical_word(f, A.mode()).symbols().front());
      }
      g[r] = static_cast<std::uint32_t>(*l);
    }
    return g;
  };
  detail::coloring_family(A.unit_size(), point_map, A.mode(), ctx, rep);
  if (rep.holds) {
    detail::sigma_q_family(unit_frame(A), ctx, rep);
  }
  return rep;
}

/// Premises imply conclusion under every assignment.
template <FiniteSubstitutionAlgebra A>
bool quasi_holds_exhaustive(A const& alg, QuasiEquation const& q,
                            std::uint64_t budget = kDefaultAssignmentBudget) {
  int vars = var_count(q.conclusion);
  for (auto const& p : q.premises) {
    vars = std::max(vars, var_count(p));
  }
  auto elems = elements(alg, budget);
  std::uint64_t total = 1;
  for (int i = 0; i < vars; ++i) {
    if (total > budget / std::max<std::size_t>(elems.size(), 1)) {
      throw BudgetExceeded("quasi_holds_exhaustive: too many assignments");
    }
    total *= elems.size();
  }
  Assignment v(static_cast<std::size_t>(vars), alg.zero());
  std::vector<std::size_t> idx(static_cast<std::size_t>(vars), 0);
  while (true) {
    for (int i = 0; i < vars; ++i) {
      v[i] = elems[idx[i]];
    }
    bool premises = std::all_of(q.premises.begin(), q.premises.end(), [&](auto const& e) {
      return eval_term(alg, e.lhs, v) == eval_term(alg, e.rhs, v);
    });
    if (premises
        && eval_term(alg, q.conclusion.lhs, v) != eval_term(alg, q.conclusion.rhs, v)) {
      return false;
    }
    int pos = 0;
    while (pos < vars && ++idx[pos] == elems.size()) {
      idx[pos] = 0;
      ++pos;
    }
    if (pos == vars) {
      return true;
    }
  }
}

/// s_f(x) = -x  =>  0 = 1.
inline QuasiEquation coloring_quasi_equation(Transformation const& f,
                                             SignatureMode mode) {
  QuasiEquation q;
  Term x = Term::var(0);
  q.premises.push_back(Equation{sub_transformation(f, x, mode), ~x, {}});
  q.conclusion = Equation{Term::zero(), Term::one(), {}};
  q.label = "C." + f.to_string();
  return q;
}

struct FilterReport {
  /// The filter is the principal filter of this element.
  PointSet generator;
  bool in_G = false;
  bool proper = false;
  bool within_F = false;
};

/// Experimental.  F is the principal ultrafilter of world w.  For xi
/// outside G the result is { a : s_xi a in F }.  For xi in G it is
/// { t : t >= prod_sigma s_(xi o sigma)(a_sigma) with every factor in F },
/// whose least element is the meet over sigma of the least s_(xi o sigma)(a)
/// containing w.
inline FilterReport f_xi_filter(FinAlgebra const& A, std::uint32_t w,
                                Transformation const& xi, SubMonoidCtx const& ctx) {
  detail::check_ctx(A.dim(), A.mode(), ctx);
  if (w >= A.atom_count()) {
    throw InvalidInput("f_xi_filter: world outside the frame");
  }
  FilterReport rep{A.zero(), ctx.in_G(xi), false, false};
  if (!rep.in_G) {
    if (!monoid_contains(A.mode(), xi)) {
      throw NotGenerated("f_xi_filter: " + xi.to_string()
                         + " is outside the signature");
    }
    rep.generator = A.atom(A.frame().act(xi)[w]);
  } else {
    PointSet g = A.one();
    for (auto const& s : ctx.T()) {
      auto m = A.frame().act(compose(xi, s));
      g &= FinAlgebra::preimage(m, A.atom(m[w]));
    }
    rep.generator = std::move(g);
  }
  rep.proper = rep.generator.any();
  rep.within_F = rep.generator.test(w);
  return rep;
}

}  // namespace substal

#endif  // SUBSTAL_REPR_HPP_
