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

// Generic machinery over any finite Boolean algebra with substitution
// operators whose elements are PointSets: term evaluation, exhaustive
// equation checking, and generated subalgebras.

#ifndef SUBSTAL_ALGEBRA_HPP_
#define SUBSTAL_ALGEBRA_HPP_

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "substal/error.hpp"
#include "substal/monoid.hpp"
#include "substal/point_set.hpp"
#include "substal/terms.hpp"

namespace substal {

template <class A>
concept SubstitutionAlgebra = requires(A const& a, PointSet const& x,
                                       GenSym g, Transformation const& t) {
  { a.dim() } -> std::convertible_to<int>;
  { a.mode() } -> std::convertible_to<SignatureMode>;
  { a.zero() } -> std::convertible_to<PointSet>;
  { a.one() } -> std::convertible_to<PointSet>;
  { a.complement(x) } -> std::convertible_to<PointSet>;
  { a.subst(g, x) } -> std::convertible_to<PointSet>;
  { a.subst(t, x) } -> std::convertible_to<PointSet>;
  { a.diag(0, 1) } -> std::convertible_to<PointSet>;
};

/// Finite algebras expose their atoms; every element is a union of atoms.
template <class A>
concept FiniteSubstitutionAlgebra = SubstitutionAlgebra<A> && requires(A const& a) {
  { a.atoms() } -> std::convertible_to<std::vector<PointSet>>;
};

using Assignment = std::vector<PointSet>;

template <SubstitutionAlgebra A>
PointSet eval_term(A const& alg, Term const& t, Assignment const& v) {
  switch (t.kind()) {
    case Term::Kind::var: {
      auto i = static_cast<std::size_t>(t.var_index());
      if (i >= v.size()) {
        throw UnboundVariable("p" + std::to_string(i) + " is unbound");
      }
      return v[i];
    }
    case Term::Kind::zero:
      return alg.zero();
    case Term::Kind::one:
      return alg.one();
    case Term::Kind::meet:
      return eval_term(alg, t.left(), v) & eval_term(alg, t.right(), v);
    case Term::Kind::join:
      return eval_term(alg, t.left(), v) | eval_term(alg, t.right(), v);
    case Term::Kind::complement:
      return alg.complement(eval_term(alg, t.child(), v));
    case Term::Kind::sub:
      return alg.subst(t.gen(), eval_term(alg, t.child(), v));
    case Term::Kind::diag:
      return alg.diag(t.diag_i(), t.diag_j());
  }
  throw Error("eval_term: unknown node");
}

/// s_g1 s_g2 ... s_gm x, which is s_(hat w) x.
template <SubstitutionAlgebra A>
PointSet subst_word(A const& alg, Word const& w, PointSet x) {
  auto const& syms = w.symbols();
  for (auto it = syms.rbegin(); it != syms.rend(); ++it) {
    x = alg.subst(*it, x);
  }
  return x;
}

template <FiniteSubstitutionAlgebra A>
std::uint64_t element_count(A const& alg) {
  auto m = alg.atoms().size();
  if (m >= 64) {
    throw BudgetExceeded("algebra has 2^" + std::to_string(m) + " elements");
  }
  return std::uint64_t{1} << m;
}

/// The element whose atoms are selected by the bits of mask.
inline PointSet union_of(std::vector<PointSet> const& atoms, std::uint64_t mask,
                         std::size_t universe) {
  PointSet out(universe);
  for (std::size_t a = 0; mask; ++a, mask >>= 1) {
    if (mask & 1u) {
      out |= atoms[a];
    }
  }
  return out;
}

inline constexpr std::uint64_t kDefaultElementBudget = std::uint64_t{1} << 16;

/// All elements, ordered by the atom bitmask.
template <FiniteSubstitutionAlgebra A>
std::vector<PointSet> elements(A const& alg,
                               std::uint64_t budget = kDefaultElementBudget) {
  auto atoms = alg.atoms();
  if (atoms.size() >= 63 || (std::uint64_t{1} << atoms.size()) > budget) {
    throw BudgetExceeded("2^" + std::to_string(atoms.size())
                         + " elements exceed budget "
                         + std::to_string(budget));
  }
  std::size_t universe = alg.one().size();
  std::vector<PointSet> out;
  out.reserve(std::size_t{1} << atoms.size());
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << atoms.size()); ++m) {
    out.push_back(union_of(atoms, m, universe));
  }
  return out;
}

inline constexpr std::uint64_t kDefaultAssignmentBudget = std::uint64_t{1} << 22;

/// An assignment violating e, searched over all |A|^vars assignments.
template <FiniteSubstitutionAlgebra A>
std::optional<Assignment> find_counterexample(
    A const& alg, Equation const& e,
    std::uint64_t budget = kDefaultAssignmentBudget) {
  int vars = var_count(e);
  auto atoms = alg.atoms();
  std::uint64_t total = 1;
  for (int i = 0; i < vars; ++i) {
    if (atoms.size() >= 63 || (total << atoms.size()) > budget
        || (total << atoms.size()) >> atoms.size() != total) {
      throw BudgetExceeded("exhaustive check of " + to_string(e)
                           + " exceeds budget " + std::to_string(budget));
    }
    total <<= atoms.size();
  }
  auto elems = elements(alg, budget);
  Assignment v(static_cast<std::size_t>(vars), alg.zero());
  std::vector<std::size_t> idx(static_cast<std::size_t>(vars), 0);
  while (true) {
    for (int i = 0; i < vars; ++i) {
      v[i] = elems[idx[i]];
    }
    if (eval_term(alg, e.lhs, v) != eval_term(alg, e.rhs, v)) {
      return v;
    }
    int pos = 0;
    while (pos < vars && ++idx[pos] == elems.size()) {
      idx[pos] = 0;
      ++pos;
    }
    if (pos == vars) {
      return std::nullopt;
    }
  }
}

template <FiniteSubstitutionAlgebra A>
bool equation_holds_exhaustive(A const& alg, Equation const& e,
                               std::uint64_t budget = kDefaultAssignmentBudget) {
  return !find_counterexample(alg, e, budget).has_value();
}

////////////////////////////////////////////////////////////////////////
// Subalgebras
////////////////////////////////////////////////////////////////////////

/// A subalgebra described by its atoms, which partition the parent's unit.
struct SubAlgebra {
  int n = 0;
  SignatureMode mode = SignatureMode::full;
  std::vector<PointSet> atoms;
  std::size_t universe = 0;

  [[nodiscard]] std::uint64_t size() const {
    if (atoms.size() >= 64) {
      throw BudgetExceeded("subalgebra too large to count");
    }
    return std::uint64_t{1} << atoms.size();
  }

  [[nodiscard]] bool contains(PointSet const& x) const {
    for (auto const& a : atoms) {
      if (a.intersects(x) && !a.is_subset_of(x)) {
        return false;
      }
    }
    return true;
  }

  [[nodiscard]] std::vector<PointSet> elements(
      std::uint64_t budget = kDefaultElementBudget) const {
    if (size() > budget) {
      throw BudgetExceeded("subalgebra has more elements than budget");
    }
    std::vector<PointSet> out;
    for (std::uint64_t m = 0; m < size(); ++m) {
      out.push_back(union_of(atoms, m, universe));
    }
    return out;
  }
};

namespace detail {
  // Splits every block of the partition by membership in s.
  inline bool split_by(std::vector<PointSet>& blocks, PointSet const& s) {
    bool changed = false;
    std::vector<PointSet> next;
    next.reserve(blocks.size() + 1);
    for (auto const& b : blocks) {
      PointSet in = b & s;
      if (in.any() && in != b) {
        next.push_back(in);
        next.push_back(b - s);
        changed = true;
      } else {
        next.push_back(b);
      }
    }
    blocks = std::move(next);
    return changed;
  }

  inline void sort_blocks(std::vector<PointSet>& blocks) {
    std::sort(blocks.begin(), blocks.end(), [](auto const& a, auto const& b) {
      return *a.first() < *b.first();
    });
  }
}  // namespace detail

/// The Boolean subalgebra generated by ys, as its atoms.
template <SubstitutionAlgebra A>
SubAlgebra boolean_closure(A const& alg, std::vector<PointSet> const& ys) {
  std::vector<PointSet> blocks;
  if (alg.one().any()) {
    blocks.push_back(alg.one());
  }
  for (auto const& y : ys) {
    detail::split_by(blocks, y);
  }
  detail::sort_blocks(blocks);
  return SubAlgebra{alg.dim(), alg.mode(), std::move(blocks), alg.one().size()};
}

/// The subalgebra generated by gens, by refining the partition until every
/// s_g(block) is a union of blocks.
template <SubstitutionAlgebra A>
SubAlgebra subalgebra_atoms(A const& alg, std::vector<PointSet> const& gens) {
  std::vector<PointSet> blocks = boolean_closure(alg, gens).atoms;
  if (has_diagonals(alg.mode())) {
    for (int i = 0; i < alg.dim(); ++i) {
      for (int j = i + 1; j < alg.dim(); ++j) {
        detail::split_by(blocks, alg.diag(i, j));
      }
    }
  }
  auto gs = generators(alg.dim(), alg.mode());
  bool changed = true;
  while (changed) {
    changed = false;
    auto snapshot = blocks;
    for (auto const& b : snapshot) {
      for (auto const& g : gs) {
        changed |= detail::split_by(blocks, alg.subst(g, b));
      }
    }
  }
  detail::sort_blocks(blocks);
  return SubAlgebra{alg.dim(), alg.mode(), std::move(blocks), alg.one().size()};
}

/// The generated subalgebra computed as a plain fixpoint: repeatedly add
/// meets, complements and substitution images until nothing is new.
template <SubstitutionAlgebra A>
std::vector<PointSet> generate_subalgebra(
    A const& alg, std::vector<PointSet> const& gens,
    std::uint64_t budget = kDefaultElementBudget) {
  std::unordered_set<PointSet, PointSetHash> seen;
  std::vector<PointSet> all;
  auto add = [&](PointSet const& x) {
    if (seen.insert(x).second) {
      all.push_back(x);
      if (all.size() > budget) {
        throw BudgetExceeded("generate_subalgebra: closure exceeds budget");
      }
    }
  };
  add(alg.zero());
  add(alg.one());
  for (auto const& g : gens) {
    add(g);
  }
  if (has_diagonals(alg.mode())) {
    for (int i = 0; i < alg.dim(); ++i) {
      for (int j = 0; j < alg.dim(); ++j) {
        add(alg.diag(i, j));
      }
    }
  }
  auto gs = generators(alg.dim(), alg.mode());
  std::size_t done = 0;
  while (done < all.size()) {
    std::size_t end = all.size();
    for (std::size_t a = done; a < end; ++a) {
      PointSet x = all[a];
      add(alg.complement(x));
      for (auto const& g : gs) {
        add(alg.subst(g, x));
      }
      for (std::size_t b = 0; b < end; ++b) {
        PointSet y = all[b];
        add(x & y);
      }
    }
    done = end;
  }
  std::sort(all.begin(), all.end());
  return all;
}

/// Y = { s_tau x : x in gens, tau in the mode's monoid }.
template <SubstitutionAlgebra A>
std::vector<PointSet> substitution_orbit(A const& alg,
                                         std::vector<PointSet> const& gens) {
  std::vector<PointSet> out;
  for (auto const& tau : enumerate_monoid(alg.dim(), alg.mode())) {
    for (auto const& x : gens) {
      out.push_back(alg.subst(tau, x));
    }
  }
  return out;
}

}  // namespace substal

#endif  // SUBSTAL_ALGEBRA_HPP_
