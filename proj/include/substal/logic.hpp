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

// The modal reading of terms.  A formula holds at a world w of a frame when
// it evaluates to a set containing w; s_g phi holds at w iff phi holds at
// act(g)(w).
//
// Satisfiability is decided by unfolding: a formula at a point q of ^n k
// only looks at the points q o g1 o ... o gm reached along its modalities,
// and how it behaves depends only on the kernel of q.  One propositional
// problem per set partition of {0..n-1} is therefore enough, and every base
// size needed is at most n.

#ifndef SUBSTAL_LOGIC_HPP_
#define SUBSTAL_LOGIC_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "substal/error.hpp"
#include "substal/frames.hpp"
#include "substal/monoid.hpp"
#include "substal/point_set.hpp"
#include "substal/terms.hpp"

namespace substal {

struct Model {
  Frame frame;
  /// Variables beyond the end have empty valuation.
  std::vector<PointSet> valuation;
};

inline bool model_check(Model const& M, std::uint32_t w, Term const& phi) {
  switch (phi.kind()) {
    case Term::Kind::var: {
      auto v = static_cast<std::size_t>(phi.var_index());
      return v < M.valuation.size() && M.valuation[v].test(w);
    }
    case Term::Kind::zero:
      return false;
    case Term::Kind::one:
      return true;
    case Term::Kind::meet:
      return model_check(M, w, phi.left()) && model_check(M, w, phi.right());
    case Term::Kind::join:
      return model_check(M, w, phi.left()) || model_check(M, w, phi.right());
    case Term::Kind::complement:
      return !model_check(M, w, phi.child());
    case Term::Kind::sub:
      return model_check(M, M.frame.act(phi.gen())[w], phi.child());
    case Term::Kind::diag:
      return M.frame.diag(phi.diag_i(), phi.diag_j()).test(w);
  }
  return false;
}

////////////////////////////////////////////////////////////////////////
// Propositional formulas
////////////////////////////////////////////////////////////////////////

class PropFormula {
 public:
  enum class Op : std::uint8_t { konst, atom, negation, conjunction, disjunction };

  struct Node {
    Op op = Op::konst;
    bool value = false;
    std::int32_t a = -1;
    std::int32_t b = -1;
  };

  /// (variable, point index) for each atom.
  using AtomKey = std::pair<int, std::uint64_t>;

  [[nodiscard]] std::vector<Node> const& nodes() const noexcept { return nodes_; }
  [[nodiscard]] std::int32_t root() const noexcept { return root_; }
  [[nodiscard]] std::vector<AtomKey> const& atoms() const noexcept { return atoms_; }
  [[nodiscard]] std::size_t atom_count() const noexcept { return atoms_.size(); }
  /// Points visited by the unfolding, in increasing index order.
  [[nodiscard]] std::vector<std::uint64_t> const& touched() const noexcept {
    return touched_;
  }
  [[nodiscard]] int dim() const noexcept { return n_; }
  [[nodiscard]] int base() const noexcept { return k_; }

  [[nodiscard]] bool evaluate(std::vector<bool> const& assignment) const {
    std::vector<char> val(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      auto const& nd = nodes_[i];
      switch (nd.op) {
        case Op::konst:
          val[i] = nd.value;
          break;
        case Op::atom:
          val[i] = assignment.at(static_cast<std::size_t>(nd.a));
          break;
        case Op::negation:
          val[i] = !val[nd.a];
          break;
        case Op::conjunction:
          val[i] = val[nd.a] && val[nd.b];
          break;
        case Op::disjunction:
          val[i] = val[nd.a] || val[nd.b];
          break;
      }
    }
    return val[root_];
  }

  [[nodiscard]] std::string to_string() const { return print(root_); }

  /// Builder interface used by unfold; children precede parents.
  std::int32_t constant(bool v) { return push(Node{Op::konst, v, -1, -1}); }
  std::int32_t atom(int var, std::uint64_t point) {
    AtomKey key{var, point};
    auto [it, fresh] = atom_ids_.emplace(key, static_cast<std::int32_t>(atoms_.size()));
    if (fresh) {
      atoms_.push_back(key);
    }
    return push(Node{Op::atom, false, it->second, -1});
  }
  std::int32_t negation(std::int32_t a) { return push(Node{Op::negation, false, a, -1}); }
  std::int32_t conjunction(std::int32_t a, std::int32_t b) {
    return push(Node{Op::conjunction, false, a, b});
  }
  std::int32_t disjunction(std::int32_t a, std::int32_t b) {
    return push(Node{Op::disjunction, false, a, b});
  }
  void set_root(std::int32_t r) { root_ = r; }
  void touch(std::uint64_t p) {
    auto it = std::lower_bound(touched_.begin(), touched_.end(), p);
    if (it == touched_.end() || *it != p) {
      touched_.insert(it, p);
    }
  }
  void set_space(int n, int k) {
    n_ = n;
    k_ = k;
  }

 private:
  std::int32_t push(Node nd) {
    nodes_.push_back(nd);
    return static_cast<std::int32_t>(nodes_.size() - 1);
  }

  [[nodiscard]] std::string print(std::int32_t i) const {
    auto const& nd = nodes_[i];
    switch (nd.op) {
      case Op::konst:
        return nd.value ? "T" : "F";
      case Op::atom: {
        auto [v, p] = atoms_[nd.a];
        return "p" + std::to_string(v) + "@"
               + Point::from_index(n_, k_, p).to_string();
      }
      case Op::negation:
        return "~" + print(nd.a);
      case Op::conjunction:
        return "(" + print(nd.a) + " & " + print(nd.b) + ")";
      case Op::disjunction:
        return "(" + print(nd.a) + " | " + print(nd.b) + ")";
    }
    return "?";
  }

  std::vector<Node> nodes_;
  std::vector<AtomKey> atoms_;
  std::map<AtomKey, std::int32_t> atom_ids_;
  std::vector<std::uint64_t> touched_;
  std::int32_t root_ = -1;
  int n_ = 0;
  int k_ = 0;
};

namespace detail {
  inline std::int32_t unfold_into(PropFormula& out, Term const& phi,
                                  Point const& q) {
    out.touch(q.index());
    switch (phi.kind()) {
      case Term::Kind::var:
        return out.atom(phi.var_index(), q.index());
      case Term::Kind::zero:
        return out.constant(false);
      case Term::Kind::one:
        return out.constant(true);
      case Term::Kind::meet: {
        auto a = unfold_into(out, phi.left(), q);
        auto b = unfold_into(out, phi.right(), q);
        return out.conjunction(a, b);
      }
      case Term::Kind::join: {
        auto a = unfold_into(out, phi.left(), q);
        auto b = unfold_into(out, phi.right(), q);
        return out.disjunction(a, b);
      }
      case Term::Kind::complement:
        return out.negation(unfold_into(out, phi.child(), q));
      case Term::Kind::sub:
        return unfold_into(out, phi.child(), apply(q, phi.gen()));
      case Term::Kind::diag:
        return out.constant(q[phi.diag_i()] == q[phi.diag_j()]);
    }
    throw Error("unfold: unknown node");
  }
}  // namespace detail

/// The propositional content of phi at the point q.
inline PropFormula unfold(Term const& phi, Point const& q) {
  PropFormula out;
  out.set_space(q.dim(), q.base());
  out.set_root(detail::unfold_into(out, phi, q));
  return out;
}

////////////////////////////////////////////////////////////////////////
// Propositional satisfiability
////////////////////////////////////////////////////////////////////////

namespace detail {
  // Literals are 2 * var + (negated ? 1 : 0).
  class Dpll {
   public:
    explicit Dpll(std::size_t vars) : value_(vars, -1) {}

    void add(std::vector<std::uint32_t> clause) { clauses_.push_back(std::move(clause)); }

    bool solve() { return search(); }

    [[nodiscard]] bool value(std::size_t v) const { return value_[v] == 1; }

   private:
    [[nodiscard]] int lit_value(std::uint32_t lit) const {
      int v = value_[lit >> 1];
      if (v < 0) {
        return -1;
      }
      return (lit & 1u) ? 1 - v : v;
    }

    void assign(std::uint32_t lit, std::vector<std::uint32_t>& trail) {
      value_[lit >> 1] = (lit & 1u) ? 0 : 1;
      trail.push_back(lit >> 1);
    }

    bool propagate(std::vector<std::uint32_t>& trail) {
      bool changed = true;
      while (changed) {
        changed = false;
        for (auto const& c : clauses_) {
          int unassigned = 0;
          std::uint32_t last = 0;
          bool sat = false;
          for (auto lit : c) {
            int v = lit_value(lit);
            if (v == 1) {
              sat = true;
              break;
            }
            if (v < 0) {
              ++unassigned;
              last = lit;
            }
          }
          if (sat) {
            continue;
          }
          if (unassigned == 0) {
            return false;
          }
          if (unassigned == 1) {
            assign(last, trail);
            changed = true;
          }
        }
      }
      return true;
    }

    bool search() {
      std::vector<std::uint32_t> trail;
      if (!propagate(trail)) {
        undo(trail);
        return false;
      }
      auto it = std::find(value_.begin(), value_.end(), -1);
      if (it == value_.end()) {
        return true;
      }
      auto var = static_cast<std::uint32_t>(it - value_.begin());
      for (std::uint32_t neg : {0u, 1u}) {
        value_[var] = neg ? 0 : 1;
        if (search()) {
          return true;
        }
        value_[var] = -1;
      }
      undo(trail);
      return false;
    }

    void undo(std::vector<std::uint32_t> const& trail) {
      for (auto v : trail) {
        value_[v] = -1;
      }
    }

    std::vector<std::vector<std::uint32_t>> clauses_;
    std::vector<int> value_;
  };
}  // namespace detail

/// An assignment to the atoms of psi making it true, by DPLL on the Tseitin
/// encoding.
inline std::optional<std::vector<bool>> prop_sat(PropFormula const& psi) {
  auto const& nodes = psi.nodes();
  std::size_t atoms = psi.atom_count();
  // Variable of node i: its atom for atom nodes, else atoms + i.
  auto var = [&](std::size_t i) -> std::uint32_t {
    return nodes[i].op == PropFormula::Op::atom
               ? static_cast<std::uint32_t>(nodes[i].a)
               : static_cast<std::uint32_t>(atoms + i);
  };
  auto pos = [](std::uint32_t v) { return 2 * v; };
  auto neg = [](std::uint32_t v) { return 2 * v + 1; };
  detail::Dpll solver(atoms + nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    auto const& nd = nodes[i];
    auto x = var(i);
    switch (nd.op) {
      case PropFormula::Op::konst:
        solver.add({nd.value ? pos(x) : neg(x)});
        break;
      case PropFormula::Op::atom:
        break;
      case PropFormula::Op::negation: {
        auto a = var(static_cast<std::size_t>(nd.a));
        solver.add({neg(x), neg(a)});
        solver.add({pos(x), pos(a)});
        break;
      }
      case PropFormula::Op::conjunction: {
        auto a = var(static_cast<std::size_t>(nd.a));
        auto b = var(static_cast<std::size_t>(nd.b));
        solver.add({neg(x), pos(a)});
        solver.add({neg(x), pos(b)});
        solver.add({pos(x), neg(a), neg(b)});
        break;
      }
      case PropFormula::Op::disjunction: {
        auto a = var(static_cast<std::size_t>(nd.a));
        auto b = var(static_cast<std::size_t>(nd.b));
        solver.add({pos(x), neg(a)});
        solver.add({pos(x), neg(b)});
        solver.add({neg(x), pos(a), pos(b)});
        break;
      }
    }
  }
  solver.add({pos(var(static_cast<std::size_t>(psi.root())))});
  if (!solver.solve()) {
    return std::nullopt;
  }
  std::vector<bool> out(atoms);
  for (std::size_t a = 0; a < atoms; ++a) {
    out[a] = solver.value(a);
  }
  return out;
}

/// Truth-table search (at most 24 atoms).
inline std::optional<std::vector<bool>> prop_sat_brute(PropFormula const& psi) {
  std::size_t atoms = psi.atom_count();
  if (atoms > 24) {
    throw BudgetExceeded("prop_sat_brute: more than 24 atoms");
  }
  std::vector<bool> val(atoms);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << atoms); ++m) {
    for (std::size_t a = 0; a < atoms; ++a) {
      val[a] = (m >> a) & 1u;
    }
    if (psi.evaluate(val)) {
      return val;
    }
  }
  return std::nullopt;
}

////////////////////////////////////////////////////////////////////////
// Modal satisfiability and validity
////////////////////////////////////////////////////////////////////////

struct SatResult {
  bool sat = false;
  int k = 0;
  Point point;
  Partition partition;
  std::vector<Point> touched;
  /// Over the point indices of ^n k, one set per variable.
  std::vector<PointSet> valuation;
  std::size_t modalities = 0;
  /// Number of partitions tried.
  std::size_t tried = 0;
};

inline constexpr int kSatDimLimit = 8;

inline SatResult satisfiable(Term const& phi, int n,
                             SignatureMode mode = SignatureMode::full) {
  if (n < 2 || n > kSatDimLimit) {
    throw LimitExceeded("satisfiable: n must lie in [2, "
                        + std::to_string(kSatDimLimit) + "]");
  }
  check_signature(phi, n, mode);
  SatResult res;
  res.modalities = modality_count(phi);
  int vars = var_count(phi);
  for (auto const& P : partitions(n)) {
    ++res.tried;
    auto q = P.representative();
    auto psi = unfold(phi, q);
    auto assignment = prop_sat(psi);
    if (!assignment) {
      continue;
    }
    int k = P.block_count();
    Model M{point_frame(n, k, mode), {}};
    std::size_t space = M.frame.size();
    M.valuation.assign(static_cast<std::size_t>(vars), PointSet(space));
    for (std::size_t a = 0; a < psi.atom_count(); ++a) {
      if ((*assignment)[a]) {
        auto [v, p] = psi.atoms()[a];
        M.valuation[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(p));
      }
    }
    if (!model_check(M, static_cast<std::uint32_t>(q.index()), phi)) {
      throw Error("satisfiable: witness failed model checking for "
                  + to_string(phi));
    }
    res.sat = true;
    res.k = k;
    res.point = q;
    res.partition = P;
    for (auto p : psi.touched()) {
      res.touched.push_back(Point::from_index(n, k, p));
    }
    res.valuation = std::move(M.valuation);
    return res;
  }
  return res;
}

inline bool valid(Term const& phi, int n, SignatureMode mode = SignatureMode::full) {
  return !satisfiable(~phi, n, mode).sat;
}

/// s = t is valid iff ~(s <-> t) is unsatisfiable.
inline bool valid(Equation const& e, int n, SignatureMode mode = SignatureMode::full) {
  return !satisfiable(~equation_formula(e), n, mode).sat;
}

/// A point and valuation refuting e, if any.
inline SatResult refute(Equation const& e, int n,
                        SignatureMode mode = SignatureMode::full) {
  return satisfiable(~equation_formula(e), n, mode);
}

}  // namespace substal

#endif  // SUBSTAL_LOGIC_HPP_
