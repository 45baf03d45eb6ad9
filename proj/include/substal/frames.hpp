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

// Frames are finite sets of worlds with one total map per generator of the
// signature.  A frame is coherent when the maps realize a right action of
// the generated monoid:  act(sigma o tau) = act(tau) o act(sigma), so that
// act(tau)(q) = q o tau on point frames.  The complex algebra Cm F has all
// subsets of worlds as elements and s_g X = act(g)^-1 [X].

#ifndef SUBSTAL_FRAMES_HPP_
#define SUBSTAL_FRAMES_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "substal/algebra.hpp"
#include "substal/error.hpp"
#include "substal/monoid.hpp"
#include "substal/point_set.hpp"
#include "substal/setalg.hpp"

namespace substal {

using WorldMap = std::vector<std::uint32_t>;

class Frame {
 public:
  Frame() = default;

  /// actions[a] is the map of generators(n, mode)[a].  diag, when present,
  /// holds one world set per ordered pair (i, j) at position i * n + j.
  Frame(int n, SignatureMode mode, std::size_t worlds,
        std::vector<WorldMap> actions, std::vector<PointSet> diag = {})
      : n_(n),
        mode_(mode),
        worlds_(worlds),
        gens_(generators(n, mode)),
        actions_(std::move(actions)),
        diag_(std::move(diag)) {
    if (actions_.size() != gens_.size()) {
      throw InvalidFrame("frame needs " + std::to_string(gens_.size())
                         + " generator maps, got "
                         + std::to_string(actions_.size()));
    }
    for (std::size_t a = 0; a < actions_.size(); ++a) {
      if (actions_[a].size() != worlds_) {
        throw InvalidFrame(gens_[a].to_string() + " is not total");
      }
      for (auto w : actions_[a]) {
        if (w >= worlds_) {
          throw InvalidFrame(gens_[a].to_string() + " leaves the frame");
        }
      }
    }
    if (has_diagonals(mode_)) {
      if (diag_.empty()) {
        throw InvalidFrame("mode diag needs diagonal markings");
      }
      if (diag_.size() != static_cast<std::size_t>(n_ * n_)) {
        throw InvalidFrame("diagonal markings need n * n entries");
      }
      for (auto const& d : diag_) {
        if (d.size() != worlds_) {
          throw InvalidFrame("diagonal marking over the wrong world set");
        }
      }
    } else if (!diag_.empty()) {
      throw InvalidFrame("diagonal markings need mode diag");
    }
  }

  [[nodiscard]] int dim() const noexcept { return n_; }
  [[nodiscard]] SignatureMode mode() const noexcept { return mode_; }
  [[nodiscard]] std::size_t size() const noexcept { return worlds_; }
  [[nodiscard]] std::vector<GenSym> const& signature() const noexcept { return gens_; }
  [[nodiscard]] std::vector<WorldMap> const& actions() const noexcept { return actions_; }
  [[nodiscard]] std::vector<PointSet> const& diag_markings() const noexcept {
    return diag_;
  }

  [[nodiscard]] std::size_t gen_position(GenSym g) const {
    for (std::size_t a = 0; a < gens_.size(); ++a) {
      if (gens_[a] == g) {
        return a;
      }
    }
    throw InvalidInput(g.to_string() + " not in the signature of mode "
                       + std::string(to_string(mode_)));
  }

  [[nodiscard]] WorldMap const& act(GenSym g) const {
    return actions_[gen_position(g)];
  }

  /// act(g1 ... gm): apply g1 first.
  [[nodiscard]] WorldMap act(Word const& w) const {
    WorldMap out(worlds_);
    std::iota(out.begin(), out.end(), 0u);
    for (auto const& g : w.symbols()) {
      auto const& m = act(g);
      for (auto& x : out) {
        x = m[x];
      }
    }
    return out;
  }

  [[nodiscard]] WorldMap act(Transformation const& tau) const {
    return act(canonical_word(tau, mode_));
  }

  [[nodiscard]] PointSet const& diag(int i, int j) const {
    if (!has_diagonals(mode_)) {
      throw ModeMismatch("diagonal markings need mode diag");
    }
    return diag_.at(static_cast<std::size_t>(i * n_ + j));
  }

 private:
  int n_ = 0;
  SignatureMode mode_ = SignatureMode::full;
  std::size_t worlds_ = 0;
  std::vector<GenSym> gens_;
  std::vector<WorldMap> actions_;
  std::vector<PointSet> diag_;
};

////////////////////////////////////////////////////////////////////////
// Coherence
////////////////////////////////////////////////////////////////////////

struct FrameReport {
  bool ok = true;
  bool all_pairs = true;
  std::uint64_t checks = 0;
  std::string failure;
  std::optional<Transformation> sigma;
  std::optional<Transformation> tau;
  std::optional<std::uint32_t> world;

  void fail(std::string why) {
    if (ok) {
      ok = false;
      failure = std::move(why);
    }
  }
};

inline constexpr std::uint64_t kDefaultFrameBudget = std::uint64_t{1} << 26;

/// When |monoid|^2 * |worlds| exceeds budget the pair check is replaced by
/// the equivalent act(tau o g) = act(g) o act(tau) for generators g.
inline FrameReport frame_check(Frame const& F,
                               std::uint64_t budget = kDefaultFrameBudget) {
  FrameReport rep;
  int n = F.dim();
  auto const& gens = F.signature();
  std::size_t W = F.size();

  for (std::size_t a = 0; a < gens.size() && rep.ok; ++a) {
    if (!gens[a].is_transposition()) {
      continue;
    }
    auto const& m = F.actions()[a];
    for (std::uint32_t w = 0; w < W; ++w) {
      ++rep.checks;
      if (m[m[w]] != w) {
        auto t = gens[a].as_transformation(n);
        rep.fail(gens[a].to_string() + " is not an involution at world "
                 + std::to_string(w));
        rep.sigma = t;
        rep.tau = t;
        rep.world = w;
        break;
      }
    }
  }
  if (!rep.ok) {
    return rep;
  }

  auto monoid = enumerate_monoid(n, F.mode(), kMaxDim);
  std::vector<WorldMap> acts;
  acts.reserve(monoid.size());
  std::map<std::uint64_t, std::size_t> pos;
  for (std::size_t t = 0; t < monoid.size(); ++t) {
    acts.push_back(F.act(monoid[t]));
    pos.emplace(monoid[t].index(), t);
  }

  for (std::size_t a = 0; a < gens.size() && rep.ok; ++a) {
    auto t = gens[a].as_transformation(n);
    auto const& via_word = acts[pos.at(t.index())];
    for (std::uint32_t w = 0; w < W; ++w) {
      ++rep.checks;
      if (via_word[w] != F.actions()[a][w]) {
        rep.fail(gens[a].to_string()
                 + " differs from the action of its canonical word at world "
                 + std::to_string(w));
        rep.sigma = Transformation::identity(n);
        rep.tau = t;
        rep.world = w;
        break;
      }
    }
  }
  if (!rep.ok) {
    return rep;
  }

  std::uint64_t m = monoid.size();
  auto check_pair = [&](std::size_t s, std::size_t t) {
    auto const& st = acts[pos.at(compose(monoid[s], monoid[t]).index())];
    auto const& as = acts[s];
    auto const& at = acts[t];
    for (std::uint32_t w = 0; w < W; ++w) {
      ++rep.checks;
      if (st[w] != at[as[w]]) {
        rep.fail("act(" + monoid[s].to_string() + " o " + monoid[t].to_string()
                 + ") != act(" + monoid[t].to_string() + ") o act("
                 + monoid[s].to_string() + ") at world " + std::to_string(w));
        rep.sigma = monoid[s];
        rep.tau = monoid[t];
        rep.world = w;
        return false;
      }
    }
    return true;
  };
  if (m * m * std::max<std::uint64_t>(W, 1) <= budget) {
    for (std::size_t s = 0; s < m && rep.ok; ++s) {
      for (std::size_t t = 0; t < m; ++t) {
        if (!check_pair(s, t)) {
          break;
        }
      }
    }
  } else {
    rep.all_pairs = false;
    for (std::size_t s = 0; s < m && rep.ok; ++s) {
      for (auto const& g : gens) {
        if (!check_pair(s, pos.at(g.as_transformation(n).index()))) {
          break;
        }
      }
    }
  }
  if (!rep.ok || !has_diagonals(F.mode())) {
    return rep;
  }

  auto all = PointSet::full(W);
  for (int i = 0; i < n && rep.ok; ++i) {
    if (F.diag(i, i) != all) {
      rep.fail("d(" + std::to_string(i) + "," + std::to_string(i)
               + ") does not hold everywhere");
    }
    for (int j = 0; j < n && rep.ok; ++j) {
      if (F.diag(i, j) != F.diag(j, i)) {
        rep.fail("diagonal marking is not symmetric at " + std::to_string(i)
                 + "," + std::to_string(j));
      }
      for (int k = 0; k < n && rep.ok; ++k) {
        if (!(F.diag(i, k) & F.diag(k, j)).is_subset_of(F.diag(i, j))) {
          rep.fail("diagonal marking is not transitive at " + std::to_string(i)
                   + "," + std::to_string(k) + "," + std::to_string(j));
        }
      }
      for (std::size_t a = 0; a < gens.size() && rep.ok; ++a) {
        auto t = gens[a].as_transformation(n);
        auto const& target = F.diag(t[i], t[j]);
        auto const& d = F.diag(i, j);
        for (std::uint32_t w = 0; w < W; ++w) {
          ++rep.checks;
          if (d.test(F.actions()[a][w]) != target.test(w)) {
            rep.fail(gens[a].to_string() + " d(" + std::to_string(i) + ","
                     + std::to_string(j) + ") != d(" + std::to_string(t[i])
                     + "," + std::to_string(t[j]) + ") at world "
                     + std::to_string(w));
            rep.world = w;
            break;
          }
        }
      }
    }
  }
  return rep;
}

////////////////////////////////////////////////////////////////////////
// Complex algebras
////////////////////////////////////////////////////////////////////////

class FinAlgebra {
 public:
  /// No coherence check; complex_algebra() is the checked entry point.
  explicit FinAlgebra(Frame F) : frame_(std::make_shared<const Frame>(std::move(F))) {}

  [[nodiscard]] Frame const& frame() const noexcept { return *frame_; }
  [[nodiscard]] int dim() const noexcept { return frame_->dim(); }
  [[nodiscard]] SignatureMode mode() const noexcept { return frame_->mode(); }
  [[nodiscard]] std::size_t atom_count() const noexcept { return frame_->size(); }

  [[nodiscard]] PointSet zero() const { return PointSet(frame_->size()); }
  [[nodiscard]] PointSet one() const { return PointSet::full(frame_->size()); }
  [[nodiscard]] PointSet complement(PointSet const& x) const {
    check(x);
    return ~x;
  }
  [[nodiscard]] PointSet subst(GenSym g, PointSet const& x) const {
    check(x);
    return preimage(frame_->act(g), x);
  }
  [[nodiscard]] PointSet subst(Transformation const& tau, PointSet const& x) const {
    check(x);
    return preimage(frame_->act(tau), x);
  }
  [[nodiscard]] PointSet diag(int i, int j) const { return frame_->diag(i, j); }

  [[nodiscard]] std::vector<PointSet> atoms() const {
    std::vector<PointSet> out;
    for (std::size_t w = 0; w < frame_->size(); ++w) {
      PointSet a(frame_->size());
      a.set(w);
      out.push_back(std::move(a));
    }
    return out;
  }

  [[nodiscard]] PointSet atom(std::size_t w) const {
    PointSet a(frame_->size());
    a.set(w);
    return a;
  }

  static PointSet preimage(WorldMap const& m, PointSet const& x) {
    PointSet out(m.size());
    for (std::size_t w = 0; w < m.size(); ++w) {
      if (x.test(m[w])) {
        out.set(w);
      }
    }
    return out;
  }

 private:
  void check(PointSet const& x) const {
    if (x.size() != frame_->size()) {
      throw InvalidInput("element is not a set of worlds of this frame");
    }
  }

  std::shared_ptr<const Frame> frame_;
};

inline FinAlgebra complex_algebra(Frame F) {
  auto rep = frame_check(F);
  if (!rep.ok) {
    throw InvalidFrame("complex_algebra: " + rep.failure);
  }
  return FinAlgebra(std::move(F));
}

/// The frame ^n k with act(g)(q) = q o g, worlds numbered by point index.
inline Frame point_frame(int n, int k, SignatureMode mode = SignatureMode::full) {
  auto space = detail::checked_pow(static_cast<std::uint64_t>(k), n);
  if (space > kDefaultPointBudget) {
    throw BudgetExceeded("point_frame: k^n exceeds budget");
  }
  auto gens = generators(n, mode);
  std::vector<WorldMap> actions(gens.size(), WorldMap(space));
  for (std::uint64_t i = 0; i < space; ++i) {
    auto q = Point::from_index(n, k, i);
    for (std::size_t a = 0; a < gens.size(); ++a) {
      actions[a][i] = static_cast<std::uint32_t>(apply(q, gens[a]).index());
    }
  }
  std::vector<PointSet> diag;
  if (has_diagonals(mode)) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        PointSet d(space);
        for (std::uint64_t p = 0; p < space; ++p) {
          auto q = Point::from_index(n, k, p);
          if (q[i] == q[j]) {
            d.set(p);
          }
        }
        diag.push_back(std::move(d));
      }
    }
  }
  return Frame(n, mode, space, std::move(actions), std::move(diag));
}

/// The frame of points of a set algebra's unit, worlds numbered by local
/// index.
inline Frame unit_frame(ConcreteAlgebra const& A) {
  std::vector<WorldMap> actions;
  for (auto const& g : A.signature()) {
    auto const& t = A.table(g);
    actions.emplace_back(t.begin(), t.end());
  }
  std::vector<PointSet> diag;
  if (has_diagonals(A.mode())) {
    for (int i = 0; i < A.dim(); ++i) {
      for (int j = 0; j < A.dim(); ++j) {
        diag.push_back(A.diag(i, j));
      }
    }
  }
  return Frame(A.dim(), A.mode(), A.unit_size(), std::move(actions),
               std::move(diag));
}

/// The atom structure of sub, a subalgebra of parent: worlds are the atoms,
/// act(g)(x) is the unique atom y with x <= s_g(y).
template <SubstitutionAlgebra A>
Frame atom_frame(A const& parent, SubAlgebra const& sub) {
  auto gens = generators(parent.dim(), parent.mode());
  std::size_t m = sub.atoms.size();
  std::vector<WorldMap> actions(gens.size(), WorldMap(m));
  for (std::size_t a = 0; a < gens.size(); ++a) {
    std::vector<PointSet> pre;
    pre.reserve(m);
    for (auto const& y : sub.atoms) {
      pre.push_back(parent.subst(gens[a], y));
    }
    for (std::size_t x = 0; x < m; ++x) {
      std::optional<std::uint32_t> found;
      for (std::size_t y = 0; y < m; ++y) {
        if (sub.atoms[x].is_subset_of(pre[y])) {
          found = static_cast<std::uint32_t>(y);
          break;
        }
      }
      if (!found) {
        throw InvalidInput("atom_frame: atoms are not closed under "
                           + gens[a].to_string());
      }
      actions[a][x] = *found;
    }
  }
  std::vector<PointSet> diag;
  if (has_diagonals(parent.mode())) {
    for (int i = 0; i < parent.dim(); ++i) {
      for (int j = 0; j < parent.dim(); ++j) {
        PointSet d(m);
        auto dij = parent.diag(i, j);
        for (std::size_t x = 0; x < m; ++x) {
          if (sub.atoms[x].is_subset_of(dij)) {
            d.set(x);
          } else if (sub.atoms[x].intersects(dij)) {
            throw InvalidInput("atom_frame: diagonal is not a union of atoms");
          }
        }
        diag.push_back(std::move(d));
      }
    }
  }
  return Frame(parent.dim(), parent.mode(), m, std::move(actions), std::move(diag));
}

template <FiniteSubstitutionAlgebra A>
Frame atom_frame(A const& alg) {
  return atom_frame(alg, SubAlgebra{alg.dim(), alg.mode(), alg.atoms(),
                                    alg.one().size()});
}

inline Frame atom_structure(FinAlgebra const& A) { return atom_frame(A); }

/// Worlds reachable from seeds, renumbered in increasing order of the old
/// numbering.  The second component maps new worlds to old ones.
inline std::pair<Frame, std::vector<std::uint32_t>> generated_subframe(
    Frame const& F, std::vector<std::uint32_t> const& seeds) {
  std::vector<bool> in(F.size(), false);
  std::vector<std::uint32_t> stack;
  for (auto s : seeds) {
    if (s >= F.size()) {
      throw InvalidInput("generated_subframe: seed outside the frame");
    }
    if (!in[s]) {
      in[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    auto w = stack.back();
    stack.pop_back();
    for (auto const& m : F.actions()) {
      if (!in[m[w]]) {
        in[m[w]] = true;
        stack.push_back(m[w]);
      }
    }
  }
  std::vector<std::uint32_t> old_of;
  std::vector<std::uint32_t> new_of(F.size(), 0);
  for (std::uint32_t w = 0; w < F.size(); ++w) {
    if (in[w]) {
      new_of[w] = static_cast<std::uint32_t>(old_of.size());
      old_of.push_back(w);
    }
  }
  std::vector<WorldMap> actions;
  for (auto const& m : F.actions()) {
    WorldMap nm(old_of.size());
    for (std::size_t x = 0; x < old_of.size(); ++x) {
      nm[x] = new_of[m[old_of[x]]];
    }
    actions.push_back(std::move(nm));
  }
  std::vector<PointSet> diag;
  for (auto const& d : F.diag_markings()) {
    PointSet nd(old_of.size());
    for (std::size_t x = 0; x < old_of.size(); ++x) {
      if (d.test(old_of[x])) {
        nd.set(x);
      }
    }
    diag.push_back(std::move(nd));
  }
  return {Frame(F.dim(), F.mode(), old_of.size(), std::move(actions),
                std::move(diag)),
          std::move(old_of)};
}

/// The quotient by the smallest congruence identifying each pair of merges.
/// The second component maps old worlds to classes.
inline std::pair<Frame, std::vector<std::uint32_t>> congruence_quotient(
    Frame const& F,
    std::vector<std::pair<std::uint32_t, std::uint32_t>> const& merges) {
  std::vector<std::uint32_t> parent(F.size());
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto pending = merges;
  while (!pending.empty()) {
    auto [a, b] = pending.back();
    pending.pop_back();
    a = find(a);
    b = find(b);
    if (a == b) {
      continue;
    }
    parent[std::max(a, b)] = std::min(a, b);
    for (auto const& m : F.actions()) {
      pending.emplace_back(m[a], m[b]);
    }
  }
  // a and b were class representatives when merged, so propagating their
  // images suffices: every member's image is already tied to its
  // representative's image by an earlier merge.
  std::vector<std::uint32_t> cls(F.size());
  std::vector<std::uint32_t> rep_of;
  std::vector<std::uint32_t> id_of(F.size(), UINT32_MAX);
  for (std::uint32_t w = 0; w < F.size(); ++w) {
    auto r = find(w);
    if (id_of[r] == UINT32_MAX) {
      id_of[r] = static_cast<std::uint32_t>(rep_of.size());
      rep_of.push_back(r);
    }
    cls[w] = id_of[r];
  }
  std::vector<WorldMap> actions;
  for (auto const& m : F.actions()) {
    WorldMap nm(rep_of.size());
    for (std::uint32_t w = 0; w < F.size(); ++w) {
      nm[cls[w]] = cls[m[w]];
    }
    for (std::uint32_t w = 0; w < F.size(); ++w) {
      if (nm[cls[w]] != cls[m[w]]) {
        throw Error("congruence_quotient: closure is not a congruence");
      }
    }
    actions.push_back(std::move(nm));
  }
  std::vector<PointSet> diag;
  for (auto const& d : F.diag_markings()) {
    PointSet nd(rep_of.size());
    for (std::uint32_t w = 0; w < F.size(); ++w) {
      if (d.test(w)) {
        nd.set(cls[w]);
      }
    }
    for (std::uint32_t w = 0; w < F.size(); ++w) {
      if (d.test(w) != nd.test(cls[w])) {
        throw InvalidInput("congruence_quotient: merge splits a diagonal");
      }
    }
    diag.push_back(std::move(nd));
  }
  return {Frame(F.dim(), F.mode(), rep_of.size(), std::move(actions),
                std::move(diag)),
          std::move(cls)};
}

inline Frame disjoint_union(std::vector<Frame> const& Fs) {
  if (Fs.empty()) {
    throw InvalidInput("disjoint_union of no frames");
  }
  int n = Fs.front().dim();
  auto mode = Fs.front().mode();
  std::size_t total = 0;
  for (auto const& F : Fs) {
    if (F.dim() != n || F.mode() != mode) {
      throw ModeMismatch("disjoint_union: frames differ in dimension or mode");
    }
    total += F.size();
  }
  auto gens = generators(n, mode);
  std::vector<WorldMap> actions(gens.size());
  std::vector<PointSet> diag;
  if (has_diagonals(mode)) {
    diag.assign(static_cast<std::size_t>(n * n), PointSet(total));
  }
  std::uint32_t offset = 0;
  for (auto const& F : Fs) {
    for (std::size_t a = 0; a < gens.size(); ++a) {
      for (auto w : F.actions()[a]) {
        actions[a].push_back(w + offset);
      }
    }
    for (std::size_t d = 0; d < diag.size(); ++d) {
      F.diag_markings()[d].for_each([&](std::size_t w) { diag[d].set(w + offset); });
    }
    offset += static_cast<std::uint32_t>(F.size());
  }
  return Frame(n, mode, total, std::move(actions), std::move(diag));
}

////////////////////////////////////////////////////////////////////////
// Morphisms and zigzag products
////////////////////////////////////////////////////////////////////////

struct Equivariant {
  Frame source;
  Frame target;
  WorldMap map;
};

/// map commutes with every generator and preserves diagonal markings both
/// ways.
inline bool is_equivariant(Equivariant const& e) {
  auto const& S = e.source;
  auto const& T = e.target;
  if (S.dim() != T.dim() || S.mode() != T.mode() || e.map.size() != S.size()) {
    return false;
  }
  for (auto w : e.map) {
    if (w >= T.size()) {
      return false;
    }
  }
  for (std::size_t a = 0; a < S.signature().size(); ++a) {
    for (std::uint32_t w = 0; w < S.size(); ++w) {
      if (e.map[S.actions()[a][w]] != T.actions()[a][e.map[w]]) {
        return false;
      }
    }
  }
  for (std::size_t d = 0; d < S.diag_markings().size(); ++d) {
    for (std::uint32_t w = 0; w < S.size(); ++w) {
      if (S.diag_markings()[d].test(w) != T.diag_markings()[d].test(e.map[w])) {
        return false;
      }
    }
  }
  return true;
}

/// The complete homomorphism Cm(target) -> Cm(source) induced by e.
inline PointSet pull_back(Equivariant const& e, PointSet const& x) {
  return FinAlgebra::preimage(e.map, x);
}

struct Zigzag {
  Frame frame;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  bool left_surjective = false;
  bool right_surjective = false;
};

/// INSEP = { (x, y) : f(x) = h(y) } with the coordinatewise action.
inline Zigzag insep_zigzag(Equivariant const& f, Equivariant const& h) {
  if (f.target.size() != h.target.size() || f.target.dim() != h.target.dim()
      || f.target.mode() != h.target.mode()) {
    throw InvalidInput("insep_zigzag: maps have different targets");
  }
  if (!is_equivariant(f) || !is_equivariant(h)) {
    throw InvalidInput("insep_zigzag: maps are not equivariant");
  }
  Zigzag z;
  auto const& G = f.source;
  auto const& H = h.source;
  std::vector<std::uint32_t> index(G.size() * H.size(), UINT32_MAX);
  std::vector<bool> hit_left(G.size(), false), hit_right(H.size(), false);
  for (std::uint32_t x = 0; x < G.size(); ++x) {
    for (std::uint32_t y = 0; y < H.size(); ++y) {
      if (f.map[x] == h.map[y]) {
        index[x * H.size() + y] = static_cast<std::uint32_t>(z.pairs.size());
        z.pairs.emplace_back(x, y);
        hit_left[x] = true;
        hit_right[y] = true;
      }
    }
  }
  z.left_surjective = std::all_of(hit_left.begin(), hit_left.end(), [](bool b) { return b; });
  z.right_surjective = std::all_of(hit_right.begin(), hit_right.end(), [](bool b) { return b; });
  std::vector<WorldMap> actions;
  for (std::size_t a = 0; a < G.signature().size(); ++a) {
    WorldMap m(z.pairs.size());
    for (std::size_t p = 0; p < z.pairs.size(); ++p) {
      auto [x, y] = z.pairs[p];
      m[p] = index[G.actions()[a][x] * H.size() + H.actions()[a][y]];
    }
    actions.push_back(std::move(m));
  }
  std::vector<PointSet> diag;
  for (auto const& d : G.diag_markings()) {
    PointSet nd(z.pairs.size());
    for (std::size_t p = 0; p < z.pairs.size(); ++p) {
      if (d.test(z.pairs[p].first)) {
        nd.set(p);
      }
    }
    diag.push_back(std::move(nd));
  }
  z.frame = Frame(G.dim(), G.mode(), z.pairs.size(), std::move(actions), std::move(diag));
  return z;
}

////////////////////////////////////////////////////////////////////////
// Embeddings and superamalgamation
////////////////////////////////////////////////////////////////////////

/// A map Cm(source) -> Cm(target) given by the images of atoms.
struct Embedding {
  FinAlgebra source;
  FinAlgebra target;
  std::vector<PointSet> atom_images;

  [[nodiscard]] PointSet operator()(PointSet const& x) const {
    PointSet out = target.zero();
    x.for_each([&](std::size_t w) { out |= atom_images[w]; });
    return out;
  }
};

/// Empty string when e is an injective homomorphism, else the reason.
inline std::string embedding_defect(Embedding const& e) {
  if (e.source.dim() != e.target.dim() || e.source.mode() != e.target.mode()) {
    return "source and target signatures differ";
  }
  if (e.atom_images.size() != e.source.atom_count()) {
    return "one image per atom is required";
  }
  PointSet seen = e.target.zero();
  for (std::size_t w = 0; w < e.atom_images.size(); ++w) {
    auto const& img = e.atom_images[w];
    if (img.size() != e.target.one().size()) {
      return "atom image over the wrong universe";
    }
    if (img.none()) {
      return "atom " + std::to_string(w) + " maps to zero";
    }
    if (img.intersects(seen)) {
      return "atom images overlap";
    }
    seen |= img;
  }
  if (seen != e.target.one()) {
    return "atom images do not cover the unit";
  }
  for (auto const& g : e.source.frame().signature()) {
    for (std::size_t w = 0; w < e.atom_images.size(); ++w) {
      if (e(e.source.subst(g, e.source.atom(w))) != e.target.subst(g, e.atom_images[w])) {
        return g.to_string() + " not preserved at atom " + std::to_string(w);
      }
    }
  }
  if (has_diagonals(e.source.mode())) {
    int n = e.source.dim();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (e(e.source.diag(i, j)) != e.target.diag(i, j)) {
          return "diagonal not preserved";
        }
      }
    }
  }
  return {};
}

/// f_+(u) = the atom a of f's source with u <= f(a).
inline Equivariant dual_map(Embedding const& e) {
  WorldMap m(e.target.atom_count(), 0);
  for (std::size_t a = 0; a < e.atom_images.size(); ++a) {
    e.atom_images[a].for_each([&](std::size_t u) { m[u] = static_cast<std::uint32_t>(a); });
  }
  return Equivariant{e.target.frame(), e.source.frame(), std::move(m)};
}

/// The embedding Cm(sub's atom frame) -> parent induced by inclusion.
inline Embedding inclusion(FinAlgebra const& parent, SubAlgebra const& sub) {
  return Embedding{FinAlgebra(atom_frame(parent, sub)), parent, sub.atoms};
}

/// small <= big inside parent, as an embedding between their atom frames.
inline Embedding inclusion(FinAlgebra const& parent, SubAlgebra const& small,
                           SubAlgebra const& big) {
  std::vector<PointSet> images;
  for (auto const& a : small.atoms) {
    PointSet img(big.atoms.size());
    PointSet covered = parent.zero();
    for (std::size_t b = 0; b < big.atoms.size(); ++b) {
      if (big.atoms[b].is_subset_of(a)) {
        img.set(b);
        covered |= big.atoms[b];
      }
    }
    if (covered != a) {
      throw NotEmbedding("inclusion: first subalgebra is not inside the second");
    }
    images.push_back(std::move(img));
  }
  return Embedding{FinAlgebra(atom_frame(parent, small)),
                   FinAlgebra(atom_frame(parent, big)), std::move(images)};
}

struct SuperamalgamReport {
  bool commutes = true;
  bool supap = true;
  bool m_embedding = true;
  bool k_embedding = true;
  std::uint64_t pairs = 0;
  std::string failure;

  [[nodiscard]] bool ok() const { return commutes && supap && m_embedding && k_embedding; }
};

struct Superamalgam {
  FinAlgebra D;
  Embedding m;
  Embedding k;
  Zigzag zigzag;
  SuperamalgamReport report;
};

inline Superamalgam superamalgam(Embedding const& f, Embedding const& h,
                                 std::uint64_t budget = kDefaultElementBudget) {
  if (auto d = embedding_defect(f); !d.empty()) {
    throw NotEmbedding("superamalgam: f: " + d);
  }
  if (auto d = embedding_defect(h); !d.empty()) {
    throw NotEmbedding("superamalgam: h: " + d);
  }
  if (f.source.atom_count() != h.source.atom_count()) {
    throw NotEmbedding("superamalgam: f and h have different sources");
  }
  auto const& A = f.source;
  auto const& B = f.target;
  auto const& C = h.target;
  auto z = insep_zigzag(dual_map(f), dual_map(h));
  FinAlgebra D(z.frame);
  std::vector<PointSet> m_img(B.atom_count(), D.zero());
  std::vector<PointSet> k_img(C.atom_count(), D.zero());
  for (std::size_t p = 0; p < z.pairs.size(); ++p) {
    m_img[z.pairs[p].first].set(p);
    k_img[z.pairs[p].second].set(p);
  }
  Embedding m{B, D, std::move(m_img)};
  Embedding k{C, D, std::move(k_img)};
  SuperamalgamReport rep;
  if (auto d = embedding_defect(m); !d.empty()) {
    rep.m_embedding = false;
    rep.failure = "m: " + d;
  }
  if (auto d = embedding_defect(k); !d.empty()) {
    rep.k_embedding = false;
    rep.failure = "k: " + d;
  }
  for (std::size_t a = 0; a < A.atom_count(); ++a) {
    if (m(f(A.atom(a))) != k(h(A.atom(a)))) {
      rep.commutes = false;
      rep.failure = "m o f != k o h at atom " + std::to_string(a);
      break;
    }
  }
  auto As = elements(A, budget);
  auto Bs = elements(B, budget);
  auto Cs = elements(C, budget);
  std::vector<PointSet> fa, ha;
  for (auto const& a : As) {
    fa.push_back(f(a));
    ha.push_back(h(a));
  }
  std::vector<PointSet> mb, kc;
  for (auto const& b : Bs) {
    mb.push_back(m(b));
  }
  for (auto const& c : Cs) {
    kc.push_back(k(c));
  }
  for (std::size_t b = 0; b < Bs.size() && rep.supap; ++b) {
    for (std::size_t c = 0; c < Cs.size(); ++c) {
      ++rep.pairs;
      bool lhs = mb[b].is_subset_of(kc[c]);
      bool rhs = false;
      for (std::size_t a = 0; a < As.size() && !rhs; ++a) {
        rhs = Bs[b].is_subset_of(fa[a]) && ha[a].is_subset_of(Cs[c]);
      }
      if (lhs != rhs) {
        rep.supap = false;
        rep.failure = "SUPAP fails at b = " + Bs[b].to_string()
                      + ", c = " + Cs[c].to_string();
        break;
      }
    }
  }
  return Superamalgam{std::move(D), std::move(m), std::move(k), std::move(z),
                      std::move(rep)};
}

}  // namespace substal

#endif  // SUBSTAL_FRAMES_HPP_
