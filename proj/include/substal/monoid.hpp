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

// The transformation monoid of {0,...,n-1}, its generators and words.
//
// Conventions used throughout the library:
//   * (sigma o tau)(i) = sigma(tau(i))
//   * points act on the right: (q o tau)(i) = q(tau(i))
//   * the replacement [i|j] sends i to j and fixes everything else,
//     the transposition [i,j] swaps i and j.
// With these, s_sigma s_tau = s_(sigma o tau) holds in every set algebra.

#ifndef SUBSTAL_MONOID_HPP_
#define SUBSTAL_MONOID_HPP_

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "substal/error.hpp"

namespace substal {

inline constexpr int kMaxDim = 16;

/// Which substitution operators a signature provides.
enum class SignatureMode : std::uint8_t {
  replacements,    // Pinter's algebras
  transpositions,  // transposition algebras
  full,            // both kinds
  full_diagonal    // both kinds plus diagonal constants
};

constexpr bool has_transpositions(SignatureMode m) noexcept {
  return m != SignatureMode::replacements;
}

constexpr bool has_replacements(SignatureMode m) noexcept {
  return m != SignatureMode::transpositions;
}

constexpr bool has_diagonals(SignatureMode m) noexcept {
  return m == SignatureMode::full_diagonal;
}

inline std::string_view to_string(SignatureMode m) {
  switch (m) {
    case SignatureMode::replacements:
      return "pinter";
    case SignatureMode::transpositions:
      return "transpositions";
    case SignatureMode::full:
      return "full";
    case SignatureMode::full_diagonal:
      return "diag";
  }
  return "?";
}

/// Accepts both the short CLI names and the long enumerator names.
inline SignatureMode parse_mode(std::string_view s) {
  if (s == "pinter" || s == "replacements") {
    return SignatureMode::replacements;
  }
  if (s == "transpositions") {
    return SignatureMode::transpositions;
  }
  if (s == "full") {
    return SignatureMode::full;
  }
  if (s == "diag" || s == "full_diagonal") {
    return SignatureMode::full_diagonal;
  }
  throw InvalidInput("unknown signature mode '" + std::string(s) + "'");
}

namespace detail {
  inline void check_dim(int n) {
    if (n < 1 || n > kMaxDim) {
      throw LimitExceeded("dimension " + std::to_string(n)
                          + " outside [1, " + std::to_string(kMaxDim) + "]");
    }
  }

  inline std::uint64_t checked_pow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
      if (base != 0 && r > UINT64_MAX / base) {
        throw LimitExceeded("index space overflows 64 bits");
      }
      r *= base;
    }
    return r;
  }
}  // namespace detail

////////////////////////////////////////////////////////////////////////
// Transformation
////////////////////////////////////////////////////////////////////////

/// A self-map of {0,...,n-1}.
class Transformation {
 public:
  Transformation() = default;

  explicit Transformation(std::span<const int> map) : n_(0) {
    detail::check_dim(static_cast<int>(map.size()));
    n_ = static_cast<std::uint8_t>(map.size());
    for (std::size_t i = 0; i < map.size(); ++i) {
      if (map[i] < 0 || map[i] >= n_) {
        throw InvalidInput("transformation entry out of range");
      }
      map_[i] = static_cast<std::uint8_t>(map[i]);
    }
  }

  Transformation(std::initializer_list<int> map)
      : Transformation(std::span<const int>(map.begin(), map.size())) {}

  static Transformation identity(int n) {
    detail::check_dim(n);
    Transformation t;
    t.n_ = static_cast<std::uint8_t>(n);
    for (int i = 0; i < n; ++i) {
      t.map_[i] = static_cast<std::uint8_t>(i);
    }
    return t;
  }

  static Transformation transposition(int n, int i, int j) {
    Transformation t = identity(n);
    t.map_[i] = static_cast<std::uint8_t>(j);
    t.map_[j] = static_cast<std::uint8_t>(i);
    return t;
  }

  /// [i|j]: i goes to j, everything else is fixed.
  static Transformation replacement(int n, int i, int j) {
    Transformation t = identity(n);
    t.map_[i] = static_cast<std::uint8_t>(j);
    return t;
  }

  /// Inverse of index(): little-endian digits in base n.
  static Transformation from_index(int n, std::uint64_t idx) {
    Transformation t = identity(n);
    for (int i = 0; i < n; ++i) {
      t.map_[i] = static_cast<std::uint8_t>(idx % n);
      idx /= n;
    }
    return t;
  }

  [[nodiscard]] int dim() const noexcept { return n_; }
  [[nodiscard]] int operator[](int i) const noexcept { return map_[i]; }

  [[nodiscard]] std::uint64_t index() const noexcept {
    std::uint64_t r = 0;
    for (int i = n_ - 1; i >= 0; --i) {
      r = r * n_ + map_[i];
    }
    return r;
  }

  [[nodiscard]] bool is_permutation() const noexcept {
    std::uint32_t seen = 0;
    for (int i = 0; i < n_; ++i) {
      seen |= 1u << map_[i];
    }
    return seen == (1u << n_) - 1;
  }

  [[nodiscard]] bool is_identity() const noexcept {
    for (int i = 0; i < n_; ++i) {
      if (map_[i] != i) {
        return false;
      }
    }
    return true;
  }

  [[nodiscard]] int image_size() const noexcept {
    std::uint32_t seen = 0;
    for (int i = 0; i < n_; ++i) {
      seen |= 1u << map_[i];
    }
    return std::popcount(seen);
  }

  [[nodiscard]] std::vector<int> values() const {
    return std::vector<int>(map_.begin(), map_.begin() + n_);
  }

  [[nodiscard]] std::string to_string() const {
    std::string s = "[";
    for (int i = 0; i < n_; ++i) {
      s += (i ? "," : "") + std::to_string(map_[i]);
    }
    return s + "]";
  }

  friend bool operator==(Transformation const&, Transformation const&)
      = default;
  friend auto operator<=>(Transformation const& a, Transformation const& b) {
    if (a.n_ != b.n_) {
      return a.n_ <=> b.n_;
    }
    return a.index() <=> b.index();
  }

 private:
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxDim> map_{};
};

/// (sigma o tau)(i) = sigma(tau(i)).
inline Transformation compose(Transformation const& sigma,
                              Transformation const& tau) {
  if (sigma.dim() != tau.dim()) {
    throw DimensionMismatch("compose: dimensions differ");
  }
  std::array<int, kMaxDim> m{};
  for (int i = 0; i < tau.dim(); ++i) {
    m[i] = sigma[tau[i]];
  }
  return Transformation(std::span<const int>(m.data(), tau.dim()));
}

////////////////////////////////////////////////////////////////////////
// Point
////////////////////////////////////////////////////////////////////////

/// A point q of ^n k.  Indices are little-endian: coordinate 0 is the least
/// significant digit.
class Point {
 public:
  Point() = default;

  Point(int base, std::span<const int> coords) : base_(base) {
    detail::check_dim(static_cast<int>(coords.size()));
    n_ = static_cast<int>(coords.size());
    for (int i = 0; i < n_; ++i) {
      if (coords[i] < 0 || coords[i] >= base) {
        throw InvalidInput("point coordinate out of range");
      }
      c_[i] = static_cast<std::uint16_t>(coords[i]);
    }
  }

  Point(int base, std::initializer_list<int> coords)
      : Point(base, std::span<const int>(coords.begin(), coords.size())) {}

  static Point from_index(int n, int base, std::uint64_t idx) {
    detail::check_dim(n);
    Point q;
    q.n_ = n;
    q.base_ = base;
    for (int i = 0; i < n; ++i) {
      q.c_[i] = static_cast<std::uint16_t>(idx % base);
      idx /= base;
    }
    return q;
  }

  [[nodiscard]] int dim() const noexcept { return n_; }
  [[nodiscard]] int base() const noexcept { return base_; }
  [[nodiscard]] int operator[](int i) const noexcept { return c_[i]; }

  [[nodiscard]] std::uint64_t index() const noexcept {
    std::uint64_t r = 0;
    for (int i = n_ - 1; i >= 0; --i) {
      r = r * static_cast<std::uint64_t>(base_) + c_[i];
    }
    return r;
  }

  [[nodiscard]] std::vector<int> coords() const {
    return std::vector<int>(c_.begin(), c_.begin() + n_);
  }

  [[nodiscard]] std::string to_string() const {
    std::string s = "(";
    for (int i = 0; i < n_; ++i) {
      s += (i ? "," : "") + std::to_string(c_[i]);
    }
    return s + ")";
  }

  friend bool operator==(Point const&, Point const&) = default;

 private:
  int n_ = 0;
  int base_ = 0;
  std::array<std::uint16_t, kMaxDim> c_{};
};

/// Right action: result(i) = q(tau(i)).
inline Point apply(Point const& q, Transformation const& tau) {
  if (q.dim() != tau.dim()) {
    throw DimensionMismatch("apply: dimensions differ");
  }
  std::array<int, kMaxDim> c{};
  for (int i = 0; i < q.dim(); ++i) {
    c[i] = q[tau[i]];
  }
  return Point(q.base(), std::span<const int>(c.data(), q.dim()));
}

////////////////////////////////////////////////////////////////////////
// Generators and words
////////////////////////////////////////////////////////////////////////

/// A generator symbol: s[i,j] (transposition) or s[i|j] (replacement i->j).
/// Transpositions are stored with i < j.
struct GenSym {
  enum class Kind : std::uint8_t { transposition, replacement };

  Kind kind = Kind::transposition;
  std::uint8_t i = 0;
  std::uint8_t j = 1;

  static GenSym transposition(int a, int b) {
    if (a == b || a < 0 || b < 0 || a >= kMaxDim || b >= kMaxDim) {
      throw InvalidInput("transposition needs two distinct indices");
    }
    return {Kind::transposition, static_cast<std::uint8_t>(std::min(a, b)),
            static_cast<std::uint8_t>(std::max(a, b))};
  }

  static GenSym replacement(int from, int to) {
    if (from == to || from < 0 || to < 0 || from >= kMaxDim
        || to >= kMaxDim) {
      throw InvalidInput("replacement needs two distinct indices");
    }
    return {Kind::replacement, static_cast<std::uint8_t>(from),
            static_cast<std::uint8_t>(to)};
  }

  [[nodiscard]] bool is_transposition() const noexcept {
    return kind == Kind::transposition;
  }

  [[nodiscard]] Transformation as_transformation(int n) const {
    if (i >= n || j >= n) {
      throw DimensionMismatch("generator index out of range");
    }
    return is_transposition() ? Transformation::transposition(n, i, j)
                              : Transformation::replacement(n, i, j);
  }

  [[nodiscard]] std::string to_string() const {
    return "s[" + std::to_string(i) + (is_transposition() ? "," : "|")
           + std::to_string(j) + "]";
  }

  friend bool operator==(GenSym const&, GenSym const&) = default;
  friend auto operator<=>(GenSym const&, GenSym const&) = default;
};

inline bool allows(SignatureMode mode, GenSym g) noexcept {
  return g.is_transposition() ? has_transpositions(mode)
                              : has_replacements(mode);
}

/// All generators of a signature: transpositions first, then replacements,
/// each in lexicographic order of (i, j).
inline std::vector<GenSym> generators(int n, SignatureMode mode) {
  std::vector<GenSym> out;
  if (has_transpositions(mode)) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        out.push_back(GenSym::transposition(i, j));
      }
    }
  }
  if (has_replacements(mode)) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j) {
          out.push_back(GenSym::replacement(i, j));
        }
      }
    }
  }
  return out;
}

inline Point apply(Point const& q, GenSym g) {
  return apply(q, g.as_transformation(q.dim()));
}

/// A finite string over the generators of dimension n.
class Word {
 public:
  Word() = default;
  explicit Word(int n) : n_(n) { detail::check_dim(n); }
  Word(int n, std::vector<GenSym> syms) : n_(n), syms_(std::move(syms)) {
    detail::check_dim(n);
    for (auto const& g : syms_) {
      if (g.i >= n || g.j >= n) {
        throw DimensionMismatch("word symbol index out of range");
      }
    }
  }

  [[nodiscard]] int dim() const noexcept { return n_; }
  [[nodiscard]] std::vector<GenSym> const& symbols() const noexcept {
    return syms_;
  }
  [[nodiscard]] std::size_t size() const noexcept { return syms_.size(); }
  [[nodiscard]] bool empty() const noexcept { return syms_.empty(); }

  void push_back(GenSym g) {
    if (g.i >= n_ || g.j >= n_) {
      throw DimensionMismatch("word symbol index out of range");
    }
    syms_.push_back(g);
  }

  friend Word operator+(Word const& u, Word const& v) {
    if (u.n_ != v.n_) {
      throw DimensionMismatch("concatenating words of different dimension");
    }
    Word w = u;
    w.syms_.insert(w.syms_.end(), v.syms_.begin(), v.syms_.end());
    return w;
  }

  [[nodiscard]] std::string to_string() const {
    if (syms_.empty()) {
      return "e";
    }
    std::string s;
    for (auto const& g : syms_) {
      s += (s.empty() ? "" : " ") + g.to_string();
    }
    return s;
  }

  friend bool operator==(Word const&, Word const&) = default;

 private:
  int n_ = 0;
  std::vector<GenSym> syms_;
};

namespace detail {
  inline int parse_index(std::string_view text, std::size_t& pos) {
    std::size_t start = pos;
    int v = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000) {
        throw ParseError("index too large", start);
      }
      ++pos;
    }
    if (pos == start) {
      throw ParseError("expected an index", start);
    }
    return v;
  }

  // Parses "s[i,j]" or "s[i|j]" starting at pos (which points at 's').
  inline GenSym parse_gensym(std::string_view text, std::size_t& pos, int n,
                             SignatureMode mode) {
    std::size_t start = pos;
    if (text.substr(pos, 2) != "s[") {
      throw ParseError("expected 's['", pos);
    }
    pos += 2;
    int i = parse_index(text, pos);
    if (pos >= text.size() || (text[pos] != ',' && text[pos] != '|')) {
      throw ParseError("expected ',' or '|'", pos);
    }
    bool transp = text[pos] == ',';
    ++pos;
    int j = parse_index(text, pos);
    if (pos >= text.size() || text[pos] != ']') {
      throw ParseError("expected ']'", pos);
    }
    ++pos;
    if (i >= n || j >= n) {
      throw ParseError("index out of range for dimension " + std::to_string(n),
                       start);
    }
    if (i == j) {
      throw ParseError("generator indices must differ", start);
    }
    GenSym g = transp ? GenSym::transposition(i, j) : GenSym::replacement(i, j);
    if (!allows(mode, g)) {
      throw ParseError(g.to_string() + " not allowed in mode "
                           + std::string(substal::to_string(mode)),
                       start);
    }
    return g;
  }
}  // namespace detail

/// Parses whitespace separated generator tokens; "" and "e" denote the empty
/// word.
inline Word parse_word(std::string_view text, int n,
                       SignatureMode mode = SignatureMode::full) {
  Word w(n);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  skip();
  if (pos < text.size() && text[pos] == 'e') {
    ++pos;
    skip();
    if (pos != text.size()) {
      throw ParseError("unexpected input after empty word", pos);
    }
    return w;
  }
  while (pos < text.size()) {
    w.push_back(detail::parse_gensym(text, pos, n, mode));
    skip();
  }
  return w;
}

/// Evaluates a word: hat(g1...gm) = g1 o ... o gm, hat(empty) = identity.
inline Transformation hat(Word const& w) {
  Transformation t = Transformation::identity(w.dim());
  for (auto it = w.symbols().rbegin(); it != w.symbols().rend(); ++it) {
    t = compose(it->as_transformation(w.dim()), t);
  }
  return t;
}

inline bool word_equiv(Word const& w1, Word const& w2) {
  if (w1.dim() != w2.dim()) {
    throw DimensionMismatch("word_equiv: dimensions differ");
  }
  return hat(w1) == hat(w2);
}

////////////////////////////////////////////////////////////////////////
// Monoid enumeration
////////////////////////////////////////////////////////////////////////

inline constexpr int kDefaultMonoidLimit = 6;

namespace detail {
  // Breadth first closure from the identity under right multiplication by
  // the generators.  Records for each element a shortest word.
  struct MonoidTable {
    int n = 0;
    std::vector<Transformation> elements;          // BFS order
    std::vector<std::int32_t> parent;              // index into elements
    std::vector<GenSym> last;                      // last symbol of word
    std::map<std::uint64_t, std::int32_t> lookup;  // index() -> position

    [[nodiscard]] Word word(std::int32_t pos) const {
      std::vector<GenSym> rev;
      while (parent[pos] >= 0) {
        rev.push_back(last[pos]);
        pos = parent[pos];
      }
      return Word(n, std::vector<GenSym>(rev.rbegin(), rev.rend()));
    }
  };

  inline MonoidTable build_monoid_table(int n, SignatureMode mode) {
    MonoidTable t;
    t.n = n;
    auto gens = generators(n, mode);
    std::vector<Transformation> gen_maps;
    for (auto const& g : gens) {
      gen_maps.push_back(g.as_transformation(n));
    }
    auto id = Transformation::identity(n);
    t.elements.push_back(id);
    t.parent.push_back(-1);
    t.last.push_back(GenSym{});
    t.lookup.emplace(id.index(), 0);
    for (std::size_t head = 0; head < t.elements.size(); ++head) {
      for (std::size_t g = 0; g < gens.size(); ++g) {
        auto next = compose(t.elements[head], gen_maps[g]);
        auto [it, fresh] = t.lookup.emplace(
            next.index(), static_cast<std::int32_t>(t.elements.size()));
        if (fresh) {
          t.elements.push_back(next);
          t.parent.push_back(static_cast<std::int32_t>(head));
          t.last.push_back(gens[g]);
        }
      }
    }
    return t;
  }

  inline std::shared_ptr<const MonoidTable> monoid_table(int n,
                                                         SignatureMode mode) {
    static std::mutex mtx;
    static std::map<std::pair<int, int>, std::shared_ptr<const MonoidTable>>
        cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(n, static_cast<int>(mode));
    auto it = cache.find(key);
    if (it == cache.end()) {
      it = cache
               .emplace(key, std::make_shared<const MonoidTable>(
                                 build_monoid_table(n, mode)))
               .first;
    }
    return it->second;
  }
}  // namespace detail

/// The submonoid of ^n n generated by the generators of mode, sorted by
/// index().
inline std::vector<Transformation> enumerate_monoid(
    int n, SignatureMode mode, int limit = kDefaultMonoidLimit) {
  detail::check_dim(n);
  if (n > limit) {
    throw LimitExceeded("enumerate_monoid: n = " + std::to_string(n)
                        + " exceeds limit " + std::to_string(limit));
  }
  auto table = detail::monoid_table(n, mode);
  auto out = table->elements;
  std::sort(out.begin(), out.end());
  return out;
}

inline bool monoid_contains(SignatureMode mode, Transformation const& tau) {
  switch (mode) {
    case SignatureMode::transpositions:
      return tau.is_permutation();
    case SignatureMode::replacements:
      // Replacements generate exactly the identity and the singular maps.
      return tau.is_identity() || !tau.is_permutation();
    default:
      return true;
  }
}

namespace detail {
  // Permutation as a product of transpositions via its cycles.  A cycle
  // a1 -> a2 -> ... -> ar is [a1,ar][a1,a(r-1)]...[a1,a2].
  inline void append_cycle_word(Transformation const& perm, Word& out) {
    int n = perm.dim();
    std::vector<bool> seen(n, false);
    for (int start = 0; start < n; ++start) {
      if (seen[start]) {
        continue;
      }
      std::vector<int> cycle;
      for (int x = start; !seen[x]; x = perm[x]) {
        seen[x] = true;
        cycle.push_back(x);
      }
      for (std::size_t k = cycle.size(); k-- > 1;) {
        out.push_back(GenSym::transposition(cycle[0], cycle[k]));
      }
    }
  }

  // Non-bijective tau = tau' o [i|j] where tau(i) = tau(j) and tau' agrees
  // with tau except tau'(i) = a for some a outside the image.
  inline Word collapse_word(Transformation const& tau) {
    int n = tau.dim();
    if (tau.is_permutation()) {
      Word w(n);
      append_cycle_word(tau, w);
      return w;
    }
    int ci = -1, cj = -1;
    for (int i = 0; i < n && ci < 0; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (tau[i] == tau[j]) {
          ci = i;
          cj = j;
          break;
        }
      }
    }
    std::uint32_t image = 0;
    for (int i = 0; i < n; ++i) {
      image |= 1u << tau[i];
    }
    int a = 0;
    while (image & (1u << a)) {
      ++a;
    }
    auto vals = tau.values();
    // Prefer the side whose modification already yields the identity.
    int modify = ci, other = cj;
    if (a == cj && tau[ci] == ci) {
      modify = cj;
      other = ci;
    }
    vals[modify] = a;
    Word w = collapse_word(Transformation(vals));
    w.push_back(GenSym::replacement(modify, other));
    return w;
  }
}  // namespace detail

/// A word over mode's generators whose hat is tau.
inline Word canonical_word(Transformation const& tau, SignatureMode mode) {
  int n = tau.dim();
  if (!monoid_contains(mode, tau)) {
    throw NotGenerated(tau.to_string() + " is not generated in mode "
                       + std::string(to_string(mode)));
  }
  Word w(n);
  if (tau.is_identity()) {
    return w;
  }
  switch (mode) {
    case SignatureMode::transpositions:
      detail::append_cycle_word(tau, w);
      break;
    case SignatureMode::replacements: {
      if (n > kDefaultMonoidLimit) {
        throw LimitExceeded("canonical words for replacements need n <= "
                            + std::to_string(kDefaultMonoidLimit));
      }
      auto table = detail::monoid_table(n, mode);
      w = table->word(table->lookup.at(tau.index()));
      break;
    }
    default:
      w = detail::collapse_word(tau);
      break;
  }
  if (hat(w) != tau) {
    throw Error("canonical_word: internal verification failed for "
                + tau.to_string());
  }
  return w;
}

////////////////////////////////////////////////////////////////////////
// Submonoids and their bijective stabilizers
////////////////////////////////////////////////////////////////////////

/// True iff T contains the identity and is closed under compose.
inline bool is_submonoid(std::span<const Transformation> T) {
  if (T.empty()) {
    return false;
  }
  int n = T.front().dim();
  std::vector<Transformation> sorted(T.begin(), T.end());
  std::sort(sorted.begin(), sorted.end());
  auto has = [&](Transformation const& t) {
    return std::binary_search(sorted.begin(), sorted.end(), t);
  };
  if (!has(Transformation::identity(n))) {
    return false;
  }
  for (auto const& a : sorted) {
    for (auto const& b : sorted) {
      if (!has(compose(a, b))) {
        return false;
      }
    }
  }
  return true;
}

/// G = { xi in S_n : xi o sigma in T for all sigma in T }.
inline std::vector<Transformation> bijective_stabilizer(
    std::span<const Transformation> T) {
  if (T.empty()) {
    return {};
  }
  int n = T.front().dim();
  std::vector<Transformation> sorted(T.begin(), T.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Transformation> G;
  for (auto const& xi : enumerate_monoid(n, SignatureMode::transpositions,
                                         kMaxDim)) {
    bool ok = std::all_of(sorted.begin(), sorted.end(), [&](auto const& s) {
      return std::binary_search(sorted.begin(), sorted.end(), compose(xi, s));
    });
    if (ok) {
      G.push_back(xi);
    }
  }
  return G;
}

////////////////////////////////////////////////////////////////////////
// Set partitions of {0..n-1}
////////////////////////////////////////////////////////////////////////

/// A set partition as a restricted-growth string.
struct Partition {
  int n = 0;
  std::vector<int> blocks;

  [[nodiscard]] int block_count() const {
    return blocks.empty() ? 0
                          : *std::max_element(blocks.begin(), blocks.end()) + 1;
  }

  /// The point q_P(i) = block of i, in base block_count().
  [[nodiscard]] Point representative() const {
    return Point(block_count(), std::span<const int>(blocks));
  }

  [[nodiscard]] std::string to_string() const {
    std::string s = "[";
    for (int i = 0; i < n; ++i) {
      s += (i ? "," : "") + std::to_string(blocks[i]);
    }
    return s + "]";
  }

  friend bool operator==(Partition const&, Partition const&) = default;
};

inline std::vector<Partition> partitions(int n, int limit = 10) {
  detail::check_dim(n);
  if (n > limit) {
    throw LimitExceeded("partitions: n exceeds limit");
  }
  std::vector<Partition> out;
  std::vector<int> rgs(n, 0);
  // Iterative generation of restricted-growth strings in lexicographic order.
  auto rec = [&](auto&& self, int pos, int max_block) -> void {
    if (pos == n) {
      out.push_back(Partition{n, rgs});
      return;
    }
    for (int b = 0; b <= max_block + 1; ++b) {
      rgs[pos] = b;
      self(self, pos + 1, std::max(max_block, b));
    }
  };
  rgs[0] = 0;
  rec(rec, 1, 0);
  return out;
}

}  // namespace substal

#endif  // SUBSTAL_MONOID_HPP_
