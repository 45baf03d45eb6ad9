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

// Terms of the substitution-algebra signature.  The same syntax trees are
// read as equations on the algebra side and as modal formulas on the logic
// side.
//
// Grammar (prefix operators bind tightest, then &, then |, then ->):
//
//   form := '0' | '1' | 'p' NUM | 'd' '(' NUM ',' NUM ')' | '~' form
//         | form '&' form | form '|' form | form '->' form
//         | 's[' NUM ',' NUM ']' form | 's[' NUM '|' NUM ']' form
//         | '(' form ')'
//
// '->' is right associative and desugars to ~a | b.

#ifndef SUBSTAL_TERMS_HPP_
#define SUBSTAL_TERMS_HPP_

#include <algorithm>
#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "substal/error.hpp"
#include "substal/monoid.hpp"

namespace substal {

class Term {
 public:
  enum class Kind : std::uint8_t {
    var,
    zero,
    one,
    meet,
    join,
    complement,
    sub,
    diag
  };

  static Term var(int index) {
    if (index < 0) {
      throw InvalidInput("negative variable index");
    }
    Node n;
    n.kind = Kind::var;
    n.a = index;
    return Term(std::move(n));
  }
  static Term zero() { return leaf(Kind::zero); }
  static Term one() { return leaf(Kind::one); }
  static Term meet(Term l, Term r) {
    return binary(Kind::meet, std::move(l), std::move(r));
  }
  static Term join(Term l, Term r) {
    return binary(Kind::join, std::move(l), std::move(r));
  }
  static Term complement(Term t) {
    Node n;
    n.kind = Kind::complement;
    n.left = std::move(t.node_);
    return Term(std::move(n));
  }
  static Term sub(GenSym g, Term t) {
    Node n;
    n.kind = Kind::sub;
    n.gen = g;
    n.left = std::move(t.node_);
    return Term(std::move(n));
  }
  static Term diag(int i, int j) {
    Node n;
    n.kind = Kind::diag;
    n.a = i;
    n.b = j;
    return Term(std::move(n));
  }

  [[nodiscard]] Kind kind() const noexcept { return node_->kind; }
  [[nodiscard]] int var_index() const noexcept { return node_->a; }
  [[nodiscard]] GenSym gen() const noexcept { return node_->gen; }
  [[nodiscard]] int diag_i() const noexcept { return node_->a; }
  [[nodiscard]] int diag_j() const noexcept { return node_->b; }
  [[nodiscard]] Term left() const { return Term(node_->left); }
  [[nodiscard]] Term right() const { return Term(node_->right); }
  [[nodiscard]] Term child() const { return Term(node_->left); }

  friend bool operator==(Term const& a, Term const& b) {
    return equal(a.node_.get(), b.node_.get());
  }

 private:
  struct Node {
    Kind kind = Kind::zero;
    int a = 0;
    int b = 0;
    GenSym gen{};
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };

  explicit Term(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}
  explicit Term(std::shared_ptr<const Node> p) : node_(std::move(p)) {}

  static Term leaf(Kind k) {
    Node n;
    n.kind = k;
    return Term(std::move(n));
  }
  static Term binary(Kind k, Term l, Term r) {
    Node n;
    n.kind = k;
    n.left = std::move(l.node_);
    n.right = std::move(r.node_);
    return Term(std::move(n));
  }

  static bool equal(Node const* x, Node const* y) {
    if (x == y) {
      return true;
    }
    if (!x || !y || x->kind != y->kind) {
      return false;
    }
    switch (x->kind) {
      case Kind::var:
        return x->a == y->a;
      case Kind::diag:
        return x->a == y->a && x->b == y->b;
      case Kind::sub:
        return x->gen == y->gen && equal(x->left.get(), y->left.get());
      case Kind::complement:
        return equal(x->left.get(), y->left.get());
      case Kind::meet:
      case Kind::join:
        return equal(x->left.get(), y->left.get())
               && equal(x->right.get(), y->right.get());
      default:
        return true;
    }
  }

  std::shared_ptr<const Node> node_;
};

inline Term operator&(Term a, Term b) { return Term::meet(std::move(a), std::move(b)); }
inline Term operator|(Term a, Term b) { return Term::join(std::move(a), std::move(b)); }
inline Term operator~(Term a) { return Term::complement(std::move(a)); }

inline Term implies(Term a, Term b) { return ~std::move(a) | std::move(b); }

/// (a & b) | (~a & ~b).
inline Term iff(Term const& a, Term const& b) { return (a & b) | (~a & ~b); }

/// Nested substitutions s_g1 s_g2 ... s_gm t.
inline Term sub_word(Word const& w, Term t) {
  for (auto it = w.symbols().rbegin(); it != w.symbols().rend(); ++it) {
    t = Term::sub(*it, std::move(t));
  }
  return t;
}

/// s_tau t, expanded through the canonical word of tau in mode.
inline Term sub_transformation(Transformation const& tau, Term t,
                               SignatureMode mode = SignatureMode::full) {
  return sub_word(canonical_word(tau, mode), std::move(t));
}

/// One more than the largest variable index (0 if there are none).
inline int var_count(Term const& t) {
  switch (t.kind()) {
    case Term::Kind::var:
      return t.var_index() + 1;
    case Term::Kind::meet:
    case Term::Kind::join:
      return std::max(var_count(t.left()), var_count(t.right()));
    case Term::Kind::complement:
    case Term::Kind::sub:
      return var_count(t.child());
    default:
      return 0;
  }
}

/// Number of substitution operator occurrences.
inline std::size_t modality_count(Term const& t) {
  switch (t.kind()) {
    case Term::Kind::meet:
    case Term::Kind::join:
      return modality_count(t.left()) + modality_count(t.right());
    case Term::Kind::complement:
      return modality_count(t.child());
    case Term::Kind::sub:
      return 1 + modality_count(t.child());
    default:
      return 0;
  }
}

/// Number of syntax tree nodes.
inline std::size_t term_size(Term const& t) {
  switch (t.kind()) {
    case Term::Kind::meet:
    case Term::Kind::join:
      return 1 + term_size(t.left()) + term_size(t.right());
    case Term::Kind::complement:
    case Term::Kind::sub:
      return 1 + term_size(t.child());
    default:
      return 1;
  }
}

/// Throws InvalidInput if t mentions an index >= n or a symbol the mode
/// does not provide.
inline void check_signature(Term const& t, int n, SignatureMode mode) {
  switch (t.kind()) {
    case Term::Kind::meet:
    case Term::Kind::join:
      check_signature(t.left(), n, mode);
      check_signature(t.right(), n, mode);
      return;
    case Term::Kind::complement:
      check_signature(t.child(), n, mode);
      return;
    case Term::Kind::sub:
      if (t.gen().i >= n || t.gen().j >= n) {
        throw InvalidInput(t.gen().to_string() + " out of range for n = "
                           + std::to_string(n));
      }
      if (!allows(mode, t.gen())) {
        throw InvalidInput(t.gen().to_string() + " not allowed in mode "
                           + std::string(to_string(mode)));
      }
      check_signature(t.child(), n, mode);
      return;
    case Term::Kind::diag:
      if (!has_diagonals(mode)) {
        throw InvalidInput("diagonal constants need mode diag");
      }
      if (t.diag_i() >= n || t.diag_j() >= n) {
        throw InvalidInput("diagonal index out of range");
      }
      return;
    default:
      return;
  }
}

namespace detail {
  // 0: '|', 1: '&', 2: prefix and atoms.
  inline void print_term(Term const& t, int min_prec, std::string& out) {
    switch (t.kind()) {
      case Term::Kind::var:
        out += "p" + std::to_string(t.var_index());
        return;
      case Term::Kind::zero:
        out += "0";
        return;
      case Term::Kind::one:
        out += "1";
        return;
      case Term::Kind::diag:
        out += "d(" + std::to_string(t.diag_i()) + ","
               + std::to_string(t.diag_j()) + ")";
        return;
      case Term::Kind::complement:
        out += "~";
        print_term(t.child(), 2, out);
        return;
      case Term::Kind::sub:
        out += t.gen().to_string() + " ";
        print_term(t.child(), 2, out);
        return;
      case Term::Kind::meet:
      case Term::Kind::join: {
        int prec = t.kind() == Term::Kind::meet ? 1 : 0;
        bool paren = prec < min_prec;
        if (paren) {
          out += "(";
        }
        print_term(t.left(), prec, out);
        out += prec == 1 ? " & " : " | ";
        print_term(t.right(), prec + 1, out);
        if (paren) {
          out += ")";
        }
        return;
      }
    }
  }

  class TermParser {
   public:
    using Equation_pair = std::pair<Term, Term>;

    TermParser(std::string_view text, int n, SignatureMode mode)
        : text_(text), n_(n), mode_(mode) {}

    Term parse_full() {
      Term t = parse_implication();
      skip();
      if (pos_ != text_.size()) {
        throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'",
                         pos_);
      }
      return t;
    }

    Equation_pair parse_equation() {
      Term l = parse_implication();
      skip();
      if (pos_ >= text_.size() || text_[pos_] != '=') {
        throw ParseError("expected '='", pos_);
      }
      ++pos_;
      Term r = parse_implication();
      skip();
      if (pos_ != text_.size()) {
        throw ParseError("unexpected input after equation", pos_);
      }
      return {std::move(l), std::move(r)};
    }

   private:
    void skip() {
      while (pos_ < text_.size()
             && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
    }

    bool accept(std::string_view tok) {
      skip();
      if (text_.substr(pos_, tok.size()) == tok) {
        pos_ += tok.size();
        return true;
      }
      return false;
    }

    Term parse_implication() {
      Term l = parse_or();
      if (accept("->")) {
        Term r = parse_implication();
        return implies(std::move(l), std::move(r));
      }
      return l;
    }

    Term parse_or() {
      Term t = parse_and();
      while (true) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == '|') {
          ++pos_;
          t = Term::join(std::move(t), parse_and());
        } else {
          return t;
        }
      }
    }

    Term parse_and() {
      Term t = parse_unary();
      while (accept("&")) {
        t = Term::meet(std::move(t), parse_unary());
      }
      return t;
    }

    Term parse_unary() {
      skip();
      if (pos_ >= text_.size()) {
        throw ParseError("unexpected end of input", pos_);
      }
      char c = text_[pos_];
      if (c == '~') {
        ++pos_;
        return Term::complement(parse_unary());
      }
      if (c == 's') {
        GenSym g = parse_gensym(text_, pos_, n_, mode_);
        return Term::sub(g, parse_unary());
      }
      return parse_primary();
    }

    Term parse_primary() {
      skip();
      std::size_t start = pos_;
      char c = text_[pos_];
      if (c == '(') {
        ++pos_;
        Term t = parse_implication();
        if (!accept(")")) {
          throw ParseError("expected ')'", pos_);
        }
        return t;
      }
      if (c == 'p') {
        ++pos_;
        return Term::var(parse_index(text_, pos_));
      }
      if (c == 'd') {
        ++pos_;
        if (!accept("(")) {
          throw ParseError("expected '(' after d", pos_);
        }
        skip();
        int i = parse_index(text_, pos_);
        if (!accept(",")) {
          throw ParseError("expected ','", pos_);
        }
        skip();
        int j = parse_index(text_, pos_);
        if (!accept(")")) {
          throw ParseError("expected ')'", pos_);
        }
        if (!has_diagonals(mode_)) {
          throw ParseError("diagonal constants need mode diag", start);
        }
        if (i >= n_ || j >= n_) {
          throw ParseError("index out of range for dimension "
                               + std::to_string(n_),
                           start);
        }
        return Term::diag(i, j);
      }
      if (c == '0' || c == '1') {
        ++pos_;
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          throw ParseError("constants are 0 and 1", start);
        }
        return c == '0' ? Term::zero() : Term::one();
      }
      throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
    }

   private:
    std::string_view text_;
    int n_;
    SignatureMode mode_;
    std::size_t pos_ = 0;
  };
}  // namespace detail

inline std::string to_string(Term const& t) {
  std::string out;
  detail::print_term(t, 0, out);
  return out;
}

inline Term parse_term(std::string_view text, int n,
                       SignatureMode mode = SignatureMode::full) {
  return detail::TermParser(text, n, mode).parse_full();
}

struct Equation {
  Term lhs = Term::zero();
  Term rhs = Term::zero();
  std::string label;

  friend bool operator==(Equation const& a, Equation const& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs;
  }
};

inline std::string to_string(Equation const& e) {
  return to_string(e.lhs) + " = " + to_string(e.rhs);
}

inline Equation parse_equation(std::string_view text, int n,
                               SignatureMode mode = SignatureMode::full) {
  auto [l, r] = detail::TermParser(text, n, mode).parse_equation();
  return Equation{std::move(l), std::move(r), {}};
}

inline int var_count(Equation const& e) {
  return std::max(var_count(e.lhs), var_count(e.rhs));
}

/// The formula whose validity is equivalent to the equation.
inline Term equation_formula(Equation const& e) { return iff(e.lhs, e.rhs); }

/// Peels a term of the shape s_g1 ... s_gm p_v into the word g1...gm.
inline std::optional<Word> as_word(Term const& t, int n) {
  std::vector<GenSym> syms;
  Term cur = t;
  while (cur.kind() == Term::Kind::sub) {
    syms.push_back(cur.gen());
    cur = cur.child();
  }
  if (cur.kind() != Term::Kind::var) {
    return std::nullopt;
  }
  return Word(n, std::move(syms));
}

struct QuasiEquation {
  std::vector<Equation> premises;
  Equation conclusion;
  std::string label;
};

inline std::string to_string(QuasiEquation const& q) {
  std::string s;
  for (auto const& p : q.premises) {
    s += (s.empty() ? "" : " , ") + to_string(p);
  }
  return s + " => " + to_string(q.conclusion);
}

////////////////////////////////////////////////////////////////////////
// Axiom schemas
////////////////////////////////////////////////////////////////////////

namespace detail {
  inline Equation labelled(Term l, Term r, std::string label) {
    return Equation{std::move(l), std::move(r), std::move(label)};
  }

  inline std::string idx(std::initializer_list<int> is) {
    std::string s;
    for (int i : is) {
      s += std::to_string(i);
    }
    return s;
  }

  inline bool mentions_only(Term const& t, SignatureMode mode) {
    switch (t.kind()) {
      case Term::Kind::meet:
      case Term::Kind::join:
        return mentions_only(t.left(), mode) && mentions_only(t.right(), mode);
      case Term::Kind::complement:
        return mentions_only(t.child(), mode);
      case Term::Kind::sub:
        return allows(mode, t.gen()) && mentions_only(t.child(), mode);
      case Term::Kind::diag:
        return has_diagonals(mode);
      default:
        return true;
    }
  }
}  // namespace detail

/// The Boolean part: a fixed finite list of identities over p0, p1, p2.
inline std::vector<Equation> boolean_axioms() {
  Term x = Term::var(0), y = Term::var(1), z = Term::var(2);
  using detail::labelled;
  return {
      labelled(x & y, y & x, "B1"),
      labelled(x | y, y | x, "B2"),
      labelled((x & y) & z, x & (y & z), "B3"),
      labelled((x | y) | z, x | (y | z), "B4"),
      labelled(x & (x | y), x, "B5"),
      labelled(x | (x & y), x, "B6"),
      labelled(x & (y | z), (x & y) | (x & z), "B7"),
      labelled(x | (y & z), (x | y) & (x | z), "B8"),
      labelled(x & ~x, Term::zero(), "B9"),
      labelled(x | ~x, Term::one(), "B10"),
      labelled(x & Term::one(), x, "B11"),
      labelled(x | Term::zero(), x, "B12"),
  };
}

/// Every instance of the axiom schemas for dimension n, filtered to the
/// generators that mode provides.  In the labels, s^a_b is the replacement
/// s[a|b] (a goes to b) and s_ab the transposition s[a,b].
///
///   B*     Boolean identities
///   E.g.*  each generator preserves meets and joins
///   P1-P3  relations of the symmetric group on transpositions
///   A3-A13 relations mixing replacements and transpositions, with A13 in
///          the form s^j_i s_ij x = s^j_i x
///   D1-D4  diagonal constants (mode diag only), with D4 in the form
///          s_g d_ij = d_(g(i),g(j))
inline std::vector<Equation> sigma_axioms(int n, SignatureMode mode) {
  if (n < 2) {
    throw InvalidInput("sigma_axioms needs n >= 2");
  }
  detail::check_dim(n);
  std::vector<Equation> out = boolean_axioms();
  Term x = Term::var(0), y = Term::var(1);
  using detail::idx;
  using detail::labelled;

  for (auto const& g : generators(n, mode)) {
    out.push_back(labelled(Term::sub(g, x & y),
                           Term::sub(g, x) & Term::sub(g, y),
                           "E." + g.to_string() + ".meet"));
    out.push_back(labelled(Term::sub(g, x | y),
                           Term::sub(g, x) | Term::sub(g, y),
                           "E." + g.to_string() + ".join"));
  }

  auto t = [](int a, int b) { return GenSym::transposition(a, b); };
  auto r = [](int a, int b) { return GenSym::replacement(a, b); };
  auto S = [](std::initializer_list<GenSym> gs, Term const& v) {
    Term cur = v;
    for (auto it = std::rbegin(gs); it != std::rend(gs); ++it) {
      cur = Term::sub(*it, cur);
    }
    return cur;
  };

  std::vector<Equation> schema;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j == i) {
        continue;
      }
      // Two distinct indices.
      if (i < j) {
        schema.push_back(labelled(S({t(i, j), t(i, j)}, x), x,
                                  "P1." + idx({i, j})));
      }
      schema.push_back(labelled(S({t(i, j), r(j, i), t(i, j)}, x),
                                S({r(i, j)}, x), "A6." + idx({i, j})));
      schema.push_back(labelled(S({r(j, i), r(j, i)}, x), S({r(j, i)}, x),
                                "A11." + idx({i, j})));
      schema.push_back(labelled(S({r(j, i), r(i, j)}, x), S({r(j, i)}, x),
                                "A12." + idx({i, j})));
      schema.push_back(labelled(S({r(j, i), t(i, j)}, x), S({r(j, i)}, x),
                                "A13." + idx({i, j})));
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) {
          continue;
        }
        // Three distinct indices.
        if (i < k) {
          schema.push_back(labelled(S({t(i, j), t(j, k), t(i, j)}, x),
                                    S({t(i, k)}, x), "P2." + idx({i, j, k})));
        }
        schema.push_back(labelled(S({t(j, k), r(j, i), t(j, k)}, x),
                                  S({r(k, i)}, x), "A4." + idx({i, j, k})));
        schema.push_back(labelled(S({t(k, i), r(j, i), t(k, i)}, x),
                                  S({r(j, k)}, x), "A5." + idx({i, j, k})));
        schema.push_back(labelled(S({r(j, i), r(k, i)}, x),
                                  S({r(k, i), r(j, i)}, x),
                                  "A8a." + idx({i, j, k})));
        schema.push_back(labelled(S({r(j, i), r(k, i)}, x),
                                  S({r(j, i), r(k, j)}, x),
                                  "A8b." + idx({i, j, k})));
        schema.push_back(labelled(S({r(j, i), r(i, k)}, x),
                                  S({r(j, k), t(i, j)}, x),
                                  "A9." + idx({i, j, k})));
        schema.push_back(labelled(S({r(j, i), r(j, k)}, x), S({r(j, k)}, x),
                                  "A10." + idx({i, j, k})));
        for (int l = 0; l < n; ++l) {
          if (l == i || l == j || l == k) {
            continue;
          }
          // Four distinct indices.
          if (i < j && k < l) {
            schema.push_back(labelled(S({t(i, j), t(k, l)}, x),
                                      S({t(k, l), t(i, j)}, x),
                                      "P3." + idx({i, j, k, l})));
          }
          if (k < l) {
            schema.push_back(labelled(S({t(k, l), r(j, i), t(k, l)}, x),
                                      S({r(j, i)}, x),
                                      "A3." + idx({i, j, k, l})));
          }
          schema.push_back(labelled(S({r(j, i), r(k, l)}, x),
                                    S({r(k, l), r(j, i)}, x),
                                    "A7." + idx({i, j, k, l})));
        }
      }
    }
  }
  for (auto& e : schema) {
    if (detail::mentions_only(e.lhs, mode) && detail::mentions_only(e.rhs, mode)) {
      out.push_back(std::move(e));
    }
  }

  if (has_diagonals(mode)) {
    auto d = [](int a, int b) { return Term::diag(a, b); };
    for (int i = 0; i < n; ++i) {
      out.push_back(labelled(d(i, i), Term::one(), "D1." + idx({i})));
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) {
          continue;
        }
        if (i < j) {
          out.push_back(labelled(d(i, j), d(j, i), "D2." + idx({i, j})));
        }
        for (int k = 0; k < n; ++k) {
          if (k != i && k != j) {
            // d_ik . d_kj <= d_ij
            out.push_back(labelled(d(i, k) & d(k, j) & d(i, j),
                                   d(i, k) & d(k, j),
                                   "D3." + idx({i, j, k})));
          }
        }
        for (auto const& g : generators(n, mode)) {
          auto tau = g.as_transformation(n);
          out.push_back(labelled(Term::sub(g, d(i, j)), d(tau[i], tau[j]),
                                 "D4." + g.to_string() + "." + idx({i, j})));
        }
      }
    }
  }
  return out;
}

/// Quasi-equations  prod_{sigma in T} s_sigma(x_sigma) = 0  =>
/// prod_{sigma in T} s_(xi o sigma)(x_sigma) = 0, one for each xi in the
/// bijective stabilizer of T.  Variable p_k stands for x_(T[k]) with T
/// sorted by index().  Substitutions are expanded through canonical words of
/// mode.
inline std::vector<QuasiEquation> quasi_axioms(
    int n, std::span<const Transformation> T,
    SignatureMode mode = SignatureMode::full) {
  if (!is_submonoid(T)) {
    throw InvalidInput("quasi_axioms: T is not a submonoid");
  }
  std::vector<Transformation> sorted(T.begin(), T.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front().dim() != n) {
    throw DimensionMismatch("quasi_axioms: T has the wrong dimension");
  }
  std::vector<QuasiEquation> out;
  for (auto const& xi : bijective_stabilizer(sorted)) {
    std::optional<Term> premise, conclusion;
    for (std::size_t k = 0; k < sorted.size(); ++k) {
      Term v = Term::var(static_cast<int>(k));
      Term p = sub_transformation(sorted[k], v, mode);
      Term c = sub_transformation(compose(xi, sorted[k]), v, mode);
      premise = premise ? (*premise & p) : p;
      conclusion = conclusion ? (*conclusion & c) : c;
    }
    QuasiEquation q;
    q.premises.push_back(Equation{*premise, Term::zero(), {}});
    q.conclusion = Equation{*conclusion, Term::zero(), {}};
    q.label = "Q." + xi.to_string();
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace substal

#endif  // SUBSTAL_TERMS_HPP_
