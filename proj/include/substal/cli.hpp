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

// The substal command line.  Line 1 of stdout is the verdict; exit status
// 0 means SAT/VALID/PASS, 1 means UNSAT/INVALID/FAIL, 2 means bad usage or
// bad input.

#ifndef SUBSTAL_CLI_HPP_
#define SUBSTAL_CLI_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "substal/algebra.hpp"
#include "substal/error.hpp"
#include "substal/frames.hpp"
#include "substal/gallery.hpp"
#include "substal/io.hpp"
#include "substal/logic.hpp"
#include "substal/monoid.hpp"
#include "substal/random.hpp"
#include "substal/repr.hpp"
#include "substal/setalg.hpp"
#include "substal/terms.hpp"

namespace substal::cli {

inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;

namespace detail {

  struct Common {
    int n = 2;
    std::string mode = "full";
    bool json = false;
    std::uint64_t seed = 1;
    std::uint64_t budget = 0;

    [[nodiscard]] SignatureMode signature() const { return parse_mode(mode); }
    [[nodiscard]] std::uint64_t budget_or(std::uint64_t fallback) const {
      return budget ? budget : fallback;
    }
  };

  inline void add_common(CLI::App& sub, Common& c, bool with_n = true) {
    if (with_n) {
      sub.add_option("-n", c.n, "dimension")->check(CLI::Range(2, kMaxDim));
    }
    sub.add_option("--mode", c.mode, "pinter | transpositions | full | diag")
        ->check(CLI::IsMember({"pinter", "transpositions", "full", "diag"}));
    sub.add_flag("--json", c.json, "print JSON details");
    sub.add_option("--seed", c.seed, "seed for randomized steps");
    sub.add_option("--budget", c.budget, "override the work budget");
  }

  inline int verdict(std::ostream& out, bool ok, char const* yes, char const* no) {
    out << (ok ? yes : no) << "\n";
    return ok ? kPass : kFail;
  }

  inline bool looks_like_equation(std::string const& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '=') {
        return true;
      }
    }
    return false;
  }

  inline Frame load_frame(std::string const& path) {
    return frame_from_json(read_json_file(path));
  }

  inline ConcreteAlgebra load_algebra(std::string const& path, std::uint64_t budget) {
    return algebra_from_json(read_json_file(path), budget);
  }

  inline std::string first_failure(GalleryReport const& r) {
    return r.failures.empty() ? "" : r.failures.front();
  }

}  // namespace detail

/// args excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"substal: finite substitution algebras", "substal"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "substal 0.1.0");

  detail::Common c;
  std::function<int()> action;

  // sat
  std::string sat_formula;
  int sat_random = 0;
  auto* sat = app.add_subcommand("sat", "satisfiability of a formula");
  detail::add_common(*sat, c);
  sat->add_option("formula", sat_formula, "formula");
  sat->add_option("--random", sat_random, "use a seeded random formula of this size");
  sat->callback([&] {
    action = [&] {
      auto mode = c.signature();
      if (sat_random <= 0 && sat_formula.empty()) {
        throw InvalidInput("sat: no formula given");
      }
      Rng rng(c.seed);
      Term phi = sat_random > 0 ? random_term(rng, c.n, mode, 2, sat_random)
                                : parse_term(sat_formula, c.n, mode);
      auto r = satisfiable(phi, c.n, mode);
      int code = detail::verdict(out, r.sat, "SAT", "UNSAT");
      if (sat_random > 0) {
        out << to_string(phi) << "\n";
      }
      if (r.sat || c.json) {
        out << (c.json ? to_json(r).dump(2) : to_json(r).dump()) << "\n";
      }
      return code;
    };
  });

  // valid
  std::string valid_text;
  bool valid_axioms = false;
  auto* val = app.add_subcommand("valid", "validity of a formula or equation");
  detail::add_common(*val, c);
  val->add_option("formula", valid_text, "formula or equation s = t");
  val->add_flag("--axioms", valid_axioms, "check every axiom instance for -n and --mode");
  val->callback([&] {
    action = [&] {
      auto mode = c.signature();
      if (valid_axioms) {
        auto axioms = sigma_axioms(c.n, mode);
        std::vector<std::string> bad;
        for (auto const& e : axioms) {
          if (!valid(e, c.n, mode)) {
            bad.push_back(e.label + ": " + to_string(e));
          }
        }
        int code = detail::verdict(out, bad.empty(), "VALID", "INVALID");
        out << axioms.size() << " instances, " << bad.size() << " refuted\n";
        for (auto const& b : bad) {
          out << b << "\n";
        }
        if (c.json) {
          out << Json{{"instances", axioms.size()}, {"refuted", bad}}.dump(2) << "\n";
        }
        return code;
      }
      if (valid_text.empty()) {
        throw InvalidInput("valid: give a formula or --axioms");
      }
      SatResult r;
      if (detail::looks_like_equation(valid_text)) {
        r = refute(parse_equation(valid_text, c.n, mode), c.n, mode);
      } else {
        r = satisfiable(~parse_term(valid_text, c.n, mode), c.n, mode);
      }
      int code = detail::verdict(out, !r.sat, "VALID", "INVALID");
      if (r.sat) {
        out << (c.json ? to_json(r).dump(2) : to_json(r).dump()) << "\n";
      }
      return code;
    };
  });

  // eq
  std::string eq_text;
  std::string eq_file;
  int eq_k = 2;
  auto* eq = app.add_subcommand("eq", "check an equation in a finite set algebra");
  detail::add_common(*eq, c);
  eq->add_option("equation", eq_text, "s = t")->required();
  eq->add_option("--algebra", eq_file, "algebra JSON file (default: all of ^n k)");
  eq->add_option("-k", eq_k, "base size when no file is given")->check(CLI::Range(1, 16));
  eq->callback([&] {
    action = [&] {
      auto A = eq_file.empty()
                   ? small_algebra(c.n, eq_k, c.signature())
                   : detail::load_algebra(eq_file, kDefaultPointBudget);
      auto e = parse_equation(eq_text, A.dim(), A.mode());
      auto cex = find_counterexample(A, e, c.budget_or(kDefaultAssignmentBudget));
      int code = detail::verdict(out, !cex, "PASS", "FAIL");
      if (cex) {
        Json j = Json::object();
        for (std::size_t v = 0; v < cex->size(); ++v) {
          j["p" + std::to_string(v)] = element_to_json(A, (*cex)[v]);
        }
        out << (c.json ? j.dump(2) : j.dump()) << "\n";
      }
      return code;
    };
  });

  // word
  std::string word_a;
  std::string word_b;
  auto* word = app.add_subcommand("word", "evaluate or compare generator words");
  detail::add_common(*word, c);
  word->add_option("word", word_a, "whitespace separated generators")->required();
  word->add_option("other", word_b, "second word to compare");
  word->callback([&] {
    action = [&] {
      auto mode = c.signature();
      auto w1 = parse_word(word_a, c.n, mode);
      auto t1 = hat(w1);
      int code = kPass;
      Json j{{"hat", t1.to_string()}, {"canonical", canonical_word(t1, mode).to_string()}};
      if (!word_b.empty()) {
        auto w2 = parse_word(word_b, c.n, mode);
        bool same = word_equiv(w1, w2);
        code = detail::verdict(out, same, "EQUAL", "DIFFERENT");
        j["other"] = hat(w2).to_string();
      } else {
        out << t1.to_string() << "\n";
      }
      if (c.json) {
        out << j.dump(2) << "\n";
      } else {
        out << "canonical: " << j["canonical"].get<std::string>() << "\n";
      }
      return code;
    };
  });

  // frame-check
  std::string fc_file;
  auto* fc = app.add_subcommand("frame-check", "coherence of a frame");
  detail::add_common(*fc, c, false);
  fc->add_option("frame", fc_file, "frame JSON file")->required();
  fc->callback([&] {
    action = [&] {
      auto F = detail::load_frame(fc_file);
      auto r = frame_check(F, c.budget_or(kDefaultFrameBudget));
      int code = detail::verdict(out, r.ok, "PASS", "FAIL");
      if (!r.ok) {
        out << r.failure << "\n";
      }
      if (c.json) {
        out << to_json(r).dump(2) << "\n";
      }
      return code;
    };
  });

  // represent
  std::string rep_file;
  std::string rep_kind = "full";
  int rep_atom = 0;
  int rep_random = 0;
  auto* rep = app.add_subcommand("represent", "represent the complex algebra of a frame");
  detail::add_common(*rep, c);
  rep->add_option("frame", rep_file, "frame JSON file");
  rep->add_option("--kind", rep_kind, "at | full | complete | canonical | diag")
      ->check(CLI::IsMember({"at", "full", "complete", "canonical", "diag"}));
  rep->add_option("--atom", rep_atom, "atom (world) for --kind at or diag, default 0");
  rep->add_option("--random", rep_random,
                  "use a seeded random coherent frame with at most this many worlds");
  rep->callback([&] {
    action = [&] {
      Frame F;
      if (!rep_file.empty()) {
        F = detail::load_frame(rep_file);
      } else if (rep_random > 0) {
        Rng rng(c.seed);
        F = random_coherent_frame(rng, c.n, c.signature(),
                                  static_cast<std::size_t>(rep_random));
      } else {
        throw InvalidInput("represent: give a frame file or --random");
      }
      auto A = complex_algebra(F);
      auto atom = [&] {
        if (rep_atom < 0 || static_cast<std::size_t>(rep_atom) >= A.atom_count()) {
          throw InvalidInput("represent: --atom must name a world");
        }
        return A.atom(static_cast<std::uint32_t>(rep_atom));
      };
      bool ok = false;
      Json j;
      if (rep_kind == "canonical") {
        auto ext = canonical_extension(A);
        ok = ext.iso_check.ok && ext.bijective && ext.representation.report.atom_cover
             && ext.representation.report.homomorphism;
        j = Json{{"isomorphism", ext.iso},
                 {"iso_check", ext.iso_check.ok},
                 {"bijective", ext.bijective},
                 {"representation", to_json(ext.representation)}};
      } else {
        RepMap r = rep_kind == "at"     ? represent_at(A, atom())
                   : rep_kind == "diag" ? diag_represent(A, atom())
                   : rep_kind == "complete" ? complete_representation(A)
                                            : full_representation(A);
        auto const& rr = r.report;
        ok = rr.homomorphism && rr.well_defined && rr.diagonals;
        if (rep_kind == "at" || rep_kind == "diag") {
          ok = ok && rr.identity_in_image;
        } else {
          ok = ok && rr.injective;
        }
        if (rep_kind == "complete") {
          ok = ok && rr.atom_cover;
        }
        j = to_json(r);
      }
      int code = detail::verdict(out, ok, "PASS", "FAIL");
      if (c.json) {
        out << j.dump(2) << "\n";
      } else {
        auto const& rj = rep_kind == "canonical" ? j["representation"] : j;
        out << rj["report"].dump() << "\n";
      }
      return code;
    };
  });

  // axioms
  auto* ax = app.add_subcommand("axioms", "list the axiom instances");
  detail::add_common(*ax, c);
  ax->callback([&] {
    action = [&] {
      auto axioms = sigma_axioms(c.n, c.signature());
      out << axioms.size() << " instances\n";
      if (c.json) {
        Json j = Json::array();
        for (auto const& e : axioms) {
          j.push_back({{"label", e.label}, {"equation", to_string(e)}});
        }
        out << j.dump(2) << "\n";
      } else {
        for (auto const& e : axioms) {
          out << e.label << "  " << to_string(e) << "\n";
        }
      }
      return kPass;
    };
  });

  // quasi
  std::string q_algebra;
  std::string q_frame;
  std::string q_sub = "transpositions";
  auto* qu = app.add_subcommand("quasi", "quasi-equations for a submonoid T");
  detail::add_common(*qu, c, false);
  qu->add_option("--algebra", q_algebra, "algebra JSON file");
  qu->add_option("--frame", q_frame, "frame JSON file");
  qu->add_option("--submonoid", q_sub, "T: pinter | transpositions | full")
      ->check(CLI::IsMember({"pinter", "transpositions", "full"}));
  qu->callback([&] {
    action = [&] {
      if (q_algebra.empty() == q_frame.empty()) {
        throw InvalidInput("quasi: give exactly one of --algebra, --frame");
      }
      QuasiReport r;
      if (!q_algebra.empty()) {
        auto A = detail::load_algebra(q_algebra, kDefaultPointBudget);
        r = check_quasi(A, SubMonoidCtx::of_mode(A.dim(), parse_mode(q_sub)));
      } else {
        auto A = complex_algebra(detail::load_frame(q_frame));
        r = check_quasi(A, SubMonoidCtx::of_mode(A.dim(), parse_mode(q_sub)));
      }
      int code = detail::verdict(out, r.holds, "PASS", "FAIL");
      if (!r.holds) {
        out << r.failure << "\n";
      }
      if (c.json) {
        out << to_json(r).dump(2) << "\n";
      }
      return code;
    };
  });

  // gallery
  std::string g_which;
  int g_k = 3;
  int g_b = 8;
  auto* gal = app.add_subcommand("gallery", "finite checks of the counterexamples");
  detail::add_common(*gal, c);
  gal->add_option("check", g_which, "not-a-variety | product-identities | counter2")
      ->required()
      ->check(CLI::IsMember({"not-a-variety", "product-identities", "counter2"}));
  gal->add_option("-k", g_k, "base size for product-identities")->check(CLI::Range(1, 6));
  gal->add_option("-B", g_b, "entry bound for counter2")->check(CLI::PositiveNumber);
  gal->callback([&] {
    action = [&] {
      GalleryReport r;
      Json j;
      if (g_which == "not-a-variety") {
        auto w = not_a_variety_witness(c.n);
        r = w.report;
        j = to_json(w);
      } else if (g_which == "product-identities") {
        r = product_identities(g_k, c.n);
        j = to_json(r);
      } else {
        r = counter2_truncation({c.n, g_b});
        j = to_json(r);
      }
      int code = detail::verdict(out, r.ok(), "PASS", "FAIL");
      out << r.check << ": " << r.instances << " instances, " << r.failures.size()
          << " failures\n";
      if (c.json) {
        out << j.dump(2) << "\n";
      } else if (!r.ok()) {
        out << detail::first_failure(r) << "\n";
      }
      return code;
    };
  });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e, out, err);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e, out, err);
  } catch (CLI::CallForVersion const& e) {
    return app.exit(e, out, err);
  } catch (CLI::ParseError const& e) {
    app.exit(e, out, err);
    return kUsage;
  }
  try {
    return action();
  } catch (Error const& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsage;
}

inline int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace substal::cli

#endif  // SUBSTAL_CLI_HPP_
