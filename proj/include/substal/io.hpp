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

// JSON reading and writing for algebras, frames and reports.

#ifndef SUBSTAL_IO_HPP_
#define SUBSTAL_IO_HPP_

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "substal/error.hpp"
#include "substal/frames.hpp"
#include "substal/gallery.hpp"
#include "substal/logic.hpp"
#include "substal/monoid.hpp"
#include "substal/repr.hpp"
#include "substal/setalg.hpp"

namespace substal {

using Json = nlohmann::ordered_json;

namespace detail {
  template <class F>
  auto json_guard(std::string const& what, F&& f) {
    try {
      return f();
    } catch (nlohmann::json::exception const& e) {
      throw InvalidInput(what + ": " + e.what());
    }
  }

  inline int json_dim(Json const& j) {
    int n = j.at("n").get<int>();
    check_dim(n);
    return n;
  }
}  // namespace detail

inline Json read_json_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidInput("cannot open " + path);
  }
  return detail::json_guard(path, [&] { return Json::parse(in); });
}

////////////////////////////////////////////////////////////////////////
// Algebras
////////////////////////////////////////////////////////////////////////

/// {"n":2,"k":2,"mode":"full","unit":[0,1,2,3]}; a missing unit means all
/// of ^n k.
inline ConcreteAlgebra algebra_from_json(Json const& j,
                                         std::uint64_t budget = kDefaultPointBudget) {
  return detail::json_guard("algebra", [&] {
    int n = detail::json_dim(j);
    int k = j.at("k").get<int>();
    if (k < 1) {
      throw InvalidInput("algebra: k must be positive");
    }
    auto mode = parse_mode(j.value("mode", std::string("full")));
    if (!j.contains("unit")) {
      return small_algebra(n, k, mode, budget);
    }
    auto space = detail::checked_pow(static_cast<std::uint64_t>(k), n);
    std::vector<std::uint64_t> unit;
    for (auto const& v : j.at("unit")) {
      auto i = v.get<std::uint64_t>();
      if (i >= space) {
        throw InvalidInput("algebra: point index " + std::to_string(i)
                           + " outside ^n k");
      }
      unit.push_back(i);
    }
    return ConcreteAlgebra(n, k, mode, std::move(unit), budget);
  });
}

inline Json algebra_to_json(ConcreteAlgebra const& a) {
  return Json{{"n", a.dim()},
              {"k", a.base()},
              {"mode", to_string(a.mode())},
              {"unit", a.unit_indices()}};
}

/// Sorted global point indices.
inline Json element_to_json(ConcreteAlgebra const& a, PointSet const& x) {
  return Json(a.global_indices(x));
}

inline PointSet element_from_json(ConcreteAlgebra const& a, Json const& j) {
  return detail::json_guard("element", [&] {
    return a.element_from_global(j.get<std::vector<std::uint64_t>>());
  });
}

////////////////////////////////////////////////////////////////////////
// Frames
////////////////////////////////////////////////////////////////////////

/// {"n":2,"mode":"full","worlds":4,"action":{"s[0,1]":[...],...},
///  "diag":{"0,1":[...]}}.  Every generator of the mode needs an action.
/// Unlisted diagonal pairs are empty, except (i,i) which is everything.
inline Frame frame_from_json(Json const& j) {
  return detail::json_guard("frame", [&] {
    int n = detail::json_dim(j);
    auto mode = parse_mode(j.value("mode", std::string("full")));
    auto worlds = j.at("worlds").get<std::size_t>();
    auto gens = generators(n, mode);
    std::vector<WorldMap> actions(gens.size());
    auto const& act = j.at("action");
    for (auto it = act.begin(); it != act.end(); ++it) {
      std::size_t pos = 0;
      auto g = detail::parse_gensym(it.key(), pos, n, mode);
      if (pos != it.key().size()) {
        throw InvalidInput("frame: bad generator key '" + it.key() + "'");
      }
      for (std::size_t a = 0; a < gens.size(); ++a) {
        if (gens[a] == g) {
          actions[a] = it.value().get<WorldMap>();
        }
      }
    }
    for (std::size_t a = 0; a < gens.size(); ++a) {
      if (actions[a].empty() && worlds > 0) {
        throw InvalidFrame("frame: no action for " + gens[a].to_string());
      }
    }
    std::vector<PointSet> diag;
    if (has_diagonals(mode)) {
      diag.assign(static_cast<std::size_t>(n * n), PointSet(worlds));
      for (int i = 0; i < n; ++i) {
        diag[static_cast<std::size_t>(i * n + i)] = PointSet::full(worlds);
      }
      if (j.contains("diag")) {
        for (auto it = j.at("diag").begin(); it != j.at("diag").end(); ++it) {
          int a = 0;
          int b = 0;
          char comma = 0;
          std::istringstream key(it.key());
          if (!(key >> a >> comma >> b) || comma != ',' || a < 0 || b < 0 || a >= n
              || b >= n) {
            throw InvalidInput("frame: bad diagonal key '" + it.key() + "'");
          }
          PointSet d(worlds);
          for (auto w : it.value().get<std::vector<std::size_t>>()) {
            if (w >= worlds) {
              throw InvalidFrame("frame: diagonal world out of range");
            }
            d.set(w);
          }
          diag[static_cast<std::size_t>(a * n + b)] = d;
        }
      }
    } else if (j.contains("diag")) {
      throw InvalidFrame("diagonal markings need mode diag");
    }
    return Frame(n, mode, worlds, std::move(actions), std::move(diag));
  });
}

inline Json frame_to_json(Frame const& F) {
  Json act = Json::object();
  for (std::size_t a = 0; a < F.signature().size(); ++a) {
    act[F.signature()[a].to_string()] = F.actions()[a];
  }
  Json j{{"n", F.dim()},
         {"mode", to_string(F.mode())},
         {"worlds", F.size()},
         {"action", act}};
  if (has_diagonals(F.mode())) {
    Json d = Json::object();
    int n = F.dim();
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (a != b) {
          d[std::to_string(a) + "," + std::to_string(b)] = F.diag(a, b).indices();
        }
      }
    }
    j["diag"] = d;
  }
  return j;
}

inline Json to_json(FrameReport const& r) {
  Json j{{"ok", r.ok}, {"all_pairs", r.all_pairs}, {"checks", r.checks}};
  if (!r.ok) {
    j["failure"] = r.failure;
    if (r.sigma) {
      j["sigma"] = r.sigma->to_string();
    }
    if (r.tau) {
      j["tau"] = r.tau->to_string();
    }
    if (r.world) {
      j["world"] = *r.world;
    }
  }
  return j;
}

////////////////////////////////////////////////////////////////////////
// Reports
////////////////////////////////////////////////////////////////////////

inline Json to_json(RepReport const& r) {
  Json j{{"homomorphism", r.homomorphism},
         {"injective", r.injective},
         {"atom_cover", r.atom_cover},
         {"exhaustive", r.exhaustive},
         {"identity_in_image", r.identity_in_image}};
  if (!r.well_defined || !r.diagonals) {
    j["well_defined"] = r.well_defined;
    j["diagonals"] = r.diagonals;
  }
  if (!r.failure.empty()) {
    j["failure"] = r.failure;
  }
  return j;
}

/// Images keyed by atom (world) index, plus the target algebra.
inline Json to_json(RepMap const& r) {
  Json images = Json::object();
  for (std::size_t w = 0; w < r.atom_images.size(); ++w) {
    images[std::to_string(w)] = element_to_json(r.target, r.atom_images[w]);
  }
  return Json{{"target", algebra_to_json(r.target)},
              {"images", images},
              {"report", to_json(r.report)}};
}

inline Json to_json(SatResult const& r) {
  if (!r.sat) {
    return Json{{"sat", false}, {"tried", r.tried}};
  }
  Json val = Json::object();
  for (std::size_t v = 0; v < r.valuation.size(); ++v) {
    val["p" + std::to_string(v)] = r.valuation[v].indices();
  }
  Json touched = Json::array();
  for (auto const& q : r.touched) {
    touched.push_back(q.to_string());
  }
  return Json{{"k", r.k},
              {"point", r.point.to_string()},
              {"point_index", r.point.index()},
              {"valuation", val},
              {"partition", r.partition.to_string()},
              {"touched", touched},
              {"modalities", r.modalities}};
}

inline Json to_json(GalleryReport const& r) {
  return Json{{"check", r.check},
              {"instances", r.instances},
              {"failures", r.failures}};
}

inline Json to_json(NotAVarietyReport const& r) {
  auto j = to_json(r.report);
  j["n"] = r.n;
  j["f"] = r.f.to_string();
  j["g_closed"] = r.g_closed;
  j["shift"] = r.shift;
  j["witness"] = r.witness;
  j["small_hold"] = r.small_hold;
  j["alternative_witness"] = r.alternative_witness;
  return j;
}

inline Json to_json(QuasiReport const& r) {
  Json j{{"holds", r.holds},
         {"coloring_holds", r.coloring_holds},
         {"sigma_q_holds", r.sigma_q_holds},
         {"instances", r.instances}};
  if (r.f) {
    j["f"] = r.f->to_string();
  }
  if (r.witness) {
    j["witness"] = r.witness->indices();
  }
  if (r.xi) {
    j["xi"] = r.xi->to_string();
  }
  if (r.world) {
    j["world"] = *r.world;
  }
  if (!r.failure.empty()) {
    j["failure"] = r.failure;
  }
  return j;
}

}  // namespace substal

#endif  // SUBSTAL_IO_HPP_
