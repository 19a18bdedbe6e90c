// Copyright 2026 The sierpack Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sierpack/cli/run.h"

#include <charconv>
#include <cstdlib>
#include <map>
#include <ostream>
#include <stdexcept>

#include "sierpack/families.h"
#include "sierpack/graph_io.h"
#include "sierpack/json.h"
#include "sierpack/packing.h"
#include "sierpack/recognize.h"
#include "sierpack/sierpinski.h"
#include "sierpack/suite/acceptance.h"

namespace sierpack::cli {
namespace {

int64_t ParsePositive(std::string_view text, const char* what) {
  int64_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value);
  if (ec != std::errc() || end != text.data() + text.size() || value <= 0) {
    throw ParseError(std::string(what) + " must be a positive integer, got '" +
                     std::string(text) + "'");
  }
  return value;
}

ChiMode ParseMode(const std::string& mode) {
  if (mode == "min") return ChiMode::kMin;
  if (mode == "max") return ChiMode::kMax;
  throw ParseError("mode must be min or max, got '" + mode + "'");
}

std::map<std::string, int> ParseParams(const std::string& text) {
  std::map<std::string, int> out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(pos, comma - pos);
    const size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ParseError("malformed parameter '" + item + "' (expected k=v)");
    }
    const std::string value = item.substr(eq + 1);
    int v = 0;
    auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(),
                                     v);
    if (ec != std::errc() || end != value.data() + value.size()) {
      throw ParseError("parameter '" + item + "' is not an integer");
    }
    out[item.substr(0, eq)] = v;
    pos = comma + 1;
  }
  return out;
}

int Param(const std::map<std::string, int>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw ParseError("missing parameter " + key);
  return it->second;
}

std::optional<VertexMap> MapFromConfig(const RunConfig& c, int base_order,
                                       int fiber_order) {
  if (c.map && c.map_constant) {
    throw ParseError("--map and --map-constant are mutually exclusive");
  }
  if (c.map) {
    VertexMap f = VertexMap::Parse(*c.map);
    if (f.base_order() != base_order || f.fiber_order() != fiber_order) {
      throw GraphError("map " + f.ToString() + " does not match factors of " +
                       "orders " + std::to_string(base_order) + " and " +
                       std::to_string(fiber_order));
    }
    return f;
  }
  if (c.map_constant) {
    return VertexMap::Constant(base_order, fiber_order, *c.map_constant);
  }
  return std::nullopt;
}

void Emit(const RunConfig& c, const Json& j, std::ostream& out) {
  out << j.dump(2) << "\n";
  if (!c.output.empty() && c.command != Command::kProduct) {
    WriteTextFile(c.output, j.dump(2) + "\n");
  }
}

Json Coloring(const Graph& g, const PackingColoring& c) {
  Json j = ColoringToJson(g, c);
  if (!j.at("verified").get<bool>()) {
    throw std::logic_error("internal error: witness does not verify");
  }
  return j;
}

int RunProduct(const RunConfig& c, std::ostream& out) {
  const Graph g = ParseGraphSpec(c.base), h = ParseGraphSpec(c.fiber);
  auto f = MapFromConfig(c, g.order(), h.order());
  if (!f) throw ParseError("product needs --map or --map-constant");
  ProductGraph p(g, h, *f);
  if (!c.output.empty()) WriteTextFile(c.output, FormatEdgeList(p.graph()));
  if (!c.dot_output.empty()) {
    WriteTextFile(c.dot_output, FormatDot(p.graph(), "product"));
  }
  Json connecting = Json::array();
  for (const ConnectingEdge& e : p.connecting_edges()) {
    connecting.push_back({{"edge", {e.edge.first, e.edge.second}},
                          {"base_edge", {e.base_edge.first, e.base_edge.second}}});
  }
  Json j = {{"command", "product"},
            {"order", p.graph().order()},
            {"size", p.graph().size()},
            {"map", f->ToString()},
            {"diameter", Diameter(p.graph())},
            {"is_tree", IsTree(p.graph())},
            {"connecting_edges", connecting}};
  if (c.output.empty()) j["graph"] = FormatEdgeList(p.graph());
  Emit(c, j, out);
  return kExitOk;
}

int RunChiRho(const RunConfig& c, std::ostream& out) {
  const Graph g = ReadGraphFile(c.input);
  SearchOptions options;
  options.node_budget = EffectiveBudget(c);
  PackingSolver solver(g, options);
  Json j = {{"command", "chirho"}, {"order", g.order()}};
  if (c.decision_k) {
    DecisionResult d = solver.Decide(*c.decision_k);
    j["k"] = *c.decision_k;
    j["status"] = d.status == SearchStatus::kSat     ? "sat"
                  : d.status == SearchStatus::kUnsat ? "unsat"
                                                     : "unknown";
    j["nodes"] = d.nodes;
    j["source"] = "packing.decision";
    if (d.coloring) j["coloring"] = Coloring(g, *d.coloring);
    Emit(c, j, out);
    return d.status == SearchStatus::kUnknown ? kExitBudget : kExitOk;
  }
  ExactResult e = solver.Exact();
  j["source"] = "packing.exact";
  j["nodes"] = e.nodes;
  if (e.status != SearchStatus::kSat) {
    j["status"] = "unknown";
    j["lower_bound"] = e.value;
    j["upper_bound"] = e.upper_bound;
    Emit(c, j, out);
    return kExitBudget;
  }
  j["status"] = "exact";
  j["value"] = e.value;
  j["colors"] = e.witness->colors();
  j["coloring"] = Coloring(g, *e.witness);
  Emit(c, j, out);
  return kExitOk;
}

bool IsComplete(const Graph& g) {
  return g.size() == g.order() * (g.order() - 1) / 2;
}

bool IsStar(const Graph& g) {
  return g.order() >= 4 && g.degree(0) == g.order() - 1 &&
         g.size() == g.order() - 1;
}

// The closed form this pair of factors falls under, if any.
std::optional<FamilyValue> StatedValue(const Graph& g, const Graph& h,
                                       ChiMode mode) {
  if (IsComplete(g) && IsComplete(h)) {
    const int m = g.order(), n = h.order();
    if (m >= 3 && n >= 3) return CompletePairValue(m, n, mode);
    if (m == 2 && n >= 2) return K2SpecialValue(n, K2Side::kBase, mode);
    if (m >= 3 && n == 2) return K2SpecialValue(m, K2Side::kFiber, mode);
  }
  if (IsStar(g) && IsStar(h)) {
    return StarStarValue(g.order() - 1, h.order() - 1, mode);
  }
  return std::nullopt;
}

int RunSChiRho(const RunConfig& c, std::ostream& out) {
  const Graph g = ParseGraphSpec(c.base), h = ParseGraphSpec(c.fiber);
  const ChiMode mode = ParseMode(c.mode);
  ChiOptions options;
  options.enumeration.reduce_symmetry = c.reduce_symmetry;
  options.enumeration.max_maps = c.max_maps;
  options.search.node_budget = EffectiveBudget(c);
  ChiResult r = SierpinskiChi(g, h, mode, options);
  const bool exact = r.status == SearchStatus::kSat;
  Json j = {{"command", "schirho"},
            {"mode", ToString(mode)},
            {"status", exact ? "exact" : "unknown"},
            {"value", r.value},
            {"maps_explored", r.maps_explored},
            {"nodes", r.nodes},
            {"reduce_symmetry", c.reduce_symmetry},
            {"source", std::string("sierpinski_chi.") + ToString(mode)}};
  if (r.map) {
    j["map"] = r.map->ToString();
    if (r.coloring) {
      j["coloring"] =
          Coloring(SierpinskiProduct(g, h, *r.map).graph(), *r.coloring);
    }
  }
  if (auto stated = StatedValue(g, h, mode)) {
    j["stated"] = FamilyValueToJson(*stated);
    j["agrees_with_stated"] = exact && stated->Contains(r.value);
  }
  Emit(c, j, out);
  return exact ? kExitOk : kExitBudget;
}

FamilyValue Simple(Family family, std::vector<int> params, ValueKind kind,
                   int lo, int hi, std::string source) {
  return {family, std::move(params), kind, lo, hi, std::move(source)};
}

Json ConstructionJson(const Construction& k) {
  Json j = {{"map", k.product.map().ToString()},
            {"status", ToString(k.status)},
            {"color_bound", k.color_bound},
            {"coloring", ColoringToJson(k.product.graph(), k.coloring)}};
  if (k.violation) {
    j["pattern_violation"] = {{"u", k.violation->u},
                              {"v", k.violation->v},
                              {"color", k.violation->color}};
  }
  return j;
}

int RunFamily(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto params = ParseParams(c.params);
  const ChiMode mode = ParseMode(c.mode);
  const bool max = mode == ChiMode::kMax;
  const ConstructionMode cmode =
      max ? ConstructionMode::kMaxBound : ConstructionMode::kMin;
  std::optional<FamilyValue> value;
  std::optional<Construction> built;
  std::optional<Json> coloring_only;
  const std::string& name = c.family;
  const char* needs_map = nullptr;

  if (name == "complete_pair") {
    value = CompletePairValue(Param(params, "m"), Param(params, "n"), mode);
  } else if (name == "complete_by_k2") {
    const int m1 = Param(params, "m1"), m2 = Param(params, "m2");
    const int m = params.count("m") ? Param(params, "m") : m1 + m2;
    if (m != m1 + m2) throw GraphError("m must equal m1 + m2");
    value = CompleteByK2Value(m, m1, m2);
  } else if (name == "k2_base") {
    value = K2SpecialValue(Param(params, "n"), K2Side::kBase, mode);
  } else if (name == "k2_fiber") {
    value = K2SpecialValue(Param(params, "m"), K2Side::kFiber, mode);
  } else if (name == "corona") {
    const int n = Param(params, "n"), p = Param(params, "p");
    value = CoronaValue(n, p);
    if (!c.emit_coloring.empty()) {
      const Graph g = Corona(Path(n), p);
      SearchOptions options;
      options.node_budget = EffectiveBudget(c);
      ExactResult e = ChiRhoExact(g, options);
      if (e.status != SearchStatus::kSat) {
        err << "error: solver budget exhausted\n";
        return kExitBudget;
      }
      coloring_only = Coloring(g, *e.witness);
    }
  } else if (name == "path_path") {
    const int m = Param(params, "m"), n = Param(params, "n");
    if (m < 2 || n < 2) throw GraphError("path x path needs m, n >= 2");
    if (!max) {
      value = Simple(Family::kPathPath, {m, n}, ValueKind::kExact, 3, 3,
                     "path_path.min");
      built = PathPathMin(m, n);
    } else {
      value = Simple(Family::kPathPath, {m, n}, ValueKind::kUpperBound, 0, 7,
                     "class_t.bound");
      if (auto f = MapFromConfig(c, m, n)) {
        ProductGraph p(Path(m), Path(n), *f);
        PackingColoring col = ColorClassT(SpineDecompose(p));
        coloring_only = Coloring(p.graph(), col);
        (*coloring_only)["map"] = f->ToString();
      } else {
        needs_map = "path_path";
      }
    }
  } else if (name == "star_path") {
    const int m = Param(params, "m"), n = Param(params, "n");
    if (!max) {
      value = Simple(Family::kStarPath, {m, n}, ValueKind::kExact, 3, 3,
                     "star_path.min");
      built = StarPathColoring(m, n, VertexMap::Constant(m + 1, n, 0), cmode);
    } else {
      value = Simple(Family::kStarPath, {m, n}, ValueKind::kUpperBound, 0, 7,
                     "star_path.max_bound");
      if (auto f = MapFromConfig(c, m + 1, n)) {
        built = StarPathColoring(m, n, *f, cmode);
      } else {
        needs_map = "star_path";
      }
    }
  } else if (name == "path_star") {
    const int m = Param(params, "m"), n = Param(params, "n");
    if (!max) {
      value = Simple(Family::kPathStar, {m, n}, ValueKind::kExact, 3, 3,
                     "path_star.min");
      built = PathStarColoring(m, n, PathStarMinMap(m, n), cmode);
    } else {
      value = Simple(Family::kPathStar, {m, n}, ValueKind::kUpperBound, 0, 9,
                     "path_star.max_bound");
      if (auto f = MapFromConfig(c, m, n + 1)) {
        built = PathStarColoring(m, n, *f, cmode);
      } else {
        needs_map = "path_star";
      }
    }
  } else if (name == "star_star") {
    const int m = Param(params, "m"), n = Param(params, "n");
    value = StarStarValue(m, n, mode);
    if (!max) {
      built = StarStarColoring(m, n);
    } else if (auto f = MapFromConfig(c, m + 1, n + 1)) {
      built = StarStarColoring(m, n, *f);
    } else {
      needs_map = "star_star";
    }
  } else {
    throw ParseError("unknown family '" + name +
                     "' (complete_pair, complete_by_k2, k2_base, k2_fiber, "
                     "corona, path_path, star_path, path_star, star_star)");
  }

  Json j = {{"command", "family"},
            {"family", name},
            {"mode", ToString(mode)},
            {"value", FamilyValueToJson(*value)}};
  if (built) j["construction"] = ConstructionJson(*built);
  if (coloring_only) j["coloring"] = *coloring_only;
  if (needs_map) j["note"] = "the max-bound construction needs --map";
  if (!c.emit_coloring.empty()) {
    if (built) {
      WriteTextFile(c.emit_coloring, ConstructionJson(*built).dump(2) + "\n");
    } else if (coloring_only) {
      WriteTextFile(c.emit_coloring, coloring_only->dump(2) + "\n");
    } else {
      err << "error: no coloring to emit for this family and mode\n";
      Emit(c, j, out);
      return kExitRejected;
    }
  }
  Emit(c, j, out);
  return built && !built->ok() ? kExitRejected : kExitOk;
}

int RunRecognize(const RunConfig& c, std::ostream& out) {
  const Graph x = ReadGraphFile(c.input);
  Json j = RecognitionToJson(RecognizeTreeProduct(x, c.exhaustive));
  j["command"] = "recognize";
  j["order"] = x.order();
  j["exhaustive"] = c.exhaustive;
  j["source"] = "recognition.tree_product";
  Emit(c, j, out);
  return kExitOk;
}

int RunVerifyPaper(const RunConfig& c, std::ostream& out, std::ostream& err) {
  suite::Scale scale;
  try {
    scale = suite::ParseScale(c.scale);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  auto reports = suite::RunAcceptance(scale);
  bool all = true;
  for (const auto& r : reports) {
    err << suite::SummaryLine(r) << "\n";
    all = all && r.passed;
  }
  Json j = suite::ReportToJson(reports, scale);
  j["command"] = "verify-paper";
  Emit(c, j, out);
  return all ? kExitOk : kExitRejected;
}

}  // namespace

Graph ParseGraphSpec(std::string_view spec) {
  if (spec.size() >= 2 && std::string_view("KPCS").find(spec[0]) !=
                              std::string_view::npos) {
    int n = 0;
    auto [end, ec] = std::from_chars(spec.data() + 1,
                                     spec.data() + spec.size(), n);
    if (ec == std::errc() && end == spec.data() + spec.size()) {
      if (n < 1) throw ParseError("graph spec needs a positive size");
      switch (spec[0]) {
        case 'K':
          return Complete(n);
        case 'P':
          return Path(n);
        case 'C':
          if (n < 3) throw ParseError("cycle needs at least 3 vertices");
          return Cycle(n);
        default:
          return Star(n);
      }
    }
  }
  if (spec.empty()) throw ParseError("empty graph spec");
  return ReadGraphFile(std::string(spec));
}

int64_t EffectiveBudget(const RunConfig& config) {
  if (config.node_budget) {
    if (*config.node_budget <= 0) throw ParseError("--budget must be positive");
    return *config.node_budget;
  }
  if (const char* env = std::getenv(kBudgetEnv); env && *env) {
    return ParsePositive(env, kBudgetEnv);
  }
  return 0;
}

int Run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.max_maps <= 0) throw ParseError("--max-maps must be positive");
    switch (config.command) {
      case Command::kProduct:
        return RunProduct(config, out);
      case Command::kChiRho:
        return RunChiRho(config, out);
      case Command::kSChiRho:
        return RunSChiRho(config, out);
      case Command::kFamily:
        return RunFamily(config, out, err);
      case Command::kRecognize:
        return RunRecognize(config, out);
      case Command::kVerifyPaper:
        return RunVerifyPaper(config, out, err);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::logic_error& e) {
    // GraphError, SizeError and the other precondition failures.
    err << "error: " << e.what() << "\n";
    return kExitRejected;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRejected;
  }
  return kExitRejected;
}

}  // namespace sierpack::cli
