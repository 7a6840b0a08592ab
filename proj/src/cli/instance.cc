// Copyright 2026 The Authors.
//
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

#include "subinfo/cli/instance.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <memory>
#include <sstream>
#include <utility>

#include "subinfo/analysis/properties.h"
#include "subinfo/functions/family_function.h"
#include "subinfo/optimize/guard.h"

namespace subinfo::cli {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& path, const std::string& what) {
  throw InstanceError(path + ": " + what);
}

std::string Join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string At(const std::string& path, size_t i) { return path + "[" + std::to_string(i) + "]"; }

void RequireObject(const json& j, const std::string& path) {
  if (!j.is_object()) Fail(path, "expected an object");
}

// Rejects keys outside `allowed`, so typos surface instead of being ignored.
void CheckKeys(const json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  RequireObject(j, path);
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) Fail(Join(path, it.key()), "unknown field");
  }
}

const json& Require(const json& j, const std::string& path, const char* key) {
  RequireObject(j, path);
  auto it = j.find(key);
  if (it == j.end()) Fail(Join(path, key), "missing required field");
  return *it;
}

const json* Optional(const json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

double Number(const json& j, const std::string& path) {
  if (!j.is_number()) Fail(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) Fail(path, "expected a finite number");
  return v;
}

uint64_t Unsigned(const json& j, const std::string& path) {
  if (j.is_number_unsigned()) return j.get<uint64_t>();
  if (j.is_number_integer() && j.get<int64_t>() >= 0) return static_cast<uint64_t>(j.get<int64_t>());
  Fail(path, "expected a non-negative integer");
}

bool Bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) Fail(path, "expected true or false");
  return j.get<bool>();
}

std::string String(const json& j, const std::string& path) {
  if (!j.is_string()) Fail(path, "expected a string");
  return j.get<std::string>();
}

const json& Array(const json& j, const std::string& path) {
  if (!j.is_array()) Fail(path, "expected an array");
  return j;
}

std::vector<double> Numbers(const json& j, const std::string& path) {
  std::vector<double> out;
  for (size_t i = 0; i < Array(j, path).size(); ++i) out.push_back(Number(j[i], At(path, i)));
  return out;
}

std::vector<std::vector<double>> Matrix(const json& j, const std::string& path) {
  std::vector<std::vector<double>> out;
  for (size_t i = 0; i < Array(j, path).size(); ++i) out.push_back(Numbers(j[i], At(path, i)));
  return out;
}

std::vector<std::string> Strings(const json& j, const std::string& path) {
  std::vector<std::string> out;
  for (size_t i = 0; i < Array(j, path).size(); ++i) out.push_back(String(j[i], At(path, i)));
  return out;
}

std::vector<size_t> Indices(const json& j, const std::string& path) {
  std::vector<size_t> out;
  for (size_t i = 0; i < Array(j, path).size(); ++i) {
    out.push_back(static_cast<size_t>(Unsigned(j[i], At(path, i))));
  }
  return out;
}

// Sorted, duplicate-free indices below n.
Subset SubsetFromJson(const json& j, size_t n, const std::string& path) {
  const std::vector<size_t> idx = Indices(j, path);
  for (size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= n) {
      Fail(At(path, i), "index " + std::to_string(idx[i]) + " is outside the ground set of size " +
                            std::to_string(n));
    }
    if (i > 0 && idx[i] <= idx[i - 1]) Fail(At(path, i), "indices must be strictly increasing");
  }
  return Subset::FromIndices(n, idx);
}

json SubsetToJson(const Subset& s) { return s.ToIndices(); }

FunctionSpec ParamsToSpec(Family family, const json& p, size_t n, const std::string& path) {
  switch (family) {
    case Family::kModular:
      CheckKeys(p, path, {"w"});
      return MakeModularSpec(Numbers(Require(p, path, "w"), Join(path, "w")));
    case Family::kSetCover: {
      CheckKeys(p, path, {"gamma", "concept_weights"});
      const std::string gpath = Join(path, "gamma");
      const json& g = Array(Require(p, path, "gamma"), gpath);
      std::vector<std::vector<size_t>> gamma;
      for (size_t i = 0; i < g.size(); ++i) gamma.push_back(Indices(g[i], At(gpath, i)));
      return MakeSetCoverSpec(std::move(gamma), Numbers(Require(p, path, "concept_weights"),
                                                        Join(path, "concept_weights")));
    }
    case Family::kProbSetCover:
      CheckKeys(p, path, {"p", "concept_weights"});
      return MakeProbSetCoverSpec(
          Matrix(Require(p, path, "p"), Join(path, "p")),
          Numbers(Require(p, path, "concept_weights"), Join(path, "concept_weights")));
    case Family::kFacilityLocation: {
      CheckKeys(p, path, {"kernel", "diagonal_is_one"});
      const json* d = Optional(p, "diagonal_is_one");
      return MakeFacilityLocationSpec(Matrix(Require(p, path, "kernel"), Join(path, "kernel")),
                                      d ? Bool(*d, Join(path, "diagonal_is_one")) : true);
    }
    case Family::kGraphCut: {
      CheckKeys(p, path, {"kernel", "lambda", "diagonal_is_one"});
      const json* d = Optional(p, "diagonal_is_one");
      const json* l = Optional(p, "lambda");
      return MakeGraphCutSpec(Matrix(Require(p, path, "kernel"), Join(path, "kernel")),
                              l ? Number(*l, Join(path, "lambda")) : 2.0,
                              d ? Bool(*d, Join(path, "diagonal_is_one")) : false);
    }
    case Family::kTruncation:
      CheckKeys(p, path, {"cap"});
      return MakeTruncationSpec(n, static_cast<size_t>(Unsigned(Require(p, path, "cap"),
                                                                Join(path, "cap"))));
    case Family::kConcavePower:
      CheckKeys(p, path, {"w", "exponent"});
      return MakeConcavePowerSpec(Numbers(Require(p, path, "w"), Join(path, "w")),
                                  Number(Require(p, path, "exponent"), Join(path, "exponent")));
    case Family::kMixture:
      break;
  }
  Fail(path, "unsupported family");
}

json SpecParams(const FunctionSpec& spec) {
  return std::visit(
      [&](const auto& p) -> json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, ModularWeights>) {
          return {{"w", p.w}};
        } else if constexpr (std::is_same_v<T, CoverageMap>) {
          return {{"gamma", p.gamma}, {"concept_weights", p.concept_weights}};
        } else if constexpr (std::is_same_v<T, ProbCoverageMatrix>) {
          return {{"p", p.p}, {"concept_weights", p.concept_weights}};
        } else if constexpr (std::is_same_v<T, FacilityLocationParams>) {
          return {{"kernel", p.kernel.s}, {"diagonal_is_one", p.kernel.diagonal_is_one}};
        } else if constexpr (std::is_same_v<T, GraphCutParams>) {
          return {{"kernel", p.kernel.s},
                  {"lambda", p.lambda_gc},
                  {"diagonal_is_one", p.kernel.diagonal_is_one}};
        } else if constexpr (std::is_same_v<T, TruncationRank>) {
          return {{"cap", p.cap}};
        } else if constexpr (std::is_same_v<T, ConcavePowerModular>) {
          return {{"w", p.w}, {"exponent", p.exponent}};
        } else {
          return json::object();
        }
      },
      spec.params);
}

template <typename Enum>
Enum NamedChoice(const json& j, const std::string& path, std::initializer_list<Enum> options,
                 std::string (*name)(Enum)) {
  const std::string s = String(j, path);
  std::string all;
  for (Enum e : options) {
    if (name(e) == s) return e;
    all += (all.empty() ? "" : ", ") + name(e);
  }
  Fail(path, "unknown value \"" + s + "\" (expected one of: " + all + ")");
}

std::string SetName(const json& j, const std::string& path, const std::map<std::string, Subset>& sets) {
  const std::string s = String(j, path);
  if (!sets.count(s)) Fail(path, "refers to undefined set \"" + s + "\"");
  return s;
}

std::vector<std::string> SetNames(const json& j, const std::string& path,
                                  const std::map<std::string, Subset>& sets) {
  std::vector<std::string> out;
  for (size_t i = 0; i < Array(j, path).size(); ++i) out.push_back(SetName(j[i], At(path, i), sets));
  return out;
}

MeasureTask ParseMeasure(const json& p, const std::string& path,
                         const std::map<std::string, Subset>& sets) {
  CheckKeys(p, path, {"measure", "sets", "condition"});
  MeasureTask t;
  const std::string mpath = Join(path, "measure");
  const std::string name = String(Require(p, path, "measure"), mpath);
  const auto kind = ParseMeasureKind(name);
  if (!kind) {
    Fail(mpath, "unknown measure \"" + name +
                    "\" (expected info, cond_gain, mi, cmi, multi_mi, total_corr, "
                    "cond_total_corr or var_info)");
  }
  t.measure = *kind;
  t.sets = SetNames(Require(p, path, "sets"), Join(path, "sets"), sets);
  if (const json* c = Optional(p, "condition")) t.condition = SetName(*c, Join(path, "condition"), sets);
  // Arity and conditioning rules live in the measure layer; run them now so
  // that a bad request is reported as a validation error with a field name.
  MeasureRequest probe{t.measure, std::vector<Subset>(t.sets.size(), Subset(1)), std::nullopt};
  if (t.condition) probe.condition = Subset(1);
  try {
    ComputeMeasure(ValueOracle(std::make_shared<LambdaSetFunction>(
                       1, [](const Subset&) { return 0.0; })),
                   probe);
  } catch (const ArgumentError& e) {
    Fail(path, e.what());
  }
  return t;
}

CheckTask ParseCheck(const json& p, const std::string& path,
                     const std::map<std::string, Subset>& sets) {
  CheckKeys(p, path, {"property", "at"});
  CheckTask t;
  const std::string ppath = Join(path, "property");
  t.property = String(Require(p, path, "property"), ppath);
  if (t.property != "curvature" && !ParseProperty(t.property)) {
    Fail(ppath, "unknown property \"" + t.property +
                    "\" (expected normalized, monotone, submodular, second_order_supermodular, "
                    "pseudo_metric or curvature)");
  }
  if (const json* at = Optional(p, "at")) {
    if (t.property != "curvature") Fail(Join(path, "at"), "only allowed with property curvature");
    t.at = SetNames(*at, Join(path, "at"), sets);
  }
  return t;
}

SelectTask ParseSelect(const json& p, const std::string& path,
                       const std::map<std::string, Subset>& sets, size_t n) {
  CheckKeys(p, path, {"driver", "k", "seed", "lazy", "lambda", "query", "privacy", "g"});
  SelectTask t;
  const std::string dpath = Join(path, "driver");
  const std::string name = String(Require(p, path, "driver"), dpath);
  const auto driver = ParseSelectDriver(name);
  if (!driver) {
    Fail(dpath, "unknown driver \"" + name +
                    "\" (expected greedy, randomized_greedy, smi_max, cg_max, csmi_max, "
                    "nsmi_max or symmetric_mi)");
  }
  t.driver = *driver;
  t.k = static_cast<size_t>(Unsigned(Require(p, path, "k"), Join(path, "k")));
  if (t.k < 1 || t.k > n) Fail(Join(path, "k"), "must lie in [1, " + std::to_string(n) + "]");
  if (const json* s = Optional(p, "seed")) t.seed = Unsigned(*s, Join(path, "seed"));
  if (const json* l = Optional(p, "lazy")) t.lazy = Bool(*l, Join(path, "lazy"));
  if (const json* l = Optional(p, "lambda")) {
    t.lambda = Number(*l, Join(path, "lambda"));
    if (t.lambda < 0) Fail(Join(path, "lambda"), "must be non-negative");
  }
  if (const json* q = Optional(p, "query")) t.query = SetName(*q, Join(path, "query"), sets);
  if (const json* q = Optional(p, "privacy")) t.privacy = SetName(*q, Join(path, "privacy"), sets);
  if (const json* g = Optional(p, "g")) t.g = FunctionSpecFromJson(*g, n, Join(path, "g"));

  const bool summarization = t.driver == SelectDriver::kSmi || t.driver == SelectDriver::kCg ||
                             t.driver == SelectDriver::kCsmi || t.driver == SelectDriver::kNsmi;
  const bool wants_query = t.driver == SelectDriver::kSmi || t.driver == SelectDriver::kCsmi;
  const bool wants_privacy = t.driver == SelectDriver::kCg || t.driver == SelectDriver::kCsmi ||
                             t.driver == SelectDriver::kNsmi;
  if (wants_query && !t.query) Fail(Join(path, "query"), "required by driver " + name);
  if (!wants_query && t.query) Fail(Join(path, "query"), "not used by driver " + name);
  if (wants_privacy && !t.privacy) Fail(Join(path, "privacy"), "required by driver " + name);
  if (!wants_privacy && t.privacy) Fail(Join(path, "privacy"), "not used by driver " + name);
  if (!summarization && (t.g || t.lambda != 0.0)) {
    Fail(path, "g and lambda are only used by the summarization drivers");
  }
  return t;
}

PartitionTask ParsePartition(const json& p, const std::string& path, size_t n) {
  CheckKeys(p, path, {"objective", "direction", "k", "seed"});
  PartitionTask t;
  t.objective = NamedChoice(Require(p, path, "objective"), Join(path, "objective"),
                            {PartitionObjective::kTotalCorrelation, PartitionObjective::kMultisetMi},
                            &PartitionObjectiveName);
  if (const json* d = Optional(p, "direction")) {
    t.direction = NamedChoice(*d, Join(path, "direction"), {Direction::kMax, Direction::kMin},
                              &DirectionName);
  }
  if (t.objective == PartitionObjective::kMultisetMi && t.direction == Direction::kMin) {
    Fail(Join(path, "direction"), "multiset_mi partitions are only maximized");
  }
  t.k = static_cast<size_t>(Unsigned(Require(p, path, "k"), Join(path, "k")));
  if (t.k < 2 || t.k > n) Fail(Join(path, "k"), "must lie in [2, " + std::to_string(n) + "]");
  if (const json* s = Optional(p, "seed")) t.seed = Unsigned(*s, Join(path, "seed"));
  return t;
}

MetricMinTask ParseMetricMin(const json& p, const std::string& path,
                             const std::map<std::string, Subset>& sets) {
  CheckKeys(p, path, {"anchors", "mode"});
  MetricMinTask t;
  t.anchors = SetNames(Require(p, path, "anchors"), Join(path, "anchors"), sets);
  if (t.anchors.empty()) Fail(Join(path, "anchors"), "needs at least one set");
  if (const json* m = Optional(p, "mode")) {
    t.mode = NamedChoice(*m, Join(path, "mode"), {MetricMode::kExact, MetricMode::kSurrogate},
                         &MetricModeName);
  }
  return t;
}

json TaskParams(const Task& task) {
  return std::visit(
      [](const auto& t) -> json {
        using T = std::decay_t<decltype(t)>;
        json p = json::object();
        if constexpr (std::is_same_v<T, MeasureTask>) {
          p["measure"] = MeasureKindName(t.measure);
          p["sets"] = t.sets;
          if (t.condition) p["condition"] = *t.condition;
        } else if constexpr (std::is_same_v<T, CheckTask>) {
          p["property"] = t.property;
          if (!t.at.empty()) p["at"] = t.at;
        } else if constexpr (std::is_same_v<T, SelectTask>) {
          p["driver"] = SelectDriverName(t.driver);
          p["k"] = t.k;
          p["seed"] = t.seed;
          p["lazy"] = t.lazy;
          if (t.lambda != 0.0) p["lambda"] = t.lambda;
          if (t.query) p["query"] = *t.query;
          if (t.privacy) p["privacy"] = *t.privacy;
          if (t.g) p["g"] = FunctionSpecToJson(*t.g);
        } else if constexpr (std::is_same_v<T, PartitionTask>) {
          p["objective"] = PartitionObjectiveName(t.objective);
          p["direction"] = DirectionName(t.direction);
          p["k"] = t.k;
          p["seed"] = t.seed;
        } else {
          p["anchors"] = t.anchors;
          p["mode"] = MetricModeName(t.mode);
        }
        return p;
      },
      task);
}

}  // namespace

std::string SelectDriverName(SelectDriver d) {
  switch (d) {
    case SelectDriver::kGreedy: return "greedy";
    case SelectDriver::kRandomizedGreedy: return "randomized_greedy";
    case SelectDriver::kSmi: return "smi_max";
    case SelectDriver::kCg: return "cg_max";
    case SelectDriver::kCsmi: return "csmi_max";
    case SelectDriver::kNsmi: return "nsmi_max";
    case SelectDriver::kSymmetricMi: return "symmetric_mi";
  }
  return "unknown";
}

std::optional<SelectDriver> ParseSelectDriver(const std::string& name) {
  for (SelectDriver d : {SelectDriver::kGreedy, SelectDriver::kRandomizedGreedy, SelectDriver::kSmi,
                         SelectDriver::kCg, SelectDriver::kCsmi, SelectDriver::kNsmi,
                         SelectDriver::kSymmetricMi}) {
    if (SelectDriverName(d) == name) return d;
  }
  return std::nullopt;
}

std::string TaskKindName(const Task& task) {
  static const char* const kNames[] = {"measure", "check", "select", "partition", "metric_min"};
  return kNames[task.index()];
}

FunctionSpec FunctionSpecFromJson(const json& j, size_t ground_size, const std::string& path) {
  const std::string fpath = Join(path, "family");
  const std::string name = String(Require(j, path, "family"), fpath);
  Family family;
  if (!ParseFamily(name, &family)) {
    Fail(fpath, "unknown family \"" + name +
                    "\" (expected modular, set_cover, prob_set_cover, facility_location, "
                    "graph_cut, truncation, concave_power or mixture)");
  }
  FunctionSpec spec;
  if (family == Family::kMixture) {
    CheckKeys(j, path, {"family", "components"});
    const std::string cpath = Join(path, "components");
    const json& comps = Array(Require(j, path, "components"), cpath);
    if (comps.empty()) Fail(cpath, "a mixture needs at least one component");
    std::vector<double> coefs;
    std::vector<FunctionSpec> parts;
    for (size_t i = 0; i < comps.size(); ++i) {
      const std::string ipath = At(cpath, i);
      CheckKeys(comps[i], ipath, {"weight", "function"});
      coefs.push_back(Number(Require(comps[i], ipath, "weight"), Join(ipath, "weight")));
      parts.push_back(
          FunctionSpecFromJson(Require(comps[i], ipath, "function"), ground_size, Join(ipath, "function")));
    }
    spec = MakeMixtureSpec(std::move(coefs), std::move(parts));
  } else {
    CheckKeys(j, path, {"family", "params"});
    spec = ParamsToSpec(family, Require(j, path, "params"), ground_size, Join(path, "params"));
  }
  if (spec.ground_size != ground_size) {
    Fail(path, name + " parameters describe " + std::to_string(spec.ground_size) +
                   " elements but ground_set.size is " + std::to_string(ground_size));
  }
  try {
    ValidateSpec(spec);
  } catch (const ArgumentError& e) {
    Fail(path, e.what());
  }
  return spec;
}

json FunctionSpecToJson(const FunctionSpec& spec) {
  json j;
  j["family"] = FamilyName(spec.family());
  if (const auto* m = std::get_if<Mixture>(&spec.params)) {
    json comps = json::array();
    for (size_t i = 0; i < m->components.size(); ++i) {
      comps.push_back({{"weight", m->coefficients[i]},
                       {"function", FunctionSpecToJson(m->components[i])}});
    }
    j["components"] = std::move(comps);
  } else {
    j["params"] = SpecParams(spec);
  }
  return j;
}

Instance InstanceFromJson(const json& doc) {
  CheckKeys(doc, "document", {"schema_version", "ground_set", "function", "sets", "task"});
  const uint64_t version = Unsigned(Require(doc, "document", "schema_version"), "schema_version");
  if (version != kSchemaVersion) {
    Fail("schema_version", "unsupported version " + std::to_string(version) + " (expected " +
                               std::to_string(kSchemaVersion) + ")");
  }
  Instance inst;
  const json& gs = Require(doc, "document", "ground_set");
  CheckKeys(gs, "ground_set", {"size", "labels"});
  inst.ground_size = static_cast<size_t>(Unsigned(Require(gs, "ground_set", "size"), "ground_set.size"));
  if (inst.ground_size == 0) Fail("ground_set.size", "must be at least 1");
  if (const json* labels = Optional(gs, "labels")) {
    inst.labels = Strings(*labels, "ground_set.labels");
    if (inst.labels.size() != inst.ground_size) {
      Fail("ground_set.labels", "has " + std::to_string(inst.labels.size()) +
                                    " entries for a ground set of size " +
                                    std::to_string(inst.ground_size));
    }
  }
  inst.function = FunctionSpecFromJson(Require(doc, "document", "function"), inst.ground_size, "function");

  if (const json* sets = Optional(doc, "sets")) {
    RequireObject(*sets, "sets");
    for (auto it = sets->begin(); it != sets->end(); ++it) {
      inst.sets.emplace(it.key(), SubsetFromJson(it.value(), inst.ground_size, Join("sets", it.key())));
    }
  }

  const json& task = Require(doc, "document", "task");
  CheckKeys(task, "task", {"kind", "params"});
  const std::string kind = String(Require(task, "task", "kind"), "task.kind");
  const json& params = Require(task, "task", "params");
  const std::string path = "task.params";
  if (kind == "measure") {
    inst.task = ParseMeasure(params, path, inst.sets);
  } else if (kind == "check") {
    inst.task = ParseCheck(params, path, inst.sets);
  } else if (kind == "select") {
    inst.task = ParseSelect(params, path, inst.sets, inst.ground_size);
  } else if (kind == "partition") {
    inst.task = ParsePartition(params, path, inst.ground_size);
  } else if (kind == "metric_min") {
    inst.task = ParseMetricMin(params, path, inst.sets);
  } else {
    Fail("task.kind", "unknown task \"" + kind +
                          "\" (expected measure, check, select, partition or metric_min)");
  }
  return inst;
}

Instance ParseInstance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line and column.
    size_t line = 1, column = 1;
    const size_t end = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    const size_t colon = what.find(": ");
    if (colon != std::string::npos) what = what.substr(colon + 2);
    throw InstanceError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                        ": malformed JSON (" + what + ")");
  }
  return InstanceFromJson(doc);
}

json InstanceToJson(const Instance& inst) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["ground_set"]["size"] = inst.ground_size;
  if (!inst.labels.empty()) doc["ground_set"]["labels"] = inst.labels;
  doc["function"] = FunctionSpecToJson(inst.function);
  doc["sets"] = json::object();
  for (const auto& [name, s] : inst.sets) doc["sets"][name] = SubsetToJson(s);
  doc["task"]["kind"] = TaskKindName(inst.task);
  doc["task"]["params"] = TaskParams(inst.task);
  return doc;
}

std::string SerializeInstance(const Instance& instance) {
  return FormatJson(InstanceToJson(instance));
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InstanceError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

void Format(const json& j, int indent, std::string& out) {
  const std::string pad(static_cast<size_t>(indent) + 2, ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += pad + json(it.key()).dump() + ": ";
      Format(it.value(), indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<size_t>(indent), ' ') + "}";
  } else if (j.is_array() && !j.empty()) {
    const bool flat = std::none_of(j.begin(), j.end(),
                                   [](const json& e) { return e.is_structured() && !e.empty(); });
    if (flat) {
      out += "[";
      for (size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
      out += "]";
      return;
    }
    out += "[\n";
    for (size_t i = 0; i < j.size(); ++i) {
      out += pad;
      Format(j[i], indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<size_t>(indent), ' ') + "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string FormatJson(const json& j) {
  std::string out;
  Format(j, 0, out);
  return out + "\n";
}

}  // namespace subinfo::cli
