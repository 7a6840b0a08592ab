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

#include "subinfo/cli/runner.h"

#include <chrono>
#include <cmath>
#include <memory>
#include <vector>

#include "subinfo/analysis/curvature.h"
#include "subinfo/analysis/properties.h"
#include "subinfo/cli/report.h"
#include "subinfo/core/error.h"
#include "subinfo/core/measures.h"
#include "subinfo/functions/family_function.h"
#include "subinfo/optimize/greedy.h"
#include "subinfo/optimize/metric.h"
#include "subinfo/optimize/partition.h"
#include "subinfo/optimize/summarization.h"

namespace subinfo::cli {
namespace {

using nlohmann::json;

struct TaskOutput {
  json result;
  double headline = 0.0;
  std::optional<uint64_t> seed;
  std::string path = "generic";
};

// Builds the oracles for one execution and keeps them so the total number of
// evaluations can be reported.
class OracleSet {
 public:
  explicit OracleSet(bool generic) : generic_(generic) {}

  std::shared_ptr<const ValueOracle> Make(const FunctionSpec& spec) {
    std::shared_ptr<const SetFunction> fn = MakeFunction(spec);
    if (generic_) {
      // Same values and claims, but no closed forms reachable by downcast.
      auto inner = fn;
      fn = std::make_shared<LambdaSetFunction>(
          inner->ground_size(), [inner](const Subset& s) { return inner->Evaluate(s); },
          inner->claims(), inner->name());
    }
    auto oracle = std::make_shared<ValueOracle>(fn);
    all_.push_back(oracle);
    return oracle;
  }

  uint64_t evaluations() const {
    uint64_t total = 0;
    for (const auto& o : all_) total += o->evaluations();
    return total;
  }

 private:
  bool generic_;
  std::vector<std::shared_ptr<const ValueOracle>> all_;
};

std::vector<Subset> Resolve(const Instance& inst, const std::vector<std::string>& names) {
  std::vector<Subset> out;
  for (const std::string& n : names) out.push_back(inst.Set(n));
  return out;
}

TaskOutput RunMeasure(const Instance& inst, const MeasureTask& t, OracleSet& oracles, bool generic,
                      bool strict) {
  auto f = oracles.Make(inst.function);
  MeasureRequest request{t.measure, Resolve(inst, t.sets), std::nullopt};
  if (t.condition) request.condition = inst.Set(*t.condition);
  std::optional<MeasureResult> r;
  if (!generic) {
    const auto& family = static_cast<const FamilyFunction&>(f->function());
    try {
      r = family.ClosedFormMeasure(request);
    } catch (const PreconditionError&) {
      if (strict) throw;
    }
    if (!r && strict) {
      throw InstanceError("task.params.measure: no closed form of " + MeasureKindName(t.measure) +
                          " applies to family " + FamilyName(inst.function.family()));
    }
  }
  if (!r) r = ComputeMeasure(*f, request);
  TaskOutput out;
  out.result = ToJson(*r);
  out.headline = r->value;
  out.path = ComputePathName(r->path);
  return out;
}

TaskOutput RunCheck(const Instance& inst, const CheckTask& t, OracleSet& oracles,
                    const RunOptions& options) {
  auto f = oracles.Make(inst.function);
  TaskOutput out;
  if (t.property == "curvature") {
    const std::vector<Subset> at = Resolve(inst, t.at);
    const CurvatureReport r = ComputeCurvature(*f, at);
    out.result = ToJson(r);
    out.result["at"] = t.at;
    out.headline = r.kappa_global;
    return out;
  }
  CheckOptions opts;
  opts.threads = options.threads;
  const PropertyReport r = CheckProperty(*f, *ParseProperty(t.property), opts);
  out.result = ToJson(r);
  out.headline = r.worst_margin;
  return out;
}

TaskOutput RunSelect(const Instance& inst, const SelectTask& t, OracleSet& oracles,
                     const RunOptions& options) {
  auto f = oracles.Make(inst.function);
  OraclePtr g = t.g ? oracles.Make(*t.g) : nullptr;
  OptimizerConfig cfg;
  cfg.budget = t.k;
  cfg.seed = options.seed_override.value_or(t.seed);
  cfg.lazy = t.lazy;
  cfg.guard = options.guard;
  cfg.threads = options.threads;
  const Subset none(inst.ground_size);
  const Subset& q = t.query ? inst.Set(*t.query) : none;
  const Subset& p = t.privacy ? inst.Set(*t.privacy) : none;
  SelectionReport r;
  switch (t.driver) {
    case SelectDriver::kGreedy: r = GreedyMax(*f, cfg); break;
    case SelectDriver::kRandomizedGreedy: r = RandomizedGreedyMax(*f, cfg); break;
    case SelectDriver::kSmi: r = SmiMax(f, g, q, t.lambda, cfg); break;
    case SelectDriver::kCg: r = CgMax(f, g, p, t.lambda, cfg); break;
    case SelectDriver::kCsmi: r = CsmiMax(f, g, q, p, t.lambda, cfg); break;
    case SelectDriver::kNsmi: r = NsmiMax(f, g, p, t.lambda, cfg); break;
    case SelectDriver::kSymmetricMi: r = SymmetricMiSelect(f, cfg); break;
  }
  TaskOutput out;
  out.result = ToJson(r);
  out.headline = r.objective_value;
  out.seed = cfg.seed;
  return out;
}

TaskOutput RunPartition(const Instance& inst, const PartitionTask& t, OracleSet& oracles,
                        const RunOptions& options) {
  auto f = oracles.Make(inst.function);
  OptimizerConfig cfg;
  cfg.seed = options.seed_override.value_or(t.seed);
  cfg.guard = options.guard;
  cfg.threads = options.threads;
  const PartitionReport r = t.objective == PartitionObjective::kTotalCorrelation
                                ? PartitionTotalCorrelation(*f, t.k, t.direction, cfg)
                                : PartitionMultisetMiMax(*f, t.k, cfg);
  TaskOutput out;
  out.result = ToJson(r);
  out.headline = r.objective;
  out.seed = cfg.seed;
  return out;
}

TaskOutput RunMetric(const Instance& inst, const MetricMinTask& t, OracleSet& oracles,
                     const RunOptions& options) {
  auto f = oracles.Make(inst.function);
  OptimizerConfig cfg;
  cfg.guard = options.guard;
  cfg.threads = options.threads;
  const std::vector<Subset> anchors = Resolve(inst, t.anchors);
  const SelectionReport r = MinimizeMetricSum(*f, anchors, t.mode, cfg);
  TaskOutput out;
  out.result = ToJson(r);
  out.headline = r.objective_value;
  return out;
}

struct Execution {
  TaskOutput output;
  uint64_t oracle_calls = 0;
};

Execution Execute(const Instance& inst, const RunOptions& options, bool generic, bool strict) {
  OracleSet oracles(generic);
  Execution e;
  e.output = std::visit(
      [&](const auto& t) -> TaskOutput {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, MeasureTask>) {
          return RunMeasure(inst, t, oracles, generic, strict);
        } else if constexpr (std::is_same_v<T, CheckTask>) {
          return RunCheck(inst, t, oracles, options);
        } else if constexpr (std::is_same_v<T, SelectTask>) {
          return RunSelect(inst, t, oracles, options);
        } else if constexpr (std::is_same_v<T, PartitionTask>) {
          return RunPartition(inst, t, oracles, options);
        } else {
          return RunMetric(inst, t, oracles, options);
        }
      },
      inst.task);
  e.oracle_calls = oracles.evaluations();
  return e;
}

bool Agree(double a, double b, double tol) {
  if (a == b) return true;  // covers matching infinities
  if (!std::isfinite(a) || !std::isfinite(b)) return false;
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

json NumOrNull(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

std::string PathModeName(PathMode m) {
  switch (m) {
    case PathMode::kAuto: return "auto";
    case PathMode::kClosedForm: return "closed_form";
    case PathMode::kGeneric: return "generic";
    case PathMode::kBoth: return "both";
  }
  return "unknown";
}

int ExitCodeFor(const std::exception& e) {
  if (dynamic_cast<const StructuralError*>(&e)) return kExitStructural;
  if (dynamic_cast<const ResourceError*>(&e)) return kExitResource;
  return kExitInvalid;
}

RunResult RunInstance(const Instance& inst, const std::string& digest, const RunOptions& options) {
  RunResult result;
  const auto start = std::chrono::steady_clock::now();
  try {
    const bool generic = options.path == PathMode::kGeneric;
    const bool strict = options.path == PathMode::kClosedForm;
    const Execution main = Execute(inst, options, generic, strict);

    json report;
    report["schema_version"] = kReportSchemaVersion;
    report["tool"] = {{"name", "subinfo"}, {"version", ToolVersion()}};
    report["instance_digest"] = digest;
    report["task"] = TaskKindName(inst.task);
    report["path_mode"] = PathModeName(options.path);
    report["guard_mode"] = GuardModeName(options.guard);
    report["seed"] = main.output.seed ? json(*main.output.seed) : json(nullptr);
    report["oracle_calls"] = main.oracle_calls;
    report["result"] = main.output.result;

    if (options.path == PathMode::kBoth) {
      const Execution other = Execute(inst, options, true, false);
      const double a = main.output.headline, b = other.output.headline;
      const bool agree = Agree(a, b, options.both_tolerance);
      report["cross_check"] = {{"closed_form_value", NumOrNull(a)},
                               {"closed_form_path", main.output.path},
                               {"generic_value", NumOrNull(b)},
                               {"generic_oracle_calls", other.oracle_calls},
                               {"tolerance", options.both_tolerance},
                               {"agree", agree}};
      if (!agree) {
        result.exit_code = kExitDisagreement;
        result.error = "closed-form and generic paths disagree: " + json(a).dump() + " vs " +
                       json(b).dump();
      }
    }
    const auto end = std::chrono::steady_clock::now();
    report["duration_ms"] = std::chrono::duration<double, std::milli>(end - start).count();
    result.report = std::move(report);
  } catch (const std::exception& e) {
    result.exit_code = ExitCodeFor(e);
    result.error = e.what();
    result.report = nullptr;
  }
  return result;
}

RunResult RunText(const std::string& text, const RunOptions& options) {
  Instance inst;
  try {
    inst = ParseInstance(text);
  } catch (const std::exception& e) {
    RunResult r;
    r.exit_code = ExitCodeFor(e);
    r.error = e.what();
    return r;
  }
  return RunInstance(inst, Sha256Digest(text), options);
}

}  // namespace subinfo::cli
