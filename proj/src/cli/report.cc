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

#include "subinfo/cli/report.h"

#include <openssl/evp.h>

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "subinfo/cli/instance.h"
#include "subinfo/optimize/guard.h"

#ifndef SUBINFO_VERSION
#define SUBINFO_VERSION "0.0.0"
#endif

namespace subinfo::cli {
namespace {

using nlohmann::json;

json Num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json Indices(const Subset& s) { return s.ToIndices(); }

}  // namespace

std::string ToolVersion() { return SUBINFO_VERSION; }

std::string Sha256Digest(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 digest failed");
  }
  std::string hex = "sha256:";
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof(buf), "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

json ToJson(const MeasureResult& r) {
  return {{"measure", MeasureKindName(r.measure)},
          {"value", Num(r.value)},
          {"path", ComputePathName(r.path)},
          {"oracle_calls", r.oracle_calls}};
}

json ToJson(const PropertyReport& r) {
  json j = {{"property", PropertyName(r.property)},
            {"verdict", VerdictName(r.verdict)},
            {"pairs_checked", r.pairs_checked},
            {"worst_margin", Num(r.worst_margin)},
            {"witness", nullptr}};
  if (r.witness) {
    json sets = json::array(), values = json::array();
    for (const Subset& s : r.witness->sets) sets.push_back(Indices(s));
    for (double v : r.witness->values) values.push_back(Num(v));
    j["witness"] = {{"sets", sets},
                    {"elements", r.witness->elements},
                    {"values", values},
                    {"margin", Num(r.witness->margin)},
                    {"description", r.witness->description}};
  }
  return j;
}

json ToJson(const CurvatureReport& r) {
  auto pairs = [](const std::vector<std::pair<Subset, double>>& v) {
    json out = json::array();
    for (const auto& [s, k] : v) out.push_back({{"set", Indices(s)}, {"value", Num(k)}});
    return out;
  };
  return {{"kappa", Num(r.kappa_global)},
          {"kappa_at", pairs(r.kappa_at)},
          {"symmetric_kappa_at", pairs(r.sym_kappa_at)},
          {"dummies", r.dummies}};
}

json ToJson(const SelectionReport& r) {
  json trace = json::array();
  for (const GainStep& s : r.gain_trace) {
    trace.push_back({{"element", s.element ? json(*s.element) : json(nullptr)}, {"gain", Num(s.gain)}});
  }
  json params = json::array();
  for (const auto& [name, v] : r.parameters) params.push_back({{"name", name}, {"value", Num(v)}});
  json j = {{"driver", r.driver},
            {"chosen", Indices(r.chosen)},
            {"objective_value", Num(r.objective_value)},
            {"gain_trace", trace},
            {"guarantee", nullptr},
            {"oracle_calls", r.oracle_calls},
            {"seed", r.seed},
            {"guard", GuardOutcomeName(r.guard)},
            {"parameters", params}};
  if (r.guarantee) {
    j["guarantee"] = {{"factor", Num(r.guarantee->factor)},
                      {"slack", Num(r.guarantee->slack)},
                      {"vacuous", r.guarantee->vacuous},
                      {"description", r.guarantee->description}};
  }
  return j;
}

json ToJson(const PartitionReport& r) {
  json blocks = json::array();
  for (const Subset& b : r.blocks) blocks.push_back(Indices(b));
  return {{"objective_kind", PartitionObjectiveName(r.objective_kind)},
          {"direction", DirectionName(r.direction)},
          {"blocks", blocks},
          {"objective", Num(r.objective)},
          {"oracle_calls", r.oracle_calls},
          {"seed", r.seed},
          {"local_search_moves", r.local_search_moves},
          {"guard", GuardOutcomeName(r.guard)}};
}

std::string RenderReport(const json& report) { return FormatJson(report); }

json StripVolatile(json report) {
  report.erase("duration_ms");
  return report;
}

}  // namespace subinfo::cli
