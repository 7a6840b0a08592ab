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

#ifndef SUBINFO_CLI_REPORT_H_
#define SUBINFO_CLI_REPORT_H_

// JSON encodings of the library's result types. Field layout is documented
// in docs/report_schema.md; non-finite numbers are written as null.

#include <string>

#include "json.hpp"
#include "subinfo/analysis/curvature.h"
#include "subinfo/analysis/properties.h"
#include "subinfo/core/measures.h"
#include "subinfo/optimize/types.h"

namespace subinfo::cli {

inline constexpr int kReportSchemaVersion = 1;

std::string ToolVersion();

// "sha256:<hex>" of the given bytes.
std::string Sha256Digest(const std::string& bytes);

nlohmann::json ToJson(const MeasureResult& r);
nlohmann::json ToJson(const PropertyReport& r);
nlohmann::json ToJson(const CurvatureReport& r);
nlohmann::json ToJson(const SelectionReport& r);
nlohmann::json ToJson(const PartitionReport& r);

// Report text, laid out by FormatJson.
std::string RenderReport(const nlohmann::json& report);

// Copy of `report` without the fields that legitimately differ between runs
// (duration_ms), for determinism comparisons.
nlohmann::json StripVolatile(nlohmann::json report);

}  // namespace subinfo::cli

#endif  // SUBINFO_CLI_REPORT_H_
