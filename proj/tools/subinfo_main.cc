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

// subinfo: run instance files, generate fixtures, canonicalize instances.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "subinfo/cli/generate.h"
#include "subinfo/cli/instance.h"
#include "subinfo/cli/report.h"
#include "subinfo/cli/runner.h"

namespace {

using namespace subinfo::cli;

int Emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f || !(f << text)) {
    std::cerr << "subinfo: error: cannot write " << out << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Submodular information measures: evaluate, certify and optimize."};
  app.set_version_flag("--version", ToolVersion());
  app.require_subcommand(1);

  // run
  std::string instance_path, out_path;
  std::optional<uint64_t> seed_override;
  std::string guard = "verify";
  bool closed = false, generic = false, both = false;
  size_t threads = 0;
  CLI::App* run = app.add_subcommand("run", "Run the task in an instance file and print a report");
  run->add_option("instance", instance_path, "Instance JSON file")->required();
  run->add_option("--out", out_path, "Write the report here instead of standard output");
  run->add_option("--seed-override", seed_override, "Replace the seed of select/partition tasks");
  run->add_option("--guard", guard, "Hypothesis guard: trust, verify or unchecked")
      ->check(CLI::IsMember({"trust", "verify", "unchecked"}));
  auto* c = run->add_flag("--closed-form", closed, "Require the family closed form (measure tasks)");
  auto* g = run->add_flag("--generic", generic, "Evaluate everything through oracle calls");
  auto* b = run->add_flag("--both", both, "Run both paths; exit 3 if they disagree beyond 1e-9");
  c->excludes(g)->excludes(b);
  g->excludes(b);
  run->add_option("--threads", threads, "Worker threads (0: SMI_THREADS, else all cores)");

  // generate
  std::string kind_name, gen_out;
  GenerateParams gp;
  std::optional<double> off_diagonal;
  CLI::App* gen = app.add_subcommand("generate", "Print a seeded ground_set/function fragment");
  gen->add_option("kind", kind_name, "kernel, coverage or prob-cover")
      ->required()
      ->check(CLI::IsMember({"kernel", "coverage", "prob-cover"}));
  gen->add_option("--n", gp.n, "Ground set size")->required();
  gen->add_option("--seed", gp.seed, "Random seed");
  gen->add_option("--off-diagonal", off_diagonal, "kernel: constant off-diagonal similarity");
  gen->add_option("--family", gp.family, "kernel: facility_location or graph_cut");
  gen->add_option("--lambda", gp.lambda, "kernel: graph-cut lambda");
  gen->add_option("--concepts", gp.concepts, "coverage/prob-cover: number of concepts (default n)");
  gen->add_option("--multiplicity", gp.multiplicity, "coverage: elements covering each concept");
  gen->add_option("--density", gp.density, "prob-cover: fraction of non-zero probabilities");
  gen->add_option("--out", gen_out, "Output file");

  // validate
  std::string validate_path, validate_out;
  CLI::App* val = app.add_subcommand("validate", "Parse an instance and print its canonical form");
  val->add_option("instance", validate_path, "Instance JSON file")->required();
  val->add_option("--out", validate_out, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  if (*run) {
    RunOptions options;
    options.seed_override = seed_override;
    options.guard = *subinfo::ParseGuardMode(guard);
    options.threads = threads;
    options.path = closed ? PathMode::kClosedForm
                 : generic ? PathMode::kGeneric
                 : both    ? PathMode::kBoth
                           : PathMode::kAuto;
    std::string text;
    try {
      text = ReadFile(instance_path);
    } catch (const std::exception& e) {
      std::cerr << "subinfo: error: " << e.what() << "\n";
      return kExitInvalid;
    }
    const RunResult r = RunText(text, options);
    int code = r.exit_code;
    if (!r.report.is_null()) {
      const int write = Emit(RenderReport(r.report), out_path);
      if (code == kExitOk) code = write;
    }
    if (!r.error.empty()) std::cerr << "subinfo: error: " << r.error << "\n";
    return code;
  }

  if (*gen) {
    gp.off_diagonal = off_diagonal;
    try {
      return Emit(FormatJson(Generate(*ParseGenerateKind(kind_name), gp)), gen_out);
    } catch (const std::exception& e) {
      std::cerr << "subinfo: error: " << e.what() << "\n";
      return kExitInvalid;
    }
  }

  try {
    return Emit(SerializeInstance(ParseInstance(ReadFile(validate_path))), validate_out);
  } catch (const std::exception& e) {
    std::cerr << "subinfo: error: " << e.what() << "\n";
    return ExitCodeFor(e);
  }
}
