// Copyright 2026 The geolaw Authors.
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "geolaw/corpus.hpp"
#include "geolaw/curves.hpp"
#include "geolaw/stats.hpp"

namespace geolaw::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kEmptyDimension = 2;  // fit: too few rows
inline constexpr int kFitFailure = 3;

struct AnalyzeArgs {
  std::vector<std::string> inputs;
  std::string format = "conll";  // conll | jsonl
  std::vector<Dimension> dims{Dimension::quantity, Dimension::length, Dimension::distance};
  UnitMode unit = UnitMode::character;
  std::vector<Family> families{Family::gamma_type, Family::zipf, Family::gaussian};
  bool cutoff = false;
  std::string out = ".";
  std::set<std::string> types;
  bool strict = false;
  std::string doc_separator = "-DOCSTART-";
  bool fold_case = false;
  bool free_amplitude = false;
  bool n_total = false;  // cutoff N = total observations instead of distinct objects
  bool per_file = false;
};

struct SimulateArgs {
  double p = 0.5;
  std::uint64_t tokens = 1000000;
  std::uint64_t k = 1;
  std::uint64_t seed = 42;
  std::string out = ".";
};

struct FitArgs {
  std::string series;
  std::string family = "all";
  bool free_amplitude = false;
};

int cmd_analyze(const AnalyzeArgs& args, std::ostream& err);
int cmd_simulate(const SimulateArgs& args, std::ostream& err);
int cmd_fit(const FitArgs& args, std::ostream& out, std::ostream& err);

// Parses argv and dispatches. Honors GEOLAW_THREADS.
int run(int argc, char** argv);

}  // namespace geolaw::cli
