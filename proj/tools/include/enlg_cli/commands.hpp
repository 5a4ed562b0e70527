// Copyright 2026 The enlg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "enlg_cli/game_io.hpp"

namespace enlg::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kInvariantError = 3,
  kSolverError = 4,
  kSizeCapError = 5,
};

struct ResultRecord {
  std::string method;
  double value = 0.0;
  std::string game;
  std::optional<std::string> level;
  std::optional<int> restarts;
  std::optional<std::uint64_t> seed;
  std::optional<int> repetitions;
  nlohmann::json certificate = nlohmann::json::object();
  double wall_time = 0.0;

  nlohmann::json to_json() const;
};

struct MethodOptions {
  std::string method = "unentangled";
  std::string level = "1";
  int restarts = 4;
  std::uint64_t seed = 0;
  int threads = 1;
  int bob_dim = 0;
  int repetitions = 1;
  int max_iter = 200;  // interior-point iteration limit per SDP
  std::ostream* log = nullptr;
};

// Runs one computation. For tfkw/spr the closed form is evaluated on the base
// game with `repetitions`; other methods expect the game already repeated.
ResultRecord compute(const AnyGame& game, const AnyGame& base, const MethodOptions& opts);

// Size cap used by `repeat`, from ENLG_SIZE_CAP when set.
long double repetition_size_cap();

// Entry point shared by the executable and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace enlg::cli
