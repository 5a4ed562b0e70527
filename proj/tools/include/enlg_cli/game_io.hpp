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

#include <filesystem>
#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "enlg/games.hpp"

namespace enlg::cli {

inline constexpr const char* kSchemaVersion = "1.0";

// Malformed file: unreadable, bad JSON, missing or mistyped fields.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using AnyGame = std::variant<ExtendedGame, MonogamyGame>;

// Structural parse only: shapes and keys are checked, game invariants are not.
AnyGame parse_game(const nlohmann::json& j);
// Parses and enforces the game invariants; throws InvariantViolation.
AnyGame load_game(const std::filesystem::path& path, double tol = 1e-9);
AnyGame load_game_unchecked(const std::filesystem::path& path);

nlohmann::json to_json(const ExtendedGame& g);
nlohmann::json to_json(const MonogamyGame& g);
nlohmann::json to_json(const AnyGame& g);
// One line per operator.
std::string format_game(const nlohmann::json& j);
void save_game(const std::filesystem::path& path, const AnyGame& g);

nlohmann::json matrix_to_json(const ComplexMat& m);
ComplexMat matrix_from_json(const nlohmann::json& j, int rows, int cols, const std::string& where);

ValidationReport validate_game(const AnyGame& g, double tol = 1e-9);

}  // namespace enlg::cli
