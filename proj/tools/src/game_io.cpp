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

#include "enlg_cli/game_io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "enlg/errors.hpp"

namespace enlg::cli {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(where + ": missing field \"" + key + "\"");
  return j.at(key);
}

int positive_int(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_number_integer() || v.get<long long>() < 1)
    throw ParseError(where + "." + key + ": expected a positive integer");
  return v.get<int>();
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) throw ParseError(where + ": expected a number");
  return v.get<double>();
}

void check_range(int v, int n, const std::string& key) {
  if (v < 0 || v >= n) throw ParseError("operators" + key + ": index " + std::to_string(v) + " out of range");
}

ExtendedGame parse_extended(const json& j, int m) {
  const json& alpha = field(j, "alphabets", "game");
  const int qa = positive_int(alpha, "questions_a", "alphabets");
  const int qb = positive_int(alpha, "questions_b", "alphabets");
  const int aa = positive_int(alpha, "answers_a", "alphabets");
  const int ab = positive_int(alpha, "answers_b", "alphabets");
  const json& pj = field(j, "pi", "game");
  if (!pj.is_array() || static_cast<int>(pj.size()) != qa)
    throw ParseError("pi: expected " + std::to_string(qa) + " rows");
  RealMat pi(qa, qb);
  for (int x = 0; x < qa; ++x) {
    if (!pj[x].is_array() || static_cast<int>(pj[x].size()) != qb)
      throw ParseError("pi[" + std::to_string(x) + "]: expected " + std::to_string(qb) + " entries");
    for (int y = 0; y < qb; ++y)
      pi(x, y) = number(pj[x][y], "pi[" + std::to_string(x) + "][" + std::to_string(y) + "]");
  }
  ExtendedGame g(qa, qb, aa, ab, m, pi);
  const json& ops = field(j, "operators", "game");
  if (!ops.is_object()) throw ParseError("operators: expected an object");
  static const std::regex key_re(R"(\(\s*(\d+)\s*,\s*(\d+)\s*\|\s*(\d+)\s*,\s*(\d+)\s*\))");
  for (const auto& [key, val] : ops.items()) {
    std::smatch mt;
    if (!std::regex_match(key, mt, key_re))
      throw ParseError("operators: key \"" + key + "\" is not of the form (a,b|x,y)");
    const int a = std::stoi(mt[1]), b = std::stoi(mt[2]), x = std::stoi(mt[3]), y = std::stoi(mt[4]);
    check_range(a, aa, key);
    check_range(b, ab, key);
    check_range(x, qa, key);
    check_range(y, qb, key);
    g.V(a, b, x, y) = matrix_from_json(val, m, m, "operators" + key);
  }
  return g;
}

MonogamyGame parse_monogamy(const json& j, int m) {
  const json& alpha = field(j, "alphabets", "game");
  const int q = positive_int(alpha, "questions", "alphabets");
  const int n = positive_int(alpha, "answers", "alphabets");
  const json& pj = field(j, "pi", "game");
  if (!pj.is_array() || static_cast<int>(pj.size()) != q)
    throw ParseError("pi: expected " + std::to_string(q) + " entries");
  RealVec pi(q);
  for (int x = 0; x < q; ++x) pi(x) = number(pj[x], "pi[" + std::to_string(x) + "]");
  const json& ops = field(j, "operators", "game");
  if (!ops.is_object()) throw ParseError("operators: expected an object");
  static const std::regex key_re(R"(\(\s*(\d+)\s*\|\s*(\d+)\s*\))");
  std::vector<HermMat> r(static_cast<size_t>(q) * n);
  std::vector<bool> seen(r.size(), false);
  for (const auto& [key, val] : ops.items()) {
    std::smatch mt;
    if (!std::regex_match(key, mt, key_re))
      throw ParseError("operators: key \"" + key + "\" is not of the form (a|x)");
    const int a = std::stoi(mt[1]), x = std::stoi(mt[2]);
    check_range(a, n, key);
    check_range(x, q, key);
    const size_t idx = static_cast<size_t>(x) * n + a;
    r[idx] = matrix_from_json(val, m, m, "operators" + key);
    seen[idx] = true;
  }
  for (int x = 0; x < q; ++x)
    for (int a = 0; a < n; ++a)
      if (!seen[static_cast<size_t>(x) * n + a])
        throw ParseError("operators: missing referee operator (" + std::to_string(a) + "|" +
                         std::to_string(x) + ")");
  return MonogamyGame(q, n, m, pi, std::move(r));
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace

json matrix_to_json(const ComplexMat& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMat matrix_from_json(const json& j, int rows, int cols, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    throw ParseError(where + ": expected " + std::to_string(rows) + " rows");
  ComplexMat m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols)
      throw ParseError(where + ": row " + std::to_string(r) + " needs " + std::to_string(cols) + " entries");
    for (int c = 0; c < cols; ++c) {
      const json& e = j[r][c];
      if (!e.is_array() || e.size() != 2)
        throw ParseError(where + ": entry (" + std::to_string(r) + "," + std::to_string(c) +
                         ") must be a [re, im] pair");
      m(r, c) = cplx(number(e[0], where), number(e[1], where));
    }
  }
  return m;
}

AnyGame parse_game(const json& j) {
  if (!j.is_object()) throw ParseError("game: expected a JSON object");
  const json& kind = field(j, "kind", "game");
  if (!kind.is_string()) throw ParseError("kind: expected a string");
  if (j.contains("schema_version") && !j.at("schema_version").is_string())
    throw ParseError("schema_version: expected a string");
  if (j.contains("schema_version") && j.at("schema_version").get<std::string>().rfind("1.", 0) != 0)
    throw ParseError("schema_version: unsupported version \"" + j.at("schema_version").get<std::string>() + "\"");
  const int m = positive_int(j, "ref_dim", "game");
  const std::string k = kind.get<std::string>();
  if (k == "extended") return parse_extended(j, m);
  if (k == "monogamy") return parse_monogamy(j, m);
  throw ParseError("kind: unknown game kind \"" + k + "\"");
}

AnyGame load_game_unchecked(const std::filesystem::path& path) { return parse_game(read_json(path)); }

ValidationReport validate_game(const AnyGame& g, double tol) {
  return std::visit([tol](const auto& game) { return game.validate(tol); }, g);
}

AnyGame load_game(const std::filesystem::path& path, double tol) {
  AnyGame g = load_game_unchecked(path);
  const ValidationReport rep = validate_game(g, tol);
  if (!rep.ok()) throw InvariantViolation(path.string() + ": " + rep.summary());
  return g;
}

json to_json(const ExtendedGame& g) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "extended";
  j["alphabets"] = {{"questions_a", g.questions_a()},
                    {"questions_b", g.questions_b()},
                    {"answers_a", g.answers_a()},
                    {"answers_b", g.answers_b()}};
  j["ref_dim"] = g.ref_dim();
  json pi = json::array();
  for (int x = 0; x < g.questions_a(); ++x) {
    json row = json::array();
    for (int y = 0; y < g.questions_b(); ++y) row.push_back(g.pi(x, y));
    pi.push_back(std::move(row));
  }
  j["pi"] = std::move(pi);
  json ops = json::object();
  for (int a = 0; a < g.answers_a(); ++a)
    for (int b = 0; b < g.answers_b(); ++b)
      for (int x = 0; x < g.questions_a(); ++x)
        for (int y = 0; y < g.questions_b(); ++y) {
          const HermMat& v = g.V(a, b, x, y);
          if (max_abs(v) == 0.0) continue;
          std::ostringstream key;
          key << '(' << a << ',' << b << '|' << x << ',' << y << ')';
          ops[key.str()] = matrix_to_json(v);
        }
  j["operators"] = std::move(ops);
  return j;
}

json to_json(const MonogamyGame& g) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "monogamy";
  j["alphabets"] = {{"questions", g.questions()}, {"answers", g.answers()}};
  j["ref_dim"] = g.ref_dim();
  json pi = json::array();
  for (int x = 0; x < g.questions(); ++x) pi.push_back(g.pi(x));
  j["pi"] = std::move(pi);
  json ops = json::object();
  for (int x = 0; x < g.questions(); ++x)
    for (int a = 0; a < g.answers(); ++a)
      ops["(" + std::to_string(a) + "|" + std::to_string(x) + ")"] = matrix_to_json(g.R(a, x));
  j["operators"] = std::move(ops);
  return j;
}

json to_json(const AnyGame& g) {
  return std::visit([](const auto& game) { return to_json(game); }, g);
}

std::string format_game(const json& j) {
  std::ostringstream s;
  s << "{\n";
  size_t i = 0;
  for (const auto& [key, val] : j.items()) {
    s << "  " << json(key).dump() << ": ";
    if (key == "operators" && !val.empty()) {
      s << "{\n";
      size_t k = 0;
      for (const auto& [op, mat] : val.items())
        s << "    " << json(op).dump() << ": " << mat.dump() << (++k < val.size() ? ",\n" : "\n");
      s << "  }";
    } else {
      s << val.dump();
    }
    s << (++i < j.size() ? ",\n" : "\n");
  }
  s << "}\n";
  return s.str();
}

void save_game(const std::filesystem::path& path, const AnyGame& g) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  out << format_game(to_json(g));
}

}  // namespace enlg::cli
