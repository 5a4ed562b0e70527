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

#include "enlg/monogamy.hpp"

#include <cmath>
#include <string>

#include "enlg/errors.hpp"

namespace enlg {

namespace {

void require_uniform(const MonogamyGame& g, const char* who) {
  const double u = 1.0 / g.questions();
  for (int x = 0; x < g.questions(); ++x)
    if (std::abs(g.pi(x) - u) > tol::kProbability)
      throw InvalidInput(std::string(who) + ": pi is not uniform (pi(" + std::to_string(x) +
                         ") = " + std::to_string(g.pi(x)) + ")");
}

void require_count(int r, const char* who) {
  if (r < 1) throw InvalidInput(std::string(who) + ": repetition count must be at least 1");
}

}  // namespace

bool is_projective(const HermMat& p, double tol) {
  return ((p * p) - p).cwiseAbs().maxCoeff() <= tol;
}

OverlapReport max_overlap(const MonogamyGame& g, int rounds) {
  const int q = g.questions(), n = g.answers();
  if (q < 2) throw InvalidInput("max_overlap: needs at least two questions");
  if (rounds < 1) throw InvalidInput("max_overlap: rounds must be positive");
  const int base = static_cast<int>(std::lround(std::pow(q, 1.0 / rounds)));
  if (std::lround(std::pow(base, rounds)) != q)
    throw InvalidInput("max_overlap: " + std::to_string(q) + " questions is not a power " + std::to_string(rounds) +
                       " of a base alphabet");
  auto distinct = [&](int x, int y) {
    if (rounds == 1) return x != y;
    const auto tx = decode_tuple(x, base, rounds), ty = decode_tuple(y, base, rounds);
    for (int i = 0; i < rounds; ++i)
      if (tx[i] == ty[i]) return false;
    return true;
  };
  std::vector<HermMat> roots;
  roots.reserve(static_cast<size_t>(q) * n);
  for (int x = 0; x < q; ++x)
    for (int a = 0; a < n; ++a) roots.push_back(psd_sqrt(g.R(a, x)));
  OverlapReport rep;
  rep.c_value = -1.0;
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y) {
      if (!distinct(x, y)) continue;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          const double s = spectral_norm(roots[x * n + a] * roots[y * n + b]);
          if (s * s > rep.c_value + tol::kTieBreak) {
            rep.c_value = s * s;
            rep.argmax = {x, y, a, b};
          }
        }
    }
  return rep;
}

double tfkw_bound(const MonogamyGame& g, int r) {
  require_count(r, "tfkw_bound");
  require_uniform(g, "tfkw_bound");
  const double s = g.questions();
  const double c = max_overlap(g).c_value;
  return std::pow(1.0 / s + (s - 1.0) / s * std::sqrt(c), r);
}

double spr_two_question_value(const MonogamyGame& g, int r) {
  require_count(r, "spr_two_question_value");
  if (g.questions() != 2)
    throw InvalidInput("spr_two_question_value: requires exactly two questions, got " +
                       std::to_string(g.questions()));
  require_uniform(g, "spr_two_question_value");
  for (int x = 0; x < 2; ++x)
    for (int a = 0; a < g.answers(); ++a)
      if (!is_projective(g.R(a, x)))
        throw InvalidInput("spr_two_question_value: referee operator R(" + std::to_string(a) + "|" +
                           std::to_string(x) + ") is not a projection");
  const double c = max_overlap(g).c_value;
  return std::pow(0.5 + 0.5 * std::sqrt(c), r);
}

}  // namespace enlg
