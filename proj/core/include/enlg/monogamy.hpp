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

#include <array>

#include "enlg/games.hpp"
#include "enlg/tolerances.hpp"

namespace enlg {

struct OverlapReport {
  double c_value = 0.0;
  std::array<int, 4> argmax{};  // (x, y, a, b)
};

// Maximal overlap c(G) = max over x != y and all a, b of ||sqrt R(a|x) sqrt R(b|y)||^2.
//
// With rounds > 1 the questions of g are read as rounds-tuples over a base
// alphabet (the layout produced by parallel_repeat) and x != y means the
// tuples differ in every round. Under that reading c(G^r) = c(G)^r; with
// rounds = 1 a repeated projective game instead has c(G^r) = c(G), since
// tuples that share a round contribute a factor ||R(a|x)||^2 = 1.
OverlapReport max_overlap(const MonogamyGame& g, int rounds = 1);

bool is_projective(const HermMat& p, double tol = tol::kProjective);

// (1/|Sigma| + (|Sigma|-1)/|Sigma| * sqrt(c))^r. Requires uniform pi.
double tfkw_bound(const MonogamyGame& g, int r);

// (1/2 + sqrt(c)/2)^r for two-question games with uniform pi and projective referee.
double spr_two_question_value(const MonogamyGame& g, int r);

}  // namespace enlg
