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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "enlg/bounds.hpp"
#include "enlg/games.hpp"
#include "enlg/sdp.hpp"

namespace enlg::testing {

inline constexpr std::uint64_t kMasterSeed = 20261016;

using Rng = std::mt19937_64;

ComplexMat gaussian_matrix(int rows, int cols, Rng& rng);
HermMat random_hermitian(int n, Rng& rng);
HermMat random_density(int n, Rng& rng);
HermMat random_projector(int n, int rank, Rng& rng);
// Rank-1 projectors onto the columns of a Haar unitary, column c to answer c mod answers.
std::vector<HermMat> random_projective_povm(int n, int answers, Rng& rng);

ExtendedGame random_extended_game(int qa, int qb, int aa, int ab, int m, Rng& rng);
// Referee measurements are rank-1 projective when projective is set, Naimark POVMs otherwise.
MonogamyGame random_monogamy_game(int q, int answers, int m, bool projective, Rng& rng,
                                  bool uniform = true);
QuantumStrategy random_projective_strategy(const ExtendedGame& g, int dim_u, int dim_v, Rng& rng);

// Bob measurements answering g(y) deterministically, as dim x dim operators.
std::vector<std::vector<HermMat>> deterministic_povms(const std::vector<int>& answers, int num_answers,
                                                      int dim);

// maximize <A,X> s.t. tr X = 1 and <B_j,X> = <B_j,X0> for a random interior X0.
SdpProblem random_small_sdp(int n, int extra_constraints, Rng& rng);
// Value of such a problem through its Lagrange dual,
// min_y lambda_max(A - sum_j y_j B_j) + sum_j y_j gamma_j, by nested golden-section search.
double dual_oracle_value(const SdpProblem& p);

struct PropertyOutcome {
  std::string name;
  int cases = 0;
  int failures = 0;
  double worst = 0.0;  // largest observed deviation
  double seconds = 0.0;
  std::string detail;  // first failure
  bool pass() const { return cases > 0 && failures == 0; }
};

PropertyOutcome projector_norm_suite(int cases, std::uint64_t seed);
// Runs the ordering chain and records the moment-entry bound of each level-1 solution.
std::vector<PropertyOutcome> ordering_and_moment_suites(int cases, std::uint64_t seed);
PropertyOutcome honest_moment_suite(int cases, std::uint64_t seed);
PropertyOutcome overlap_power_suite(int cases, std::uint64_t seed);
PropertyOutcome teleport_suite(int cases, std::uint64_t seed);
PropertyOutcome duality_gap_suite(int cases, std::uint64_t seed);

struct SprCase {
  int dim = 0;
  double c = 0.0;
  double closed_form = 0.0;
  double base_seesaw = 0.0;
  double seesaw = 0.0;
  double seconds = 0.0;
};
// Random |Sigma| = 2 uniform games with rank-1 projective referee in dimension
// 2 + (i mod 2); see-saw on the 2-fold repetition against (1/2 + sqrt(c)/2)^2.
std::vector<SprCase> spr_spot_check(int games, std::uint64_t seed);

}  // namespace enlg::testing
