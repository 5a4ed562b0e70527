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
#include <vector>

#include "enlg/games.hpp"
#include "enlg/hierarchy.hpp"
#include "enlg/sdp.hpp"

namespace enlg {

inline constexpr long double kDefaultEnumerationCap = 1e7;

struct UnentangledResult {
  double value = 0.0;
  std::vector<int> f;  // Alice's answer per question
  std::vector<int> g;  // Bob's answer per question
  ComplexVec state;    // optimal referee state for (f, g)
};

// Exact maximum over deterministic (f, g) of lambda_max(sum pi V(f(x),g(y)|x,y)).
// Ties go to the lexicographically smallest (f, g).
UnentangledResult unentangled_value(const ExtendedGame& g,
                                    long double cap = kDefaultEnumerationCap);

struct MonogamyUnentangledResult {
  double value = 0.0;
  std::vector<int> f;
  ComplexVec state;
};

MonogamyUnentangledResult monogamy_unentangled_value(const MonogamyGame& g,
                                                     long double cap = kDefaultEnumerationCap);

struct NonsignalingResult {
  double value = 0.0;
  Assemblage assemblage;
  SdpSolution solution;
  int num_constraints = 0;
};

// Builds the non-signaling SDP: K(a,b|x,y) PSD, both marginal families
// independent of the other party's question, unit total trace.
SdpProblem nonsignaling_sdp(const ExtendedGame& g);
NonsignalingResult nonsignaling_value(const ExtendedGame& g, const SolverOptions& opts = {});

struct SeesawOptions {
  int restarts = 4;
  double inner_tol = 1e-6;
  int max_iter = 200;
  std::uint64_t seed = 0;
  int bob_dim = 0;  // 0 selects the referee dimension
  int threads = 1;
  SolverOptions solver;
  // When set, restart 0 starts from these measurements [y][b] instead of a
  // random draw. Each operator must be bob_dim x bob_dim.
  std::vector<std::vector<HermMat>> initial_bob;
};

struct SeesawRestart {
  bool ok = false;
  double value = 0.0;      // re-evaluated strategy value
  double sdp_value = 0.0;  // final see-saw objective
  int iterations = 0;
  std::string error;
};

struct SeesawResult {
  double value = 0.0;      // certified: value of the extracted strategy
  double sdp_value = 0.0;  // objective of the last SDP in the best restart
  QuantumStrategy strategy;
  std::vector<std::vector<HermMat>> alice_povm;  // [x][a], acting on the purifying space
  std::vector<std::vector<HermMat>> bob_povm;    // [y][b]
  // tau^{-1/2} tr_B(rho_a^x) tau^{-1/2} with tau reduced to the referee space.
  std::vector<std::vector<HermMat>> alice_referee_ops;
  HermMat tau;
  int iterations = 0;
  int restarts_used = 0;
  int best_restart = -1;
  std::vector<SeesawRestart> restarts;
};

SeesawResult seesaw_lower_bound(const ExtendedGame& g, const SeesawOptions& opts = {});

// Random POVM for one question: rank-1 projectors from the columns of a
// random unitary when dim >= answers, otherwise a Naimark compression.
std::vector<HermMat> random_povm(int dim, int answers, std::uint64_t seed);

// r-fold tensor products of measurements [y][b], indexed like parallel_repeat
// (first round most significant).
std::vector<std::vector<HermMat>> repeat_povms(const std::vector<std::vector<HermMat>>& povms, int r);

}  // namespace enlg
