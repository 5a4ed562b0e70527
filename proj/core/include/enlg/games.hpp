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

#include <string>
#include <vector>

#include "enlg/linalg.hpp"

namespace enlg {

inline constexpr long double kDefaultSizeCap = 4096;

// Result of checking a data type's invariants, one line per check.
struct CheckResult {
  std::string name;
  bool pass = true;
  double worst = 0.0;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool ok() const;
  std::string summary() const;  // first failing check, or empty
};

// Extended nonlocal game (pi, V). Alphabets are 0-based integer ranges.
// V(a,b|x,y) is stored densely, including zero operators.
class ExtendedGame {
 public:
  ExtendedGame() = default;
  // Unchecked construction; call validate() or use make().
  ExtendedGame(int questions_a, int questions_b, int answers_a, int answers_b, int ref_dim,
               RealMat pi, std::vector<HermMat> v);
  // Builds an all-zero referee table.
  ExtendedGame(int questions_a, int questions_b, int answers_a, int answers_b, int ref_dim,
               RealMat pi);

  // Validated construction: throws InvariantViolation when a check fails.
  static ExtendedGame make(int questions_a, int questions_b, int answers_a, int answers_b,
                           int ref_dim, RealMat pi, std::vector<HermMat> v, double tol = 1e-9);

  int questions_a() const { return qa_; }
  int questions_b() const { return qb_; }
  int answers_a() const { return aa_; }
  int answers_b() const { return ab_; }
  int ref_dim() const { return m_; }
  const RealMat& pi() const { return pi_; }
  double pi(int x, int y) const { return pi_(x, y); }
  const HermMat& V(int a, int b, int x, int y) const { return v_[index(a, b, x, y)]; }
  HermMat& V(int a, int b, int x, int y) { return v_[index(a, b, x, y)]; }
  const std::vector<HermMat>& table() const { return v_; }

  size_t index(int a, int b, int x, int y) const {
    return ((static_cast<size_t>(a) * ab_ + b) * qa_ + x) * qb_ + y;
  }

  ValidationReport validate(double tol = 1e-9) const;

 private:
  int qa_ = 0, qb_ = 0, aa_ = 0, ab_ = 0, m_ = 0;
  RealMat pi_;
  std::vector<HermMat> v_;
};

// Monogamy-of-entanglement game (pi, R): one question x drawn from pi and a
// referee measurement {R(a|x)}_a for each x.
class MonogamyGame {
 public:
  MonogamyGame() = default;
  MonogamyGame(int questions, int answers, int ref_dim, RealVec pi, std::vector<HermMat> r);
  static MonogamyGame make(int questions, int answers, int ref_dim, RealVec pi,
                           std::vector<HermMat> r, double tol = 1e-9);

  int questions() const { return q_; }
  int answers() const { return a_; }
  int ref_dim() const { return m_; }
  const RealVec& pi() const { return pi_; }
  double pi(int x) const { return pi_(x); }
  const HermMat& R(int a, int x) const { return r_[index(a, x)]; }
  const std::vector<HermMat>& table() const { return r_; }
  size_t index(int a, int x) const { return static_cast<size_t>(x) * a_ + a; }

  ValidationReport validate(double tol = 1e-9) const;

 private:
  int q_ = 0, a_ = 0, m_ = 0;
  RealVec pi_;
  std::vector<HermMat> r_;
};

// Shared state on U (x) R (x) V with POVMs for Alice on U and Bob on V.
struct QuantumStrategy {
  int dim_u = 1;
  int dim_v = 1;
  HermMat sigma;
  std::vector<std::vector<HermMat>> alice;  // [x][a]
  std::vector<std::vector<HermMat>> bob;    // [y][b]

  ValidationReport validate(int ref_dim, double tol = 1e-9) const;
};

// K(a,b|x,y) on the referee space, indexed like ExtendedGame::V.
struct Assemblage {
  int questions_a = 0, questions_b = 0, answers_a = 0, answers_b = 0, ref_dim = 0;
  std::vector<HermMat> K;

  size_t index(int a, int b, int x, int y) const {
    return ((static_cast<size_t>(a) * answers_b + b) * questions_a + x) * questions_b + y;
  }
  const HermMat& at(int a, int b, int x, int y) const { return K[index(a, b, x, y)]; }

  ValidationReport validate(double tol = 1e-9) const;
  // Largest deviation from the non-signaling marginal conditions.
  double nonsignaling_defect() const;
};

ExtendedGame monogamy_to_extended(const MonogamyGame& g);

double quantum_value_of_strategy(const ExtendedGame& g, const QuantumStrategy& s);
Assemblage induced_assemblage(const ExtendedGame& g, const QuantumStrategy& s);
double assemblage_value(const ExtendedGame& g, const Assemblage& k);

// Product of per-round sizes must stay below cap: checks m^r * |Gamma|^r.
MonogamyGame parallel_repeat(const MonogamyGame& g, int r, long double size_cap = kDefaultSizeCap);

// Mixed-radix tuple encoding used by parallel_repeat: the first round is the
// most significant digit.
std::vector<int> decode_tuple(int index, int base, int length);

// Games used throughout the examples.
MonogamyGame bb84_monogamy_game();
ExtendedGame bb84_extended_game();
ExtendedGame chsh_extended_game();
// Monogamy game whose referee measures in the first `bases` MUBs of prime d,
// with uniform pi.
MonogamyGame mub_monogamy_game(int d, int bases);

}  // namespace enlg
