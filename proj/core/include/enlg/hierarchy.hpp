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

#include "enlg/games.hpp"
#include "enlg/sdp.hpp"
#include "enlg/words.hpp"

namespace enlg {

// Index layout of a block moment matrix M with blocks M_{i,j}, 0 <= i,j < m:
// row (i, s) sits at i * words.size() + s.
struct MomentLayout {
  int ref_dim = 0;
  std::vector<CanonicalWord> words;
  int index(int i, int s) const { return i * static_cast<int>(words.size()) + s; }
  int dim() const { return ref_dim * static_cast<int>(words.size()); }
};

MomentLayout moment_layout(const ExtendedGame& g, const HierarchyLevel& lvl);

struct MomentTerm {
  int i = 0, s = 0, j = 0, t = 0;  // entry M_{i,j}(s,t)
  double coef = 1.0;
};

// sum coef * M_{i,j}(s,t) = rhs, imposed on both real and imaginary parts.
struct MomentConstraint {
  enum class Kind { Equivalence, Orthogonality, Completeness, Normalization };
  Kind kind = Kind::Equivalence;
  std::vector<MomentTerm> terms;
  double rhs = 0.0;
};

const char* to_string(MomentConstraint::Kind k);

// Every admissibility condition expressible on the finite matrix: entries tied
// by word equivalence, orthogonality zeros, completeness sums whose words all
// occur as entries, and the unit trace of the epsilon diagonal.
std::vector<MomentConstraint> hierarchy_constraints(const MomentLayout& layout,
                                                    const ExtendedGame& g);

struct ConstraintViolation {
  double worst = 0.0;
  int index = -1;
  MomentConstraint::Kind kind = MomentConstraint::Kind::Equivalence;
};

ConstraintViolation check_moment_constraints(const MomentLayout& layout,
                                             const std::vector<MomentConstraint>& cons,
                                             const HermMat& moment);

// Moment matrix of a strategy with projective measurements, built from the
// vectors u_i = (I (x) e_i^* (x) I) psi of a purification psi of the state.
// Entry M_{i,j}(s,t) = <t u_j, s u_i>, so M(a,b|x,y) equals the assemblage.
HermMat honest_moment_matrix(const MomentLayout& layout, const QuantumStrategy& s);

// sum pi <V(a,b|x,y), M((x,a),(y,b))> evaluated on a full moment matrix.
double moment_objective(const MomentLayout& layout, const ExtendedGame& g, const HermMat& moment);

struct QcResult {
  double value = 0.0;
  HermMat moment;           // full moment matrix over layout.words
  MomentLayout layout;
  int reduced_dim = 0;      // dimension of the SDP block actually solved
  int num_parameters = 0;
  SdpSolution solution;
  ConstraintViolation violation;
};

struct QcOptions {
  SolverOptions solver;
  long double size_cap = kDefaultSizeCap;
  bool verify_constraints = true;
};

QcResult qc_upper_bound(const ExtendedGame& g, const HierarchyLevel& lvl,
                        const QcOptions& opts = {});

}  // namespace enlg
