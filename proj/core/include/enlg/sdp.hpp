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
#include <string>
#include <vector>

#include "enlg/linalg.hpp"

namespace enlg {

// One upper-triangle entry (row <= col) of a Hermitian matrix living in a
// given block. The mirrored entry (col,row) holds conj(value) implicitly.
// Diagonal entries must be real.
struct HermEntry {
  int block = 0;
  int row = 0;
  int col = 0;
  cplx value{0.0, 0.0};
};

// Sum over blocks of Hermitian matrices, stored sparsely.
struct BlockHerm {
  std::vector<HermEntry> entries;

  // Adds the upper triangle of a dense Hermitian matrix h placed at
  // (offset, offset) inside the given block.
  void add_dense(int block, const HermMat& h, int offset = 0, double tol = 0.0);
  void add(int block, int row, int col, cplx value);
  // Merges duplicate positions and drops zeros.
  void normalize(double drop_tol = 0.0);
};

struct SdpConstraint {
  BlockHerm lhs;
  double gamma = 0.0;
};

// maximize <A, X> subject to <B_j, X> = gamma_j, X = diag(X_1, ..., X_k) PSD.
// The dual is: minimize sum_j gamma_j y_j subject to sum_j y_j B_j - A = Z PSD.
struct SdpProblem {
  std::vector<int> block_dims;
  BlockHerm objective;
  std::vector<SdpConstraint> constraints;
};

enum class SdpStatus { Optimal, MaxIter, Infeasible, NumericalFailure };
const char* to_string(SdpStatus s);

struct SdpIterate {
  int iter = 0;
  double primal_obj = 0.0;
  double dual_obj = 0.0;
  double rel_gap = 0.0;
  double primal_res = 0.0;
  double dual_res = 0.0;
  double mu = 0.0;
};

struct SdpSolution {
  std::vector<HermMat> X;
  std::vector<HermMat> Z;
  RealVec y;
  double primal_value = 0.0;
  double dual_value = 0.0;
  double gap = 0.0;  // |primal - dual| / max(1, |primal|)
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  int iterations = 0;
  SdpStatus status = SdpStatus::NumericalFailure;
  std::vector<SdpIterate> history;
};

struct SolverOptions {
  double gap_tol = 1e-8;
  double feas_tol = 1e-8;
  int max_iter = 200;
  double step_fraction = 0.95;
  int refinement_steps = 2;
  std::ostream* log = nullptr;
};

// Real symmetric counterpart of SdpProblem: every complex block of dim d
// becomes a real block of dim 2d under H -> [[Re H, -Im H], [Im H, Re H]].
// Objective and constraint matrices are additionally scaled by 1/2 so that
// <A~, X~> = <A, X> whenever X~ is the embedding of X; gamma is unchanged.
struct RealEntry {
  int block = 0;
  int row = 0;
  int col = 0;
  double value = 0.0;
};

struct RealSdp {
  std::vector<int> block_dims;
  std::vector<RealEntry> objective;
  std::vector<std::vector<RealEntry>> constraints;
  RealVec gamma;
};

struct RealSdpSolution {
  std::vector<RealMat> X;
  std::vector<RealMat> Z;
  RealVec y;
  double primal_value = 0.0;
  double dual_value = 0.0;
  double gap = 0.0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  int iterations = 0;
  SdpStatus status = SdpStatus::NumericalFailure;
  std::vector<SdpIterate> history;
};

// Validates dimensions and Hermiticity, merges entries, removes zero rows and
// exact duplicate constraints. Throws InvalidInput on malformed or plainly
// inconsistent input.
// When kept is non-null it receives, for every surviving row, its index in p.
SdpProblem normalize_problem(const SdpProblem& p, std::vector<int>* kept = nullptr);

RealSdp embed_real(const SdpProblem& p);
RealSdpSolution solve_real(const RealSdp& p, const SolverOptions& opts = {});
SdpSolution solve(const SdpProblem& p, const SolverOptions& opts = {});

// <B, X> summed over blocks for a sparse Hermitian B and dense blocks X.
double inner(const BlockHerm& b, const std::vector<HermMat>& x);
HermMat dense_block(const BlockHerm& b, int block, int dim);

struct CertificateReport {
  double min_eig_X = 0.0;
  double min_eig_Z = 0.0;
  double max_primal_residual = 0.0;
  int worst_constraint = -1;
  double max_dual_residual = 0.0;
  double primal_value = 0.0;
  double dual_value = 0.0;
  double gap = 0.0;
  bool ok = false;
  std::vector<std::string> violations;
};

struct CertificateTolerances {
  double psd = 1e-8;
  double residual = 1e-8;
  double gap = 1e-6;
};

CertificateReport check_certificate(const SdpProblem& p, const SdpSolution& s,
                                    const CertificateTolerances& tol = {});

}  // namespace enlg
