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

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace enlg {

using cplx = std::complex<double>;
using ComplexMat = Eigen::MatrixXcd;
using ComplexVec = Eigen::VectorXcd;
using RealMat = Eigen::MatrixXd;
using RealVec = Eigen::VectorXd;

// A ComplexMat that is expected to be square and Hermitian. The alias keeps
// signatures readable; validation happens at the operations that need it.
using HermMat = Eigen::MatrixXcd;

struct EigDecomp {
  RealVec eigenvalues;      // descending
  ComplexMat eigenvectors;  // column k pairs with eigenvalues(k)
};

bool is_finite(const ComplexMat& m);
bool is_hermitian(const ComplexMat& m, double tol = 1e-12);
double hermitian_defect(const ComplexMat& m);

// Entrywise max-abs norm, used for tolerance checks.
double max_abs(const ComplexMat& m);

ComplexMat kron(const ComplexMat& a, const ComplexMat& b);
ComplexMat kron_all(const std::vector<ComplexMat>& factors);

// Traces out every subsystem not listed in keep. Kept subsystems retain
// their original order.
HermMat partial_trace(const HermMat& m, const std::vector<int>& dims,
                      const std::vector<int>& keep);

// Row-stacking vectorization: vec(E_ab) = e_a (x) e_b.
ComplexVec vec(const ComplexMat& a);
ComplexMat unvec(const ComplexVec& v, int rows, int cols);

double spectral_norm(const ComplexMat& m);
double trace_norm(const ComplexMat& m);

EigDecomp herm_eig(const HermMat& h);
double min_eigenvalue(const HermMat& h);
double max_eigenvalue(const HermMat& h);

HermMat psd_sqrt(const HermMat& p);
HermMat psd_inv_sqrt(const HermMat& p, double tol = 1e-8);

// Real symmetric embedding H -> [[Re H, -Im H], [Im H, Re H]] and its inverse
// on matrices of that shape (averaging the redundant copies).
RealMat real_embed(const ComplexMat& h);
ComplexMat real_unembed(const RealMat& r);

ComplexMat basis_op(int dim, int row, int col);
ComplexMat projector(const ComplexVec& v);

}  // namespace enlg
