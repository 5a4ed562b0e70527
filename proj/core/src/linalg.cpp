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

#include "enlg/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "enlg/errors.hpp"

namespace enlg {

bool is_finite(const ComplexMat& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

double hermitian_defect(const ComplexMat& m) {
  if (m.rows() != m.cols()) return INFINITY;
  return m.size() == 0 ? 0.0 : (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMat& m, double tol) {
  return m.rows() == m.cols() && is_finite(m) && hermitian_defect(m) <= tol;
}

double max_abs(const ComplexMat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

ComplexMat kron(const ComplexMat& a, const ComplexMat& b) {
  ComplexMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMat kron_all(const std::vector<ComplexMat>& factors) {
  ComplexMat out = ComplexMat::Identity(1, 1);
  for (const auto& f : factors) out = kron(out, f);
  return out;
}

HermMat partial_trace(const HermMat& m, const std::vector<int>& dims,
                      const std::vector<int>& keep) {
  const int n = static_cast<int>(dims.size());
  long total = 1;
  for (int d : dims) {
    if (d < 1) throw InvalidInput("partial_trace: subsystem dimension must be positive");
    total *= d;
  }
  if (m.rows() != m.cols() || total != m.rows())
    throw InvalidInput("partial_trace: product of dims " + std::to_string(total) +
                       " does not match matrix dimension " + std::to_string(m.rows()));
  std::vector<bool> kept(n, false);
  for (int k : keep) {
    if (k < 0 || k >= n) throw InvalidInput("partial_trace: keep index out of range");
    kept[k] = true;
  }
  std::vector<int> kdims, tdims;
  for (int i = 0; i < n; ++i) (kept[i] ? kdims : tdims).push_back(dims[i]);
  const long dk = std::accumulate(kdims.begin(), kdims.end(), 1L, std::multiplies<>());
  const long dt = std::accumulate(tdims.begin(), tdims.end(), 1L, std::multiplies<>());

  // Full index of (kept multi-index, traced multi-index).
  auto compose = [&](long ki, long ti) {
    std::vector<int> digits(n);
    for (int i = n - 1; i >= 0; --i) {
      if (kept[i]) {
        digits[i] = static_cast<int>(ki % dims[i]);
        ki /= dims[i];
      } else {
        digits[i] = static_cast<int>(ti % dims[i]);
        ti /= dims[i];
      }
    }
    long idx = 0;
    for (int i = 0; i < n; ++i) idx = idx * dims[i] + digits[i];
    return idx;
  };
  std::vector<long> table(dk * dt);
  for (long ki = 0; ki < dk; ++ki)
    for (long ti = 0; ti < dt; ++ti) table[ki * dt + ti] = compose(ki, ti);

  HermMat out = HermMat::Zero(dk, dk);
  for (long r = 0; r < dk; ++r)
    for (long c = 0; c < dk; ++c) {
      cplx s = 0;
      for (long t = 0; t < dt; ++t) s += m(table[r * dt + t], table[c * dt + t]);
      out(r, c) = s;
    }
  return out;
}

ComplexVec vec(const ComplexMat& a) {
  ComplexVec v(a.size());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) v(i * a.cols() + j) = a(i, j);
  return v;
}

ComplexMat unvec(const ComplexVec& v, int rows, int cols) {
  if (v.size() != static_cast<Eigen::Index>(rows) * cols)
    throw InvalidInput("unvec: length does not match rows*cols");
  ComplexMat a(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a(i, j) = v(i * cols + j);
  return a;
}

double spectral_norm(const ComplexMat& m) {
  if (m.size() == 0) return 0.0;
  // Largest eigenvalue of the smaller Gram matrix, then square root.
  ComplexMat g = m.rows() <= m.cols() ? ComplexMat(m * m.adjoint()) : ComplexMat(m.adjoint() * m);
  Eigen::SelfAdjointEigenSolver<ComplexMat> es(g, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

double trace_norm(const ComplexMat& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMat> svd(m);
  return svd.singularValues().sum();
}

EigDecomp herm_eig(const HermMat& h) {
  if (!is_hermitian(h, 1e-12 * std::max(1.0, max_abs(h))))
    throw InvalidInput("herm_eig: matrix is not Hermitian");
  const ComplexMat sym = (h + h.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<ComplexMat> es(sym);
  if (es.info() != Eigen::Success) throw InvalidInput("herm_eig: eigensolver did not converge");
  EigDecomp out;
  out.eigenvalues = es.eigenvalues().reverse();
  out.eigenvectors = es.eigenvectors().rowwise().reverse();
  return out;
}

double min_eigenvalue(const HermMat& h) {
  if (h.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<ComplexMat> es((h + h.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

double max_eigenvalue(const HermMat& h) {
  if (h.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<ComplexMat> es((h + h.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(h.rows() - 1);
}

namespace {

HermMat spectral_apply(const HermMat& p, double (*fn)(double, double), double tol,
                       const char* who) {
  EigDecomp e = herm_eig(p);
  const double scale = std::max(1.0, e.eigenvalues.size() ? std::abs(e.eigenvalues(0)) : 0.0);
  for (Eigen::Index k = 0; k < e.eigenvalues.size(); ++k)
    if (e.eigenvalues(k) < -1e-9 * scale)
      throw InvalidInput(std::string(who) + ": matrix has a negative eigenvalue " +
                         std::to_string(e.eigenvalues(k)));
  RealVec f(e.eigenvalues.size());
  for (Eigen::Index k = 0; k < f.size(); ++k) f(k) = fn(e.eigenvalues(k), tol);
  return e.eigenvectors * f.asDiagonal() * e.eigenvectors.adjoint();
}

}  // namespace

HermMat psd_sqrt(const HermMat& p) {
  return spectral_apply(p, [](double l, double) { return l > 0 ? std::sqrt(l) : 0.0; }, 0.0,
                        "psd_sqrt");
}

HermMat psd_inv_sqrt(const HermMat& p, double tol) {
  return spectral_apply(p, [](double l, double t) { return l > t ? 1.0 / std::sqrt(l) : 0.0; },
                        tol, "psd_inv_sqrt");
}

RealMat real_embed(const ComplexMat& h) {
  const Eigen::Index r = h.rows(), c = h.cols();
  RealMat out(2 * r, 2 * c);
  out.topLeftCorner(r, c) = h.real();
  out.topRightCorner(r, c) = -h.imag();
  out.bottomLeftCorner(r, c) = h.imag();
  out.bottomRightCorner(r, c) = h.real();
  return out;
}

ComplexMat real_unembed(const RealMat& m) {
  const Eigen::Index r = m.rows() / 2, c = m.cols() / 2;
  if (m.rows() != 2 * r || m.cols() != 2 * c)
    throw InvalidInput("real_unembed: dimensions must be even");
  ComplexMat out(r, c);
  out.real() = (m.topLeftCorner(r, c) + m.bottomRightCorner(r, c)) / 2.0;
  out.imag() = (m.bottomLeftCorner(r, c) - m.topRightCorner(r, c)) / 2.0;
  return out;
}

ComplexMat basis_op(int dim, int row, int col) {
  ComplexMat e = ComplexMat::Zero(dim, dim);
  e(row, col) = 1.0;
  return e;
}

ComplexMat projector(const ComplexVec& v) { return v * v.adjoint(); }

}  // namespace enlg
