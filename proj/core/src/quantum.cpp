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

#include "enlg/quantum.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "enlg/errors.hpp"

namespace enlg {

ComplexMat gen_pauli(int m, int k1, int k2) {
  if (m < 1 || k1 < 0 || k2 < 0 || k1 >= m || k2 >= m)
    throw InvalidInput("gen_pauli: need 0 <= k1,k2 < m");
  ComplexMat out = ComplexMat::Zero(m, m);
  for (int c = 0; c < m; ++c) {
    const double angle = 2.0 * std::numbers::pi * k2 * c / m;
    out((c + k1) % m, c) = std::polar(1.0, angle);
  }
  return out;
}

std::vector<HermMat> bell_basis(int m) {
  if (m < 1) throw InvalidInput("bell_basis: m must be positive");
  std::vector<HermMat> out;
  out.reserve(static_cast<size_t>(m) * m);
  for (int k1 = 0; k1 < m; ++k1)
    for (int k2 = 0; k2 < m; ++k2) {
      ComplexVec v = vec(gen_pauli(m, k1, k2));
      out.push_back(v * v.adjoint() / static_cast<double>(m));
    }
  return out;
}

bool is_prime(int d) {
  if (d < 2) return false;
  for (int p = 2; p * p <= d; ++p)
    if (d % p == 0) return false;
  return true;
}

std::vector<ComplexMat> mub(int d) {
  if (!is_prime(d)) throw InvalidInput("mub: dimension " + std::to_string(d) + " is not prime");
  std::vector<ComplexMat> bases;
  bases.push_back(ComplexMat::Identity(d, d));
  const double s = 1.0 / std::sqrt(static_cast<double>(d));
  if (d == 2) {
    ComplexMat plus(2, 2), circ(2, 2);
    plus << s, s, s, -s;
    circ << s, s, cplx(0, s), cplx(0, -s);
    bases.push_back(plus);
    bases.push_back(circ);
    return bases;
  }
  for (int c = 0; c < d; ++c) {
    ComplexMat b(d, d);
    for (int n = 0; n < d; ++n)
      for (int l = 0; l < d; ++l) {
        const long e = (static_cast<long>(c) * l * (l - 1) + static_cast<long>(n) * l) % d;
        b(l, n) = std::polar(s, -2.0 * std::numbers::pi * static_cast<double>(e) / d);
      }
    bases.push_back(b);
  }
  return bases;
}

ComplexMat random_unitary(int n, std::uint64_t seed) {
  if (n < 1) throw InvalidInput("random_unitary: n must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMat g(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) g(i, j) = cplx(gauss(rng), gauss(rng)) / std::sqrt(2.0);
  Eigen::HouseholderQR<ComplexMat> qr(g);
  ComplexMat q = qr.householderQ() * ComplexMat::Identity(n, n);
  ComplexMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < n; ++k) {
    const double mag = std::abs(r(k, k));
    const cplx phase = mag > 0 ? r(k, k) / mag : cplx(1.0);
    q.col(k) *= phase;
  }
  return q;
}

bool is_density(const HermMat& rho, double tol) {
  if (!is_hermitian(rho, 1e-12 * std::max(1.0, max_abs(rho)))) return false;
  if (std::abs(rho.trace() - cplx(1.0)) > tol) return false;
  return min_eigenvalue(rho) >= -tol;
}

HermMat teleport_simulate(int m, const HermMat& rho) {
  if (m < 1 || rho.rows() != m || rho.cols() != m)
    throw InvalidInput("teleport_simulate: rho must be an m x m matrix");
  if (!is_density(rho)) throw InvalidInput("teleport_simulate: rho is not a density matrix");
  // Registers in order: input Z, sender half X, receiver half Y.
  const ComplexVec u0 = vec(ComplexMat::Identity(m, m)) / std::sqrt(static_cast<double>(m));
  const ComplexMat joint = kron(rho, u0 * u0.adjoint());
  const ComplexMat id = ComplexMat::Identity(m, m);
  HermMat out = HermMat::Zero(m, m);
  const auto bell = bell_basis(m);
  for (int k1 = 0; k1 < m; ++k1)
    for (int k2 = 0; k2 < m; ++k2) {
      const ComplexMat meas = kron(bell[k1 * m + k2], id);
      const HermMat post = partial_trace(meas * joint * meas, {m, m, m}, {2});
      const ComplexMat w = gen_pauli(m, k1, k2);
      out += w * post * w.adjoint();
    }
  return out;
}

}  // namespace enlg
