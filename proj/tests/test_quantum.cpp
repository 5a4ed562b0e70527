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

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "enlg/errors.hpp"
#include "enlg/quantum.hpp"
#include "support/support.hpp"

namespace enlg {
namespace {

using testing::kMasterSeed;
using testing::Rng;

const double kS = 1.0 / std::sqrt(2.0);

TEST(GenPauli, QubitCase) {
  ComplexMat x(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  z << 1, 0, 0, -1;
  EXPECT_LT(max_abs(gen_pauli(2, 0, 0) - ComplexMat::Identity(2, 2)), 1e-15);
  EXPECT_LT(max_abs(gen_pauli(2, 1, 0) - x), 1e-15);
  EXPECT_LT(max_abs(gen_pauli(2, 0, 1) - z), 1e-15);
}

TEST(GenPauli, ShiftAndUnitarity) {
  const ComplexMat x = gen_pauli(3, 1, 0);
  for (int c = 0; c < 3; ++c) {
    ComplexVec e = ComplexVec::Zero(3);
    e(c) = 1;
    ComplexVec want = ComplexVec::Zero(3);
    want((c + 1) % 3) = 1;
    EXPECT_LT(max_abs(x * e - want), 1e-15);
  }
  for (int m = 2; m <= 5; ++m)
    for (int k1 = 0; k1 < m; ++k1)
      for (int k2 = 0; k2 < m; ++k2) {
        const ComplexMat w = gen_pauli(m, k1, k2);
        EXPECT_LT(max_abs(w * w.adjoint() - ComplexMat::Identity(m, m)), 1e-12);
      }
  EXPECT_THROW(gen_pauli(2, 2, 0), InvalidInput);
}

TEST(BellBasis, QubitElements) {
  const auto phi = bell_basis(2);
  ComplexVec u0(4), u2(4);
  u0 << kS, 0, 0, kS;
  u2 << 0, kS, -kS, 0;
  EXPECT_LT(max_abs(phi[0] - projector(u0)), 1e-15);
  EXPECT_LT(max_abs(phi[3] - projector(u2)), 1e-15);
}

TEST(BellBasis, OrthonormalAndComplete) {
  for (int m = 1; m <= 4; ++m) {
    const auto phi = bell_basis(m);
    ASSERT_EQ(static_cast<int>(phi.size()), m * m);
    HermMat sum = HermMat::Zero(m * m, m * m);
    for (size_t i = 0; i < phi.size(); ++i) {
      sum += phi[i];
      EXPECT_NEAR(phi[i].trace().real(), 1.0, 1e-12);
      EXPECT_LT(max_abs(phi[i] * phi[i] - phi[i]), 1e-12);
      for (size_t j = 0; j < i; ++j) EXPECT_NEAR(std::abs((phi[i] * phi[j]).trace()), 0.0, 1e-12);
    }
    EXPECT_LT(max_abs(sum - HermMat::Identity(m * m, m * m)), 1e-12);
  }
}

// Checks two bases agree column by column up to a per-vector phase.
double basis_distance(const ComplexMat& a, const ComplexMat& b) {
  double worst = 0.0;
  for (Eigen::Index c = 0; c < a.cols(); ++c)
    worst = std::max(worst, 1.0 - std::abs(a.col(c).dot(b.col(c))));
  return worst;
}

TEST(Mub, QubitBases) {
  const auto b = mub(2);
  ASSERT_EQ(b.size(), 3u);
  ComplexMat comp = ComplexMat::Identity(2, 2), had(2, 2), circ(2, 2);
  had << kS, kS, kS, -kS;
  circ << kS, kS, cplx(0, kS), cplx(0, -kS);
  EXPECT_LT(basis_distance(b[0], comp), 1e-12);
  EXPECT_LT(basis_distance(b[1], had), 1e-12);
  EXPECT_LT(basis_distance(b[2], circ), 1e-12);
}

TEST(Mub, QutritBasesMatchLiteralVectors) {
  const cplx z = std::polar(1.0, 2.0 * std::numbers::pi / 3.0), z2 = z * z, o = 1.0;
  const double r = 1.0 / std::sqrt(3.0);
  // Columns are basis vectors, entries listed per vector.
  const cplx lit[3][3][3] = {{{o, o, o}, {o, z2, z}, {o, z, z2}},
                             {{o, o, z}, {o, z2, z2}, {o, z, o}},
                             {{o, o, z2}, {o, z2, o}, {o, z, z}}};
  const auto b = mub(3);
  ASSERT_EQ(b.size(), 4u);
  EXPECT_LT(basis_distance(b[0], ComplexMat::Identity(3, 3)), 1e-12);
  for (int k = 0; k < 3; ++k) {
    ComplexMat want(3, 3);
    for (int v = 0; v < 3; ++v)
      for (int l = 0; l < 3; ++l) want(l, v) = r * lit[k][v][l];
    EXPECT_LT(basis_distance(b[k + 1], want), 1e-12) << "basis " << k + 1;
  }
}

TEST(Mub, MutuallyUnbiased) {
  for (int d : {2, 3, 5, 7}) {
    const auto b = mub(d);
    ASSERT_EQ(static_cast<int>(b.size()), d + 1);
    for (size_t i = 0; i < b.size(); ++i) {
      EXPECT_LT(max_abs(b[i].adjoint() * b[i] - ComplexMat::Identity(d, d)), 1e-10);
      for (size_t j = 0; j < i; ++j) {
        const ComplexMat overlap = b[i].adjoint() * b[j];
        EXPECT_LT((overlap.cwiseAbs().array() - 1.0 / std::sqrt(double(d))).abs().maxCoeff(), 1e-10);
      }
    }
  }
  EXPECT_THROW(mub(4), InvalidInput);
  EXPECT_THROW(mub(6), InvalidInput);
}

TEST(RandomUnitary, UnitaryDeterministicComplete) {
  for (int n = 1; n <= 6; ++n) {
    const ComplexMat u = random_unitary(n, kMasterSeed + n);
    EXPECT_LT(max_abs(u * u.adjoint() - ComplexMat::Identity(n, n)), 1e-10);
    EXPECT_EQ(u, random_unitary(n, kMasterSeed + n));
    HermMat sum = HermMat::Zero(n, n);
    for (int c = 0; c < n; ++c) sum += projector(u.col(c));
    EXPECT_LT(max_abs(sum - HermMat::Identity(n, n)), 1e-10);
  }
  EXPECT_NE(random_unitary(3, 1), random_unitary(3, 2));
}

TEST(Teleport, Examples) {
  HermMat e0 = HermMat::Zero(2, 2);
  e0(0, 0) = 1;
  EXPECT_LT(max_abs(teleport_simulate(2, e0) - e0), 1e-12);
  const HermMat mixed = HermMat::Identity(2, 2) / 2.0;
  EXPECT_LT(max_abs(teleport_simulate(2, mixed) - mixed), 1e-12);
  Rng rng(kMasterSeed);
  const HermMat rho = testing::random_density(3, rng);
  EXPECT_LT(max_abs(teleport_simulate(3, rho) - rho), 1e-10);
  EXPECT_THROW(teleport_simulate(2, HermMat::Identity(2, 2)), InvalidInput);
}

TEST(Teleport, IdentityChannelProperty) {
  const auto out = testing::teleport_suite(200, kMasterSeed + 11);
  EXPECT_TRUE(out.pass()) << out.detail;
  EXPECT_EQ(out.cases, 200);
}

TEST(ProjectorNorm, NormOfSumEqualsOnePlusNormOfProduct) {
  const auto out = testing::projector_norm_suite(1000, kMasterSeed + 12);
  EXPECT_TRUE(out.pass()) << out.detail << " worst " << out.worst;
}

}  // namespace
}  // namespace enlg
