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

#include "enlg/bounds.hpp"
#include "enlg/errors.hpp"
#include "enlg/games.hpp"
#include "support/support.hpp"

namespace enlg {
namespace {

using testing::kMasterSeed;
using testing::Rng;

const CheckResult* find_check(const ValidationReport& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return &c;
  return nullptr;
}

TEST(ExtendedGameValidation, BuiltinGamesAreValid) {
  EXPECT_TRUE(bb84_extended_game().validate().ok());
  EXPECT_TRUE(chsh_extended_game().validate().ok());
  EXPECT_TRUE(bb84_monogamy_game().validate().ok());
  EXPECT_TRUE(mub_monogamy_game(3, 4).validate().ok());
}

TEST(ExtendedGameValidation, FlagsDistributionFault) {
  ExtendedGame g = chsh_extended_game();
  RealMat pi = g.pi();
  pi *= 0.9;
  const ExtendedGame bad(2, 2, 2, 2, 2, pi, g.table());
  const auto rep = bad.validate();
  EXPECT_FALSE(rep.ok());
  const CheckResult* c = find_check(rep, "pi sums to 1");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->pass);
  EXPECT_NEAR(c->worst, 0.1, 1e-12);
  EXPECT_THROW(ExtendedGame::make(2, 2, 2, 2, 2, pi, g.table()), InvariantViolation);
}

TEST(ExtendedGameValidation, FlagsOperatorAboveIdentityAndNamesKey) {
  ExtendedGame g = chsh_extended_game();
  g.V(1, 0, 1, 1) *= 1.5;
  const auto rep = g.validate();
  const CheckResult* c = find_check(rep, "V below identity");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->pass);
  EXPECT_NEAR(c->worst, 0.5, 1e-12);
  EXPECT_NE(c->detail.find("(1,0|1,1)"), std::string::npos);
}

TEST(ExtendedGameValidation, FlagsNonHermitianAndNegative) {
  ExtendedGame g = chsh_extended_game();
  g.V(0, 0, 0, 0)(0, 1) = 0.1;
  EXPECT_FALSE(find_check(g.validate(), "V Hermitian")->pass);
  ExtendedGame h = chsh_extended_game();
  h.V(0, 0, 0, 0)(1, 1) = -0.2;
  const CheckResult* c = find_check(h.validate(), "V positive semidefinite");
  EXPECT_FALSE(c->pass);
  EXPECT_NEAR(c->worst, 0.2, 1e-12);
}

TEST(MonogamyGameValidation, CompletenessFaultNamesQuestion) {
  const MonogamyGame g = bb84_monogamy_game();
  std::vector<HermMat> r = g.table();
  r[g.index(0, 1)] *= 0.5;
  const MonogamyGame bad(2, 2, 2, g.pi(), r);
  const auto rep = bad.validate();
  const CheckResult* c = find_check(rep, "R complete");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->pass);
  EXPECT_NE(c->detail.find("R(a|1)"), std::string::npos);
  EXPECT_THROW(MonogamyGame::make(2, 2, 2, g.pi(), r), InvariantViolation);
}

TEST(Construction, RejectsShapeErrors) {
  EXPECT_THROW(ExtendedGame(2, 2, 2, 2, 2, RealMat::Constant(2, 3, 1.0 / 6)), InvalidInput);
  EXPECT_THROW(MonogamyGame(2, 2, 2, RealVec::Constant(2, 0.5), {}), InvalidInput);
}

TEST(MonogamyToExtended, Bb84) {
  const ExtendedGame g = monogamy_to_extended(bb84_monogamy_game());
  int nonzero = 0;
  for (const auto& v : g.table()) nonzero += max_abs(v) > 0;
  EXPECT_EQ(nonzero, 4);
  EXPECT_LT(max_abs(g.V(0, 0, 0, 0) - basis_op(2, 0, 0)), 1e-15);
  EXPECT_LT(max_abs(g.V(1, 1, 0, 0) - basis_op(2, 1, 1)), 1e-15);
  EXPECT_EQ(g.pi(0, 1), 0.0);
  EXPECT_EQ(g.pi(1, 1), 0.5);
}

TEST(MonogamyToExtended, TrivialGameAndRowSums) {
  const MonogamyGame t(1, 1, 2, RealVec::Ones(1), {HermMat::Identity(2, 2)});
  const ExtendedGame e = monogamy_to_extended(t);
  EXPECT_EQ(e.table().size(), 1u);
  EXPECT_LT(max_abs(e.V(0, 0, 0, 0) - HermMat::Identity(2, 2)), 1e-15);

  const MonogamyGame m = mub_monogamy_game(3, 4);
  const ExtendedGame me = monogamy_to_extended(m);
  for (int x = 0; x < 4; ++x) EXPECT_NEAR(me.pi().row(x).sum(), m.pi(x), 1e-15);
}

TEST(StrategyValue, ZeroGameIsZero) {
  Rng rng(kMasterSeed + 30);
  const ExtendedGame g(2, 2, 2, 2, 2, RealMat::Constant(2, 2, 0.25));
  const QuantumStrategy s = testing::random_projective_strategy(g, 2, 2, rng);
  EXPECT_NEAR(quantum_value_of_strategy(g, s), 0.0, 1e-15);
}

TEST(StrategyValue, ProductDeterministicStrategyMatchesUnentangledEvaluation) {
  Rng rng(kMasterSeed + 31);
  for (int i = 0; i < 10; ++i) {
    const ExtendedGame g = testing::random_extended_game(2, 3, 2, 2, 2, rng);
    const UnentangledResult u = unentangled_value(g);
    QuantumStrategy s;
    s.dim_u = 2;
    s.dim_v = 1;
    const HermMat rho_u = testing::random_density(2, rng);
    s.sigma = kron(kron(rho_u, projector(u.state)), HermMat::Identity(1, 1));
    // Alice answers f(x) regardless of her state; Bob answers g(y).
    s.alice = testing::deterministic_povms(u.f, g.answers_a(), 2);
    s.bob = testing::deterministic_povms(u.g, g.answers_b(), 1);
    ASSERT_TRUE(s.validate(g.ref_dim()).ok());
    HermMat op = HermMat::Zero(2, 2);
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 3; ++y) op += g.pi(x, y) * g.V(u.f[x], u.g[y], x, y);
    EXPECT_NEAR(quantum_value_of_strategy(g, s), (op * projector(u.state)).trace().real(), 1e-12);
    EXPECT_NEAR(quantum_value_of_strategy(g, s), u.value, 1e-10);
  }
}

TEST(StrategyValue, EqualsAssemblageValueOnRandomStrategies) {
  Rng rng(kMasterSeed + 32);
  for (int i = 0; i < 100; ++i) {
    const int qa = 1 + i % 3, qb = 1 + (i / 3) % 3, aa = 1 + (i / 2) % 3, ab = 1 + (i / 5) % 3;
    const int m = 1 + i % 3, du = 1 + (i / 7) % 3, dv = 1 + (i / 4) % 3;
    const ExtendedGame g = testing::random_extended_game(qa, qb, aa, ab, m, rng);
    QuantumStrategy s;
    s.dim_u = du;
    s.dim_v = dv;
    s.sigma = testing::random_density(du * m * dv, rng);
    for (int x = 0; x < qa; ++x) s.alice.push_back(random_povm(du, aa, rng()));
    for (int y = 0; y < qb; ++y) s.bob.push_back(random_povm(dv, ab, rng()));
    ASSERT_TRUE(s.validate(m).ok()) << s.validate(m).summary();
    const Assemblage k = induced_assemblage(g, s);
    EXPECT_TRUE(k.validate().ok()) << "case " << i;
    EXPECT_LT(k.nonsignaling_defect(), 1e-10) << "case " << i;
    const double v = quantum_value_of_strategy(g, s);
    EXPECT_NEAR(v, assemblage_value(g, k), 1e-10) << "case " << i;
    EXPECT_GE(v, -1e-9);
    EXPECT_LE(v, 1 + 1e-9);
  }
}

TEST(InducedAssemblage, MatchesDirectPartialTrace) {
  Rng rng(kMasterSeed + 33);
  const ExtendedGame g = testing::random_extended_game(2, 2, 2, 2, 2, rng);
  const QuantumStrategy s = testing::random_projective_strategy(g, 2, 3, rng);
  const Assemblage k = induced_assemblage(g, s);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
          const HermMat op = kron(kron(s.alice[x][a], HermMat::Identity(2, 2)), s.bob[y][b]);
          const HermMat direct = partial_trace(op * s.sigma, {2, 2, 3}, {1});
          EXPECT_LT(max_abs(direct - k.at(a, b, x, y)), 1e-12);
        }
}

TEST(ParallelRepeat, Bb84Squared) {
  const MonogamyGame g2 = parallel_repeat(bb84_monogamy_game(), 2);
  EXPECT_EQ(g2.questions(), 4);
  EXPECT_EQ(g2.answers(), 4);
  EXPECT_EQ(g2.ref_dim(), 4);
  EXPECT_EQ(g2.table().size(), 16u);
  EXPECT_TRUE(g2.validate().ok());
  const MonogamyGame g = bb84_monogamy_game();
  // Question (1,0) and answers (0,1): R(0|1) (x) R(1|0).
  EXPECT_LT(max_abs(g2.R(1, 2) - kron(g.R(0, 1), g.R(1, 0))), 1e-15);
  EXPECT_NEAR(g2.pi(3), 0.25, 1e-15);
}

TEST(ParallelRepeat, SingleRoundIsIdentityAndOperatorsComplete) {
  Rng rng(kMasterSeed + 34);
  for (int i = 0; i < 10; ++i) {
    const MonogamyGame g = testing::random_monogamy_game(2 + i % 2, 2 + i % 3, 2, i % 2 == 0, rng, false);
    const MonogamyGame g1 = parallel_repeat(g, 1);
    EXPECT_EQ(g1.questions(), g.questions());
    for (size_t k = 0; k < g.table().size(); ++k) EXPECT_LT(max_abs(g1.table()[k] - g.table()[k]), 1e-15);
    const MonogamyGame g3 = parallel_repeat(g, 3, 1e9);
    const int dim = g3.ref_dim();
    for (int x = 0; x < g3.questions(); ++x) {
      HermMat sum = HermMat::Zero(dim, dim);
      for (int a = 0; a < g3.answers(); ++a) sum += g3.R(a, x);
      EXPECT_LT(max_abs(sum - HermMat::Identity(dim, dim)), 1e-12);
    }
    EXPECT_NEAR(g3.pi().sum(), 1.0, 1e-12);
  }
}

TEST(ParallelRepeat, SizeCap) {
  const MonogamyGame g = bb84_monogamy_game();
  EXPECT_NO_THROW(parallel_repeat(g, 3, 64));
  EXPECT_THROW(parallel_repeat(g, 3, 63), SizeCapExceeded);
  try {
    parallel_repeat(g, 7);
    FAIL() << "expected SizeCapExceeded";
  } catch (const SizeCapExceeded& e) {
    EXPECT_EQ(e.requested(), 16384.0L);
    EXPECT_EQ(e.cap(), kDefaultSizeCap);
  }
  EXPECT_THROW(parallel_repeat(g, 0), InvalidInput);
}

TEST(DecodeTuple, MostSignificantFirst) {
  EXPECT_EQ(decode_tuple(5, 3, 2), (std::vector<int>{1, 2}));
  EXPECT_EQ(decode_tuple(0, 2, 3), (std::vector<int>{0, 0, 0}));
  EXPECT_EQ(decode_tuple(7, 2, 3), (std::vector<int>{1, 1, 1}));
}

TEST(QuantumStrategyValidation, FlagsBadState) {
  Rng rng(kMasterSeed + 35);
  const ExtendedGame g = chsh_extended_game();
  QuantumStrategy s = testing::random_projective_strategy(g, 2, 2, rng);
  EXPECT_TRUE(s.validate(2).ok());
  s.sigma *= 2.0;
  EXPECT_FALSE(s.validate(2).ok());
  EXPECT_FALSE(s.validate(3).ok());
}

}  // namespace
}  // namespace enlg
