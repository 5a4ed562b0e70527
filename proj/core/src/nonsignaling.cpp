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

#include <cmath>

#include "enlg/bounds.hpp"
#include "enlg/errors.hpp"

namespace enlg {
namespace {

// Adds real- and imaginary-part constraints for sum_k coef_k X_{block_k} = 0.
void add_matrix_equality(SdpProblem& p, const std::vector<std::pair<int, double>>& terms, int dim) {
  for (int r = 0; r < dim; ++r)
    for (int c = r; c < dim; ++c) {
      SdpConstraint re, im;
      for (const auto& [blk, coef] : terms) {
        re.lhs.add(blk, r, c, coef);
        if (r != c) im.lhs.add(blk, r, c, cplx(0.0, coef));
      }
      p.constraints.push_back(std::move(re));
      if (r != c) p.constraints.push_back(std::move(im));
    }
}

}  // namespace

SdpProblem nonsignaling_sdp(const ExtendedGame& g) {
  const int qa = g.questions_a(), qb = g.questions_b(), aa = g.answers_a(), ab = g.answers_b();
  const int m = g.ref_dim();
  SdpProblem p;
  auto blk = [&](int a, int b, int x, int y) { return static_cast<int>(g.index(a, b, x, y)); };
  p.block_dims.assign(g.table().size(), m);
  for (int a = 0; a < aa; ++a)
    for (int b = 0; b < ab; ++b)
      for (int x = 0; x < qa; ++x)
        for (int y = 0; y < qb; ++y)
          if (g.pi(x, y) != 0.0) p.objective.add_dense(blk(a, b, x, y), g.pi(x, y) * g.V(a, b, x, y));

  // Alice's marginal sum_b K(a,b|x,y) does not depend on y.
  for (int x = 0; x < qa; ++x)
    for (int a = 0; a < aa; ++a)
      for (int y = 1; y < qb; ++y) {
        std::vector<std::pair<int, double>> t;
        for (int b = 0; b < ab; ++b) {
          t.emplace_back(blk(a, b, x, y), 1.0);
          t.emplace_back(blk(a, b, x, 0), -1.0);
        }
        add_matrix_equality(p, t, m);
      }
  // Bob's marginal sum_a K(a,b|x,y) does not depend on x. For y >= 1 the last
  // answer follows from the others together with Alice's family.
  for (int y = 0; y < qb; ++y)
    for (int b = 0; b < ab; ++b) {
      if (y >= 1 && b == ab - 1) continue;
      for (int x = 1; x < qa; ++x) {
        std::vector<std::pair<int, double>> t;
        for (int a = 0; a < aa; ++a) {
          t.emplace_back(blk(a, b, x, y), 1.0);
          t.emplace_back(blk(a, b, 0, y), -1.0);
        }
        add_matrix_equality(p, t, m);
      }
    }
  SdpConstraint norm;
  norm.gamma = 1.0;
  for (int a = 0; a < aa; ++a)
    for (int b = 0; b < ab; ++b)
      for (int r = 0; r < m; ++r) norm.lhs.add(blk(a, b, 0, 0), r, r, 1.0);
  p.constraints.push_back(std::move(norm));
  return p;
}

NonsignalingResult nonsignaling_value(const ExtendedGame& g, const SolverOptions& opts) {
  const SdpProblem p = nonsignaling_sdp(g);
  NonsignalingResult res;
  res.num_constraints = static_cast<int>(p.constraints.size());
  res.solution = solve(p, opts);
  if (res.solution.status != SdpStatus::Optimal)
    throw SolverFailure(std::string("nonsignaling_value: SDP solver returned ") +
                        to_string(res.solution.status) + " (relative gap " +
                        std::to_string(res.solution.gap) + ")");
  res.value = res.solution.primal_value;
  Assemblage& k = res.assemblage;
  k.questions_a = g.questions_a();
  k.questions_b = g.questions_b();
  k.answers_a = g.answers_a();
  k.answers_b = g.answers_b();
  k.ref_dim = g.ref_dim();
  k.K = res.solution.X;
  return res;
}

}  // namespace enlg
