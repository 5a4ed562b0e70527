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
#include "enlg/tolerances.hpp"

namespace enlg {
namespace {

long double count_functions(int questions, int answers) {
  return std::pow(static_cast<long double>(answers), questions);
}

// Advances a base-`base` counter, most significant digit first. Returns false
// after the last value.
bool next_function(std::vector<int>& f, int base) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    if (++f[i] < base) return true;
    f[i] = 0;
  }
  return false;
}

std::pair<double, ComplexVec> top_eigen(const HermMat& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMat> es((h + h.adjoint()) / 2.0);
  const Eigen::Index n = h.rows();
  return {es.eigenvalues()(n - 1), es.eigenvectors().col(n - 1)};
}

}  // namespace

UnentangledResult unentangled_value(const ExtendedGame& g, long double cap) {
  const long double count = count_functions(g.questions_a(), g.answers_a()) *
                            count_functions(g.questions_b(), g.answers_b());
  if (count > cap)
    throw SizeCapExceeded("unentangled_value: " + std::to_string(static_cast<double>(count)) +
                              " strategy pairs exceed the enumeration cap " +
                              std::to_string(static_cast<double>(cap)),
                          count, cap);
  const int m = g.ref_dim();
  UnentangledResult best;
  best.value = -1.0;
  std::vector<int> f(g.questions_a(), 0);
  do {
    // Partial sums over x for fixed f: S_y(b) = sum_x pi(x,y) V(f(x),b|x,y).
    std::vector<HermMat> partial(static_cast<size_t>(g.questions_b()) * g.answers_b(),
                                 HermMat::Zero(m, m));
    for (int y = 0; y < g.questions_b(); ++y)
      for (int b = 0; b < g.answers_b(); ++b)
        for (int x = 0; x < g.questions_a(); ++x)
          if (g.pi(x, y) != 0.0) partial[y * g.answers_b() + b] += g.pi(x, y) * g.V(f[x], b, x, y);
    std::vector<int> gf(g.questions_b(), 0);
    do {
      HermMat s = HermMat::Zero(m, m);
      for (int y = 0; y < g.questions_b(); ++y) s += partial[y * g.answers_b() + gf[y]];
      auto [val, vecv] = top_eigen(s);
      if (val > best.value + tol::kTieBreak) {
        best.value = val;
        best.f = f;
        best.g = gf;
        best.state = vecv;
      }
    } while (next_function(gf, g.answers_b()));
  } while (next_function(f, g.answers_a()));
  return best;
}

MonogamyUnentangledResult monogamy_unentangled_value(const MonogamyGame& g, long double cap) {
  const long double count = count_functions(g.questions(), g.answers());
  if (count > cap)
    throw SizeCapExceeded("monogamy_unentangled_value: " + std::to_string(static_cast<double>(count)) +
                              " answer functions exceed the enumeration cap " +
                              std::to_string(static_cast<double>(cap)),
                          count, cap);
  const int m = g.ref_dim();
  MonogamyUnentangledResult best;
  best.value = -1.0;
  std::vector<int> f(g.questions(), 0);
  do {
    HermMat s = HermMat::Zero(m, m);
    for (int x = 0; x < g.questions(); ++x) s += g.pi(x) * g.R(f[x], x);
    auto [val, vecv] = top_eigen(s);
    if (val > best.value + tol::kTieBreak) {
      best.value = val;
      best.f = f;
      best.state = vecv;
    }
  } while (next_function(f, g.answers()));
  return best;
}

}  // namespace enlg
