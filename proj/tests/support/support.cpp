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

#include "support.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "enlg/hierarchy.hpp"
#include "enlg/monogamy.hpp"
#include "enlg/quantum.hpp"

namespace enlg::testing {

namespace {

double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void record(PropertyOutcome& out, double deviation, double limit, const std::string& what) {
  ++out.cases;
  out.worst = std::max(out.worst, deviation);
  if (!(deviation <= limit)) {
    ++out.failures;
    if (out.detail.empty()) out.detail = what;
  }
}

void record_error(PropertyOutcome& out, const std::string& what) {
  ++out.cases;
  ++out.failures;
  if (out.detail.empty()) out.detail = what;
}

double golden_min(const std::function<double(double)>& f, double lo, double hi, int iters) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - r * (b - a), d = a + r * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iters; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - r * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + r * (b - a);
      fd = f(d);
    }
  }
  return std::min(fc, fd);
}

}  // namespace

ComplexMat gaussian_matrix(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  ComplexMat m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = cplx(n(rng), n(rng));
  return m;
}

HermMat random_hermitian(int n, Rng& rng) {
  const ComplexMat g = gaussian_matrix(n, n, rng);
  return (g + g.adjoint()) / 2.0;
}

HermMat random_density(int n, Rng& rng) {
  const ComplexMat g = gaussian_matrix(n, n, rng);
  HermMat rho = g * g.adjoint();
  return rho / rho.trace().real();
}

HermMat random_projector(int n, int rank, Rng& rng) {
  const ComplexMat u = random_unitary(n, rng());
  return u.leftCols(rank) * u.leftCols(rank).adjoint();
}

std::vector<HermMat> random_projective_povm(int n, int answers, Rng& rng) {
  const ComplexMat u = random_unitary(n, rng());
  std::vector<HermMat> out(answers, HermMat::Zero(n, n));
  for (int c = 0; c < n; ++c) out[c % answers] += projector(u.col(c));
  return out;
}

ExtendedGame random_extended_game(int qa, int qb, int aa, int ab, int m, Rng& rng) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  RealMat pi(qa, qb);
  for (int x = 0; x < qa; ++x)
    for (int y = 0; y < qb; ++y) pi(x, y) = u(rng);
  pi /= pi.sum();
  ExtendedGame g(qa, qb, aa, ab, m, pi);
  for (int a = 0; a < aa; ++a)
    for (int b = 0; b < ab; ++b)
      for (int x = 0; x < qa; ++x)
        for (int y = 0; y < qb; ++y) {
          const ComplexMat f = gaussian_matrix(m, m, rng);
          HermMat h = f * f.adjoint();
          h = (h + h.adjoint()) / 2.0;
          g.V(a, b, x, y) = h * (u(rng) / max_eigenvalue(h));
        }
  return g;
}

MonogamyGame random_monogamy_game(int q, int answers, int m, bool projective, Rng& rng, bool uniform) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  RealVec pi(q);
  for (int x = 0; x < q; ++x) pi(x) = uniform ? 1.0 : u(rng);
  pi /= pi.sum();
  std::vector<HermMat> ops;
  for (int x = 0; x < q; ++x) {
    const auto meas = projective ? random_projective_povm(m, answers, rng) : random_povm(m, answers, rng());
    for (const auto& op : meas) ops.push_back((op + op.adjoint()) / 2.0);
  }
  return MonogamyGame(q, answers, m, pi, std::move(ops));
}

QuantumStrategy random_projective_strategy(const ExtendedGame& g, int dim_u, int dim_v, Rng& rng) {
  QuantumStrategy s;
  s.dim_u = dim_u;
  s.dim_v = dim_v;
  s.sigma = random_density(dim_u * g.ref_dim() * dim_v, rng);
  for (int x = 0; x < g.questions_a(); ++x) s.alice.push_back(random_projective_povm(dim_u, g.answers_a(), rng));
  for (int y = 0; y < g.questions_b(); ++y) s.bob.push_back(random_projective_povm(dim_v, g.answers_b(), rng));
  return s;
}

std::vector<std::vector<HermMat>> deterministic_povms(const std::vector<int>& answers, int num_answers,
                                                      int dim) {
  std::vector<std::vector<HermMat>> out;
  for (int a : answers) {
    std::vector<HermMat> meas(num_answers, HermMat::Zero(dim, dim));
    meas[a] = HermMat::Identity(dim, dim);
    out.push_back(std::move(meas));
  }
  return out;
}

SdpProblem random_small_sdp(int n, int extra_constraints, Rng& rng) {
  SdpProblem p;
  p.block_dims = {n};
  p.objective.add_dense(0, random_hermitian(n, rng));
  SdpConstraint trace;
  trace.gamma = 1.0;
  for (int i = 0; i < n; ++i) trace.lhs.add(0, i, i, 1.0);
  p.constraints.push_back(trace);
  const HermMat x0 = 0.5 * random_density(n, rng) + 0.5 * HermMat::Identity(n, n) / n;
  for (int j = 0; j < extra_constraints; ++j) {
    const HermMat b = random_hermitian(n, rng);
    SdpConstraint c;
    c.lhs.add_dense(0, b);
    c.gamma = (b * x0).trace().real();
    p.constraints.push_back(std::move(c));
  }
  return p;
}

double dual_oracle_value(const SdpProblem& p) {
  const int n = p.block_dims.at(0);
  const HermMat a = dense_block(p.objective, 0, n);
  std::vector<HermMat> b;
  std::vector<double> gamma;
  for (size_t j = 1; j < p.constraints.size(); ++j) {
    b.push_back(dense_block(p.constraints[j].lhs, 0, n));
    gamma.push_back(p.constraints[j].gamma);
  }
  const int k = static_cast<int>(b.size());
  std::vector<double> y(k, 0.0);
  double box = 20.0;
  for (int attempt = 0; attempt < 6; ++attempt, box *= 4.0) {
    std::function<double(int)> level = [&](int j) -> double {
      if (j == k) {
        HermMat h = a;
        double lin = 0.0;
        for (int i = 0; i < k; ++i) {
          h -= y[i] * b[i];
          lin += y[i] * gamma[i];
        }
        return max_eigenvalue((h + h.adjoint()) / 2.0) + lin;
      }
      return golden_min(
          [&](double v) {
            y[j] = v;
            return level(j + 1);
          },
          -box, box, 70);
    };
    const double v = level(0);
    // Re-run with a wider box if the minimizer sits near the edge.
    double edge = 0.0;
    for (double yi : y) edge = std::max(edge, std::abs(yi));
    if (edge < 0.95 * box) return v;
  }
  return NAN;
}

PropertyOutcome projector_norm_suite(int cases, std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  PropertyOutcome out;
  out.name = "projector-norm identity";
  Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    const int n = 2 + i % 5;
    std::uniform_int_distribution<int> rank(1, n);
    const HermMat p0 = random_projector(n, rank(rng), rng);
    const HermMat p1 = random_projector(n, rank(rng), rng);
    const double lhs = spectral_norm(p0 + p1);
    const double rhs = 1.0 + spectral_norm(p0 * p1);
    std::ostringstream what;
    what << "case " << i << " (n=" << n << "): " << lhs << " vs " << rhs;
    record(out, std::abs(lhs - rhs), 1e-9, what.str());
  }
  out.seconds = elapsed(t0);
  return out;
}

std::vector<PropertyOutcome> ordering_and_moment_suites(int cases, std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  PropertyOutcome chain, moment;
  chain.name = "value ordering chain";
  moment.name = "moment-entry bound";
  Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    const ExtendedGame g = i % 2 == 0
                               ? random_extended_game(2, 2, 2, 2, 2, rng)
                               : monogamy_to_extended(random_monogamy_game(2, 2, 2, i % 4 == 1, rng, i % 3 != 0));
    try {
      const auto un = unentangled_value(g);
      SeesawOptions so;
      so.restarts = 2;
      so.seed = seed + i;
      so.initial_bob = deterministic_povms(un.g, g.answers_b(), g.ref_dim());
      const double ss = seesaw_lower_bound(g, so).value;
      const auto qc = qc_upper_bound(g, parse_level("1"));
      const double ns = nonsignaling_value(g).value;
      const double dev = std::max({un.value - ss, ss - qc.value, un.value - ns, 0.0});
      std::ostringstream what;
      what << "case " << i << ": unentangled " << un.value << ", see-saw " << ss << ", qc1 " << qc.value
           << ", ns " << ns;
      record(chain, dev, 1e-6, what.str());
      const double big = max_abs(qc.moment);
      std::ostringstream mw;
      mw << "case " << i << ": max |M| = " << big;
      record(moment, std::max(0.0, big - 1.0), 1e-6, mw.str());
    } catch (const std::exception& e) {
      record_error(chain, "case " + std::to_string(i) + ": " + e.what());
      record_error(moment, "case " + std::to_string(i) + ": " + e.what());
    }
  }
  chain.seconds = moment.seconds = elapsed(t0);
  return {chain, moment};
}

PropertyOutcome honest_moment_suite(int cases, std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  PropertyOutcome out;
  out.name = "honest moment matrices satisfy constraints";
  Rng rng(seed);
  const char* levels[] = {"1", "1+AB", "2"};
  for (int i = 0; i < cases; ++i) {
    const int qa = 2 + i % 2, aa = 2 + (i / 2) % 2, m = 1 + i % 3;
    const ExtendedGame g = random_extended_game(qa, 2, aa, 2, m, rng);
    const HierarchyLevel lvl = parse_level(levels[i % 3]);
    const QuantumStrategy s = random_projective_strategy(g, 2 + i % 2, 2, rng);
    try {
      const MomentLayout layout = moment_layout(g, lvl);
      const HermMat mm = honest_moment_matrix(layout, s);
      const auto viol = check_moment_constraints(layout, hierarchy_constraints(layout, g), mm);
      const double obj_dev = std::abs(moment_objective(layout, g, mm) - quantum_value_of_strategy(g, s));
      const double psd_dev = std::max(0.0, -min_eigenvalue(mm));
      std::ostringstream what;
      what << "case " << i << " level " << lvl.to_string() << ": constraint " << viol.worst << " ("
           << to_string(viol.kind) << "), objective " << obj_dev << ", psd " << psd_dev;
      record(out, std::max({viol.worst, obj_dev, psd_dev}), 1e-8, what.str());
    } catch (const std::exception& e) {
      record_error(out, "case " + std::to_string(i) + ": " + e.what());
    }
  }
  out.seconds = elapsed(t0);
  return out;
}

PropertyOutcome overlap_power_suite(int cases, std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  PropertyOutcome out;
  out.name = "c(G^2) = c(G)^2";
  Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    const int q = 2 + i % 2, n = 2 + (i / 2) % 2, m = 2 + (i / 4) % 2;
    const MonogamyGame g = random_monogamy_game(q, n, m, i % 2 == 0, rng, i % 3 != 0);
    const double c = max_overlap(g).c_value;
    const double c2 = max_overlap(parallel_repeat(g, 2), 2).c_value;
    std::ostringstream what;
    what << "case " << i << ": c = " << c << ", c(G^2) = " << c2;
    record(out, std::abs(c2 - c * c), 1e-9, what.str());
  }
  out.seconds = elapsed(t0);
  return out;
}

PropertyOutcome teleport_suite(int cases, std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  PropertyOutcome out;
  out.name = "teleportation is the identity channel";
  Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    const int m = 2 + i % 3;
    const HermMat rho = random_density(m, rng);
    const double dev = max_abs(teleport_simulate(m, rho) - rho);
    record(out, dev, 1e-10, "case " + std::to_string(i) + " (m=" + std::to_string(m) + ")");
  }
  out.seconds = elapsed(t0);
  return out;
}

PropertyOutcome duality_gap_suite(int cases, std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  PropertyOutcome out;
  out.name = "SDP duality gap at Optimal";
  Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    const int n = 2 + i % 3, k = i % 4;
    const SdpProblem p = random_small_sdp(n, k, rng);
    const SdpSolution s = solve(p);
    std::ostringstream what;
    what << "case " << i << " (n=" << n << ", " << k + 1 << " constraints): status " << to_string(s.status)
         << ", gap " << s.gap;
    if (s.status != SdpStatus::Optimal)
      record_error(out, what.str());
    else
      record(out, std::abs(s.primal_value - s.dual_value), 1e-7, what.str());
  }
  out.seconds = elapsed(t0);
  return out;
}

std::vector<SprCase> spr_spot_check(int games, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<SprCase> out;
  for (int i = 0; i < games; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    SprCase c;
    c.dim = 2 + i % 2;
    const MonogamyGame g = random_monogamy_game(2, c.dim, c.dim, true, rng);
    c.c = max_overlap(g).c_value;
    c.closed_form = spr_two_question_value(g, 2);

    SeesawOptions base_opts;
    base_opts.restarts = 64;
    base_opts.bob_dim = 1;
    base_opts.seed = seed + i;
    const SeesawResult base = seesaw_lower_bound(monogamy_to_extended(g), base_opts);
    c.base_seesaw = base.value;

    SeesawOptions opts;
    opts.restarts = 4;
    opts.bob_dim = 1;
    opts.seed = seed + i;
    opts.initial_bob = repeat_povms(base.bob_povm, 2);
    c.seesaw = seesaw_lower_bound(monogamy_to_extended(parallel_repeat(g, 2)), opts).value;
    c.seconds = elapsed(t0);
    out.push_back(c);
  }
  return out;
}

}  // namespace enlg::testing
