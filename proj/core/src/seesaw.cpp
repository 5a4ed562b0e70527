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

#include <algorithm>
#include <cmath>
#include <future>
#include <random>

#include "enlg/bounds.hpp"
#include "enlg/errors.hpp"
#include "enlg/quantum.hpp"
#include "enlg/tolerances.hpp"

namespace enlg {

std::vector<HermMat> random_povm(int dim, int answers, std::uint64_t seed) {
  std::vector<HermMat> out(answers, HermMat::Zero(dim, dim));
  if (dim >= answers) {
    const ComplexMat u = random_unitary(dim, seed);
    for (int c = 0; c < dim; ++c) out[c % answers] += projector(u.col(c));
    return out;
  }
  const ComplexMat u = random_unitary(dim * answers, seed);
  const ComplexMat w = u.leftCols(dim);
  for (int b = 0; b < answers; ++b) {
    const ComplexMat wb = w.middleRows(static_cast<Eigen::Index>(b) * dim, dim);
    out[b] = wb.adjoint() * wb;
  }
  return out;
}

std::vector<std::vector<HermMat>> repeat_povms(const std::vector<std::vector<HermMat>>& povms, int r) {
  if (r < 1) throw InvalidInput("repeat_povms: r must be at least 1");
  if (povms.empty() || povms.front().empty()) throw InvalidInput("repeat_povms: empty measurement set");
  const int q = static_cast<int>(povms.size()), n = static_cast<int>(povms.front().size());
  int qr = 1, nr = 1;
  for (int i = 0; i < r; ++i) {
    qr *= q;
    nr *= n;
  }
  std::vector<std::vector<HermMat>> out(qr, std::vector<HermMat>(nr));
  for (int yi = 0; yi < qr; ++yi) {
    const auto ys = decode_tuple(yi, q, r);
    for (int bi = 0; bi < nr; ++bi) {
      const auto bs = decode_tuple(bi, n, r);
      ComplexMat op = ComplexMat::Identity(1, 1);
      for (int i = 0; i < r; ++i) op = kron(op, povms[ys[i]][bs[i]]);
      out[yi][bi] = op;
    }
  }
  return out;
}

namespace {

struct RestartState {
  SeesawRestart summary;
  std::vector<std::vector<HermMat>> rho;  // [x][a] on R (x) B
  std::vector<std::vector<HermMat>> bob;  // [y][b]
};

std::uint64_t derive_seed(std::uint64_t seed, int restart, int y) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart), static_cast<std::uint32_t>(y)};
  std::uint64_t out[1];
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  out[0] = (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
  return out[0];
}

// Lower bound SDP-1: optimize Alice's side {rho_a^x} for fixed Bob measurements.
double solve_alice(const ExtendedGame& g, int db, const std::vector<std::vector<HermMat>>& bob,
                   const SolverOptions& sopts, std::vector<std::vector<HermMat>>& rho) {
  const int qa = g.questions_a(), aa = g.answers_a(), m = g.ref_dim();
  const int d = m * db;
  SdpProblem p;
  p.block_dims.assign(static_cast<size_t>(qa) * aa, d);
  auto blk = [&](int x, int a) { return x * aa + a; };
  for (int x = 0; x < qa; ++x)
    for (int a = 0; a < aa; ++a) {
      HermMat obj = HermMat::Zero(d, d);
      for (int y = 0; y < g.questions_b(); ++y) {
        const double pr = g.pi(x, y);
        if (pr == 0.0) continue;
        for (int b = 0; b < g.answers_b(); ++b) obj += pr * kron(g.V(a, b, x, y), bob[y][b]);
      }
      p.objective.add_dense(blk(x, a), obj, 0, 0.0);
    }
  for (int x = 1; x < qa; ++x)
    for (int r = 0; r < d; ++r)
      for (int c = r; c < d; ++c) {
        SdpConstraint re, im;
        for (int a = 0; a < aa; ++a) {
          re.lhs.add(blk(x, a), r, c, 1.0);
          re.lhs.add(blk(0, a), r, c, -1.0);
          if (r != c) {
            im.lhs.add(blk(x, a), r, c, cplx(0.0, 1.0));
            im.lhs.add(blk(0, a), r, c, cplx(0.0, -1.0));
          }
        }
        p.constraints.push_back(std::move(re));
        if (r != c) p.constraints.push_back(std::move(im));
      }
  SdpConstraint norm;
  norm.gamma = 1.0;
  for (int a = 0; a < aa; ++a)
    for (int r = 0; r < d; ++r) norm.lhs.add(blk(0, a), r, r, 1.0);
  p.constraints.push_back(std::move(norm));

  const SdpSolution s = solve(p, sopts);
  if (s.status != SdpStatus::Optimal)
    throw SolverFailure(std::string("see-saw SDP-1: ") + to_string(s.status));
  rho.assign(qa, std::vector<HermMat>(aa));
  for (int x = 0; x < qa; ++x)
    for (int a = 0; a < aa; ++a) rho[x][a] = s.X[blk(x, a)];
  return s.primal_value;
}

// Lower bound SDP-2: optimize Bob's measurements for fixed {rho_a^x}, using the
// map rho -> tr_R((V (x) I) rho).
double solve_bob(const ExtendedGame& g, int db, const std::vector<std::vector<HermMat>>& rho,
                 const SolverOptions& sopts, std::vector<std::vector<HermMat>>& bob) {
  const int qb = g.questions_b(), ab = g.answers_b(), m = g.ref_dim();
  SdpProblem p;
  p.block_dims.assign(static_cast<size_t>(qb) * ab, db);
  auto blk = [&](int y, int b) { return y * ab + b; };
  const ComplexMat idb = ComplexMat::Identity(db, db);
  for (int y = 0; y < qb; ++y)
    for (int b = 0; b < ab; ++b) {
      ComplexMat obj = ComplexMat::Zero(db, db);
      for (int x = 0; x < g.questions_a(); ++x) {
        const double pr = g.pi(x, y);
        if (pr == 0.0) continue;
        for (int a = 0; a < g.answers_a(); ++a) {
          const HermMat& v = g.V(a, b, x, y);
          if (max_abs(v) == 0.0) continue;
          obj += pr * partial_trace(kron(v, idb) * rho[x][a], {m, db}, {1});
        }
      }
      p.objective.add_dense(blk(y, b), (obj + obj.adjoint()) / 2.0, 0, 0.0);
    }
  for (int y = 0; y < qb; ++y)
    for (int r = 0; r < db; ++r)
      for (int c = r; c < db; ++c) {
        SdpConstraint re, im;
        re.gamma = r == c ? 1.0 : 0.0;
        for (int b = 0; b < ab; ++b) {
          re.lhs.add(blk(y, b), r, c, 1.0);
          if (r != c) im.lhs.add(blk(y, b), r, c, cplx(0.0, 1.0));
        }
        p.constraints.push_back(std::move(re));
        if (r != c) p.constraints.push_back(std::move(im));
      }
  const SdpSolution s = solve(p, sopts);
  if (s.status != SdpStatus::Optimal)
    throw SolverFailure(std::string("see-saw SDP-2: ") + to_string(s.status));
  bob.assign(qb, std::vector<HermMat>(ab));
  for (int y = 0; y < qb; ++y)
    for (int b = 0; b < ab; ++b) bob[y][b] = s.X[blk(y, b)];
  return s.primal_value;
}

RestartState run_restart(const ExtendedGame& g, int db, const SeesawOptions& opts, int restart) {
  RestartState st;
  if (restart == 0 && !opts.initial_bob.empty()) {
    st.bob = opts.initial_bob;
  } else {
    st.bob.resize(g.questions_b());
    for (int y = 0; y < g.questions_b(); ++y)
      st.bob[y] = random_povm(db, g.answers_b(), derive_seed(opts.seed, restart, y));
  }
  double prev = -1.0;
  try {
    for (int it = 0; it < opts.max_iter; ++it) {
      solve_alice(g, db, st.bob, opts.solver, st.rho);
      const double win = solve_bob(g, db, st.rho, opts.solver, st.bob);
      st.summary.iterations = it + 1;
      st.summary.sdp_value = win;
      const double diff = win - prev;
      prev = win;
      if (diff <= opts.inner_tol) break;
    }
    st.summary.ok = true;
  } catch (const std::exception& e) {
    st.summary.ok = false;
    st.summary.error = e.what();
  }
  return st;
}

struct Extraction {
  QuantumStrategy strategy;
  std::vector<std::vector<HermMat>> referee_ops;
  HermMat tau;
};

Extraction extract(const ExtendedGame& g, int db, const RestartState& st) {
  const int m = g.ref_dim(), d = m * db;
  const int qa = g.questions_a(), aa = g.answers_a();
  Extraction ex;
  HermMat tau = HermMat::Zero(d, d);
  for (int a = 0; a < aa; ++a) tau += st.rho[0][a];
  tau = (tau + tau.adjoint()) / 2.0;
  ex.tau = tau;
  const HermMat root = psd_sqrt(tau);
  const HermMat inv_root = psd_inv_sqrt(tau, tol::kPinvCutoff);

  // psi = sum_k e_k (x) sqrt(tau) e_k on U (x) R (x) B with U a copy of R (x) B.
  ComplexVec psi = ComplexVec::Zero(static_cast<Eigen::Index>(d) * d);
  for (int k = 0; k < d; ++k) psi.segment(static_cast<Eigen::Index>(k) * d, d) = root.col(k);

  QuantumStrategy& s = ex.strategy;
  s.dim_u = d;
  s.dim_v = db;
  s.sigma = psi * psi.adjoint();
  s.alice.assign(qa, std::vector<HermMat>(aa));
  for (int x = 0; x < qa; ++x) {
    HermMat total = HermMat::Zero(d, d);
    for (int a = 0; a < aa; ++a) {
      HermMat op = (inv_root * st.rho[x][a] * inv_root).conjugate();
      op = (op + op.adjoint()) / 2.0;
      s.alice[x][a] = op;
      total += op;
    }
    s.alice[x][aa - 1] += HermMat::Identity(d, d) - total;
  }
  s.bob = st.bob;
  for (auto& per_y : s.bob)
    for (auto& op : per_y) op = (op + op.adjoint()) / 2.0;

  const HermMat pur = partial_trace(tau, {m, db}, {0});
  const HermMat pur_inv_root = psd_inv_sqrt(pur, tol::kPinvCutoff);
  ex.referee_ops.assign(qa, std::vector<HermMat>(aa));
  for (int x = 0; x < qa; ++x)
    for (int a = 0; a < aa; ++a)
      ex.referee_ops[x][a] = pur_inv_root * partial_trace(st.rho[x][a], {m, db}, {0}) * pur_inv_root;
  return ex;
}

}  // namespace

SeesawResult seesaw_lower_bound(const ExtendedGame& g, const SeesawOptions& opts) {
  if (opts.restarts < 1) throw InvalidInput("seesaw: restarts must be at least 1");
  const int db = opts.bob_dim > 0 ? opts.bob_dim : g.ref_dim();
  if (!opts.initial_bob.empty()) {
    bool ok = static_cast<int>(opts.initial_bob.size()) == g.questions_b();
    for (const auto& per_y : opts.initial_bob) {
      ok = ok && static_cast<int>(per_y.size()) == g.answers_b();
      for (const auto& op : per_y) ok = ok && op.rows() == db && op.cols() == db;
    }
    if (!ok) throw InvalidInput("seesaw: initial_bob does not match the game alphabets and bob_dim");
  }

  std::vector<RestartState> states(opts.restarts);
  if (opts.threads > 1) {
    for (int start = 0; start < opts.restarts; start += opts.threads) {
      std::vector<std::future<RestartState>> jobs;
      const int end = std::min(opts.restarts, start + opts.threads);
      for (int r = start; r < end; ++r)
        jobs.push_back(std::async(std::launch::async, run_restart, std::cref(g), db, std::cref(opts), r));
      for (int r = start; r < end; ++r) states[r] = jobs[r - start].get();
    }
  } else {
    for (int r = 0; r < opts.restarts; ++r) states[r] = run_restart(g, db, opts, r);
  }

  SeesawResult res;
  double best = -INFINITY;
  Extraction best_ex;
  for (int r = 0; r < opts.restarts; ++r) {
    RestartState& st = states[r];
    if (st.summary.ok) {
      try {
        Extraction ex = extract(g, db, st);
        st.summary.value = quantum_value_of_strategy(g, ex.strategy);
        if (st.summary.value > best + tol::kTieBreak) {
          best = st.summary.value;
          res.best_restart = r;
          best_ex = std::move(ex);
        }
      } catch (const std::exception& e) {
        st.summary.ok = false;
        st.summary.error = e.what();
      }
    }
    res.restarts.push_back(st.summary);
    res.iterations += st.summary.iterations;
    if (st.summary.ok) ++res.restarts_used;
  }
  if (res.best_restart < 0)
    throw SolverFailure("seesaw: every restart failed; first error: " + res.restarts.front().error);
  const RestartState& win = states[res.best_restart];
  res.value = best;
  res.sdp_value = win.summary.sdp_value;
  res.strategy = std::move(best_ex.strategy);
  res.alice_povm = res.strategy.alice;
  res.bob_povm = res.strategy.bob;
  res.alice_referee_ops = std::move(best_ex.referee_ops);
  res.tau = std::move(best_ex.tau);
  return res;
}

}  // namespace enlg
