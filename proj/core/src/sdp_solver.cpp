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
#include <cstdio>
#include <limits>
#include <ostream>

#include "enlg/errors.hpp"
#include "enlg/sdp.hpp"

namespace enlg {
namespace {

struct Triplet {
  int row;
  int col;
  double value;
};

struct Part {
  int block;
  std::vector<Triplet> full;   // both triangles
  std::vector<int> cols;       // distinct column indices of full
  std::vector<int> col_slot;   // slot in cols for each entry of full
};

struct Tagged {
  int constraint;
  int row;
  int col;
  double value;
};

struct Prepared {
  int nb = 0;
  int m = 0;
  std::vector<int> dims;
  std::vector<std::vector<Part>> parts;       // per constraint
  std::vector<std::vector<Tagged>> by_block;  // per block, full entries
  std::vector<RealMat> C;
  RealVec b;
  double norm_b = 0.0;
  double norm_C = 0.0;
};

Prepared prepare(const RealSdp& p) {
  Prepared d;
  d.nb = static_cast<int>(p.block_dims.size());
  d.m = static_cast<int>(p.constraints.size());
  d.dims = p.block_dims;
  d.b = p.gamma;
  d.parts.resize(d.m);
  d.by_block.resize(d.nb);
  for (int k = 0; k < d.m; ++k) {
    std::vector<std::vector<Triplet>> per(d.nb);
    for (const auto& e : p.constraints[k]) {
      if (e.value == 0.0) continue;
      per[e.block].push_back({e.row, e.col, e.value});
      if (e.row != e.col) per[e.block].push_back({e.col, e.row, e.value});
    }
    for (int blk = 0; blk < d.nb; ++blk) {
      if (per[blk].empty()) continue;
      Part part;
      part.block = blk;
      part.full = std::move(per[blk]);
      for (const auto& t : part.full) {
        auto it = std::find(part.cols.begin(), part.cols.end(), t.col);
        if (it == part.cols.end()) {
          part.col_slot.push_back(static_cast<int>(part.cols.size()));
          part.cols.push_back(t.col);
        } else {
          part.col_slot.push_back(static_cast<int>(it - part.cols.begin()));
        }
        d.by_block[blk].push_back({k, t.row, t.col, t.value});
      }
      d.parts[k].push_back(std::move(part));
    }
  }
  for (int blk = 0; blk < d.nb; ++blk) d.C.push_back(RealMat::Zero(d.dims[blk], d.dims[blk]));
  for (const auto& e : p.objective) {
    d.C[e.block](e.row, e.col) += e.value;
    if (e.row != e.col) d.C[e.block](e.col, e.row) += e.value;
  }
  d.norm_b = d.b.size() ? d.b.cwiseAbs().maxCoeff() : 0.0;
  for (const auto& c : d.C) d.norm_C = std::max(d.norm_C, c.size() ? c.cwiseAbs().maxCoeff() : 0.0);
  return d;
}

// A(X)_k = <A_k, X>.
RealVec apply_A(const Prepared& d, const std::vector<RealMat>& x) {
  RealVec out = RealVec::Zero(d.m);
  for (int k = 0; k < d.m; ++k) {
    double s = 0.0;
    for (const auto& part : d.parts[k])
      for (const auto& t : part.full) s += t.value * x[part.block](t.row, t.col);
    out(k) = s;
  }
  return out;
}

std::vector<RealMat> apply_AT(const Prepared& d, const RealVec& y) {
  std::vector<RealMat> out;
  for (int blk = 0; blk < d.nb; ++blk) out.push_back(RealMat::Zero(d.dims[blk], d.dims[blk]));
  for (int blk = 0; blk < d.nb; ++blk)
    for (const auto& t : d.by_block[blk]) out[blk](t.row, t.col) += y(t.constraint) * t.value;
  return out;
}

double frob_inner(const std::vector<RealMat>& a, const std::vector<RealMat>& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i].cwiseProduct(b[i]).sum();
  return s;
}

double max_abs_all(const std::vector<RealMat>& a) {
  double s = 0.0;
  for (const auto& m : a)
    if (m.size()) s = std::max(s, m.cwiseAbs().maxCoeff());
  return s;
}

// Largest alpha with x + alpha*dx PSD, given the Cholesky factor of x.
double max_step(const Eigen::LLT<RealMat>& llt, const RealMat& dx) {
  const RealMat& l = llt.matrixL();
  RealMat w = l.triangularView<Eigen::Lower>().solve(dx);
  w = l.triangularView<Eigen::Lower>().solve(w.transpose()).transpose();
  w = (w + w.transpose()) / 2.0;
  Eigen::SelfAdjointEigenSolver<RealMat> es(w, Eigen::EigenvaluesOnly);
  const double lmin = es.eigenvalues()(0);
  return lmin >= 0 ? std::numeric_limits<double>::infinity() : -1.0 / lmin;
}

RealMat symmetrize(const RealMat& a) { return (a + a.transpose()) / 2.0; }

}  // namespace

RealSdpSolution solve_real(const RealSdp& p, const SolverOptions& opts) {
  const Prepared d = prepare(p);
  RealSdpSolution sol;
  if (d.m == 0) throw InvalidInput("sdp: constraint list is empty");

  int ntot = 0;
  for (int n : d.dims) ntot += n;
  const double tau = 1.0 + d.norm_b;
  std::vector<RealMat> X, Z;
  for (int n : d.dims) {
    X.push_back(tau * RealMat::Identity(n, n));
    Z.push_back(tau * RealMat::Identity(n, n));
  }
  RealVec y = RealVec::Zero(d.m);

  const double pres_scale = std::max(1.0, d.norm_b);
  const double dres_scale = std::max(1.0, d.norm_C);
  int stalled = 0;

  auto finish = [&](SdpStatus st, int iter) {
    sol.X = X;
    sol.Z = Z;
    sol.y = y;
    sol.status = st;
    sol.iterations = iter;
    return sol;
  };

  if (opts.log) *opts.log << " iter      primal_obj        dual_obj    rel_gap   pres      dres      mu\n";

  for (int iter = 0;; ++iter) {
    const RealVec rp = d.b - apply_A(d, X);
    std::vector<RealMat> Rd = apply_AT(d, y);
    for (int blk = 0; blk < d.nb; ++blk) Rd[blk] = d.C[blk] - Rd[blk] + Z[blk];
    const double pobj = frob_inner(d.C, X);
    const double dobj = d.b.dot(y);
    const double mu = frob_inner(X, Z) / ntot;
    const double pres = rp.size() ? rp.cwiseAbs().maxCoeff() : 0.0;
    const double dres = max_abs_all(Rd);
    const double gap = std::abs(pobj - dobj) / std::max(1.0, std::abs(pobj));
    sol.primal_value = pobj;
    sol.dual_value = dobj;
    sol.gap = gap;
    sol.primal_residual = pres;
    sol.dual_residual = dres;
    sol.history.push_back({iter, pobj, dobj, gap, pres, dres, mu});
    if (opts.log) {
      char line[160];
      std::snprintf(line, sizeof line, "%5d %15.8e %15.8e %9.2e %9.2e %9.2e %9.2e\n", iter, pobj,
                    dobj, gap, pres, dres, mu);
      *opts.log << line;
    }

    if (gap <= opts.gap_tol && pres <= opts.feas_tol * pres_scale &&
        dres <= opts.feas_tol * dres_scale)
      return finish(SdpStatus::Optimal, iter);
    if (!std::isfinite(pobj) || !std::isfinite(dobj)) return finish(SdpStatus::NumericalFailure, iter);
    if ((pres <= 1e-6 * pres_scale && pobj > 1e10) || (dres <= 1e-6 * dres_scale && dobj < -1e10))
      return finish(SdpStatus::Infeasible, iter);
    if (iter >= opts.max_iter) return finish(SdpStatus::MaxIter, iter);

    std::vector<RealMat> Zi(d.nb);
    std::vector<Eigen::LLT<RealMat>> lx(d.nb), lz(d.nb);
    for (int blk = 0; blk < d.nb; ++blk) {
      lz[blk].compute(Z[blk]);
      lx[blk].compute(X[blk]);
      if (lz[blk].info() != Eigen::Success || lx[blk].info() != Eigen::Success)
        return finish(SdpStatus::NumericalFailure, iter);
      Zi[blk] = lz[blk].solve(RealMat::Identity(d.dims[blk], d.dims[blk]));
      Zi[blk] = symmetrize(Zi[blk]);
    }

    // Schur complement M_kl = tr(A_k X A_l Z^{-1}).
    RealMat M = RealMat::Zero(d.m, d.m);
    for (int k = 0; k < d.m; ++k) {
      for (const auto& part : d.parts[k]) {
        const int blk = part.block;
        const int n = d.dims[blk];
        RealMat P = RealMat::Zero(n, static_cast<Eigen::Index>(part.cols.size()));
        for (size_t t = 0; t < part.full.size(); ++t)
          P.col(part.col_slot[t]) += part.full[t].value * X[blk].col(part.full[t].row);
        RealMat Zrows(part.cols.size(), n);
        for (size_t q = 0; q < part.cols.size(); ++q) Zrows.row(q) = Zi[blk].row(part.cols[q]);
        const RealMat G = P * Zrows;  // X A_k Z^{-1} restricted to this block
        for (const auto& t : d.by_block[blk]) M(k, t.constraint) += t.value * G(t.col, t.row);
      }
    }
    M = symmetrize(M);

    Eigen::LLT<RealMat> schur;
    double reg = 1e-12;
    const double diag_scale = std::max(1.0, M.diagonal().cwiseAbs().maxCoeff());
    for (;;) {
      RealMat Mr = M;
      if (reg > 1e-12) Mr.diagonal().array() += reg * diag_scale;
      schur.compute(Mr);
      if (schur.info() == Eigen::Success) break;
      reg *= 2.0;
      if (reg > 1e-6) return finish(SdpStatus::NumericalFailure, iter);
    }

    auto direction = [&](double smu, const std::vector<RealMat>* corr, RealVec& dy,
                         std::vector<RealMat>& dX, std::vector<RealMat>& dZ) {
      std::vector<RealMat> R(d.nb);
      for (int blk = 0; blk < d.nb; ++blk) {
        const int n = d.dims[blk];
        RealMat t = smu * RealMat::Identity(n, n);
        if (corr) t -= (*corr)[blk];
        R[blk] = t * Zi[blk] - X[blk] + X[blk] * Rd[blk] * Zi[blk];
      }
      const RealVec rhs = apply_A(d, R) - rp;
      dy = schur.solve(rhs);
      dX.resize(d.nb);
      auto recover = [&]() {
        dZ = apply_AT(d, dy);
        for (int blk = 0; blk < d.nb; ++blk) {
          dZ[blk] -= Rd[blk];
          dZ[blk] = symmetrize(dZ[blk]);
          const int n = d.dims[blk];
          RealMat t = smu * RealMat::Identity(n, n);
          if (corr) t -= (*corr)[blk];
          dX[blk] = symmetrize(t * Zi[blk] - X[blk] - X[blk] * dZ[blk] * Zi[blk]);
        }
      };
      recover();
      // Iterative refinement against the exact operator: A(dX) must equal rp.
      for (int pass = 0; pass < opts.refinement_steps; ++pass) {
        const RealVec r = rp - apply_A(d, dX);
        if (r.cwiseAbs().maxCoeff() <= 1e-15 * pres_scale) break;
        dy -= schur.solve(r);
        recover();
      }
    };
    auto steps = [&](const std::vector<RealMat>& dX, const std::vector<RealMat>& dZ) {
      double ap = std::numeric_limits<double>::infinity(), ad = ap;
      for (int blk = 0; blk < d.nb; ++blk) {
        ap = std::min(ap, max_step(lx[blk], dX[blk]));
        ad = std::min(ad, max_step(lz[blk], dZ[blk]));
      }
      return std::pair<double, double>(std::min(1.0, opts.step_fraction * ap),
                                       std::min(1.0, opts.step_fraction * ad));
    };

    RealVec dy_a;
    std::vector<RealMat> dX_a, dZ_a;
    direction(0.0, nullptr, dy_a, dX_a, dZ_a);
    auto [ap_a, ad_a] = steps(dX_a, dZ_a);
    double mu_aff = 0.0;
    for (int blk = 0; blk < d.nb; ++blk)
      mu_aff += ((X[blk] + ap_a * dX_a[blk]).cwiseProduct(Z[blk] + ad_a * dZ_a[blk])).sum();
    mu_aff /= ntot;
    const double sigma = std::min(1.0, std::pow(std::max(0.0, mu_aff) / mu, 3.0));

    std::vector<RealMat> corr(d.nb);
    for (int blk = 0; blk < d.nb; ++blk) corr[blk] = dX_a[blk] * dZ_a[blk];
    RealVec dy;
    std::vector<RealMat> dX, dZ;
    direction(sigma * mu, &corr, dy, dX, dZ);
    auto [ap, ad] = steps(dX, dZ);

    for (int blk = 0; blk < d.nb; ++blk) {
      X[blk] += ap * dX[blk];
      Z[blk] += ad * dZ[blk];
    }
    y += ad * dy;

    stalled = (ap < 1e-8 && ad < 1e-8) ? stalled + 1 : 0;
    if (stalled >= 5) return finish(SdpStatus::NumericalFailure, iter + 1);
  }
}

}  // namespace enlg
