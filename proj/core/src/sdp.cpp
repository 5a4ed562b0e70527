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

#include "enlg/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "enlg/errors.hpp"

namespace enlg {

const char* to_string(SdpStatus s) {
  switch (s) {
    case SdpStatus::Optimal:
      return "Optimal";
    case SdpStatus::MaxIter:
      return "MaxIter";
    case SdpStatus::Infeasible:
      return "Infeasible";
    case SdpStatus::NumericalFailure:
      return "NumericalFailure";
  }
  return "Unknown";
}

void BlockHerm::add(int block, int row, int col, cplx value) {
  if (row > col) {
    std::swap(row, col);
    value = std::conj(value);
  }
  entries.push_back({block, row, col, value});
}

void BlockHerm::add_dense(int block, const HermMat& h, int offset, double tol) {
  for (Eigen::Index r = 0; r < h.rows(); ++r)
    for (Eigen::Index c = r; c < h.cols(); ++c)
      if (std::abs(h(r, c)) > tol)
        entries.push_back({block, static_cast<int>(offset + r), static_cast<int>(offset + c),
                           r == c ? cplx(h(r, c).real(), 0.0) : h(r, c)});
}

void BlockHerm::normalize(double drop_tol) {
  std::map<std::tuple<int, int, int>, cplx> acc;
  for (const auto& e : entries) {
    int r = e.row, c = e.col;
    cplx v = e.value;
    if (r > c) {
      std::swap(r, c);
      v = std::conj(v);
    }
    acc[{e.block, r, c}] += v;
  }
  entries.clear();
  for (const auto& [key, v] : acc)
    if (std::abs(v) > drop_tol)
      entries.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), v});
}

namespace {

void check_entries(const BlockHerm& b, const std::vector<int>& dims, const std::string& where) {
  for (const auto& e : b.entries) {
    if (e.block < 0 || e.block >= static_cast<int>(dims.size()))
      throw InvalidInput(where + ": block index " + std::to_string(e.block) + " out of range");
    const int d = dims[e.block];
    if (e.row < 0 || e.col < 0 || e.row >= d || e.col >= d)
      throw InvalidInput(where + ": entry outside block " + std::to_string(e.block));
    if (!std::isfinite(e.value.real()) || !std::isfinite(e.value.imag()))
      throw InvalidInput(where + ": non-finite entry");
    if (e.row == e.col && std::abs(e.value.imag()) > 1e-12)
      throw InvalidInput(where + ": diagonal entry is not real (matrix not Hermitian)");
  }
}

}  // namespace

SdpProblem normalize_problem(const SdpProblem& p, std::vector<int>* kept) {
  if (kept) kept->clear();
  if (p.block_dims.empty()) throw InvalidInput("sdp: no blocks");
  for (int d : p.block_dims)
    if (d < 1) throw InvalidInput("sdp: block dimensions must be positive");
  SdpProblem out;
  out.block_dims = p.block_dims;
  out.objective = p.objective;
  check_entries(out.objective, p.block_dims, "sdp objective");
  out.objective.normalize();
  for (auto& e : out.objective.entries)
    if (e.row == e.col) e.value = e.value.real();

  using Key = std::vector<std::tuple<int, int, int, double, double>>;
  std::map<Key, double> seen;
  for (size_t j = 0; j < p.constraints.size(); ++j) {
    SdpConstraint c = p.constraints[j];
    check_entries(c.lhs, p.block_dims, "sdp constraint " + std::to_string(j));
    c.lhs.normalize();
    for (auto& e : c.lhs.entries)
      if (e.row == e.col) e.value = e.value.real();
    if (c.lhs.entries.empty()) {
      if (std::abs(c.gamma) > 1e-12)
        throw InvalidInput("sdp constraint " + std::to_string(j) + ": zero row with nonzero rhs");
      continue;
    }
    Key key;
    for (const auto& e : c.lhs.entries)
      key.emplace_back(e.block, e.row, e.col, e.value.real(), e.value.imag());
    auto it = seen.find(key);
    if (it != seen.end()) {
      if (it->second != c.gamma)
        throw InvalidInput("sdp constraint " + std::to_string(j) +
                           ": duplicates an earlier row with a different rhs");
      continue;
    }
    seen.emplace(std::move(key), c.gamma);
    out.constraints.push_back(std::move(c));
    if (kept) kept->push_back(static_cast<int>(j));
  }
  if (out.constraints.empty()) throw InvalidInput("sdp: constraint list is empty");
  return out;
}

namespace {

void embed_terms(const BlockHerm& b, const std::vector<int>& dims, std::vector<RealEntry>& out) {
  for (const auto& e : b.entries) {
    const int d = dims[e.block];
    const double re = e.value.real() / 2.0, im = e.value.imag() / 2.0;
    if (e.row == e.col) {
      out.push_back({e.block, e.row, e.row, re});
      out.push_back({e.block, d + e.row, d + e.row, re});
      continue;
    }
    if (re != 0.0) {
      out.push_back({e.block, e.row, e.col, re});
      out.push_back({e.block, d + e.row, d + e.col, re});
    }
    if (im != 0.0) {
      out.push_back({e.block, e.row, d + e.col, -im});
      out.push_back({e.block, e.col, d + e.row, im});
    }
  }
}

}  // namespace

RealSdp embed_real(const SdpProblem& p) {
  RealSdp out;
  for (int d : p.block_dims) out.block_dims.push_back(2 * d);
  embed_terms(p.objective, p.block_dims, out.objective);
  out.gamma.resize(static_cast<Eigen::Index>(p.constraints.size()));
  out.constraints.resize(p.constraints.size());
  for (size_t j = 0; j < p.constraints.size(); ++j) {
    embed_terms(p.constraints[j].lhs, p.block_dims, out.constraints[j]);
    out.gamma(static_cast<Eigen::Index>(j)) = p.constraints[j].gamma;
  }
  return out;
}

double inner(const BlockHerm& b, const std::vector<HermMat>& x) {
  double s = 0.0;
  for (const auto& e : b.entries) {
    const cplx xv = x[e.block](e.row, e.col);
    if (e.row == e.col)
      s += e.value.real() * xv.real();
    else
      s += 2.0 * (std::conj(e.value) * xv).real();
  }
  return s;
}

HermMat dense_block(const BlockHerm& b, int block, int dim) {
  HermMat out = HermMat::Zero(dim, dim);
  for (const auto& e : b.entries) {
    if (e.block != block) continue;
    out(e.row, e.col) += e.value;
    if (e.row != e.col) out(e.col, e.row) += std::conj(e.value);
  }
  return out;
}

SdpSolution solve(const SdpProblem& p, const SolverOptions& opts) {
  std::vector<int> kept;
  const SdpProblem q = normalize_problem(p, &kept);
  const RealSdp rp = embed_real(q);
  RealSdpSolution rs = solve_real(rp, opts);
  SdpSolution s;
  for (size_t b = 0; b < rs.X.size(); ++b) {
    s.X.push_back(real_unembed(rs.X[b]));
    s.Z.push_back(2.0 * real_unembed(rs.Z[b]));
  }
  s.primal_value = rs.primal_value;
  s.dual_value = rs.dual_value;
  s.gap = rs.gap;
  s.primal_residual = rs.primal_residual;
  s.dual_residual = rs.dual_residual;
  s.iterations = rs.iterations;
  s.status = rs.status;
  s.history = std::move(rs.history);
  // Rows dropped by normalization get a zero multiplier.
  s.y = RealVec::Zero(static_cast<Eigen::Index>(p.constraints.size()));
  for (size_t k = 0; k < kept.size(); ++k) s.y(kept[k]) = rs.y(static_cast<Eigen::Index>(k));
  return s;
}

CertificateReport check_certificate(const SdpProblem& p, const SdpSolution& s,
                                    const CertificateTolerances& tol) {
  CertificateReport r;
  const size_t nb = p.block_dims.size();
  std::ostringstream msg;
  if (s.X.size() != nb || static_cast<size_t>(s.y.size()) != p.constraints.size()) {
    r.violations.push_back("solution shape does not match problem");
    return r;
  }
  r.min_eig_X = INFINITY;
  r.min_eig_Z = INFINITY;
  for (size_t b = 0; b < nb; ++b) r.min_eig_X = std::min(r.min_eig_X, min_eigenvalue(s.X[b]));
  for (size_t j = 0; j < p.constraints.size(); ++j) {
    const double res = std::abs(inner(p.constraints[j].lhs, s.X) - p.constraints[j].gamma);
    if (res > r.max_primal_residual) {
      r.max_primal_residual = res;
      r.worst_constraint = static_cast<int>(j);
    }
  }
  // Recompute the dual slack from y alone.
  for (size_t b = 0; b < nb; ++b) {
    const int d = p.block_dims[b];
    HermMat z = -dense_block(p.objective, static_cast<int>(b), d);
    for (size_t j = 0; j < p.constraints.size(); ++j) {
      const double yj = s.y(static_cast<Eigen::Index>(j));
      if (yj == 0.0) continue;
      for (const auto& e : p.constraints[j].lhs.entries) {
        if (e.block != static_cast<int>(b)) continue;
        z(e.row, e.col) += yj * e.value;
        if (e.row != e.col) z(e.col, e.row) += yj * std::conj(e.value);
      }
    }
    r.min_eig_Z = std::min(r.min_eig_Z, min_eigenvalue(z));
    if (b < s.Z.size()) r.max_dual_residual = std::max(r.max_dual_residual, max_abs(z - s.Z[b]));
  }
  r.primal_value = inner(p.objective, s.X);
  r.dual_value = 0.0;
  for (size_t j = 0; j < p.constraints.size(); ++j)
    r.dual_value += p.constraints[j].gamma * s.y(static_cast<Eigen::Index>(j));
  r.gap = std::abs(r.primal_value - r.dual_value) / std::max(1.0, std::abs(r.primal_value));

  if (r.min_eig_X < -tol.psd) r.violations.push_back("X not PSD: min eigenvalue " + std::to_string(r.min_eig_X));
  if (r.min_eig_Z < -tol.psd) r.violations.push_back("Z not PSD: min eigenvalue " + std::to_string(r.min_eig_Z));
  if (r.max_primal_residual > tol.residual)
    r.violations.push_back("constraint " + std::to_string(r.worst_constraint) + " residual " +
                           std::to_string(r.max_primal_residual));
  if (r.gap > tol.gap) r.violations.push_back("duality gap " + std::to_string(r.gap));
  r.ok = r.violations.empty();
  return r;
}

}  // namespace enlg
