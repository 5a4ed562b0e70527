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

#include "enlg/games.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "enlg/errors.hpp"
#include "enlg/quantum.hpp"
#include "enlg/tolerances.hpp"

namespace enlg {

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::string ValidationReport::summary() const {
  for (const auto& c : checks)
    if (!c.pass) return c.name + ": " + c.detail;
  return {};
}

namespace {

void add_check(ValidationReport& rep, std::string name, bool pass, double worst,
               std::string detail = {}) {
  rep.checks.push_back({std::move(name), pass, worst, std::move(detail)});
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

struct OpStats {
  double herm = 0.0;
  double neg = 0.0;     // max of -lambda_min
  double excess = 0.0;  // max of lambda_max - 1
  bool finite = true;
};

OpStats operator_stats(const HermMat& h) {
  OpStats s;
  if (!is_finite(h)) {
    s.finite = false;
    return s;
  }
  s.herm = hermitian_defect(h);
  Eigen::SelfAdjointEigenSolver<ComplexMat> es((h + h.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
  s.neg = std::max(0.0, -es.eigenvalues()(0));
  s.excess = std::max(0.0, es.eigenvalues()(h.rows() - 1) - 1.0);
  return s;
}

void check_distribution(ValidationReport& rep, const double* p, Eigen::Index n, double tol) {
  double neg = 0.0, sum = 0.0;
  bool finite = true;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!std::isfinite(p[i])) finite = false;
    neg = std::max(neg, -p[i]);
    sum += p[i];
  }
  add_check(rep, "pi finite", finite, 0.0);
  add_check(rep, "pi nonnegative", neg <= tol, neg, "most negative entry " + fmt(-neg));
  const double res = std::abs(sum - 1.0);
  add_check(rep, "pi sums to 1", res <= std::max(enlg::tol::kProbability, tol * 1e-3), res,
            "sum is " + fmt(sum) + ", residual " + fmt(res));
}

void throw_if_failed(const ValidationReport& rep, const std::string& what) {
  if (!rep.ok()) throw InvariantViolation(what + ": " + rep.summary());
}

}  // namespace

ExtendedGame::ExtendedGame(int qa, int qb, int aa, int ab, int m, RealMat pi, std::vector<HermMat> v)
    : qa_(qa), qb_(qb), aa_(aa), ab_(ab), m_(m), pi_(std::move(pi)), v_(std::move(v)) {
  if (qa < 1 || qb < 1 || aa < 1 || ab < 1 || m < 1)
    throw InvalidInput("ExtendedGame: alphabet sizes and referee dimension must be positive");
  if (pi_.rows() != qa || pi_.cols() != qb)
    throw InvalidInput("ExtendedGame: pi must be |SigmaA| x |SigmaB|");
  if (v_.size() != static_cast<size_t>(qa) * qb * aa * ab)
    throw InvalidInput("ExtendedGame: referee table has the wrong number of operators");
  for (const auto& h : v_)
    if (h.rows() != m || h.cols() != m)
      throw InvalidInput("ExtendedGame: referee operator has the wrong dimension");
}

ExtendedGame::ExtendedGame(int qa, int qb, int aa, int ab, int m, RealMat pi)
    : ExtendedGame(qa, qb, aa, ab, m, std::move(pi),
                   std::vector<HermMat>(static_cast<size_t>(std::max(0, qa * qb * aa * ab)),
                                        HermMat::Zero(std::max(m, 0), std::max(m, 0)))) {}

ExtendedGame ExtendedGame::make(int qa, int qb, int aa, int ab, int m, RealMat pi,
                                std::vector<HermMat> v, double tol) {
  ExtendedGame g(qa, qb, aa, ab, m, std::move(pi), std::move(v));
  throw_if_failed(g.validate(tol), "ExtendedGame");
  return g;
}

ValidationReport ExtendedGame::validate(double tol) const {
  ValidationReport rep;
  check_distribution(rep, pi_.data(), pi_.size(), tol);
  double herm = 0.0, neg = 0.0, excess = 0.0;
  bool finite = true;
  std::string herm_at, neg_at, excess_at;
  for (int a = 0; a < aa_; ++a)
    for (int b = 0; b < ab_; ++b)
      for (int x = 0; x < qa_; ++x)
        for (int y = 0; y < qb_; ++y) {
          const OpStats s = operator_stats(V(a, b, x, y));
          const std::string key = "(" + std::to_string(a) + "," + std::to_string(b) + "|" +
                                  std::to_string(x) + "," + std::to_string(y) + ")";
          finite = finite && s.finite;
          if (s.herm > herm) herm = s.herm, herm_at = key;
          if (s.neg > neg) neg = s.neg, neg_at = key;
          if (s.excess > excess) excess = s.excess, excess_at = key;
        }
  add_check(rep, "V finite", finite, 0.0);
  add_check(rep, "V Hermitian", herm <= std::max(1e-12, tol * 1e-3), herm,
            "V" + herm_at + " deviates by " + fmt(herm));
  add_check(rep, "V positive semidefinite", neg <= tol, neg,
            "V" + neg_at + " has eigenvalue " + fmt(-neg));
  add_check(rep, "V below identity", excess <= tol, excess,
            "V" + excess_at + " has eigenvalue 1+" + fmt(excess));
  return rep;
}

MonogamyGame::MonogamyGame(int q, int a, int m, RealVec pi, std::vector<HermMat> r)
    : q_(q), a_(a), m_(m), pi_(std::move(pi)), r_(std::move(r)) {
  if (q < 1 || a < 1 || m < 1)
    throw InvalidInput("MonogamyGame: alphabet sizes and referee dimension must be positive");
  if (pi_.size() != q) throw InvalidInput("MonogamyGame: pi must have |Sigma| entries");
  if (r_.size() != static_cast<size_t>(q) * a)
    throw InvalidInput("MonogamyGame: referee table has the wrong number of operators");
  for (const auto& h : r_)
    if (h.rows() != m || h.cols() != m)
      throw InvalidInput("MonogamyGame: referee operator has the wrong dimension");
}

MonogamyGame MonogamyGame::make(int q, int a, int m, RealVec pi, std::vector<HermMat> r,
                                double tol) {
  MonogamyGame g(q, a, m, std::move(pi), std::move(r));
  throw_if_failed(g.validate(tol), "MonogamyGame");
  return g;
}

ValidationReport MonogamyGame::validate(double tol) const {
  ValidationReport rep;
  check_distribution(rep, pi_.data(), pi_.size(), tol);
  double herm = 0.0, neg = 0.0, comp = 0.0;
  bool finite = true;
  std::string herm_at, neg_at;
  int comp_at = -1;
  for (int x = 0; x < q_; ++x) {
    HermMat sum = HermMat::Zero(m_, m_);
    for (int a = 0; a < a_; ++a) {
      const OpStats s = operator_stats(R(a, x));
      const std::string key = "(" + std::to_string(a) + "|" + std::to_string(x) + ")";
      finite = finite && s.finite;
      if (s.herm > herm) herm = s.herm, herm_at = key;
      if (s.neg > neg) neg = s.neg, neg_at = key;
      sum += R(a, x);
    }
    const double res = max_abs(sum - HermMat::Identity(m_, m_));
    if (res > comp || comp_at < 0) comp = res, comp_at = x;
  }
  add_check(rep, "R finite", finite, 0.0);
  add_check(rep, "R Hermitian", herm <= std::max(1e-12, tol * 1e-3), herm,
            "R" + herm_at + " deviates by " + fmt(herm));
  add_check(rep, "R positive semidefinite", neg <= tol, neg,
            "R" + neg_at + " has eigenvalue " + fmt(-neg));
  add_check(rep, "R complete", comp <= tol, comp,
            "sum_a R(a|" + std::to_string(comp_at) + ") differs from I by " + fmt(comp));
  return rep;
}

namespace {

void check_povms(ValidationReport& rep, const std::vector<std::vector<HermMat>>& povm, int dim,
                 const std::string& who, double tol) {
  double neg = 0.0, comp = 0.0;
  bool shape = true;
  for (const auto& per_q : povm) {
    HermMat sum = HermMat::Zero(dim, dim);
    for (const auto& op : per_q) {
      if (op.rows() != dim || op.cols() != dim) {
        shape = false;
        continue;
      }
      neg = std::max(neg, operator_stats(op).neg);
      sum += op;
    }
    comp = std::max(comp, max_abs(sum - HermMat::Identity(dim, dim)));
  }
  add_check(rep, who + " operator shapes", shape, 0.0);
  add_check(rep, who + " positive semidefinite", neg <= tol, neg);
  add_check(rep, who + " complete", comp <= tol, comp);
}

}  // namespace

ValidationReport QuantumStrategy::validate(int ref_dim, double tol) const {
  ValidationReport rep;
  const long n = static_cast<long>(dim_u) * ref_dim * dim_v;
  const bool shape = sigma.rows() == n && sigma.cols() == n;
  add_check(rep, "state shape", shape, 0.0);
  if (shape) {
    const double tr = std::abs(sigma.trace() - cplx(1.0));
    add_check(rep, "state trace", tr <= tol, tr);
    const double neg = operator_stats(sigma).neg;
    add_check(rep, "state positive semidefinite", neg <= tol, neg);
  }
  check_povms(rep, alice, dim_u, "Alice", tol);
  check_povms(rep, bob, dim_v, "Bob", tol);
  return rep;
}

ValidationReport Assemblage::validate(double tol) const {
  ValidationReport rep;
  double neg = 0.0, tr = 0.0;
  for (const auto& k : K) neg = std::max(neg, operator_stats(k).neg);
  for (int x = 0; x < questions_a; ++x)
    for (int y = 0; y < questions_b; ++y) {
      cplx t = 0;
      for (int a = 0; a < answers_a; ++a)
        for (int b = 0; b < answers_b; ++b) t += at(a, b, x, y).trace();
      tr = std::max(tr, std::abs(t - cplx(1.0)));
    }
  add_check(rep, "K positive semidefinite", neg <= tol, neg);
  add_check(rep, "K normalized", tr <= tol, tr);
  return rep;
}

double Assemblage::nonsignaling_defect() const {
  double worst = 0.0;
  const int m = ref_dim;
  for (int x = 0; x < questions_a; ++x)
    for (int a = 0; a < answers_a; ++a) {
      HermMat first = HermMat::Zero(m, m);
      for (int b = 0; b < answers_b; ++b) first += at(a, b, x, 0);
      for (int y = 1; y < questions_b; ++y) {
        HermMat s = HermMat::Zero(m, m);
        for (int b = 0; b < answers_b; ++b) s += at(a, b, x, y);
        worst = std::max(worst, max_abs(s - first));
      }
    }
  for (int y = 0; y < questions_b; ++y)
    for (int b = 0; b < answers_b; ++b) {
      HermMat first = HermMat::Zero(m, m);
      for (int a = 0; a < answers_a; ++a) first += at(a, b, 0, y);
      for (int x = 1; x < questions_a; ++x) {
        HermMat s = HermMat::Zero(m, m);
        for (int a = 0; a < answers_a; ++a) s += at(a, b, x, y);
        worst = std::max(worst, max_abs(s - first));
      }
    }
  return worst;
}

ExtendedGame monogamy_to_extended(const MonogamyGame& g) {
  const int q = g.questions(), a = g.answers(), m = g.ref_dim();
  RealMat pi = RealMat::Zero(q, q);
  for (int x = 0; x < q; ++x) pi(x, x) = g.pi(x);
  ExtendedGame out(q, q, a, a, m, pi);
  for (int x = 0; x < q; ++x)
    for (int ans = 0; ans < a; ++ans) out.V(ans, ans, x, x) = g.R(ans, x);
  return out;
}

Assemblage induced_assemblage(const ExtendedGame& g, const QuantumStrategy& s) {
  const int m = g.ref_dim(), du = s.dim_u, dv = s.dim_v;
  if (static_cast<int>(s.alice.size()) != g.questions_a() ||
      static_cast<int>(s.bob.size()) != g.questions_b())
    throw InvalidInput("strategy: question counts do not match the game");
  for (const auto& q : s.alice)
    if (static_cast<int>(q.size()) != g.answers_a())
      throw InvalidInput("strategy: Alice answer count does not match the game");
  for (const auto& q : s.bob)
    if (static_cast<int>(q.size()) != g.answers_b())
      throw InvalidInput("strategy: Bob answer count does not match the game");
  const long n = static_cast<long>(du) * m * dv;
  if (s.sigma.rows() != n || s.sigma.cols() != n)
    throw InvalidInput("strategy: state dimension does not match dim_u * ref_dim * dim_v");

  Assemblage k;
  k.questions_a = g.questions_a();
  k.questions_b = g.questions_b();
  k.answers_a = g.answers_a();
  k.answers_b = g.answers_b();
  k.ref_dim = m;
  k.K.assign(g.table().size(), HermMat::Zero(m, m));
  auto idx = [&](int u, int r, int v) { return (static_cast<long>(u) * m + r) * dv + v; };
  const int dur = du * m;
  for (int y = 0; y < g.questions_b(); ++y)
    for (int b = 0; b < g.answers_b(); ++b) {
      const HermMat& B = s.bob[y][b];
      // S[(u',r),(u,r')] = sum_{v,v'} B(v,v') sigma[(u',r,v'),(u,r',v)]
      ComplexMat S = ComplexMat::Zero(dur, dur);
      for (int up = 0; up < du; ++up)
        for (int r = 0; r < m; ++r)
          for (int u = 0; u < du; ++u)
            for (int rp = 0; rp < m; ++rp) {
              cplx acc = 0;
              for (int v = 0; v < dv; ++v)
                for (int vp = 0; vp < dv; ++vp) acc += B(v, vp) * s.sigma(idx(up, r, vp), idx(u, rp, v));
              S(up * m + r, u * m + rp) = acc;
            }
      for (int x = 0; x < g.questions_a(); ++x)
        for (int a = 0; a < g.answers_a(); ++a) {
          const HermMat& A = s.alice[x][a];
          HermMat out = HermMat::Zero(m, m);
          for (int u = 0; u < du; ++u)
            for (int up = 0; up < du; ++up) {
              const cplx w = A(u, up);
              if (w == cplx(0.0)) continue;
              out += w * S.block(up * m, u * m, m, m);
            }
          k.K[k.index(a, b, x, y)] = out;
        }
    }
  return k;
}

double assemblage_value(const ExtendedGame& g, const Assemblage& k) {
  if (k.K.size() != g.table().size() || k.ref_dim != g.ref_dim() ||
      k.questions_a != g.questions_a() || k.questions_b != g.questions_b() ||
      k.answers_a != g.answers_a() || k.answers_b != g.answers_b())
    throw InvalidInput("assemblage: shape does not match the game");
  double v = 0.0;
  for (int x = 0; x < g.questions_a(); ++x)
    for (int y = 0; y < g.questions_b(); ++y) {
      const double p = g.pi(x, y);
      if (p == 0.0) continue;
      for (int a = 0; a < g.answers_a(); ++a)
        for (int b = 0; b < g.answers_b(); ++b)
          v += p * (g.V(a, b, x, y).adjoint() * k.at(a, b, x, y)).trace().real();
    }
  return v;
}

double quantum_value_of_strategy(const ExtendedGame& g, const QuantumStrategy& s) {
  return assemblage_value(g, induced_assemblage(g, s));
}

std::vector<int> decode_tuple(int index, int base, int length) {
  std::vector<int> out(length);
  for (int i = length - 1; i >= 0; --i) {
    out[i] = index % base;
    index /= base;
  }
  return out;
}

MonogamyGame parallel_repeat(const MonogamyGame& g, int r, long double size_cap) {
  if (r < 1) throw InvalidInput("parallel_repeat: r must be at least 1");
  const long double size = std::pow(static_cast<long double>(g.ref_dim()), r) *
                           std::pow(static_cast<long double>(g.answers()), r);
  if (size > size_cap)
    throw SizeCapExceeded("parallel_repeat: m^r * |Gamma|^r = " + std::to_string(static_cast<double>(size)) +
                              " exceeds the size cap " + std::to_string(static_cast<double>(size_cap)),
                          size, size_cap);
  const long double qn = std::pow(static_cast<long double>(g.questions()), r);
  if (qn > size_cap)
    throw SizeCapExceeded("parallel_repeat: |Sigma|^r exceeds the size cap", qn, size_cap);
  int q = 1, a = 1, m = 1;
  for (int i = 0; i < r; ++i) {
    q *= g.questions();
    a *= g.answers();
    m *= g.ref_dim();
  }
  RealVec pi(q);
  std::vector<HermMat> ops(static_cast<size_t>(q) * a);
  for (int xi = 0; xi < q; ++xi) {
    const auto xs = decode_tuple(xi, g.questions(), r);
    double p = 1.0;
    for (int x : xs) p *= g.pi(x);
    pi(xi) = p;
    for (int ai = 0; ai < a; ++ai) {
      const auto as = decode_tuple(ai, g.answers(), r);
      ComplexMat op = ComplexMat::Identity(1, 1);
      for (int i = 0; i < r; ++i) op = kron(op, g.R(as[i], xs[i]));
      ops[static_cast<size_t>(xi) * a + ai] = op;
    }
  }
  return MonogamyGame(q, a, m, pi, std::move(ops));
}

namespace {

// |+><+| and |-><-| with exact entries.
HermMat hadamard_projector(double sign) {
  HermMat p(2, 2);
  p << 0.5, 0.5 * sign, 0.5 * sign, 0.5;
  return p;
}

}  // namespace

MonogamyGame bb84_monogamy_game() {
  RealVec pi(2);
  pi << 0.5, 0.5;
  return MonogamyGame(2, 2, 2, pi,
                      {basis_op(2, 0, 0), basis_op(2, 1, 1), hadamard_projector(1.0), hadamard_projector(-1.0)});
}

ExtendedGame bb84_extended_game() { return monogamy_to_extended(bb84_monogamy_game()); }

ExtendedGame chsh_extended_game() {
  ExtendedGame g(2, 2, 2, 2, 2, RealMat::Constant(2, 2, 0.25));
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      if (x == 1 && y == 1) continue;
      g.V(0, 0, x, y) = basis_op(2, 0, 0);
      g.V(1, 1, x, y) = basis_op(2, 1, 1);
    }
  g.V(0, 1, 1, 1) = hadamard_projector(1.0);
  g.V(1, 0, 1, 1) = hadamard_projector(-1.0);
  return g;
}

MonogamyGame mub_monogamy_game(int d, int bases) {
  const auto all = mub(d);
  if (bases < 1 || bases > static_cast<int>(all.size()))
    throw InvalidInput("mub_monogamy_game: bases must be between 1 and d+1");
  RealVec pi = RealVec::Constant(bases, 1.0 / bases);
  std::vector<HermMat> ops;
  for (int x = 0; x < bases; ++x)
    for (int a = 0; a < d; ++a) ops.push_back(projector(all[x].col(a)));
  return MonogamyGame(bases, d, d, pi, std::move(ops));
}

}  // namespace enlg
