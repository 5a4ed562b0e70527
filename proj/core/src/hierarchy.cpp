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

#include "enlg/hierarchy.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "enlg/errors.hpp"

namespace enlg {

const char* to_string(MomentConstraint::Kind k) {
  switch (k) {
    case MomentConstraint::Kind::Equivalence:
      return "equivalence";
    case MomentConstraint::Kind::Orthogonality:
      return "orthogonality";
    case MomentConstraint::Kind::Completeness:
      return "completeness";
    case MomentConstraint::Kind::Normalization:
      return "normalization";
  }
  return "unknown";
}

MomentLayout moment_layout(const ExtendedGame& g, const HierarchyLevel& lvl) {
  MomentLayout l;
  l.ref_dim = g.ref_dim();
  l.words = word_set(g.questions_a(), g.answers_a(), g.questions_b(), g.answers_b(), lvl);
  return l;
}

namespace {

using Rep = std::pair<int, int>;  // (s, t) of the first entry holding a word

std::map<CanonicalWord, Rep> first_occurrences(const std::vector<CanonicalWord>& words) {
  std::map<CanonicalWord, Rep> e;
  const int n = static_cast<int>(words.size());
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      const CanonicalWord w = pair_word(words[s], words[t]);
      if (!w.is_zero) e.emplace(w, Rep{s, t});
    }
  return e;
}

int find_word(const std::vector<CanonicalWord>& words, const CanonicalWord& w) {
  auto it = std::find(words.begin(), words.end(), w);
  return it == words.end() ? -1 : static_cast<int>(it - words.begin());
}

}  // namespace

std::vector<MomentConstraint> hierarchy_constraints(const MomentLayout& layout,
                                                    const ExtendedGame& g) {
  using Kind = MomentConstraint::Kind;
  const int n = static_cast<int>(layout.words.size());
  const int m = layout.ref_dim;
  const auto e = first_occurrences(layout.words);
  std::vector<MomentConstraint> out;

  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      const CanonicalWord w = pair_word(layout.words[s], layout.words[t]);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          if (w.is_zero) {
            out.push_back({Kind::Orthogonality, {{i, s, j, t, 1.0}}, 0.0});
            continue;
          }
          const Rep r = e.at(w);
          if (r == Rep{s, t}) continue;
          out.push_back({Kind::Equivalence, {{i, s, j, t, 1.0}, {i, r.first, j, r.second, -1.0}}, 0.0});
        }
    }

  for (const auto& [w, rep] : e) {
    for (int party = 0; party < 2; ++party) {
      const Word& part = party == 0 ? w.alice : w.bob;
      const int nq = party == 0 ? g.questions_a() : g.questions_b();
      const int na = party == 0 ? g.answers_a() : g.answers_b();
      for (size_t p = 0; p <= part.size(); ++p)
        for (int q = 0; q < nq; ++q) {
          std::vector<Rep> terms;
          bool ok = true;
          for (int a = 0; a < na && ok; ++a) {
            CanonicalWord ins = w;
            Word& target = party == 0 ? ins.alice : ins.bob;
            target.insert(target.begin() + static_cast<long>(p),
                          Letter{party == 0 ? Party::A : Party::B, q, a});
            const CanonicalWord c = canonicalize(ins.letters());
            if (c.is_zero) continue;
            auto it = e.find(c);
            if (it == e.end())
              ok = false;
            else
              terms.push_back(it->second);
          }
          if (!ok) continue;
          for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
              MomentConstraint c{Kind::Completeness, {}, 0.0};
              for (const auto& r : terms) c.terms.push_back({i, r.first, j, r.second, 1.0});
              c.terms.push_back({i, rep.first, j, rep.second, -1.0});
              out.push_back(std::move(c));
            }
        }
    }
  }

  const int eps = find_word(layout.words, CanonicalWord{});
  MomentConstraint norm{Kind::Normalization, {}, 1.0};
  for (int i = 0; i < m; ++i) norm.terms.push_back({i, eps, i, eps, 1.0});
  out.push_back(std::move(norm));
  return out;
}

ConstraintViolation check_moment_constraints(const MomentLayout& layout,
                                             const std::vector<MomentConstraint>& cons,
                                             const HermMat& moment) {
  ConstraintViolation v;
  for (size_t k = 0; k < cons.size(); ++k) {
    cplx s = -cons[k].rhs;
    for (const auto& t : cons[k].terms) s += t.coef * moment(layout.index(t.i, t.s), layout.index(t.j, t.t));
    const double r = std::abs(s);
    if (r > v.worst || v.index < 0) {
      v.worst = r;
      v.index = static_cast<int>(k);
      v.kind = cons[k].kind;
    }
  }
  return v;
}

HermMat honest_moment_matrix(const MomentLayout& layout, const QuantumStrategy& s) {
  const int m = layout.ref_dim, du = s.dim_u, dv = s.dim_v;
  const EigDecomp eig = herm_eig(s.sigma);
  std::vector<int> keep;
  for (Eigen::Index k = 0; k < eig.eigenvalues.size(); ++k)
    if (eig.eigenvalues(k) > 1e-14) keep.push_back(static_cast<int>(k));
  const int ne = std::max<int>(1, static_cast<int>(keep.size()));
  const int dim = du * dv * ne;

  // u_i[(u, v, k)] = sqrt(lambda_k) * v_k[(u, i, v)]
  std::vector<ComplexVec> u(m, ComplexVec::Zero(dim));
  for (int i = 0; i < m; ++i)
    for (size_t kk = 0; kk < keep.size(); ++kk) {
      const double w = std::sqrt(eig.eigenvalues(keep[kk]));
      for (int a = 0; a < du; ++a)
        for (int b = 0; b < dv; ++b)
          u[i]((static_cast<long>(a) * dv + b) * ne + static_cast<long>(kk)) =
              w * eig.eigenvectors((static_cast<long>(a) * m + i) * dv + b, keep[kk]);
    }

  const ComplexMat id_e = ComplexMat::Identity(ne, ne);
  auto op = [&](const Letter& l) {
    if (l.party == Party::A)
      return ComplexMat(kron(s.alice[l.question][l.answer], ComplexMat::Identity(dv * ne, dv * ne)));
    return ComplexMat(kron(ComplexMat::Identity(du, du), kron(s.bob[l.question][l.answer], id_e)));
  };

  const int n = static_cast<int>(layout.words.size());
  ComplexMat y(dim, layout.dim());
  for (int si = 0; si < n; ++si) {
    const Word letters = layout.words[si].letters();
    ComplexMat o = ComplexMat::Identity(dim, dim);
    for (const auto& l : letters) o = o * op(l);
    for (int i = 0; i < m; ++i) y.col(layout.index(i, si)) = o * u[i];
  }
  const ComplexMat gram = y.adjoint() * y;
  return gram.conjugate();
}

double moment_objective(const MomentLayout& layout, const ExtendedGame& g, const HermMat& moment) {
  const int m = layout.ref_dim;
  double v = 0.0;
  for (int x = 0; x < g.questions_a(); ++x)
    for (int y = 0; y < g.questions_b(); ++y) {
      const double p = g.pi(x, y);
      if (p == 0.0) continue;
      for (int a = 0; a < g.answers_a(); ++a)
        for (int b = 0; b < g.answers_b(); ++b) {
          const HermMat& vv = g.V(a, b, x, y);
          const int sa = find_word(layout.words, canonicalize({{Party::A, x, a}}));
          const int sb = find_word(layout.words, canonicalize({{Party::B, y, b}}));
          for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
              v += p * (std::conj(vv(i, j)) * moment(layout.index(i, sa), layout.index(j, sb))).real();
        }
    }
  return v;
}

namespace {

// Linear expansion of a word over words without a last-answer letter, using
// (q, last) = epsilon - sum_{a < last} (q, a).
std::map<CanonicalWord, double> expand(const CanonicalWord& w, int last_a, int last_b) {
  std::map<CanonicalWord, double> cur{{CanonicalWord{}, 1.0}};
  for (const auto& l : w.letters()) {
    const int last = l.party == Party::A ? last_a : last_b;
    std::map<CanonicalWord, double> next;
    for (const auto& [partial, c] : cur) {
      auto add = [&](const Letter& letter, double coef) {
        CanonicalWord single;
        (letter.party == Party::A ? single.alice : single.bob).push_back(letter);
        const CanonicalWord prod = concat(partial, single);
        if (!prod.is_zero) next[prod] += coef;
      };
      if (l.answer != last) {
        add(l, c);
      } else {
        next[partial] += c;
        for (int a = 0; a < last; ++a) add(Letter{l.party, l.question, a}, -c);
      }
    }
    cur.clear();
    for (const auto& [k, c] : next)
      if (c != 0.0) cur.emplace(k, c);
  }
  return cur;
}

bool has_last_letter(const CanonicalWord& w, int last_a, int last_b) {
  for (const auto& l : w.letters())
    if (l.answer == (l.party == Party::A ? last_a : last_b)) return true;
  return false;
}

using OrbitKey = std::tuple<int, int, CanonicalWord>;

}  // namespace

QcResult qc_upper_bound(const ExtendedGame& g, const HierarchyLevel& lvl, const QcOptions& opts) {
  QcResult res;
  res.layout = moment_layout(g, lvl);
  const MomentLayout& layout = res.layout;
  const int m = g.ref_dim();
  const int n = static_cast<int>(layout.words.size());
  if (static_cast<long double>(layout.dim()) > opts.size_cap)
    throw SizeCapExceeded("qc_upper_bound: moment matrix dimension " + std::to_string(layout.dim()) +
                              " exceeds the size cap",
                          layout.dim(), opts.size_cap);
  const int last_a = g.answers_a() - 1, last_b = g.answers_b() - 1;

  std::vector<CanonicalWord> red;
  for (const auto& w : layout.words)
    if (!has_last_letter(w, last_a, last_b)) red.push_back(w);
  const int nr = static_cast<int>(red.size());
  std::map<CanonicalWord, int> red_index;
  for (int k = 0; k < nr; ++k) red_index[red[k]] = k;

  RealMat T = RealMat::Zero(n, nr);
  for (int s = 0; s < n; ++s)
    for (const auto& [w, c] : expand(layout.words[s], last_a, last_b)) {
      auto it = red_index.find(w);
      if (it == red_index.end())
        throw InvariantViolation("qc_upper_bound: word " + w.to_string() +
                                 " escapes the reduced word set");
      T(s, it->second) += c;
    }
  RealMat Tb = RealMat::Zero(static_cast<Eigen::Index>(m) * n, static_cast<Eigen::Index>(m) * nr);
  for (int i = 0; i < m; ++i) Tb.block(i * n, i * nr, n, nr) = T;

  const int dr = m * nr;
  res.reduced_dim = dr;
  auto ridx = [&](int i, int s) { return i * nr + s; };

  // Parameters: one per orbit (i,j,w) ~ (j,i,w^R); real for self-paired orbits.
  struct Param {
    BlockHerm f;
  };
  std::vector<Param> params;
  std::map<OrbitKey, std::pair<int, int>> orbit_params;  // (re, im) indices, im = -1 if real
  const int eps = find_word(red, CanonicalWord{});
  BlockHerm f0;
  f0.add(0, ridx(m - 1, eps), ridx(m - 1, eps), 1.0);
  for (int i = 0; i + 1 < m; ++i) {
    Param p;
    p.f.add(0, ridx(i, eps), ridx(i, eps), 1.0);
    p.f.add(0, ridx(m - 1, eps), ridx(m - 1, eps), -1.0);
    params.push_back(std::move(p));
  }

  for (int i = 0; i < m; ++i)
    for (int s = 0; s < nr; ++s)
      for (int j = 0; j < m; ++j)
        for (int t = 0; t < nr; ++t) {
          const CanonicalWord w = pair_word(red[s], red[t]);
          if (w.is_zero) continue;
          if (i == j && w.empty()) continue;  // normalization handled above
          OrbitKey key{i, j, w};
          OrbitKey mirror{j, i, reverse(w)};
          const bool self = key == mirror;
          if (!self && mirror < key) continue;  // covered by the mirrored position
          const int row = ridx(i, s), col = ridx(j, t);
          if (self && row > col) continue;
          auto it = orbit_params.find(key);
          if (it == orbit_params.end()) {
            const int re = static_cast<int>(params.size());
            params.emplace_back();
            int im = -1;
            if (!self) {
              im = static_cast<int>(params.size());
              params.emplace_back();
            }
            it = orbit_params.emplace(key, std::make_pair(re, im)).first;
          }
          params[it->second.first].f.add(0, row, col, 1.0);
          if (it->second.second >= 0) params[it->second.second].f.add(0, row, col, cplx(0.0, 1.0));
        }
  res.num_parameters = static_cast<int>(params.size());

  // Objective on the full matrix, pulled back to the reduced one.
  ComplexMat cfull = ComplexMat::Zero(layout.dim(), layout.dim());
  for (int x = 0; x < g.questions_a(); ++x)
    for (int y = 0; y < g.questions_b(); ++y) {
      const double p = g.pi(x, y);
      if (p == 0.0) continue;
      for (int a = 0; a < g.answers_a(); ++a)
        for (int b = 0; b < g.answers_b(); ++b) {
          const int sa = find_word(layout.words, canonicalize({{Party::A, x, a}}));
          const int sb = find_word(layout.words, canonicalize({{Party::B, y, b}}));
          const HermMat& vv = g.V(a, b, x, y);
          for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
              const cplx c = p * vv(i, j) / 2.0;
              cfull(layout.index(i, sa), layout.index(j, sb)) += c;
              cfull(layout.index(j, sb), layout.index(i, sa)) += std::conj(c);
            }
        }
    }
  const ComplexMat cred = Tb.transpose().cast<cplx>() * cfull * Tb.cast<cplx>();
  const std::vector<HermMat> cred_blocks{cred};

  SdpProblem prob;
  prob.block_dims = {dr};
  for (const auto& e : f0.entries) prob.objective.add(e.block, e.row, e.col, -e.value);
  const double offset = inner(f0, cred_blocks);
  RealVec cvec(static_cast<Eigen::Index>(params.size()));
  for (size_t k = 0; k < params.size(); ++k) {
    params[k].f.normalize();
    cvec(static_cast<Eigen::Index>(k)) = inner(params[k].f, cred_blocks);
    prob.constraints.push_back({params[k].f, -cvec(static_cast<Eigen::Index>(k))});
  }

  res.solution = solve(prob, opts.solver);
  if (res.solution.status != SdpStatus::Optimal)
    throw SolverFailure(std::string("qc_upper_bound: SDP solver returned ") +
                        to_string(res.solution.status) + " (relative gap " +
                        std::to_string(res.solution.gap) + ")");
  const RealVec& yv = res.solution.y;
  HermMat mred = dense_block(f0, 0, dr);
  for (size_t k = 0; k < params.size(); ++k)
    mred += yv(static_cast<Eigen::Index>(k)) * dense_block(params[k].f, 0, dr);
  res.value = offset + cvec.dot(yv);
  res.moment = Tb.cast<cplx>() * mred * Tb.transpose().cast<cplx>();
  if (opts.verify_constraints)
    res.violation = check_moment_constraints(layout, hierarchy_constraints(layout, g), res.moment);
  return res;
}

}  // namespace enlg
