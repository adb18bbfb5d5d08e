#include "lmhs/period.hpp"

#include <algorithm>
#include <set>

#include "lmhs/errors.hpp"
#include "lmhs/linsolve.hpp"

namespace lmhs {

namespace {

std::vector<std::size_t> iota(std::size_t first, std::size_t count) {
  std::vector<std::size_t> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = first + i;
  return v;
}

MatrixPoly block(const MatrixPoly& m, std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) {
  auto rs = iota(r0, nr), cs = iota(c0, nc);
  MatrixPoly out = m.map([&](const GMatrix& g) { return g.submatrix(rs, cs); });
  return out;
}

MatrixPoly embed(const MatrixPoly& b, std::size_t d, std::size_t r0, std::size_t c0) {
  MatrixPoly out(b.space(), d, d);
  for (auto& [m, c] : b.terms()) {
    GMatrix big(d, d);
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t j = 0; j < c.cols(); ++j) big(r0 + i, c0 + j) = c(i, j);
    out += MatrixPoly::times(LogPolynomial::monomial(b.space(), m, GScalar(1)), big);
  }
  return out;
}

// Inverse of a polynomial block whose constant part is invertible, as a
// Neumann series that is exact when it terminates.
MatrixPoly invert_block(const MatrixPoly& a, int order, bool& truncated) {
  GMatrix a0 = a.constant_part();
  if (determinant(a0).is_zero()) {
    if (determinant(a).is_zero()) throw NotInCell("a pivot minor of the frame vanishes identically");
    throw NotInCell("a pivot minor of the frame vanishes at the base point");
  }
  GMatrix inv0 = inverse(a0);
  MatrixPoly e = inv0 * (MatrixPoly::constant(a.space(), a0) - a);
  MatrixPoly sum = MatrixPoly::constant(a.space(), inv0);
  MatrixPoly power = MatrixPoly::identity(a.space(), a.rows());
  for (int k = 1;; ++k) {
    power = power * e;
    if (power.is_zero()) return sum;
    if (k > order) {
      truncated = true;
      return sum.truncate(order);
    }
    power = power.truncate(order);
    sum += power * inv0;
  }
}

std::set<PQ> label_differences(const LieBigrading& lb) {
  std::set<PQ> out;
  for (auto& a : lb.labels())
    for (auto& b : lb.labels()) out.insert({a.first - b.first, a.second - b.second});
  return out;
}

GMatrix stack_columns(const std::vector<GMatrix>& cols, std::size_t rows) {
  GMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j](i, 0);
  return m;
}

}  // namespace

SymbolicFrame build_lift_from_log(const NilpotentCone& cone, const LieBigrading& lb, const DecreasingFiltration& F,
                                  const MatrixPoly& log_xi, int truncation_order) {
  const std::size_t d = lb.dim();
  if (log_xi.rows() != d || log_xi.cols() != d) throw DimensionMismatch("xi: wrong matrix size");
  if (log_xi.space().k != cone.generators.size())
    throw DimensionMismatch("xi: symbol space does not match the number of nilpotents");
  if (!log_xi.single_valued()) throw XiNotInFperp("xi depends on a logarithm symbol");
  for (auto& [m, c] : log_xi.terms())
    if (!lb.f_perp().contains_vector(c.vec()))
      throw XiNotInFperp("log xi has a coefficient outside f_perp at monomial " +
                         LogPolynomial::monomial(log_xi.space(), m, GScalar(1)).to_string());
  SymbolicFrame fr;
  fr.space = log_xi.space();
  fr.cone = cone;
  fr.lb = lb;
  fr.F = F;
  fr.truncation_order = truncation_order;
  fr.log_xi = log_xi;
  fr.xi = log_xi.exp_nilpotent();
  fr.nilpotent_log = MatrixPoly(fr.space, d, d);
  for (std::size_t i = 0; i < cone.generators.size(); ++i)
    fr.nilpotent_log += MatrixPoly::times(LogPolynomial::symbol(fr.space, fr.space.ell_index(i)), cone.generators[i]);
  fr.lift = fr.nilpotent_log.exp_nilpotent() * fr.xi * lb.adapted();
  return fr;
}

SymbolicFrame build_lift(const NilpotentCone& cone, const LieBigrading& lb, const DecreasingFiltration& F,
                         const MatrixPoly& xi, int truncation_order) {
  if (!xi.single_valued()) throw XiNotInFperp("xi depends on a logarithm symbol");
  MatrixPoly log_xi;
  try {
    log_xi = xi.log_unipotent();
  } catch (const std::domain_error&) {
    throw XiNotInFperp("xi is not unipotent");
  }
  return build_lift_from_log(cone, lb, F, log_xi, truncation_order);
}

SchubertCoordinate schubert_coordinate(const LieBigrading& lb, const MatrixPoly& frame, const MatrixPoly& nilpotent_log,
                                       int truncation_order) {
  const std::size_t d = lb.dim();
  if (frame.rows() != d || frame.cols() != d) throw DimensionMismatch("schubert_coordinate: frame must be square");
  // Levels of F: contiguous runs of equal p in the adapted basis.
  std::vector<std::size_t> start;
  const auto& labels = lb.labels();
  for (std::size_t j = 0; j < d; ++j)
    if (j == 0 || labels[j].first != labels[j - 1].first) start.push_back(j);
  start.push_back(d);
  const std::size_t levels = start.size() - 1;
  auto size = [&](std::size_t k) { return start[k + 1] - start[k]; };

  SchubertCoordinate out;
  MatrixPoly s = lb.adapted_inverse() * frame;
  MatrixPoly lower = MatrixPoly::identity(frame.space(), d);
  for (std::size_t k = 0; k < levels; ++k) {
    MatrixPoly inv = invert_block(block(s, start[k], size(k), start[k], size(k)), truncation_order, out.truncated);
    for (std::size_t i = k + 1; i < levels; ++i) {
      MatrixPoly lik = block(s, start[i], size(i), start[k], size(k)) * inv;
      if (out.truncated) lik = lik.truncate(truncation_order);
      lower += embed(lik, d, start[i], start[k]);
      for (std::size_t j = k + 1; j < levels; ++j)
        s -= embed(lik * block(s, start[k], size(k), start[j], size(j)), d, start[i], start[j]);
    }
  }
  out.X = lb.adapted() * lower.log_unipotent() * lb.adapted_inverse();
  if (out.truncated) out.X = out.X.truncate(truncation_order);
  out.X_tilde = out.X - nilpotent_log;
  return out;
}

SchubertCoordinate schubert_coordinate(const SymbolicFrame& frame) {
  return schubert_coordinate(frame.lb, frame.lift, frame.nilpotent_log, frame.truncation_order);
}

MatrixPoly component(const LieBigrading& lb, const MatrixPoly& x, int p, int q) {
  MatrixPoly out = x.map([&](const GMatrix& g) { return lb.component(g, p, q); });
  return out;
}

LogPolynomial kappa(const PolarizedLattice& lattice, const GMatrix& M, const MatrixPoly& X) {
  LogPolynomial out(X.space());
  for (auto& [m, c] : X.terms()) out += LogPolynomial::monomial(X.space(), m, kappa(lattice, M, c));
  return out;
}

bool minus_one_single_valued(const LieBigrading& lb, const MatrixPoly& X_tilde) {
  for (auto& pq : label_differences(lb))
    if (pq.first == -1 && !component(lb, X_tilde, pq.first, pq.second).single_valued()) return false;
  return true;
}

HorizontalBasis horizontal_basis(const LieBigrading& lb, const NilpotentCone& cone) {
  HorizontalBasis hb;
  const auto& lattice = cone.lattice;
  std::vector<GMatrix> g11 = lb.piece_basis(1, 1);
  const std::size_t k = cone.generators.size(), m = g11.size();
  if (m > 0) {
    GMatrix K(k, m);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < m; ++j) K(i, j) = kappa(lattice, g11[j], cone.generators[i]);
    // Maximal independent set of functionals, read off the row echelon of K^T.
    std::vector<std::size_t> rows = row_reduce(K.transpose()).pivots;
    if (!rows.empty()) {
      GMatrix KR = K.submatrix(rows, iota(0, m));
      LinearSolution sol = solve_or_throw(KR, GMatrix::identity(rows.size()), "horizontal basis");
      for (std::size_t c = 0; c < rows.size(); ++c) {
        GMatrix M(lb.dim(), lb.dim());
        for (std::size_t j = 0; j < m; ++j) M += sol.solution(j, c) * g11[j];
        hb.elements.push_back(M);
        hb.logarithmic.push_back(true);
      }
    }
    GMatrix ker = k ? kernel_basis(K) : GMatrix::identity(m);
    for (std::size_t c = 0; c < ker.cols(); ++c) {
      GMatrix M(lb.dim(), lb.dim());
      for (std::size_t j = 0; j < m; ++j) M += ker(j, c) * g11[j];
      hb.elements.push_back(M);
      hb.logarithmic.push_back(false);
    }
  }
  for (auto& pq : label_differences(lb)) {
    if (pq.first != 1 || pq.second == 1) continue;
    for (auto& M : lb.piece_basis(1, pq.second)) {
      hb.elements.push_back(M);
      hb.logarithmic.push_back(false);
    }
  }
  return hb;
}

HorizontalCoefficients horizontal_coefficients(const MatrixPoly& X, const std::vector<GMatrix>& basis,
                                               const LieBigrading& lb, const NilpotentCone& cone) {
  const std::size_t d = lb.dim();
  Subspace target = lb.slice([](int p, int) { return p == 1; });
  for (auto& M : basis)
    if (M.rows() != d || M.cols() != d || !target.contains_vector(M.vec()))
      throw BasisNotSpanning("basis element outside g^{1,*}");
  if (basis.size() != target.dim() || vec_span(basis, d).dim() != target.dim())
    throw BasisNotSpanning("basis has " + std::to_string(basis.size()) + " elements but g^{1,*} has dimension " +
                           std::to_string(target.dim()));
  HorizontalCoefficients hc;
  for (auto& M : basis) {
    LogPolynomial e = kappa(cone.lattice, M, X);
    bool log = false;
    for (std::size_t i = 0; i < cone.generators.size(); ++i) {
      GScalar kn = kappa(cone.lattice, M, cone.generators[i]);
      if (!kn.is_zero()) log = true;
      if (e.derivative(X.space().ell_index(i)) != LogPolynomial::constant(X.space(), kn))
        hc.ell_coefficients_ok = false;
    }
    hc.eps.push_back(e);
    hc.logarithmic.push_back(log);
  }
  return hc;
}

TauExpression tau(const GMatrix& M, const SchubertCoordinate& coord, const NilpotentCone& cone) {
  TauExpression t;
  for (std::size_t i = 0; i < cone.generators.size(); ++i) {
    GScalar kn = kappa(cone.lattice, M, cone.generators[i]);
    if (!kn.is_integer())
      throw NotIntegral("kappa(M, N_" + std::to_string(i + 1) + ") = " + kn.to_string() + " is not an integer");
    t.monomial.push_back(int(kn.re().get_num().get_si()));
  }
  t.exponent = kappa(cone.lattice, M, coord.X_tilde);
  if (!t.exponent.single_valued()) throw InvariantError("tau exponent depends on a logarithm symbol");
  return t;
}

IprReport ipr_check(const SymbolicFrame& frame, const std::vector<std::size_t>& stratum, int level) {
  IprReport rep;
  rep.level = level;
  rep.restricted = stratum;
  const SymbolSpace& sp = frame.space;
  for (std::size_t i : stratum)
    if (i >= sp.k) throw DimensionMismatch("ipr_check: stratum index out of range");
  MatrixPoly log_r = frame.log_xi.restrict_t_zero(stratum);
  MatrixPoly xi_r = log_r.exp_nilpotent();
  MatrixPoly xi_inv = (-log_r).exp_nilpotent();
  std::set<PQ> diffs = label_differences(frame.lb);

  std::vector<std::size_t> directions;
  for (std::size_t i = 0; i < sp.k; ++i)
    if (std::find(stratum.begin(), stratum.end(), i) == stratum.end()) directions.push_back(sp.t_index(i));
  for (std::size_t a = 0; a < sp.r; ++a) directions.push_back(sp.w_index(a));
  for (std::size_t s : directions) {
    MatrixPoly omega = xi_inv * xi_r.derivative(s);
    for (auto& [p, q] : diffs)
      if (p <= -2 && !component(frame.lb, omega, p, q).is_zero()) rep.violations.push_back({sp.name(s), p, q});
  }
  rep.horizontal = rep.violations.empty();

  rep.level_premise = true;
  for (auto& [p, q] : diffs)
    if (p < 0 && p + q <= -1 && p + q >= -level && !component(frame.lb, log_r, p, q).is_constant())
      rep.level_premise = false;
  if (rep.level_premise)
    for (auto& [p, q] : diffs)
      if (p <= -2 && p + q == -level - 1 && !component(frame.lb, log_r, p, q).is_constant()) rep.level_ok = false;
  return rep;
}

PsiTable log_differential_map(const HorizontalCoefficients& eps, const std::vector<GMatrix>& basis,
                              const NilpotentCone& cone) {
  PsiTable tab;
  if (eps.eps.size() != basis.size()) throw DimensionMismatch("log_differential_map: basis and coefficients differ");
  const std::size_t k = cone.generators.size();
  SymbolSpace sp = eps.eps.empty() ? SymbolSpace{k, 0} : eps.eps.front().space();
  for (std::size_t i = 0; i < sp.k; ++i) tab.directions.push_back(sp.name(sp.t_index(i)) + "*d/d" + sp.name(sp.t_index(i)));
  for (std::size_t a = 0; a < sp.r; ++a) tab.directions.push_back("d/d" + sp.name(sp.w_index(a)));
  std::vector<std::size_t> all_t = iota(0, sp.k);

  GMatrix full(basis.size(), sp.k + sp.r), wblock(basis.size(), sp.r);
  for (std::size_t mu = 0; mu < basis.size(); ++mu) {
    const LogPolynomial& e = eps.eps[mu];
    std::vector<PsiEntry> row;
    for (std::size_t i = 0; i < sp.k; ++i) {
      std::size_t ti = sp.t_index(i);
      LogPolynomial hol = (LogPolynomial::symbol(sp, ti) * e.derivative(ti)).restrict_t_zero(all_t);
      LogPolynomial per = e.derivative(sp.ell_index(i));
      GScalar kn = kappa(cone.lattice, basis[mu], cone.generators[i]);
      if (!hol.is_zero() || per != LogPolynomial::constant(sp, kn)) tab.dNi_ok = false;
      row.push_back({hol.at_origin(), per.at_origin()});
      full(mu, i) = per.at_origin();
    }
    for (std::size_t a = 0; a < sp.r; ++a) {
      GScalar v = e.derivative(sp.w_index(a)).at_origin();
      row.push_back({v, GScalar(0)});
      full(mu, sp.k + a) = v;
      wblock(mu, a) = v;
    }
    tab.rows.push_back(row);
  }
  tab.rank = rank(full);
  tab.w_block_rank = rank(wblock);
  std::vector<GMatrix> vs;
  for (auto& N : cone.generators) vs.push_back(N.vec());
  tab.nilpotent_rank = vs.empty() ? 0 : rank(stack_columns(vs, vs.front().rows()));
  tab.torelli = tab.rank == sp.k + sp.r;
  return tab;
}

}  // namespace lmhs
