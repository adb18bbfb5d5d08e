#include "lmhs/polarization.hpp"

#include <sstream>

#include "lmhs/centralizer.hpp"
#include "lmhs/errors.hpp"

namespace lmhs {

namespace {

GScalar i_power(int m) {
  switch (((m % 4) + 4) % 4) {
    case 0: return GScalar(1);
    case 1: return GScalar::i();
    case 2: return GScalar(-1);
    default: return -GScalar::i();
  }
}

std::string label(int k, int p, int q) {
  std::ostringstream os;
  os << "k=" << k << " (" << p << "," << q << ")";
  return os.str();
}

}  // namespace

PolarizationReport polarization_check(const IncreasingFiltration& W, const DecreasingFiltration& F,
                                      const NilpotentCone& cone, int n) {
  cone.validate();
  const PolarizedLattice& lat = cone.lattice;
  ValidationReport v = validate_mhs(W, F, lat);
  if (!v.valid) throw InvalidMHS("polarization_check: (W, F) is not a mixed Hodge structure");
  PolarizationReport rep;
  GMatrix N = cone.interior();
  rep.tested_N = N;
  AxiomReport ax = verify_weight_axioms(N, W, n);
  if (!ax.ok) throw WrongFiltration("W is not the weight filtration of the cone: " + ax.failure);

  LieBigrading lb(lat, deligne_bigrading(W, F));
  rep.n_in_g11 = lb.component(N, -1, -1) == N;
  rep.griffiths = true;
  for (int p = F.bottom(); p <= F.top() + 1; ++p)
    if (!F.at(p - 1).contains(image(N, F.at(p)))) rep.griffiths = false;

  DecreasingFiltration Fbar = F.conjugate();
  bool all_ok = true;
  for (int k = 0; n + k <= W.top(); ++k) {
    if (W.graded_dim(n + k) == 0) continue;
    PolarizationLevel lvl;
    lvl.k = k;
    Quotient gr = W.graded(n + k);
    Subspace prim = primitive_graded(N, W, n, k);
    lvl.prim_dim = prim.dim();
    GMatrix Nk = N.pow(static_cast<unsigned>(k));

    std::vector<std::vector<GMatrix>> vectors;
    std::size_t total = 0;
    for (int p = F.bottom(); p <= F.top(); ++p) {
      int q = n + k - p;
      Subspace h = prim.intersect(gr.image_of(F.at(p))).intersect(gr.image_of(Fbar.at(q)));
      if (h.is_zero()) continue;
      total += h.dim();
      PrimitivePiece piece{p, q, h.dim(), GMatrix(h.dim(), h.dim()), {}};
      std::vector<GMatrix> us;
      for (std::size_t j = 0; j < h.dim(); ++j) us.push_back(gr.lift() * h.basis_vector(j));
      GScalar tw = i_power(p - q);
      for (std::size_t a = 0; a < us.size(); ++a)
        for (std::size_t b = 0; b < us.size(); ++b) piece.gram(a, b) = tw * lat.pair(us[a], Nk * us[b].conj());
      if (piece.gram.adjoint() != piece.gram) {
        lvl.hr2 = false;
        if (lvl.witness.empty()) lvl.witness = "HR2 " + label(k, p, q) + ": form is not Hermitian";
      } else {
        piece.verdict = classify_hermitian(piece.gram);
        if (piece.verdict.kind != Definiteness::Positive) {
          lvl.hr2 = false;
          if (lvl.witness.empty())
            lvl.witness = "HR2 " + label(k, p, q) + ": " + to_string(piece.verdict.kind);
        }
      }
      vectors.push_back(std::move(us));
      lvl.pieces.push_back(std::move(piece));
    }
    lvl.splits = total == prim.dim();
    if (!lvl.splits && lvl.witness.empty()) lvl.witness = "Prim is not a sum of Hodge pieces at k=" + std::to_string(k);
    for (std::size_t a = 0; a < vectors.size(); ++a)
      for (std::size_t b = 0; b < vectors.size(); ++b) {
        if (a == b) continue;
        for (auto& u : vectors[a])
          for (auto& w : vectors[b])
            if (!lat.pair(u, Nk * w.conj()).is_zero()) {
              if (lvl.hr1 && lvl.witness.empty())
                lvl.witness = "HR1 " + label(k, lvl.pieces[a].p, lvl.pieces[a].q) + " vs (" +
                              std::to_string(lvl.pieces[b].p) + "," + std::to_string(lvl.pieces[b].q) + ")";
              lvl.hr1 = false;
            }
      }
    all_ok = all_ok && lvl.splits && lvl.hr1 && lvl.hr2;
    rep.levels.push_back(std::move(lvl));
  }
  rep.verdict = all_ok && rep.n_in_g11 && rep.griffiths;
  return rep;
}

DecreasingFiltration reduced_limit(const MixedHodgeStructure& mhs) {
  const Bigrading& b = mhs.bigrading();
  int n = mhs.lattice().n;
  int lo = 0, hi = 0;
  bool first = true;
  for (auto& [pq, s] : b.pieces) {
    if (first) lo = hi = pq.second;
    lo = std::min(lo, pq.second);
    hi = std::max(hi, pq.second);
    first = false;
  }
  std::map<int, Subspace> steps;
  for (int q = n - hi; q <= n - lo + 1; ++q)
    steps.emplace(q, b.sum_where([&](int, int bb) { return bb <= n - q; }));
  return DecreasingFiltration(b.dim, std::move(steps));
}

bool bracket_closed(const Subspace& s, std::size_t d) {
  auto ms = as_matrices(s, d);
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (!s.contains_vector(commutator(ms[i], ms[j]).vec())) return false;
  return true;
}

DefsDecomposition defs_decomposition(const MixedHodgeStructure& mhs, const LieBigrading& lb,
                                     const NilpotentCone& cone) {
  std::size_t d = lb.dim();
  Subspace c = centralizer(mhs.lattice(), cone.generators);
  DefsDecomposition out{Subspace::zero(d * d), Subspace::zero(d * d), Subspace::zero(d * d), {}, false, false};
  for (auto& [pq, piece] : lb.pieces()) {
    auto [p, q] = pq;
    if (p >= 0) continue;
    Subspace cpq = c.intersect(piece);
    if (p + q == 0) out.d = out.d.sum(cpq);
    else if (q > 0 && p + q < 0) out.e = out.e.sum(cpq);
    else if (q <= 0) out.s = out.s.sum(cpq);
  }
  out.total = lb.f_perp().intersect(c);
  Subspace sum = out.d.sum(out.e).sum(out.s);
  out.direct_sum = sum == out.total && out.d.dim() + out.e.dim() + out.s.dim() == out.total.dim();
  out.closed = bracket_closed(out.d, d) && bracket_closed(out.e, d) && bracket_closed(out.s, d);
  return out;
}

}  // namespace lmhs
