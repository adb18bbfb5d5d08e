// One pass/fail line per acceptance criterion; exits nonzero when any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "lmhs/centralizer.hpp"
#include "lmhs/commands.hpp"
#include "lmhs/errors.hpp"
#include "lmhs/genus2.hpp"
#include "lmhs/monodromy.hpp"
#include "lmhs/period.hpp"
#include "lmhs/polarization.hpp"
#include "lmhs/sl2.hpp"
#include "support/instances.hpp"

using namespace lmhs;
using namespace lmhs::testing;

namespace {

/// Collects failed checks for one criterion.
struct Checker {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::string note;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 5) failures.push_back(what);
  }
};

LogPolynomial sym(SymbolSpace sp, std::size_t idx) { return LogPolynomial::symbol(sp, idx); }
LogPolynomial cst(SymbolSpace sp, GScalar c) { return LogPolynomial::constant(sp, c); }

// ---------------------------------------------------------------- 1

void genus2_regression(Checker& c) {
  Genus2Fixture g = builtin_genus2();
  SymbolSpace sp = g.frame.space;
  LogPolynomial l = sym(sp, sp.ell_index(0));

  // Shape of the lifted period matrix.
  Genus2PeriodMatrix pm = genus2_period_matrix(g.frame.lift);
  c.expect(pm.symmetric(), "lift: diagonal entries differ");
  c.expect((pm.nu_hat - LogRational(l)).num.single_valued(), "lift: nu_hat - l is multi-valued");
  c.expect((pm.alpha.num.single_valued() && pm.lambda.num.single_valued()), "lift: alpha or lambda multi-valued");

  // With ν ≡ 0 in the Schubert chart, τ = t.
  SchubertCoordinate sc = schubert_coordinate(g.frame);
  TauExpression t = tau(g.M, sc, g.cone);
  c.expect(t.monomial == std::vector<int>{1} && t.exponent.is_zero(), "tau != t: " + t.to_string());

  // Transformation laws on the unnormalized frame.
  SymbolicFrame fr = genus2_frame(g, genus2_free_log(g));
  SymbolSpace fs = fr.space;
  SchubertCoordinate fc = schubert_coordinate(fr);
  Genus2PeriodMatrix base = genus2_period_matrix(fr.lift);
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b)
      for (long cc : {-1L, 0L, 2L}) {
        std::string at = "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(cc) + ")";
        GMatrix gm = genus2_gamma(a, b, cc);
        MonodromyElement me = factor_monodromy(gm, g.lb, g.lattice, g.F_inf);
        ActionResult act = monodromy_action(me, fc.X, g.lb);
        Genus2PeriodMatrix moved = genus2_period_matrix(MatrixPoly(act.X.exp_nilpotent()) * g.lb.adapted());
        LogRational A(cst(fs, a)), B(cst(fs, b)), C(cst(fs, cc));
        c.expect(moved.alpha == base.alpha + B - A * base.lambda, "alpha law at " + at);
        c.expect(moved.alpha_lower == moved.alpha, "symmetry at " + at);
        c.expect(moved.lambda == base.lambda, "lambda law at " + at);
        c.expect(moved.nu_hat == base.nu_hat + C - A * B - LogRational(cst(fs, 2)) * A * base.alpha + A * A * base.lambda,
                 "nu_hat law at " + at);
        SchubertCoordinate oracle = schubert_coordinate(g.lb, gm * fr.lift, fr.nilpotent_log, 8);
        c.expect(oracle.X == act.X, "action vs matrix oracle at " + at);
        TauExpression e = multiplier(g.M, me, fc.X, g.lb, g.lattice);
        c.expect(e.exponent == kappa(g.lattice, g.M, oracle.X - fc.X), "multiplier vs oracle at " + at);
      }
  c.note = "nu_hat law verified with -2a*alpha (the sign that matches the tau multiplier)";
}

// ---------------------------------------------------------------- 2

void deligne_suite(Checker& c) {
  std::mt19937_64 rng(20240611);
  for (int k = 0; k < 100; ++k) {
    Instance inst = random_instance(rng, 8, true);
    std::string tag = "instance " + std::to_string(k) + " (" + inst.name + ")";
    MixedHodgeStructure mhs = inst.mhs();
    const Bigrading& b = mhs.bigrading();
    for (int l = mhs.W().bottom() - 1; l <= mhs.W().top(); ++l)
      c.expect(b.sum_where([&](int p, int q) { return p + q <= l; }) == mhs.W().at(l), tag + ": W_" + std::to_string(l));
    for (int p = mhs.F().bottom(); p <= mhs.F().top() + 1; ++p)
      c.expect(b.sum_where([&](int a, int) { return a >= p; }) == mhs.F().at(p), tag + ": F^" + std::to_string(p));
    LieBigrading lb = induced_lie_bigrading(mhs);
    c.expect(lb.complete(), tag + ": g^{p,q} do not span g");
    std::vector<std::pair<PQ, GMatrix>> elems;
    for (auto& [pq, s] : lb.pieces())
      for (auto& x : as_matrices(s, lb.dim())) elems.emplace_back(pq, lb.to_adapted(x));
    bool orth = true, brackets = true;
    for (auto& [pq, x] : elems)
      for (auto& [rs, y] : elems) {
        PQ sum{pq.first + rs.first, pq.second + rs.second};
        if ((sum.first != 0 || sum.second != 0) && !trace_form(x, y).is_zero()) orth = false;
        if (!lb.adapted_in_piece(commutator(x, y), sum.first, sum.second)) brackets = false;
      }
    c.expect(orth, tag + ": kappa-orthogonality");
    c.expect(brackets, tag + ": bracket compatibility");
  }
}

// ---------------------------------------------------------------- 3

void weight_oracle(Checker& c) {
  auto corpus = fixture_corpus();
  c.expect(corpus.size() >= 12, "corpus has fewer than 12 instances");
  std::size_t dmin = 100, dmax = 0;
  bool zero_n = false, multi = false;
  for (const auto& inst : corpus) {
    dmin = std::min(dmin, inst.lattice.dim);
    dmax = std::max(dmax, inst.lattice.dim);
    NilpotentCone cone = inst.cone();
    multi = multi || cone.generators.size() > 1;
    for (auto& N : cone.generators) zero_n = zero_n || N.is_zero();
    const int n = inst.lattice.n;
    ConeWeightResult r = cone_weight_filtration(cone, n, 7);
    AxiomReport ax = verify_weight_axioms(cone.interior(), r.W, n);
    c.expect(ax.ok, inst.name + ": cone W: " + ax.failure);
    for (std::size_t i = 0; i < cone.generators.size(); ++i) {
      IncreasingFiltration wi = monodromy_weight_filtration(cone.generators[i], n);
      AxiomReport ai = verify_weight_axioms(cone.generators[i], wi, n);
      c.expect(ai.ok, inst.name + ": W(N_" + std::to_string(i) + "): " + ai.failure);
    }
  }
  c.expect(dmin <= 2 && dmax >= 8, "corpus does not span dims 2..8");
  c.expect(zero_n, "corpus has no N = 0 generator");
  c.expect(multi, "corpus has no multi-generator cone");
  c.note = std::to_string(corpus.size()) + " instances, dims " + std::to_string(dmin) + ".." + std::to_string(dmax);
}

// ---------------------------------------------------------------- 4

void sl2_suite(Checker& c) {
  for (const auto& inst : fixture_corpus()) {
    NilpotentCone cone = inst.cone();
    if (!polarization_check(inst.W, inst.F, cone, inst.lattice.n).verdict) continue;
    MixedHodgeStructure mhs = inst.mhs();
    LieBigrading lb(inst.lattice, mhs.bigrading());
    GMatrix Y = grading_element(lb, inst.lattice.n);
    GMatrix N = cone.interior();
    Sl2Triple t = sl2_complete(inst.lattice, N, Y);
    c.expect(is_sl2_triple(t), inst.name + ": bracket relations");
    c.expect(lb.is_homogeneous(t.M, 1, 1), inst.name + ": M not in g^{1,1}");
    c.expect(kappa(inst.lattice, t.M, N) == kappa(inst.lattice, Y, Y) * GScalar(Rational(1, 2)),
             inst.name + ": kappa(M,N) != kappa(Y,Y)/2");
    c.expect(sl2_complete(inst.lattice, GScalar(2) * N, Y).M == GScalar(Rational(1, 2)) * t.M,
             inst.name + ": M(2N) != M(N)/2");
  }
}

// ---------------------------------------------------------------- 5

void polarization_certificates(Checker& c) {
  Instance plus = dim2_instance(1), minus = dim2_instance(-1);
  c.expect(polarization_check(plus.W, plus.F, plus.cone(), 1).verdict, "dim-2 +N not polarized");
  c.expect(!polarization_check(minus.W, minus.F, minus.cone(), 1).verdict, "dim-2 -N polarized");

  // σ_I = <N1, N2> and σ_J = <N1 + N2, N2> share W; so does the union.
  Instance inst = build_instance("closure", 1, {{1, 0, 0, 1, 0}, {1, 0, 0, 2, 1}});
  NilpotentCone I = inst.cone();
  NilpotentCone J{inst.lattice, {I.generators[0] + I.generators[1], I.generators[1]}, {2, 1}, "J"};
  NilpotentCone U{inst.lattice, {I.generators[0], I.generators[1], I.generators[0] + I.generators[1]}, {0, 1, 2}, "I+J"};
  IncreasingFiltration wi = cone_weight_filtration(I, 1, 1).W;
  IncreasingFiltration wj = cone_weight_filtration(J, 1, 1).W;
  IncreasingFiltration wu = cone_weight_filtration(U, 1, 1).W;
  bool pi = polarization_check(wi, inst.F, I, 1).verdict;
  bool pj = polarization_check(wj, inst.F, J, 1).verdict;
  c.expect(pi && pj, "premise: sigma_I and sigma_J polarize");
  c.expect(!(pi && pj) || polarization_check(wu, inst.F, U, 1).verdict, "sigma_{I u J} does not polarize");
}

// ---------------------------------------------------------------- 6

void ample_cone(Checker& c) {
  {
    Instance inst = dim2_instance(1);
    MixedHodgeStructure m = inst.mhs();
    LieBigrading lb(inst.lattice, m.bigrading());
    GMatrix Y = grading_element(lb, 1);
    AmpleSearchResult r = ample_cone_search(inst.cone(), Y, RunConfig{}.budget, 1);
    c.expect(r.status == SearchStatus::Found && r.method == "barycenter" && r.probes == 1,
             "single ray: barycenter did not certify immediately");
  }
  Instance inst = two_block_instance();
  MixedHodgeStructure m = inst.mhs();
  LieBigrading lb(inst.lattice, m.bigrading());
  GMatrix Y = grading_element(lb, 1);
  NilpotentCone cone = inst.cone();
  AmpleSearchResult r = ample_cone_search(cone, Y, RunConfig{}.budget, 1);
  c.expect(r.status == SearchStatus::Found, "two generators: no certified point");
  c.expect(r.probes <= RunConfig{}.budget, "two generators: budget exceeded");

  // Grid oracle: κ(M(N(y)), N_i) for y on {1..6}^2, computed independently.
  auto feasible = [&](const std::vector<Rational>& y) {
    try {
      Sl2Triple t = sl2_complete(inst.lattice, cone.combination(y), Y);
      for (auto& Ni : cone.generators) {
        GScalar k = kappa(inst.lattice, t.M, Ni);
        if (!k.is_real() || sgn(k.re()) <= 0) return false;
      }
      return true;
    } catch (const NoTriple&) {
      return false;
    }
  };
  std::size_t grid_feasible = 0;
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b) grid_feasible += feasible({Rational(a), Rational(b)});
  c.expect(grid_feasible > 0, "grid oracle: empty feasible region");
  if (r.status == SearchStatus::Found) {
    c.expect(feasible(r.y), "certified point is outside the oracle's feasible region");
    for (auto& k : r.kappas) c.expect(sgn(k) > 0, "certified kappa not positive");
  }
  c.note = "grid oracle feasible at " + std::to_string(grid_feasible) + "/36 points";
}

// ---------------------------------------------------------------- 7

void chern_definiteness(Checker& c) {
  Genus2Fixture g = builtin_genus2();
  GMatrix Y = grading_element(g.lb, 1);
  c.expect(cone_membership(g.M, g.cone, {}, ConeKind::Nsl2, g.lb, Y).member, "M not in Nsl2");
  auto basis = centralizer_slice(g.lb, g.cone, -1, 0);
  c.expect(!basis.empty(), "c^{-1,0} is zero");
  ChernForm cf = chern_form(g.M, basis, g.lb, g.lattice);
  c.expect(cf.negative_definite, std::string("Gram matrix is ") + to_string(cf.verdict.kind));
  c.expect(cf.verdict.by_minors, "not decided by leading minors");
  std::string minors;
  for (auto& m : cf.verdict.minors) minors += (minors.empty() ? "" : ", ") + m.to_string();
  c.note = "minors [" + minors + "]";
}

// ---------------------------------------------------------------- 8

/// Frame checks shared by every fixture: deck shifts, cocycle, single
/// valuedness, τ divisors and the ℓ-derivatives of ε.
void frame_checks(Checker& c, const std::string& tag, const SymbolicFrame& fr, const DecreasingFiltration& F_inf) {
  const NilpotentCone& cone = fr.cone;
  const LieBigrading& lb = fr.lb;
  const PolarizedLattice& lat = cone.lattice;
  SchubertCoordinate sc = schubert_coordinate(fr);
  c.expect(minus_one_single_valued(lb, sc.X_tilde), tag + ": X~^{-1,*} multi-valued");
  for (std::size_t i = 0; i < cone.generators.size(); ++i) {
    DeckCheck dc = deck_consistency(fr, sc, i, F_inf);
    c.expect(dc.lift_ok && dc.coordinate_ok, tag + ": deck shift " + std::to_string(i));
  }
  HorizontalBasis hb = horizontal_basis(lb, cone);
  HorizontalCoefficients hc = horizontal_coefficients(sc.X, hb.elements, lb, cone);
  c.expect(hc.ell_coefficients_ok, tag + ": d eps / d l != kappa(M, N_i)");
  PsiTable psi = log_differential_map(hc, hb.elements, cone);
  c.expect(psi.dNi_ok, tag + ": dN_i evaluations");
  for (std::size_t mu = 0; mu < hb.elements.size(); ++mu) {
    const GMatrix& M = hb.elements[mu];
    bool integral = true;
    std::vector<int> divisor;
    for (auto& N : cone.generators) {
      GScalar k = kappa(lat, M, N);
      if (!k.is_integer()) integral = false;
      else divisor.push_back(static_cast<int>(k.re().get_num().get_si()));
    }
    if (!integral) continue;
    try {
      TauExpression t = tau(M, sc, cone);
      c.expect(t.monomial == divisor, tag + ": tau divisor");
    } catch (const InvariantError&) {
      c.expect(false, tag + ": tau exponent multi-valued");
    }
  }
  if (!cone.generators.empty() && !hb.elements.empty()) {
    GMatrix g1 = exp_nilpotent(cone.generators.front()), g2 = exp_nilpotent(cone.generators.back());
    auto f1 = factor_monodromy(g1, lb, lat, F_inf);
    auto f2 = factor_monodromy(g2, lb, lat, F_inf);
    auto f12 = factor_monodromy(g1 * g2, lb, lat, F_inf);
    for (auto& M : hb.elements)
      c.expect(multiplier_cocycle(M, f1, f2, f12, sc.X, lb, lat), tag + ": multiplier cocycle");
  }
}

void symbolic_well_definedness(Checker& c) {
  Genus2Fixture g = builtin_genus2();
  frame_checks(c, "genus2", g.frame, g.F_inf);
  frame_checks(c, "genus2-free", genus2_frame(g, genus2_free_log(g)), g.F_inf);
  {
    SymbolicFrame fr = genus2_frame(g, genus2_free_log(g));
    SchubertCoordinate sc = schubert_coordinate(fr);
    std::vector<MonodromyElement> gs;
    for (auto [a, b, cc] : {std::tuple{1, 0, 0}, {0, 1, 0}, {2, -1, 3}})
      gs.push_back(factor_monodromy(genus2_gamma(a, b, cc), g.lb, g.lattice, g.F_inf));
    for (auto& x : gs)
      for (auto& y : gs) {
        auto xy = factor_monodromy(x.gamma * y.gamma, g.lb, g.lattice, g.F_inf);
        c.expect(multiplier_cocycle(g.M, x, y, xy, sc.X, g.lb, g.lattice), "genus2: Heisenberg cocycle");
      }
  }
  std::size_t used = 0;
  for (const auto& inst : fixture_corpus()) {
    NilpotentCone cone = inst.cone();
    MixedHodgeStructure mhs = inst.mhs();
    LieBigrading lb(inst.lattice, mhs.bigrading());
    DecreasingFiltration F_inf = reduced_limit(mhs);
    // log ξ spanned by up to two elements of g^{-1,•}.
    std::vector<GMatrix> dirs;
    for (auto& [pq, piece] : lb.pieces())
      if (pq.first == -1 && dirs.size() < 2)
        for (auto& x : lb.piece_basis(pq.first, pq.second))
          if (dirs.size() < 2) dirs.push_back(x);
    SymbolSpace sp{cone.generators.size(), dirs.size()};
    MatrixPoly log_xi(sp, lb.dim(), lb.dim());
    for (std::size_t a = 0; a < dirs.size(); ++a) log_xi += MatrixPoly::times(sym(sp, sp.w_index(a)), dirs[a]);
    SymbolicFrame fr = build_lift_from_log(cone, lb, inst.F, log_xi);
    frame_checks(c, inst.name, fr, F_inf);
    ++used;
  }
  c.note = "genus-2 frames and " + std::to_string(used) + " corpus frames";
}

// ---------------------------------------------------------------- 9

std::vector<std::vector<std::size_t>> subsets(std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 1; mask < (std::size_t(1) << k); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) s.push_back(i);
    out.push_back(s);
  }
  return out;
}

void weight_calculus(Checker& c) {
  std::size_t pairs = 0, equal = 0;
  for (const auto& inst : fixture_corpus()) {
    NilpotentCone cone = inst.cone();
    auto subs = subsets(cone.generators.size());
    for (auto& si : subs)
      for (auto& sj : subs) {
        if (!std::includes(sj.begin(), sj.end(), si.begin(), si.end())) continue;
        EquivalenceReport er = weight_equivalence(cone.restrict(si), cone.restrict(sj), inst.lattice.n, 5);
        ++pairs;
        c.expect(er.agrees, inst.name + ": W^I = W^J disagrees with sigma_J in c_I^{-1}");
        if (er.equal) {
          ++equal;
          c.expect(er.in_c2.value_or(false), inst.name + ": sigma_J not in c_I^{-2}");
        }
      }
  }
  c.note = std::to_string(pairs) + " nested pairs, " + std::to_string(equal) + " with equal W";
}

// ---------------------------------------------------------------- 10

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct Run {
  int code = -1;
  bool signalled = false;
  std::string out, err;
};

Run run_cli(const std::string& args) {
  static int counter = 0;
  std::string base = "/tmp/lmhs_acceptance_" + std::to_string(::getpid()) + "_" + std::to_string(counter++);
  std::string cmd = std::string(LMHS_BINARY) + " " + args + " > " + base + ".out 2> " + base + ".err";
  int status = std::system(cmd.c_str());
  Run r;
  r.signalled = !WIFEXITED(status) || WEXITSTATUS(status) > 2;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(base + ".out");
  r.err = slurp(base + ".err");
  std::remove((base + ".out").c_str());
  std::remove((base + ".err").c_str());
  return r;
}

void cli_determinism(Checker& c) {
  const std::string root = LMHS_SOURCE_DIR;
  const std::string g2 = root + "/fixtures/genus2.json";
  for (const char* cmd : {"deligne", "check-lmhs", "weight-compat", "sl2", "extension-tower", "ample-cone", "period-report"}) {
    Run a = run_cli(std::string(cmd) + " --format json --seed 3 --input " + g2);
    Run b = run_cli(std::string(cmd) + " --format json --seed 3 --input " + g2);
    c.expect(!a.signalled && a.out == b.out && !a.out.empty(), std::string(cmd) + ": output differs between runs");
  }
  Json manifest = Json::parse(slurp(root + "/fixtures/malformed/manifest.json"));
  c.expect(manifest.size() >= 10, "malformed corpus has fewer than 10 files");
  for (auto& [file, expect] : manifest.items()) {
    Run r = run_cli("deligne --format json --input " + root + "/fixtures/malformed/" + file);
    c.expect(!r.signalled, file + ": crashed");
    c.expect(r.code == 1, file + ": exit code " + std::to_string(r.code));
    try {
      Json err = Json::parse(r.err)["error"];
      c.expect(err["kind"] == expect["kind"], file + ": kind " + err["kind"].dump());
      if (expect.contains("path")) c.expect(err["path"] == expect["path"], file + ": path " + err["path"].dump());
    } catch (const Json::exception&) {
      c.expect(false, file + ": stderr is not an error document");
    }
  }
  c.note = std::to_string(manifest.size()) + " malformed files";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;  ///< 0: no runtime bound
    std::function<void(Checker&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "genus-2 regression", 1.0, genus2_regression},
      {2, "Deligne suite (100 random instances)", 30.0, deligne_suite},
      {3, "weight-filtration axiom oracle", 0, weight_oracle},
      {4, "sl2 suite", 0, sl2_suite},
      {5, "polarization certificates", 0, polarization_certificates},
      {6, "ample-cone search", 10.0, ample_cone},
      {7, "Chern-form definiteness", 0, chern_definiteness},
      {8, "symbolic well-definedness", 0, symbolic_well_definedness},
      {9, "weight-compatibility calculus", 0, weight_calculus},
      {10, "CLI determinism and schema", 0, cli_determinism},
  };
  int failed = 0;
  for (auto& cr : criteria) {
    Checker c;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.limit_seconds > 0 && secs >= cr.limit_seconds)
      c.failures.push_back("runtime " + std::to_string(secs) + " s exceeds " + std::to_string(cr.limit_seconds) + " s");
    bool ok = c.failures.empty();
    failed += !ok;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << cr.id << ": " << cr.name << " (" << c.checks
              << " checks, " << timing << ")";
    if (!c.note.empty()) std::cout << "; " << c.note;
    for (auto& f : c.failures) std::cout << "\n      " << f;
    std::cout << std::endl;
  }
  return failed ? 1 : 0;
}
