#include "lmhs/commands.hpp"

#include <algorithm>
#include <sstream>

#include "lmhs/centralizer.hpp"
#include "lmhs/errors.hpp"
#include "lmhs/extension.hpp"
#include "lmhs/genus2.hpp"
#include "lmhs/monodromy.hpp"
#include "lmhs/period.hpp"
#include "lmhs/polarization.hpp"
#include "lmhs/sl2.hpp"

namespace lmhs {

namespace {

Json label_json(const std::vector<int>& label) { return Json(label); }

Json error_json(const Error& e) { return {{"kind", e.kind()}, {"message", e.what()}}; }

IncreasingFiltration weight_of(const NilpotentCone& cone, const DegenerationInput& in) {
  const std::size_t d = in.lattice.dim;
  if (cone.generators.empty())
    return IncreasingFiltration(d, {{in.lattice.n - 1, Subspace::zero(d)}, {in.lattice.n, Subspace::full(d)}});
  return cone_weight_filtration(cone, in.lattice.n, in.config.seed).W;
}

const DecreasingFiltration& require_F(const DegenerationInput& in, const std::string& cmd) {
  if (!in.F) throw SchemaError("/limit_filtration", "required by " + cmd);
  return *in.F;
}

Json weight_json(const IncreasingFiltration& W) {
  Json out = Json::array();
  for (int l = W.bottom() - 1; l <= W.top(); ++l) out.push_back({{"l", l}, {"dim", W.at(l).dim()}});
  return out;
}

Json hodge_json(const DecreasingFiltration& F) {
  Json out = Json::array();
  for (int p = F.bottom(); p <= F.top() + 1; ++p) out.push_back({{"p", p}, {"dim", F.at(p).dim()}});
  return out;
}

Json bigrading_json(const Bigrading& b) {
  Json out = Json::array();
  for (auto it = b.pieces.rbegin(); it != b.pieces.rend(); ++it)
    out.push_back({{"p", it->first.first}, {"q", it->first.second}, {"dim", it->second.dim()}});
  return out;
}

struct Context {
  NilpotentCone cone;
  IncreasingFiltration W;
  DecreasingFiltration F;
  Bigrading bigrading;
  LieBigrading lb;
  DecreasingFiltration F_inf;
};

Context build_context(const DegenerationInput& in, const NilpotentCone& cone, const std::string& cmd) {
  Context c;
  c.cone = cone;
  c.W = weight_of(cone, in);
  c.F = require_F(in, cmd);
  MixedHodgeStructure mhs(in.lattice, c.W, c.F);
  c.bigrading = mhs.bigrading();
  c.lb = LieBigrading(in.lattice, c.bigrading);
  c.F_inf = reduced_limit(mhs);
  return c;
}

Json base_report(const std::string& cmd, const NilpotentCone& cone) {
  return {{"schema", kSchema}, {"command", cmd}, {"cone", {{"name", cone.name}, {"label", label_json(cone.label)}}}};
}

// ------------------------------------------------------------- deligne

CommandResult cmd_deligne(const DegenerationInput& in, const NilpotentCone& cone) {
  Context c = build_context(in, cone, "deligne");
  Json r = base_report("deligne", cone);
  r["W"] = weight_json(c.W);
  r["F"] = hodge_json(c.F);
  r["bigrading"] = bigrading_json(c.bigrading);
  r["r_split"] = is_r_split(c.bigrading);
  bool w_ok = true, f_ok = true;
  for (int l = c.W.bottom() - 1; l <= c.W.top(); ++l)
    w_ok = w_ok && c.bigrading.sum_where([l](int p, int q) { return p + q <= l; }) == c.W.at(l);
  for (int p = c.F.bottom(); p <= c.F.top() + 1; ++p)
    f_ok = f_ok && c.bigrading.sum_where([p](int a, int) { return a >= p; }) == c.F.at(p);
  r["recovers_W"] = w_ok;
  r["recovers_F"] = f_ok;
  r["verdict"] = "completed";
  return {r, 0};
}

// ---------------------------------------------------------- check-lmhs

CommandResult cmd_check(const DegenerationInput& in, const NilpotentCone& cone) {
  Json r = base_report("check-lmhs", cone);
  IncreasingFiltration W = weight_of(cone, in);
  const DecreasingFiltration& F = require_F(in, "check-lmhs");
  ValidationReport v = validate_mhs(W, F, in.lattice);
  r["mhs_valid"] = v.valid;
  if (!v.valid) {
    Json fails = Json::array();
    for (auto& [l, p] : v.failures) fails.push_back({{"l", l}, {"p", p}});
    r["mhs_failures"] = fails;
    r["verdict"] = "invalid-mhs";
    return {r, 2};
  }
  PolarizationReport pr = polarization_check(W, F, cone, in.lattice.n);
  r["n_in_g11"] = pr.n_in_g11;
  r["griffiths"] = pr.griffiths;
  Json levels = Json::array();
  for (auto& lvl : pr.levels) {
    Json pieces = Json::array();
    for (auto& pc : lvl.pieces) {
      Json minors = Json::array();
      for (auto& m : pc.verdict.minors) minors.push_back(scalar_json(m));
      pieces.push_back({{"p", pc.p},
                        {"q", pc.q},
                        {"dim", pc.dim},
                        {"definiteness", to_string(pc.verdict.kind)},
                        {"minors", minors}});
    }
    levels.push_back({{"k", lvl.k},
                      {"prim_dim", lvl.prim_dim},
                      {"splits", lvl.splits},
                      {"hr1", lvl.hr1},
                      {"hr2", lvl.hr2},
                      {"pieces", pieces},
                      {"witness", lvl.witness}});
  }
  r["levels"] = levels;
  r["polarized"] = pr.verdict;
  r["verdict"] = pr.verdict ? "polarized" : "not-polarized";
  return {r, pr.verdict ? 0 : 2};
}

// -------------------------------------------------------- weight-compat

std::vector<NilpotentCone> declared_cones(const DegenerationInput& in) {
  std::vector<NilpotentCone> out;
  if (in.cones.empty()) {
    for (std::size_t i = 0; i < in.nilpotents.size(); ++i) {
      NilpotentCone c;
      c.lattice = in.lattice;
      c.generators = {in.nilpotents[i]};
      c.label = {int(i)};
      c.name = "N" + std::to_string(i);
      out.push_back(c);
    }
    if (in.nilpotents.size() > 1) out.push_back(in.cone(""));
  } else {
    for (auto& nc : in.cones) out.push_back(in.cone(nc.name));
  }
  return out;
}

bool label_subset(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> sa = a, sb = b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  return std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
}

CommandResult cmd_weight(const DegenerationInput& in) {
  std::vector<NilpotentCone> cones = declared_cones(in);
  Json r = {{"schema", kSchema}, {"command", "weight-compat"}};
  const int n = in.lattice.n;
  const std::uint64_t seed = in.config.seed;
  Json cj = Json::array();
  for (auto& c : cones) {
    Json e = {{"name", c.name}, {"label", label_json(c.label)}};
    try {
      e["W"] = weight_json(weight_of(c, in));
    } catch (const Error& err) {
      e["error"] = error_json(err);
    }
    cj.push_back(e);
  }
  r["cones"] = cj;

  bool all_agree = true;
  Json pairs = Json::array();
  for (auto& inner : cones)
    for (auto& outer : cones) {
      if (&inner == &outer || inner.label == outer.label || !label_subset(inner.label, outer.label)) continue;
      Json e = {{"inner", inner.name}, {"outer", outer.name}};
      try {
        EquivalenceReport er = weight_equivalence(inner, outer, n, seed);
        e["equal"] = er.equal;
        e["criterion"] = er.criterion;
        e["agrees"] = er.agrees;
        if (er.in_c2) e["in_c2"] = *er.in_c2;
        all_agree = all_agree && er.agrees;
      } catch (const Error& err) {
        e["error"] = error_json(err);
        all_agree = false;
      }
      pairs.push_back(e);
    }
  r["pairs"] = pairs;

  Json classes = Json::array();
  for (auto& [W, ms] : weight_classes(cones, n, seed)) {
    classes.push_back({{"W", weight_json(W)}, {"maximal_label", label_json(ms.label)}, {"verified", ms.verified}});
    all_agree = all_agree && ms.verified;
  }
  r["classes"] = classes;
  r["verdict"] = all_agree ? "compatible" : "incompatible";
  return {r, all_agree ? 0 : 2};
}

// ------------------------------------------------------------------ sl2

std::vector<GammaLog> gamma_logs(const DegenerationInput& in, const Context& c) {
  std::vector<GammaLog> out;
  for (auto& g : in.monodromy) {
    try {
      MonodromyElement me = factor_monodromy(g, c.lb, in.lattice, c.F_inf);
      out.emplace_back(c.lb.component(me.log_alpha, -1, 0), c.lb.component(me.b, 0, -1));
    } catch (const NotInStabilizer&) {
    }
  }
  return out;
}

CommandResult cmd_sl2(const DegenerationInput& in, const NilpotentCone& cone) {
  Context c = build_context(in, cone, "sl2");
  Json r = base_report("sl2", cone);
  GMatrix Y = grading_element(c.lb, in.lattice.n);
  GMatrix N = cone.interior();
  r["Y"] = matrix_json(Y);
  r["N"] = matrix_json(N);
  Sl2Triple t;
  try {
    t = sl2_complete(in.lattice, N, Y);
  } catch (const NoTriple& e) {
    r["error"] = error_json(e);
    r["verdict"] = "no-triple";
    return {r, 2};
  }
  r["M"] = matrix_json(t.M);
  r["is_triple"] = is_sl2_triple(t);
  r["degenerate"] = t.degenerate;
  Json kn = Json::array();
  for (auto& Ni : cone.generators) kn.push_back(scalar_json(kappa(in.lattice, t.M, Ni)));
  r["kappa_M_Ni"] = kn;
  GScalar kmn = kappa(in.lattice, t.M, N);
  GScalar kyy = kappa(in.lattice, Y, Y) * GScalar(Rational(1, 2));
  r["kappa_M_N"] = scalar_json(kmn);
  r["kappa_Y_Y_half"] = scalar_json(kyy);
  r["kappa_identity"] = kmn == kyy;

  std::vector<GammaLog> logs = gamma_logs(in, c);
  Json mem = Json::object();
  for (ConeKind kind : {ConeKind::Nstar, ConeKind::N1, ConeKind::Nsl2, ConeKind::Nsl2plus}) {
    Json e;
    try {
      MembershipResult mr = cone_membership(t.M, cone, logs, kind, c.lb, Y);
      e["member"] = mr.member;
      e["failures"] = mr.failures;
      if (mr.cone_point) e["cone_point"] = rational_vector_json(*mr.cone_point);
    } catch (const Error& err) {
      e["error"] = error_json(err);
    }
    mem[to_string(kind)] = e;
  }
  r["membership"] = mem;
  r["verdict"] = "triple";
  return {r, 0};
}

// ------------------------------------------------------ extension-tower

CommandResult cmd_extension(const DegenerationInput& in, const NilpotentCone& cone) {
  Context c = build_context(in, cone, "extension-tower");
  Json r = base_report("extension-tower", cone);
  int spread = weight_spread(c.lb);
  r["weight_spread"] = spread;
  Json levels = Json::array();
  for (int a = 1; a <= spread; ++a) {
    ExtensionSpace full = extension_space(c.lb, a);
    ExtensionSpace cut = extension_space(c.lb, a, cone);
    std::map<PQ, std::size_t> counts;
    for (auto& pq : full.tags) ++counts[pq];
    Json pieces = Json::array();
    for (auto it = counts.rbegin(); it != counts.rend(); ++it)
      pieces.push_back({{"p", it->first.first}, {"q", it->first.second}, {"dim", it->second}});
    levels.push_back({{"level", a}, {"dim", full.dim()}, {"centralized_dim", cut.dim()}, {"pieces", pieces}});
  }
  r["levels"] = levels;
  if (in.extension_lattice) {
    ExtensionSpace sp = extension_space(c.lb, in.extension_lattice->level);
    TorusDecomposition td = torus_decomposition(sp, LatticeData{in.extension_lattice->generators});
    r["torus"] = {{"level", in.extension_lattice->level},
                  {"d1", td.d1},
                  {"d2", td.d2},
                  {"d3", td.d3},
                  {"rank", td.rank},
                  {"text", "C^" + std::to_string(td.d1) + " x (C*)^" + std::to_string(td.d2) + " x T^" +
                               std::to_string(td.d3)}};
  }
  r["verdict"] = "completed";
  return {r, 0};
}

// ---------------------------------------------------------- ample-cone

const char* status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::NotFound: return "not-found";
    case SearchStatus::ZeroCone: return "zero-cone";
  }
  return "?";
}

CommandResult cmd_ample(const DegenerationInput& in, const NilpotentCone& cone) {
  Context c = build_context(in, cone, "ample-cone");
  Json r = base_report("ample-cone", cone);
  GMatrix Y = grading_element(c.lb, in.lattice.n);
  AmpleSearchResult res = ample_cone_search(cone, Y, in.config.budget, in.config.seed);
  r["status"] = status_name(res.status);
  r["y"] = rational_vector_json(res.y);
  r["kappas"] = rational_vector_json(res.kappas);
  r["probes"] = res.probes;
  r["budget"] = in.config.budget;
  r["method"] = res.method;
  if (res.triple) r["M"] = matrix_json(res.triple->M);
  r["verdict"] = status_name(res.status);
  return {r, res.status == SearchStatus::Found ? 0 : 2};
}

// -------------------------------------------------------- period-report

Json psi_json(const PsiTable& psi) {
  Json rows = Json::array();
  for (auto& row : psi.rows) {
    Json jr = Json::array();
    for (auto& e : row) jr.push_back({{"hol", scalar_json(e.hol)}, {"per_2pii", scalar_json(e.per_2pii)}});
    rows.push_back(jr);
  }
  return {{"directions", psi.directions},
          {"rows", rows},
          {"dNi_ok", psi.dNi_ok},
          {"w_block_rank", psi.w_block_rank},
          {"nilpotent_rank", psi.nilpotent_rank},
          {"rank", psi.rank},
          {"torelli", psi.torelli}};
}

Json ipr_json(const IprReport& ipr) {
  Json v = Json::array();
  for (auto& x : ipr.violations) v.push_back({{"symbol", x.symbol}, {"p", x.p}, {"q", x.q}});
  return {{"restricted", ipr.restricted},
          {"horizontal", ipr.horizontal},
          {"violations", v},
          {"level", ipr.level},
          {"level_premise", ipr.level_premise},
          {"level_ok", ipr.level_ok}};
}

CommandResult cmd_period(const DegenerationInput& in, const NilpotentCone& cone) {
  Context c = build_context(in, cone, "period-report");
  if (!in.xi) throw SchemaError("/xi", "required by period-report");
  if (in.xi->matrix.space().k != cone.generators.size())
    throw SchemaError("/xi/symbols/t", "must equal the number of cone generators (" +
                                           std::to_string(cone.generators.size()) + ")");
  const int trunc = in.config.truncation_order;
  SymbolicFrame frame = in.xi->is_log ? build_lift_from_log(cone, c.lb, c.F, in.xi->matrix, trunc)
                                      : build_lift(cone, c.lb, c.F, in.xi->matrix, trunc);
  SchubertCoordinate coord = schubert_coordinate(frame);
  Json r = base_report("period-report", cone);
  r["truncation_order"] = trunc;
  r["X"] = matrix_poly_json(coord.X);
  r["X_tilde"] = matrix_poly_json(coord.X_tilde);
  r["truncated"] = coord.truncated;
  r["minus_one_single_valued"] = minus_one_single_valued(c.lb, coord.X_tilde);

  HorizontalBasis basis = horizontal_basis(c.lb, cone);
  HorizontalCoefficients hc = horizontal_coefficients(coord.X, basis.elements, c.lb, cone);
  r["ell_coefficients_ok"] = hc.ell_coefficients_ok;
  Json hj = Json::array();
  for (std::size_t mu = 0; mu < basis.elements.size(); ++mu) {
    const GMatrix& M = basis.elements[mu];
    Json e = {{"M", matrix_json(M)}, {"logarithmic", bool(basis.logarithmic[mu])}, {"eps", poly_json(hc.eps[mu])}};
    try {
      e["tau"] = tau_json(tau(M, coord, cone));
    } catch (const Error& err) {
      e["tau_error"] = error_json(err);
    }
    hj.push_back(e);
  }
  r["horizontal"] = hj;

  Json mj = Json::array();
  for (std::size_t g = 0; g < in.monodromy.size(); ++g) {
    Json e = {{"index", g}};
    try {
      MonodromyElement me = factor_monodromy(in.monodromy[g], c.lb, in.lattice, c.F_inf);
      e["alpha"] = matrix_json(me.alpha);
      e["beta0"] = matrix_json(me.beta0);
      e["b"] = matrix_json(me.b);
      if (me.c) e["c"] = matrix_json(*me.c);
      ActionResult act = monodromy_action(me, coord.X, c.lb);
      e["X_moved"] = matrix_poly_json(act.X);
      e["laws_checked"] = act.laws_checked;
      if (act.laws_checked) {
        e["laws_ok"] = act.laws_ok;
        e["law_failures"] = act.failures;
      }
      Json mults = Json::array();
      for (auto& M : basis.elements) mults.push_back(tau_json(multiplier(M, me, coord.X, c.lb, in.lattice)));
      e["multipliers"] = mults;
    } catch (const Error& err) {
      e["error"] = error_json(err);
    }
    mj.push_back(e);
  }
  r["monodromy"] = mj;

  Json deck = Json::array();
  for (std::size_t i = 0; i < cone.generators.size(); ++i) {
    Json e = {{"generator", i}};
    try {
      DeckCheck dc = deck_consistency(frame, coord, i, c.F_inf);
      e["lift_ok"] = dc.lift_ok;
      e["coordinate_ok"] = dc.coordinate_ok;
    } catch (const Error& err) {
      e["error"] = error_json(err);
    }
    deck.push_back(e);
  }
  r["deck"] = deck;

  Json ipr = Json::array();
  ipr.push_back(ipr_json(ipr_check(frame, {}, 1)));
  for (std::size_t i = 0; i < cone.generators.size(); ++i) ipr.push_back(ipr_json(ipr_check(frame, {i}, 1)));
  r["ipr"] = ipr;

  PsiTable psi = log_differential_map(hc, basis.elements, cone);
  r["psi"] = psi_json(psi);
  r["torelli"] = psi.torelli;
  r["verdict"] = "completed";
  return {r, 0};
}

// ------------------------------------------------------------ rendering

void render_value(std::ostringstream& os, const Json& j, int indent, const std::string& key);

bool is_flat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  return std::all_of(j.begin(), j.end(), [](const Json& e) { return is_flat(e) && !e.is_object(); });
}

std::string flat_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (!j.is_array()) return j.dump();
  std::string s = "[";
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + flat_text(j[i]);
  return s + "]";
}

void render_value(std::ostringstream& os, const Json& j, int indent, const std::string& key) {
  std::string pad(indent, ' ');
  if (is_flat(j)) {
    os << pad << key << ": " << flat_text(j) << "\n";
    return;
  }
  os << pad << key << ":\n";
  if (j.is_object()) {
    for (auto& [k, v] : j.items()) render_value(os, v, indent + 2, k);
  } else {
    for (std::size_t i = 0; i < j.size(); ++i) render_value(os, j[i], indent + 2, "[" + std::to_string(i) + "]");
  }
}

/// Diamond of h^{p,q}: row p+q (top = highest), column p-q.
std::string diamond(const Json& pieces) {
  std::map<PQ, long> h;
  int pmin = 0, pmax = 0, qmin = 0, qmax = 0;
  bool first = true;
  for (auto& e : pieces) {
    int p = e["p"], q = e["q"];
    h[{p, q}] = e["dim"].get<long>();
    if (first) pmin = pmax = p, qmin = qmax = q, first = false;
    pmin = std::min(pmin, p), pmax = std::max(pmax, p), qmin = std::min(qmin, q), qmax = std::max(qmax, q);
  }
  if (first) return "";
  std::ostringstream os;
  const int xmin = pmin - qmax, xmax = pmax - qmin;
  for (int y = pmax + qmax; y >= pmin + qmin; --y) {
    std::string line;
    for (int x = xmin; x <= xmax; ++x) {
      std::string cell = "  ";
      if (((x + y) % 2 + 2) % 2 == 0) {
        int p = (x + y) / 2, q = (y - x) / 2;
        if (p >= pmin && p <= pmax && q >= qmin && q <= qmax) {
          auto it = h.find({p, q});
          cell = std::to_string(it == h.end() ? 0 : it->second);
          if (cell.size() < 2) cell = " " + cell;
        }
      }
      line += cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << "  " << line << "\n";
  }
  return os.str();
}

}  // namespace

CommandResult run_command(const std::string& command, DegenerationInput input, const CommandOptions& opts) {
  if (opts.seed) input.config.seed = *opts.seed;
  if (opts.budget) input.config.budget = *opts.budget;
  if (opts.truncation_order) input.config.truncation_order = *opts.truncation_order;
  if (command == "weight-compat") return cmd_weight(input);
  NilpotentCone cone = input.cone(opts.cone);
  if (command == "deligne") return cmd_deligne(input, cone);
  if (command == "check-lmhs") return cmd_check(input, cone);
  if (command == "sl2") return cmd_sl2(input, cone);
  if (command == "extension-tower") return cmd_extension(input, cone);
  if (command == "ample-cone") return cmd_ample(input, cone);
  if (command == "period-report") return cmd_period(input, cone);
  throw std::invalid_argument("unknown command '" + command + "'");
}

Json genus2_example() {
  Genus2Fixture g = builtin_genus2();
  DegenerationInput in;
  in.lattice = g.lattice;
  in.q_derived = true;
  in.nilpotents = g.cone.generators;
  in.cones = {NamedCone{"sigma", {0}}};
  in.F = g.F;
  in.xi = XiData{true, g.frame.log_xi};
  in.monodromy = {genus2_gamma(1, 0, 0), genus2_gamma(0, 1, 0), genus2_gamma(0, 0, 1)};
  return to_json(in);
}

Json error_report(const std::string& command, const std::string& kind, const std::string& message,
                  const std::optional<std::string>& path) {
  Json err = {{"kind", kind}, {"message", message}};
  if (path) err["path"] = *path;
  return {{"schema", kSchema}, {"command", command}, {"error", err}};
}

std::string render_json(const Json& report) { return report.dump(2) + "\n"; }

std::string render_text(const Json& report) {
  std::ostringstream os;
  if (report.contains("command")) os << report["command"].get<std::string>();
  if (report.contains("verdict")) os << ": " << report["verdict"].get<std::string>();
  os << "\n";
  if (report.contains("bigrading")) os << "Hodge-Deligne diamond (h^{p,q}, weight p+q upward):\n" << diamond(report["bigrading"]);
  for (auto& [k, v] : report.items()) {
    if (k == "schema" || k == "command" || k == "verdict") continue;
    render_value(os, v, 0, k);
  }
  return os.str();
}

}  // namespace lmhs
