#include "lmhs/io.hpp"

#include <set>

#include "lmhs/errors.hpp"

namespace lmhs {

namespace {

std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const Json& require(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw SchemaError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(at(path, key), "missing required field");
  return *it;
}

const Json* optional_field(const Json& obj, const std::string& key) {
  auto it = obj.find(key);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

long long parse_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  return j.get<long long>();
}

std::size_t parse_count(const Json& j, const std::string& path) {
  long long v = parse_int(j, path);
  if (v < 0) throw SchemaError(path, "expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

const Json& parse_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  return j;
}

Rational parse_rational_field(const Json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "expected an exact rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception&) {
    throw SchemaError(path, "malformed rational '" + j.get<std::string>() + "'");
  }
}

GMatrix parse_column(const Json& j, const std::string& path, std::size_t dim) {
  parse_array(j, path);
  if (j.size() != dim) throw SchemaError(path, "expected a vector of length " + std::to_string(dim));
  GMatrix v(dim, 1);
  for (std::size_t i = 0; i < dim; ++i) v(i, 0) = parse_scalar(j[i], at(path, i));
  return v;
}

std::vector<GMatrix> parse_matrix_list(const Json& j, const std::string& path, std::size_t dim) {
  parse_array(j, path);
  std::vector<GMatrix> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_matrix(j[i], at(path, i), dim, dim));
  return out;
}

MatrixPoly parse_xi_terms(const Json& j, const std::string& path, SymbolSpace sp, std::size_t dim) {
  parse_array(j, path);
  MatrixPoly out(sp, dim, dim);
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string tp = at(path, i);
    const Json& mono = require(j[i], "monomial", tp);
    if (!mono.is_object()) throw SchemaError(at(tp, "monomial"), "expected an object of symbol exponents");
    Monomial m(sp.size(), 0);
    for (auto& [name, e] : mono.items()) {
      std::size_t idx = 0;
      try {
        idx = sp.index_of(name);
      } catch (const std::invalid_argument&) {
        throw SchemaError(at(at(tp, "monomial"), name), "unknown symbol");
      }
      long long v = parse_int(e, at(at(tp, "monomial"), name));
      if (v < 0) throw SchemaError(at(at(tp, "monomial"), name), "exponents must be non-negative");
      m[idx] = static_cast<int>(v);
    }
    GMatrix c = parse_matrix(require(j[i], "matrix", tp), at(tp, "matrix"), dim, dim);
    out += MatrixPoly::times(LogPolynomial::monomial(sp, m, GScalar(1)), c);
  }
  return out;
}

Json monomial_json(const SymbolSpace& sp, const Monomial& m) {
  Json out = Json::object();
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) out[sp.name(i)] = m[i];
  return out;
}

}  // namespace

// ---------------------------------------------------------------- values

Json scalar_json(const GScalar& z) { return z.to_string(); }

Json matrix_json(const GMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json columns_json(const GMatrix& m) {
  Json cols = Json::array();
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Json col = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) col.push_back(scalar_json(m(i, j)));
    cols.push_back(col);
  }
  return cols;
}

Json poly_json(const LogPolynomial& p) {
  Json terms = Json::array();
  for (auto& [m, c] : p.terms()) terms.push_back({{"coefficient", scalar_json(c)}, {"monomial", monomial_json(p.space(), m)}});
  return {{"terms", terms}, {"text", p.to_string()}};
}

Json matrix_poly_json(const MatrixPoly& m) {
  Json terms = Json::array();
  for (auto& [mono, c] : m.terms()) terms.push_back({{"matrix", matrix_json(c)}, {"monomial", monomial_json(m.space(), mono)}});
  return terms;
}

Json tau_json(const TauExpression& t) {
  return {{"exponent", poly_json(t.exponent)}, {"monomial", t.monomial}, {"text", t.to_string()}};
}

Json rational_vector_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (auto& q : v) out.push_back(rational_to_string(q));
  return out;
}

GScalar parse_scalar(const Json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "matrix entries must be exact rational strings");
  try {
    return GScalar::parse(j.get<std::string>());
  } catch (const std::exception&) {
    throw SchemaError(path, "malformed scalar '" + j.get<std::string>() + "'");
  }
}

GMatrix parse_matrix(const Json& j, const std::string& path, std::size_t rows, std::size_t cols) {
  parse_array(j, path);
  if (j.size() != rows) throw SchemaError(path, "expected " + std::to_string(rows) + " rows");
  GMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = parse_array(j[i], at(path, i));
    if (row.size() != cols) throw SchemaError(at(path, i), "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = parse_scalar(row[c], at(at(path, i), c));
  }
  return m;
}

// ---------------------------------------------------------------- input

GMatrix derive_form(const std::vector<GMatrix>& gammas, std::size_t dim, int n, const DecreasingFiltration* F) {
  if (gammas.empty()) throw InvariantError("derive-from-monodromy needs monodromy_generators");
  const std::size_t d2 = dim * dim;
  std::vector<std::vector<GScalar>> rows;
  const GScalar sign = n % 2 ? GScalar(-1) : GScalar(1);
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t l = 0; l < dim; ++l) {
      std::vector<GScalar> r(d2);
      r[k * dim + l] += 1;
      r[l * dim + k] -= sign;
      rows.push_back(r);
    }
  for (const GMatrix& g : gammas)
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        std::vector<GScalar> r(d2);
        for (std::size_t k = 0; k < dim; ++k)
          for (std::size_t l = 0; l < dim; ++l) r[k * dim + l] = g(k, i) * g(l, j);
        r[i * dim + j] -= 1;
        rows.push_back(r);
      }
  auto orthogonal = [&](const Subspace& a, const Subspace& b) {
    for (std::size_t x = 0; x < a.dim(); ++x)
      for (std::size_t y = 0; y < b.dim(); ++y) {
        std::vector<GScalar> r(d2);
        for (std::size_t k = 0; k < dim; ++k)
          for (std::size_t l = 0; l < dim; ++l) r[k * dim + l] = a.basis()(k, x) * b.basis()(l, y);
        rows.push_back(r);
      }
  };
  // Unipotent generators: W(log γ)_l ⊥ W(log γ)_{2n-l-1}.
  for (const GMatrix& g : gammas) {
    if (!(g - GMatrix::identity(dim)).is_nilpotent()) continue;
    GMatrix N = log_unipotent(g);
    if (N.is_zero()) continue;
    IncreasingFiltration W = monodromy_weight_filtration(N, n);
    for (int l = W.bottom(); l <= W.top(); ++l) orthogonal(W.at(l), W.at(2 * n - l - 1));
  }
  // Q is real, so the conjugate filtration is isotropic as well.
  if (F)
    for (int p = F->bottom(); p <= F->top(); ++p) {
      orthogonal(F->at(p), F->at(n - p + 1));
      orthogonal(F->at(p).conjugate(), F->at(n - p + 1).conjugate());
    }
  GMatrix ker = kernel_basis(GMatrix::from_rows(rows));
  if (ker.cols() != 1)
    throw InvariantError("invariant form space has dimension " + std::to_string(ker.cols()) + ", expected 1");
  GMatrix q = GMatrix::unvec(ker, dim, dim);
  for (std::size_t i = 0; i < d2; ++i)
    if (!ker(i, 0).is_zero()) {
      q *= ker(i, 0).inverse();
      break;
    }
  return q;
}

NilpotentCone DegenerationInput::cone(const std::string& name) const {
  NilpotentCone c;
  c.lattice = lattice;
  if (name.empty()) {
    c.name = "all";
    c.generators = nilpotents;
    for (std::size_t i = 0; i < nilpotents.size(); ++i) c.label.push_back(int(i));
    return c;
  }
  for (auto& nc : cones)
    if (nc.name == name) {
      c.name = name;
      for (std::size_t i : nc.generators) {
        c.generators.push_back(nilpotents.at(i));
        c.label.push_back(int(i));
      }
      return c;
    }
  throw SchemaError("/cones", "no cone named '" + name + "'");
}

DegenerationInput parse_input(const Json& doc) {
  if (!doc.is_object()) throw SchemaError("", "expected a JSON object");
  const Json& schema = require(doc, "schema", "");
  if (!schema.is_string() || schema.get<std::string>() != kSchema)
    throw SchemaError("/schema", std::string("unsupported schema, expected \"") + kSchema + "\"");

  DegenerationInput in;
  if (const Json* cfg = optional_field(doc, "config")) {
    if (!cfg->is_object()) throw SchemaError("/config", "expected an object");
    if (const Json* v = optional_field(*cfg, "kappa_scale")) {
      in.config.kappa_scale = parse_rational_field(*v, "/config/kappa_scale");
      if (sgn(in.config.kappa_scale) <= 0) throw SchemaError("/config/kappa_scale", "must be positive");
    }
    if (const Json* v = optional_field(*cfg, "seed")) in.config.seed = parse_count(*v, "/config/seed");
    if (const Json* v = optional_field(*cfg, "budget")) in.config.budget = parse_count(*v, "/config/budget");
    if (const Json* v = optional_field(*cfg, "truncation_order"))
      in.config.truncation_order = static_cast<int>(parse_count(*v, "/config/truncation_order"));
  }

  const Json& lat = require(doc, "lattice", "");
  std::size_t dim = parse_count(require(lat, "dim", "/lattice"), "/lattice/dim");
  if (dim == 0) throw SchemaError("/lattice/dim", "must be positive");
  in.lattice.dim = dim;
  in.lattice.n = static_cast<int>(parse_int(require(lat, "n", "/lattice"), "/lattice/n"));
  in.lattice.kappa_scale = in.config.kappa_scale;
  if (const Json* h = optional_field(lat, "hodge_numbers")) {
    parse_array(*h, "/lattice/hodge_numbers");
    std::vector<int> hn;
    for (std::size_t i = 0; i < h->size(); ++i)
      hn.push_back(static_cast<int>(parse_count((*h)[i], at("/lattice/hodge_numbers", i))));
    in.lattice.hodge_numbers = hn;
  }

  if (const Json* m = optional_field(doc, "monodromy_generators"))
    in.monodromy = parse_matrix_list(*m, "/monodromy_generators", dim);

  if (const Json* lf = optional_field(doc, "limit_filtration")) {
    parse_array(*lf, "/limit_filtration");
    std::map<int, Subspace> steps;
    for (std::size_t i = 0; i < lf->size(); ++i) {
      std::string sp = at("/limit_filtration", i);
      int p = static_cast<int>(parse_int(require((*lf)[i], "p", sp), at(sp, "p")));
      const Json& cols = parse_array(require((*lf)[i], "columns", sp), at(sp, "columns"));
      std::vector<GMatrix> vs;
      for (std::size_t j = 0; j < cols.size(); ++j) vs.push_back(parse_column(cols[j], at(at(sp, "columns"), j), dim));
      if (!steps.emplace(p, Subspace::span(dim, vs)).second) throw SchemaError(at(sp, "p"), "duplicate filtration index");
    }
    in.F = DecreasingFiltration(dim, steps);
  }

  const Json& q = require(lat, "Q", "/lattice");
  if (q.is_string()) {
    if (q.get<std::string>() != "derive-from-monodromy")
      throw SchemaError("/lattice/Q", "expected a matrix or \"derive-from-monodromy\"");
    in.lattice.Q = derive_form(in.monodromy, dim, in.lattice.n, in.F ? &*in.F : nullptr);
    in.q_derived = true;
  } else {
    in.lattice.Q = parse_matrix(q, "/lattice/Q", dim, dim);
  }
  in.lattice.validate();

  if (const Json* ns = optional_field(doc, "nilpotents")) in.nilpotents = parse_matrix_list(*ns, "/nilpotents", dim);

  if (const Json* cs = optional_field(doc, "cones")) {
    parse_array(*cs, "/cones");
    std::set<std::string> names;
    for (std::size_t i = 0; i < cs->size(); ++i) {
      std::string cp = at("/cones", i);
      NamedCone nc;
      const Json& name = require((*cs)[i], "name", cp);
      if (!name.is_string() || name.get<std::string>().empty()) throw SchemaError(at(cp, "name"), "expected a name");
      nc.name = name.get<std::string>();
      if (!names.insert(nc.name).second) throw SchemaError(at(cp, "name"), "duplicate cone name");
      const Json& gens = parse_array(require((*cs)[i], "generators", cp), at(cp, "generators"));
      for (std::size_t j = 0; j < gens.size(); ++j) {
        std::size_t g = parse_count(gens[j], at(at(cp, "generators"), j));
        if (g >= in.nilpotents.size()) throw SchemaError(at(at(cp, "generators"), j), "nilpotent index out of range");
        nc.generators.push_back(g);
      }
      in.cones.push_back(nc);
    }
  }
  if (in.cones.empty()) {
    in.cone("").validate();
  } else {
    for (auto& nc : in.cones) in.cone(nc.name).validate();
  }

  if (const Json* xi = optional_field(doc, "xi")) {
    const Json& syms = require(*xi, "symbols", "/xi");
    SymbolSpace sp;
    sp.k = parse_count(require(syms, "t", "/xi/symbols"), "/xi/symbols/t");
    sp.r = parse_count(require(syms, "w", "/xi/symbols"), "/xi/symbols/w");
    XiData data;
    if (const Json* form = optional_field(*xi, "form")) {
      if (!form->is_string() || (*form != "log" && *form != "matrix"))
        throw SchemaError("/xi/form", "expected \"log\" or \"matrix\"");
      data.is_log = *form == "log";
    }
    data.matrix = parse_xi_terms(require(*xi, "terms", "/xi"), "/xi/terms", sp, dim);
    in.xi = data;
  }

  if (const Json* el = optional_field(doc, "extension_lattice")) {
    ExtensionLatticeInput e;
    e.level = static_cast<int>(parse_int(require(*el, "level", "/extension_lattice"), "/extension_lattice/level"));
    e.generators = parse_matrix_list(require(*el, "generators", "/extension_lattice"), "/extension_lattice/generators", dim);
    in.extension_lattice = e;
  }
  return in;
}

DegenerationInput parse_input_text(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError("", std::string("not valid JSON: ") + e.what());
  }
  return parse_input(doc);
}

Json to_json(const DegenerationInput& in) {
  Json doc;
  doc["schema"] = kSchema;
  Json lat = {{"dim", in.lattice.dim}, {"n", in.lattice.n}};
  lat["Q"] = in.q_derived ? Json("derive-from-monodromy") : matrix_json(in.lattice.Q);
  if (in.lattice.hodge_numbers) lat["hodge_numbers"] = *in.lattice.hodge_numbers;
  doc["lattice"] = lat;
  doc["nilpotents"] = Json::array();
  for (auto& N : in.nilpotents) doc["nilpotents"].push_back(matrix_json(N));
  doc["cones"] = Json::array();
  for (auto& c : in.cones) doc["cones"].push_back({{"name", c.name}, {"generators", c.generators}});
  if (in.F) {
    Json lf = Json::array();
    for (auto& [p, s] : in.F->steps()) lf.push_back({{"p", p}, {"columns", columns_json(s.basis())}});
    doc["limit_filtration"] = lf;
  }
  if (in.xi) {
    const SymbolSpace& sp = in.xi->matrix.space();
    doc["xi"] = {{"symbols", {{"t", sp.k}, {"w", sp.r}}},
                 {"form", in.xi->is_log ? "log" : "matrix"},
                 {"terms", matrix_poly_json(in.xi->matrix)}};
  }
  if (!in.monodromy.empty()) {
    doc["monodromy_generators"] = Json::array();
    for (auto& g : in.monodromy) doc["monodromy_generators"].push_back(matrix_json(g));
  }
  if (in.extension_lattice) {
    Json gens = Json::array();
    for (auto& g : in.extension_lattice->generators) gens.push_back(matrix_json(g));
    doc["extension_lattice"] = {{"level", in.extension_lattice->level}, {"generators", gens}};
  }
  doc["config"] = {{"kappa_scale", rational_to_string(in.config.kappa_scale)},
                   {"seed", in.config.seed},
                   {"budget", in.config.budget},
                   {"truncation_order", in.config.truncation_order}};
  return doc;
}

}  // namespace lmhs
