#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lmhs/logpoly.hpp"
#include "lmhs/weight.hpp"

namespace lmhs {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "lmhs/1";

struct RunConfig {
  Rational kappa_scale{1};
  std::uint64_t seed = 1;
  std::size_t budget = 2000;
  int truncation_order = 8;
};

struct NamedCone {
  std::string name;
  std::vector<std::size_t> generators;
};

/// Polynomial data for ξ, either as log ξ or as ξ itself.
struct XiData {
  bool is_log = true;
  MatrixPoly matrix;
};

/// Generators (elements of End V) of an extension lattice at a given level.
struct ExtensionLatticeInput {
  int level = 1;
  std::vector<GMatrix> generators;
};

struct DegenerationInput {
  PolarizedLattice lattice;
  bool q_derived = false;
  std::vector<GMatrix> nilpotents;
  std::vector<NamedCone> cones;
  std::optional<DecreasingFiltration> F;
  std::optional<XiData> xi;
  std::vector<GMatrix> monodromy;
  std::optional<ExtensionLatticeInput> extension_lattice;
  RunConfig config;

  /// Named cone; the empty name selects every nilpotent. Throws SchemaError
  /// for an unknown name.
  NilpotentCone cone(const std::string& name) const;
};

/// Throws SchemaError (with a JSON pointer) on malformed documents and
/// InvariantError when the data violates a mathematical precondition.
DegenerationInput parse_input(const Json& doc);
DegenerationInput parse_input_text(std::string_view text);
Json to_json(const DegenerationInput& in);

/// The unique (up to scale) Q with Q^T = (-1)^n Q and γ^T Q γ = Q for all
/// γ, such that W(log γ)_l ⊥ W(log γ)_{2n-l-1} for unipotent γ and, when F
/// is given, F^p ⊥ F^{n-p+1} together with its conjugate. Normalized so its first nonzero row-major
/// entry is 1. Throws InvariantError when the solutions do not form a line.
GMatrix derive_form(const std::vector<GMatrix>& gammas, std::size_t dim, int n,
                    const DecreasingFiltration* F = nullptr);

Json scalar_json(const GScalar& z);
Json matrix_json(const GMatrix& m);
/// Columns as a list of vectors.
Json columns_json(const GMatrix& m);
Json poly_json(const LogPolynomial& p);
Json matrix_poly_json(const MatrixPoly& m);
Json tau_json(const TauExpression& t);
Json rational_vector_json(const std::vector<Rational>& v);

GScalar parse_scalar(const Json& j, const std::string& path);
GMatrix parse_matrix(const Json& j, const std::string& path, std::size_t rows, std::size_t cols);

}  // namespace lmhs
