#pragma once

#include <variant>

#include "lmhs/matrix.hpp"
#include "lmhs/subspace.hpp"

namespace lmhs {

/// Particular solution of A x = b together with the full kernel of A.
struct LinearSolution {
  GMatrix solution;
  Subspace kernel;
};

/// Inconsistency certificate: y A = 0 while y b != 0.
struct NoSolutionCertificate {
  GMatrix y;  ///< 1 x rows(A)
};

using SolveResult = std::variant<LinearSolution, NoSolutionCertificate>;

/// Exact solve of A x = b; b may have several columns (solved jointly).
SolveResult solve_linear(const GMatrix& a, const GMatrix& b);

/// Convenience wrapper that throws NoSolution on inconsistency.
LinearSolution solve_or_throw(const GMatrix& a, const GMatrix& b, const char* what);

}  // namespace lmhs
