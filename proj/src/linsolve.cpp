#include "lmhs/linsolve.hpp"

#include "lmhs/errors.hpp"

namespace lmhs {

SolveResult solve_linear(const GMatrix& a, const GMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("solve_linear: row counts differ");
  std::size_t m = a.rows(), n = a.cols(), k = b.cols();
  // Eliminate on [A | b | I]; the identity block records the row operations.
  GMatrix aug(m, n + k + m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < k; ++j) aug(i, n + j) = b(i, j);
    aug(i, n + k + i) = 1;
  }
  RowEchelon e = row_reduce(aug);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] < n) continue;
    if (e.pivots[r] < n + k) {
      NoSolutionCertificate cert{GMatrix(1, m)};
      for (std::size_t i = 0; i < m; ++i) cert.y(0, i) = e.reduced(r, n + k + i);
      return cert;
    }
    break;
  }
  LinearSolution sol{GMatrix(n, k), kernel(a)};
  for (std::size_t r = 0; r < e.pivots.size() && e.pivots[r] < n; ++r)
    for (std::size_t j = 0; j < k; ++j) sol.solution(e.pivots[r], j) = e.reduced(r, n + j);
  return sol;
}

LinearSolution solve_or_throw(const GMatrix& a, const GMatrix& b, const char* what) {
  SolveResult r = solve_linear(a, b);
  if (auto* s = std::get_if<LinearSolution>(&r)) return std::move(*s);
  throw NoSolution(std::string(what) + ": linear system is inconsistent");
}

}  // namespace lmhs
