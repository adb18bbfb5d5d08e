#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lmhs/matrix.hpp"
#include "lmhs/subspace.hpp"

namespace lmhs {

/// (V, Q, n) with optional Hodge numbers h = (h^{n,0}, ..., h^{0,n}).
/// `kappa_scale` fixes the normalization of the trace form on g.
struct PolarizedLattice {
  std::size_t dim = 0;
  int n = 0;
  GMatrix Q;
  std::optional<std::vector<int>> hodge_numbers;
  Rational kappa_scale{1};

  /// Throws InvariantError on degenerate Q, wrong parity, non-real Q or a
  /// Hodge-number sum different from dim.
  void validate() const;
  /// Q(u, v) = u^T Q v (bilinear, no conjugation).
  GScalar pair(const GMatrix& u, const GMatrix& v) const;
};

/// Increasing filtration W. Below the stored range it is 0, above it V.
class IncreasingFiltration {
 public:
  IncreasingFiltration() = default;
  /// Throws InvariantError unless consecutive steps are nested.
  IncreasingFiltration(std::size_t ambient, std::map<int, Subspace> steps);

  std::size_t ambient_dim() const { return n_; }
  Subspace at(int l) const;
  /// Smallest l with W_l != 0 and smallest l with W_l = V.
  int bottom() const;
  int top() const;
  /// W_l / W_{l-1}.
  Quotient graded(int l) const;
  std::size_t graded_dim(int l) const { return at(l).dim() - at(l - 1).dim(); }
  /// Indices l with Gr_l != 0, increasing.
  std::vector<int> weights() const;
  bool is_real() const;
  const std::map<int, Subspace>& steps() const { return steps_; }

  friend bool operator==(const IncreasingFiltration& a, const IncreasingFiltration& b);
  friend bool operator!=(const IncreasingFiltration& a, const IncreasingFiltration& b) { return !(a == b); }

 private:
  std::size_t n_ = 0;
  std::map<int, Subspace> steps_;
};

/// Decreasing filtration F. Below the stored range it is V, above it 0.
class DecreasingFiltration {
 public:
  DecreasingFiltration() = default;
  DecreasingFiltration(std::size_t ambient, std::map<int, Subspace> steps);

  std::size_t ambient_dim() const { return n_; }
  Subspace at(int p) const;
  /// Largest p with F^p = V and largest p with F^p != 0.
  int bottom() const;
  int top() const;
  DecreasingFiltration conjugate() const;
  /// g F for an invertible g.
  DecreasingFiltration transform(const GMatrix& g) const;
  const std::map<int, Subspace>& steps() const { return steps_; }

  friend bool operator==(const DecreasingFiltration& a, const DecreasingFiltration& b);
  friend bool operator!=(const DecreasingFiltration& a, const DecreasingFiltration& b) { return !(a == b); }

 private:
  std::size_t n_ = 0;
  std::map<int, Subspace> steps_;
};

}  // namespace lmhs
