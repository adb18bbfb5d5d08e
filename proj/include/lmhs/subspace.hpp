#pragma once

#include <cstddef>
#include <vector>

#include "lmhs/matrix.hpp"

namespace lmhs {

/// Linear subspace of C^n, stored by its canonical reduced column echelon
/// basis: pivot rows strictly increase, pivots are 1 and every other column
/// vanishes in each pivot row. Equal subspaces have identical bases.
class Subspace {
 public:
  Subspace() = default;
  /// Span of the columns of `cols`.
  static Subspace span(const GMatrix& cols);
  static Subspace span(std::size_t n, const std::vector<GMatrix>& vectors);
  static Subspace zero(std::size_t n);
  static Subspace full(std::size_t n);

  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.cols(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == n_; }
  /// n x dim matrix whose columns are the canonical basis.
  const GMatrix& basis() const { return basis_; }
  GMatrix basis_vector(std::size_t j) const { return basis_.column(j); }
  /// Pivot row of each basis column.
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  bool contains(const Subspace& o) const;
  bool contains_vector(const GMatrix& v) const;
  bool equals(const Subspace& o) const { return *this == o; }
  Subspace conjugate() const;
  bool is_real() const { return basis_.is_real(); }

  /// Coordinates of v (which must lie in the subspace) in the canonical basis.
  GMatrix coordinates(const GMatrix& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  std::size_t n_ = 0;
  GMatrix basis_;
  std::vector<std::size_t> pivots_;
};

enum class SubspaceOp { Sum, Intersect, Contains, Equals };

/// Result of `subspace_algebra`: `space` is set for Sum/Intersect and
/// `truth` for Contains/Equals.
struct SubspaceOpResult {
  Subspace space;
  bool truth = false;
};
SubspaceOpResult subspace_algebra(const Subspace& a, const Subspace& b, SubspaceOp op);

/// Image of a subspace under a linear map.
Subspace image(const GMatrix& map, const Subspace& s);
/// {v in `domain` : map v in `target`}.
Subspace preimage(const GMatrix& map, const Subspace& target, const Subspace& domain);
Subspace kernel(const GMatrix& map);
Subspace column_space(const GMatrix& map);

/// Rows spanning the annihilator {y : y s = 0 for all s in S} of a subspace.
GMatrix annihilator_rows(const Subspace& s);

/// Quotient upper/lower realized through an explicit lift: `lift` columns
/// form a complement of `lower` inside `upper`, chosen greedily from the
/// canonical basis of `upper`.
class Quotient {
 public:
  Quotient() = default;
  Quotient(const Subspace& upper, const Subspace& lower);

  const Subspace& upper() const { return upper_; }
  const Subspace& lower() const { return lower_; }
  const GMatrix& lift() const { return lift_; }
  std::size_t dim() const { return lift_.cols(); }
  /// Coordinates in the lift basis of the class of v (v must lie in upper).
  GMatrix project(const GMatrix& v) const;
  /// Subspace (S ∩ upper + lower)/lower, in lift coordinates.
  Subspace image_of(const Subspace& s) const;
  /// Lift of a coordinate subspace back to V (span of lift * coords).
  Subspace lift_of(const Subspace& coords) const;

 private:
  Subspace upper_, lower_;
  GMatrix lift_;
  GMatrix left_inverse_;  // dim(upper) x n, recovers [lift | lower] coords
};

}  // namespace lmhs
