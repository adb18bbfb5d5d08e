#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "lmhs/matrix.hpp"
#include "lmhs/subspace.hpp"

namespace lmhs::testing {

inline GMatrix mat(std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<std::vector<GScalar>> out;
  for (auto r : rows) {
    out.emplace_back();
    for (auto e : r) out.back().push_back(GScalar::parse(e));
  }
  return GMatrix::from_rows(out);
}

inline GMatrix vec(std::initializer_list<const char*> entries) {
  std::vector<GScalar> v;
  for (auto e : entries) v.push_back(GScalar::parse(e));
  return GMatrix::column_vector(v);
}

inline GMatrix e(std::size_t n, std::size_t i) {
  GMatrix v(n, 1);
  v(i, 0) = 1;
  return v;
}

/// Small Gaussian integer drawn from [-r, r] + i[-r, r] (imaginary part
/// only when `complex` is set).
inline GScalar small_scalar(std::mt19937_64& rng, int r, bool complex) {
  std::uniform_int_distribution<int> d(-r, r);
  long re = d(rng);
  long im = complex ? d(rng) : 0;
  return GScalar(Rational(re), Rational(im));
}

inline GMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, bool complex = true) {
  GMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = small_scalar(rng, 2, complex);
  return m;
}

}  // namespace lmhs::testing
