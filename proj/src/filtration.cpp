#include "lmhs/filtration.hpp"

#include "lmhs/errors.hpp"

namespace lmhs {

void PolarizedLattice::validate() const {
  if (Q.rows() != dim || Q.cols() != dim) throw InvariantError("Q must be dim x dim");
  if (!Q.is_real()) throw InvariantError("Q must have real rational entries");
  GMatrix sym = n % 2 ? -Q : Q;
  if (Q.transpose() != sym)
    throw InvariantError("parity rule violated: Q(u,v) must equal (-1)^n Q(v,u)");
  if (rank(Q) != dim) throw InvariantError("Q is degenerate");
  if (hodge_numbers) {
    if (hodge_numbers->size() != static_cast<std::size_t>(n) + 1)
      throw InvariantError("hodge_numbers must have n+1 entries");
    long total = 0;
    for (int h : *hodge_numbers) {
      if (h < 0) throw InvariantError("negative Hodge number");
      total += h;
    }
    if (total != static_cast<long>(dim)) throw InvariantError("Hodge numbers must sum to dim");
  }
}

GScalar PolarizedLattice::pair(const GMatrix& u, const GMatrix& v) const {
  return (u.transpose() * Q * v)(0, 0);
}

IncreasingFiltration::IncreasingFiltration(std::size_t ambient, std::map<int, Subspace> steps)
    : n_(ambient), steps_(std::move(steps)) {
  const Subspace* prev = nullptr;
  for (auto& [l, s] : steps_) {
    if (s.ambient_dim() != n_) throw DimensionMismatch("filtration step has wrong ambient dimension");
    if (prev && !s.contains(*prev)) throw InvariantError("increasing filtration steps are not nested");
    prev = &s;
  }
}

Subspace IncreasingFiltration::at(int l) const {
  if (steps_.empty()) return Subspace::full(n_);
  auto it = steps_.upper_bound(l);
  if (it == steps_.begin()) return Subspace::zero(n_);
  if (it == steps_.end()) return Subspace::full(n_);
  return std::prev(it)->second;
}

int IncreasingFiltration::bottom() const {
  if (steps_.empty()) return 0;
  for (auto& [l, s] : steps_)
    if (!s.is_zero()) return l;
  return steps_.rbegin()->first + 1;
}

int IncreasingFiltration::top() const {
  if (steps_.empty()) return 0;
  int t = steps_.rbegin()->first + 1;
  for (auto it = steps_.rbegin(); it != steps_.rend() && it->second.is_full(); ++it) t = it->first;
  return t;
}

Quotient IncreasingFiltration::graded(int l) const { return Quotient(at(l), at(l - 1)); }

std::vector<int> IncreasingFiltration::weights() const {
  std::vector<int> out;
  if (n_ == 0) return out;
  for (int l = bottom(); l <= top(); ++l)
    if (graded_dim(l) > 0) out.push_back(l);
  return out;
}

bool IncreasingFiltration::is_real() const {
  for (auto& [l, s] : steps_)
    if (s.conjugate() != s) return false;
  return true;
}

bool operator==(const IncreasingFiltration& a, const IncreasingFiltration& b) {
  if (a.n_ != b.n_) return false;
  int lo = std::min(a.bottom(), b.bottom()) - 1, hi = std::max(a.top(), b.top());
  for (int l = lo; l <= hi; ++l)
    if (a.at(l) != b.at(l)) return false;
  return true;
}

DecreasingFiltration::DecreasingFiltration(std::size_t ambient, std::map<int, Subspace> steps)
    : n_(ambient), steps_(std::move(steps)) {
  const Subspace* prev = nullptr;
  for (auto& [p, s] : steps_) {
    if (s.ambient_dim() != n_) throw DimensionMismatch("filtration step has wrong ambient dimension");
    if (prev && !prev->contains(s)) throw InvariantError("decreasing filtration steps are not nested");
    prev = &s;
  }
}

Subspace DecreasingFiltration::at(int p) const {
  if (steps_.empty()) return Subspace::full(n_);
  auto it = steps_.lower_bound(p);
  if (it == steps_.end()) return Subspace::zero(n_);
  if (it == steps_.begin() && p < it->first) return Subspace::full(n_);
  return it->second;
}

int DecreasingFiltration::bottom() const {
  if (steps_.empty()) return 0;
  int b = steps_.begin()->first - 1;
  for (auto& [p, s] : steps_) {
    if (!s.is_full()) break;
    b = p;
  }
  return b;
}

int DecreasingFiltration::top() const {
  if (steps_.empty()) return 0;
  int t = steps_.begin()->first - 1;
  for (auto& [p, s] : steps_)
    if (!s.is_zero()) t = p;
  return t;
}

DecreasingFiltration DecreasingFiltration::conjugate() const {
  std::map<int, Subspace> c;
  for (auto& [p, s] : steps_) c.emplace(p, s.conjugate());
  return DecreasingFiltration(n_, std::move(c));
}

DecreasingFiltration DecreasingFiltration::transform(const GMatrix& g) const {
  std::map<int, Subspace> c;
  for (auto& [p, s] : steps_) c.emplace(p, image(g, s));
  return DecreasingFiltration(n_, std::move(c));
}

bool operator==(const DecreasingFiltration& a, const DecreasingFiltration& b) {
  if (a.n_ != b.n_) return false;
  int lo = std::min(a.bottom(), b.bottom()), hi = std::max(a.top(), b.top()) + 1;
  for (int p = lo; p <= hi; ++p)
    if (a.at(p) != b.at(p)) return false;
  return true;
}

}  // namespace lmhs
