#include "superchar/linalg.hpp"

#include <stdexcept>

namespace superchar::linalg {

namespace {

// Reduced row echelon form in place on the augmented matrix; returns the
// pivot column of each pivot row.
std::vector<std::size_t> reduce(Matrix& m, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
    std::size_t pick = row;
    while (pick < m.size() && sgn(m[pick][col]) == 0) ++pick;
    if (pick == m.size()) continue;
    std::swap(m[row], m[pick]);
    const Rational inv = 1 / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<Solution> solve(Matrix a, Vector b, std::size_t columns) {
  if (a.size() != b.size()) throw std::invalid_argument("solve: row count mismatch");
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (a[r].size() != columns) throw std::invalid_argument("solve: ragged matrix");
    a[r].push_back(b[r]);
  }
  const auto pivots = reduce(a, columns);
  for (std::size_t r = pivots.size(); r < a.size(); ++r)
    if (sgn(a[r][columns]) != 0) return std::nullopt;

  Solution s;
  s.x.assign(columns, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) s.x[pivots[r]] = a[r][columns];
  s.rank = pivots.size();
  s.nullity = columns - s.rank;
  return s;
}

std::size_t rank(Matrix a) {
  if (a.empty()) return 0;
  const std::size_t columns = a.front().size();
  return reduce(a, columns).size();
}

std::optional<Vector> coordinates(std::span<const Weight> basis, const Weight& target) {
  const std::size_t k = basis.size();
  Matrix a(target.size(), Vector(k));
  Vector b(target.size());
  for (std::size_t row = 0; row < target.size(); ++row) {
    for (std::size_t j = 0; j < k; ++j) a[row][j] = basis[j][row];
    b[row] = target[row];
  }
  auto s = solve(std::move(a), std::move(b), k);
  if (!s) return std::nullopt;
  return std::move(s->x);
}

bool linearly_independent(std::span<const Weight> vectors) {
  if (vectors.empty()) return true;
  Matrix a;
  for (const auto& v : vectors) a.emplace_back(v.coords().begin(), v.coords().end());
  return rank(std::move(a)) == vectors.size();
}

Projector::Projector(std::span<const Weight> basis) : size_(basis.size()) {
  if (basis.empty()) return;
  dimension_ = basis.front().size();
  // Row reduce [A | I] where the columns of A are the basis vectors.
  Matrix m(dimension_, Vector(size_ + dimension_));
  for (std::size_t row = 0; row < dimension_; ++row) {
    for (std::size_t j = 0; j < size_; ++j) m[row][j] = basis[j][row];
    m[row][size_ + row] = 1;
  }
  if (reduce(m, size_).size() != size_) throw std::invalid_argument("projector: dependent family");
  transform_.assign(dimension_, Vector(dimension_));
  for (std::size_t r = 0; r < dimension_; ++r)
    for (std::size_t c = 0; c < dimension_; ++c) transform_[r][c] = m[r][size_ + c];
}

std::optional<Vector> Projector::coordinates(const Weight& target) const {
  if (size_ == 0) {
    if (!target.is_zero()) return std::nullopt;
    return Vector{};
  }
  if (target.size() != dimension_) throw std::invalid_argument("projector: dimension mismatch");
  Vector out(size_);
  for (std::size_t r = 0; r < dimension_; ++r) {
    Rational v = 0;
    for (std::size_t c = 0; c < dimension_; ++c)
      if (sgn(transform_[r][c]) != 0) v += transform_[r][c] * target[c];
    if (r < size_) out[r] = v;
    else if (sgn(v) != 0) return std::nullopt;
  }
  return out;
}

}  // namespace superchar::linalg
