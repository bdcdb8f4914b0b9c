#include "superchar/fourier_motzkin.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace superchar {

namespace {

using Row = InequalitySystem::Row;

// Scales a row so that its first nonzero coefficient has absolute value 1.
// Rows that differ by a positive factor then become identical.
void normalise(Row& row) {
  for (const auto& c : row.coeffs) {
    if (sgn(c) == 0) continue;
    const Rational scale = 1 / abs(c);
    for (auto& v : row.coeffs) v *= scale;
    row.bound *= scale;
    return;
  }
}

bool row_less(const Row& a, const Row& b) {
  for (std::size_t k = 0; k < a.coeffs.size(); ++k) {
    const int c = cmp(a.coeffs[k], b.coeffs[k]);
    if (c != 0) return c < 0;
  }
  return cmp(a.bound, b.bound) < 0;
}

bool all_zero(const Row& row) {
  return std::all_of(row.coeffs.begin(), row.coeffs.end(), [](const Rational& c) { return sgn(c) == 0; });
}

// Drops trivially true rows, keeps the tightest bound among rows with the same
// direction. Returns false if a row 0 ≤ b with b < 0 shows up.
bool prune(std::vector<Row>& rows) {
  std::vector<Row> kept;
  for (auto& row : rows) {
    if (all_zero(row)) {
      if (sgn(row.bound) < 0) return false;
      continue;
    }
    normalise(row);
    kept.push_back(std::move(row));
  }
  std::sort(kept.begin(), kept.end(), row_less);
  rows.clear();
  for (auto& row : kept) {
    // Same direction, sorted by bound: the first one is the tightest.
    if (!rows.empty() && rows.back().coeffs == row.coeffs) continue;
    rows.push_back(std::move(row));
  }
  return true;
}

bool eliminate(std::vector<Row>& rows, std::size_t k) {
  std::vector<Row> pos, neg, next;
  for (auto& row : rows) {
    const int s = sgn(row.coeffs[k]);
    if (s > 0) pos.push_back(std::move(row));
    else if (s < 0) neg.push_back(std::move(row));
    else next.push_back(std::move(row));
  }
  for (const auto& p : pos) {
    for (const auto& q : neg) {
      const Rational fp = 1 / p.coeffs[k];
      const Rational fq = -1 / q.coeffs[k];
      Row combined{std::vector<Rational>(p.coeffs.size()), p.bound * fp + q.bound * fq};
      for (std::size_t j = 0; j < p.coeffs.size(); ++j) combined.coeffs[j] = p.coeffs[j] * fp + q.coeffs[j] * fq;
      combined.coeffs[k] = 0;
      next.push_back(std::move(combined));
    }
  }
  rows = std::move(next);
  return prune(rows);
}

}  // namespace

void InequalitySystem::add_le(std::vector<Rational> coeffs, Rational bound) {
  if (coeffs.size() != variables_) throw std::invalid_argument("inequality arity mismatch");
  rows_.push_back({std::move(coeffs), std::move(bound)});
}

void InequalitySystem::add_ge(std::vector<Rational> coeffs, Rational bound) {
  for (auto& c : coeffs) c = -c;
  add_le(std::move(coeffs), -bound);
}

void InequalitySystem::add_eq(std::vector<Rational> coeffs, Rational bound) {
  add_le(coeffs, bound);
  add_ge(std::move(coeffs), std::move(bound));
}

void InequalitySystem::add_nonnegativity() {
  for (std::size_t k = 0; k < variables_; ++k) {
    std::vector<Rational> c(variables_);
    c[k] = -1;
    add_le(std::move(c), 0);
  }
}

bool InequalitySystem::feasible() const {
  std::vector<Row> rows = rows_;
  if (!prune(rows)) return false;
  for (std::size_t k = 0; k < variables_; ++k)
    if (!eliminate(rows, k)) return false;
  return true;
}

std::optional<InequalitySystem::Interval> InequalitySystem::project(std::size_t target) const {
  if (target >= variables_) throw std::out_of_range("project: no such variable");
  std::vector<Row> rows = rows_;
  if (!prune(rows)) return std::nullopt;
  for (std::size_t k = 0; k < variables_; ++k) {
    if (k == target) continue;
    if (!eliminate(rows, k)) return std::nullopt;
  }
  Interval out;
  for (const auto& row : rows) {
    const Rational& c = row.coeffs[target];
    const Rational value = row.bound / c;
    if (sgn(c) > 0) {
      if (!out.upper || value < *out.upper) out.upper = value;
    } else {
      if (!out.lower || value > *out.lower) out.lower = value;
    }
  }
  if (out.lower && out.upper && *out.lower > *out.upper) return std::nullopt;
  return out;
}

}  // namespace superchar
