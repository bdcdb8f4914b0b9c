#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "superchar/rational.hpp"
#include "superchar/weight.hpp"

namespace superchar::linalg {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;  // row-major, rows of equal length

struct Solution {
  Vector x;             // particular solution, free variables set to zero
  std::size_t rank = 0;
  std::size_t nullity = 0;  // dimension of the solution space
};

/// Solves A x = b exactly. Returns nullopt when the system is inconsistent.
std::optional<Solution> solve(Matrix a, Vector b, std::size_t columns);

std::size_t rank(Matrix a);

/// Coordinates of `target` in the span of `basis` (assumed linearly
/// independent); nullopt when `target` is outside the span.
std::optional<Vector> coordinates(std::span<const Weight> basis, const Weight& target);

bool linearly_independent(std::span<const Weight> vectors);

/// Precomputed coordinate map for a fixed linearly independent family, for
/// callers that ask for coordinates of many targets.
class Projector {
 public:
  Projector() = default;
  /// Throws std::invalid_argument if `basis` is dependent.
  explicit Projector(std::span<const Weight> basis);

  std::size_t size() const { return size_; }
  std::optional<Vector> coordinates(const Weight& target) const;

 private:
  Matrix transform_;  // E with E·[basis] = [I; 0]
  std::size_t size_ = 0;
  std::size_t dimension_ = 0;
};

}  // namespace superchar::linalg
