#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "superchar/rational.hpp"

namespace superchar {

/// A finite system of linear inequalities  a·x ≤ b  over ℚ, decided by
/// Fourier–Motzkin elimination in exact arithmetic.
///
/// Meant for the handful of variables that appear at desk scale (one per
/// simple root); the number of rows can grow quadratically per eliminated
/// variable, so duplicate and trivially-true rows are pruned after each step.
class InequalitySystem {
 public:
  struct Row {
    std::vector<Rational> coeffs;
    Rational bound;
  };

  struct Interval {
    std::optional<Rational> lower;
    std::optional<Rational> upper;
  };

  explicit InequalitySystem(std::size_t variables) : variables_(variables) {}

  std::size_t variables() const { return variables_; }
  const std::vector<Row>& rows() const { return rows_; }

  void add_le(std::vector<Rational> coeffs, Rational bound);
  void add_ge(std::vector<Rational> coeffs, Rational bound);
  void add_eq(std::vector<Rational> coeffs, Rational bound);
  /// x_k ≥ 0 for every variable.
  void add_nonnegativity();

  bool feasible() const;

  /// Range of x_k over the feasible set; nullopt when infeasible. An absent
  /// end means unbounded in that direction.
  std::optional<Interval> project(std::size_t k) const;

 private:
  std::size_t variables_;
  std::vector<Row> rows_;
};

}  // namespace superchar
