#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "superchar/rational.hpp"

namespace superchar {

/// An element of t*, written in the ε₁..ε_m, δ₁..δ_n coordinates.
///
/// The split between ε and δ coordinates is part of the value: weights of
/// different shapes never compare equal and cannot be added.
class Weight {
 public:
  Weight() = default;
  Weight(std::size_t eps_count, std::size_t delta_count);
  Weight(std::vector<Rational> eps, std::vector<Rational> delta);

  static Weight eps_unit(std::size_t eps_count, std::size_t delta_count, std::size_t i);
  static Weight delta_unit(std::size_t eps_count, std::size_t delta_count, std::size_t j);

  std::size_t eps_count() const { return eps_count_; }
  std::size_t delta_count() const { return coords_.size() - eps_count_; }
  std::size_t size() const { return coords_.size(); }

  const Rational& operator[](std::size_t k) const { return coords_[k]; }
  Rational& operator[](std::size_t k) { return coords_[k]; }
  const Rational& eps(std::size_t i) const { return coords_[i]; }
  const Rational& delta(std::size_t j) const { return coords_[eps_count_ + j]; }
  std::span<const Rational> coords() const { return coords_; }

  bool is_zero() const;
  bool is_integral() const;
  bool same_shape(const Weight& other) const;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  Weight& operator*=(const Rational& scalar);

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& s, Weight a) { return a *= s; }
  friend Weight operator-(Weight a) { return a *= Rational(-1); }

  friend bool operator==(const Weight& a, const Weight& b);
  /// Lexicographic on (shape, coordinates); used for canonical ordering.
  friend bool operator<(const Weight& a, const Weight& b);

  /// "(1,-1/2|0)" style rendering.
  std::string to_string() const;

 private:
  std::vector<Rational> coords_;
  std::size_t eps_count_ = 0;
};

inline bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
inline bool operator>(const Weight& a, const Weight& b) { return b < a; }

/// Coordinate-wise dot product (no metric).
Rational dot(const Weight& a, const Weight& b);

}  // namespace superchar
