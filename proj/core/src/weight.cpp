#include "superchar/weight.hpp"

#include <stdexcept>

namespace superchar {

Weight::Weight(std::size_t eps_count, std::size_t delta_count)
    : coords_(eps_count + delta_count), eps_count_(eps_count) {}

Weight::Weight(std::vector<Rational> eps, std::vector<Rational> delta) : eps_count_(eps.size()) {
  coords_ = std::move(eps);
  coords_.insert(coords_.end(), delta.begin(), delta.end());
}

Weight Weight::eps_unit(std::size_t eps_count, std::size_t delta_count, std::size_t i) {
  Weight w(eps_count, delta_count);
  w.coords_.at(i) = 1;
  return w;
}

Weight Weight::delta_unit(std::size_t eps_count, std::size_t delta_count, std::size_t j) {
  Weight w(eps_count, delta_count);
  w.coords_.at(eps_count + j) = 1;
  return w;
}

bool Weight::is_zero() const {
  for (const auto& c : coords_)
    if (sgn(c) != 0) return false;
  return true;
}

bool Weight::is_integral() const {
  for (const auto& c : coords_)
    if (!is_integer(c)) return false;
  return true;
}

bool Weight::same_shape(const Weight& other) const {
  return eps_count_ == other.eps_count_ && coords_.size() == other.coords_.size();
}

Weight& Weight::operator+=(const Weight& other) {
  if (!same_shape(other)) throw std::invalid_argument("weight shape mismatch");
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += other.coords_[k];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  if (!same_shape(other)) throw std::invalid_argument("weight shape mismatch");
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= other.coords_[k];
  return *this;
}

Weight& Weight::operator*=(const Rational& scalar) {
  for (auto& c : coords_) c *= scalar;
  return *this;
}

bool operator==(const Weight& a, const Weight& b) {
  return a.eps_count_ == b.eps_count_ && a.coords_ == b.coords_;
}

bool operator<(const Weight& a, const Weight& b) {
  if (a.eps_count_ != b.eps_count_) return a.eps_count_ < b.eps_count_;
  if (a.coords_.size() != b.coords_.size()) return a.coords_.size() < b.coords_.size();
  for (std::size_t k = 0; k < a.coords_.size(); ++k) {
    const int c = cmp(a.coords_[k], b.coords_[k]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string Weight::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < eps_count_; ++k) {
    if (k > 0) out += ",";
    out += superchar::to_string(coords_[k]);
  }
  if (delta_count() > 0) {
    out += "|";
    for (std::size_t k = eps_count_; k < coords_.size(); ++k) {
      if (k > eps_count_) out += ",";
      out += superchar::to_string(coords_[k]);
    }
  }
  out += ")";
  return out;
}

Rational dot(const Weight& a, const Weight& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("weight shape mismatch");
  Rational sum = 0;
  for (std::size_t k = 0; k < a.size(); ++k) sum += a[k] * b[k];
  return sum;
}

}  // namespace superchar
