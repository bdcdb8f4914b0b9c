#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

#include "superchar/superchar.hpp"

namespace superchar::testing {

// SUPERCHAR_SEED pins every randomized test; otherwise a fixed default.
inline std::uint64_t test_seed() {
  if (const char* s = std::getenv("SUPERCHAR_SEED")) return std::stoull(s);
  return 20240601;
}

class Gen {
 public:
  explicit Gen(std::uint64_t salt = 0) : rng_(test_seed() ^ (salt * 0x9e3779b97f4a7c15ULL)) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  template <class Seq>
  const auto& pick(const Seq& s) {
    return s[static_cast<std::size_t>(integer(0, static_cast<int>(s.size()) - 1))];
  }

  Weight integral_weight(const RootDatum& d, int bound) {
    Weight w = d.zero();
    for (std::size_t k = 0; k < w.size(); ++k) w[k] = integer(-bound, bound);
    return d.normalize(w);
  }

  XiCoeff coeff(int bound) { return {integer(-bound, bound), integer(-bound, bound)}; }

  RingElement element(const DatumPtr& d, int terms, int bound) {
    RingElement x(d);
    for (int t = 0; t < terms; ++t) x.add_term(integral_weight(*d, bound), coeff(2));
    return x;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace superchar::testing
