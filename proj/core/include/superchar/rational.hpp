#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace superchar {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" (q > 0 after canonicalisation). Throws
/// std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form, or "p" when the denominator is one.
std::string to_string(const Rational& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

/// Value in ℕ = {0, 1, 2, ...}.
inline bool is_natural(const Rational& value) { return is_integer(value) && sgn(value) >= 0; }

Integer floor(const Rational& value);

}  // namespace superchar
