#include "superchar/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace superchar {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!is_digits(num) || (slash != std::string_view::npos && !is_digits(den)))
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");

  std::string clean(text);
  if (clean.front() == '+') clean.erase(0, 1);
  Rational value;
  value.set_str(clean, 10);
  if (value.get_den() == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) {
  Rational copy(value);
  copy.canonicalize();
  return copy.get_str();
}

Integer floor(const Rational& value) {
  Integer result;
  mpz_fdiv_q(result.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return result;
}

}  // namespace superchar
