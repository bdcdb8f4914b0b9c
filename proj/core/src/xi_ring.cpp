#include "superchar/xi_ring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "superchar/base_forest.hpp"
#include "superchar/linalg.hpp"

namespace superchar {

std::string XiCoeff::to_string() const {
  if (b == 0) return a.get_str();
  std::string xi = b == 1 ? "ξ" : b == -1 ? "-ξ" : b.get_str() + "ξ";
  if (a == 0) return xi;
  return a.get_str() + (b > 0 ? "+" : "") + xi;
}

std::string coeff_to_string(const XiCoeff& c) { return c.to_string(); }
std::string coeff_to_string(const Integer& c) { return c.get_str(); }

LaurentElement psi(const RingElement& x, int sign) {
  LaurentElement out(x.datum());
  for (const auto& [w, c] : x.terms()) out.add_term(w, c.psi(sign));
  return out;
}

RingElement from_psi(const LaurentElement& plus, const LaurentElement& minus) {
  if (!LaurentElement::same_datum(plus.datum(), minus.datum()))
    throw std::invalid_argument("ψ images over different algebras");
  std::set<Weight> support;
  for (const auto& [w, c] : plus.terms()) support.insert(w);
  for (const auto& [w, c] : minus.terms()) support.insert(w);
  RingElement out(plus.datum());
  for (const auto& w : support) {
    const Integer p = plus.coeff(w), m = minus.coeff(w);
    const Integer s = p + m, d = p - m;
    if (!mpz_even_p(s.get_mpz_t()))
      throw std::invalid_argument("ψ₊ and ψ₋ disagree mod 2 at " + w.to_string());
    out.add_term(w, {s / 2, d / 2});
  }
  return out;
}

namespace {

template <class Coeff>
bool w_invariant(const GroupRingElement<Coeff>& x) {
  const RootDatum& d = *x.datum();
  for (const auto& [w, c] : x.terms())
    for (const auto& alpha : d.pi())
      if (x.coeff(d.simple_reflection(alpha, w)) != c) return false;
  return true;
}

std::size_t first_nonzero(const Weight& beta) {
  for (std::size_t k = 0; k < beta.size(); ++k)
    if (sgn(beta[k]) != 0) return k;
  throw std::invalid_argument("zero root");
}

struct LinePoint {
  Weight rep;     // canonical point of ν + ℤβ
  Integer index;  // ν = rep + index·β
};

LinePoint line_of(const Weight& nu, const Weight& beta, std::size_t k) {
  const Integer i = floor(nu[k] / beta[k]);
  return {nu - Rational(i) * beta, i};
}

// Shared line-sum check. `power(i)` is the weight of the i-th point, i.e.
// (−ξ)^i at the ξ level or (∓1)^i at the ψ± level.
template <class Coeff, class Power>
bool lines_vanish(const GroupRingElement<Coeff>& x, const Weight& beta, Power power, Failure* why) {
  const RootDatum& d = *x.datum();
  if (!d.is_isotropic(beta)) throw std::invalid_argument(beta.to_string() + " is not an isotropic root");
  const std::size_t k = first_nonzero(beta);
  struct Line {
    Coeff sum{};
    Weight first;
  };
  std::map<Weight, Line> lines;
  for (const auto& [w, c] : x.terms()) {
    auto [rep, index] = line_of(w, beta, k);
    auto [it, fresh] = lines.try_emplace(rep);
    if (fresh) it->second.first = w;
    it->second.sum += power(index) * c;
  }
  for (const auto& [rep, line] : lines) {
    if (sgn(d.pair_hbeta(rep, beta)) == 0 || coeff_is_zero(line.sum)) continue;
    if (why) *why = {"string sum along " + beta.to_string() + " is " + coeff_to_string(line.sum), line.first};
    return false;
  }
  return true;
}

bool even(const Integer& i) { return mpz_even_p(i.get_mpz_t()) != 0; }

// ι parity: Σδ mod 2 on integral weights (gl, osp), or through the
// coordinates in a base on ℤΔ (sl, p).
class ParityMap {
 public:
  explicit ParityMap(const DatumPtr& datum) : datum_(datum) {
    switch (datum->family()) {
      case Family::q: throw std::invalid_argument("ι needs h = t; not available for q");
      case Family::sl:
      case Family::p: base_.emplace(default_base(datum, BaseKind::mixed)); break;
      default: break;
    }
  }

  int operator()(const Weight& nu) const {
    const RootDatum& d = *datum_;
    if (!base_) {
      if (!nu.is_integral()) throw std::invalid_argument("ι: weight " + nu.to_string() + " is not integral");
      Integer s = 0;
      for (std::size_t j = 0; j < d.delta_count(); ++j) s += nu.delta(j).get_num();
      return even(s) ? 0 : 1;
    }
    const auto c = base_->coordinates(nu);
    if (!c || !std::all_of(c->begin(), c->end(), [](const Rational& v) { return is_integer(v); }))
      throw std::invalid_argument("ι: weight " + nu.to_string() + " is outside the root lattice");
    Integer s = 0;
    const auto& sigma = base_->sigma();
    for (std::size_t j = 0; j < sigma.size(); ++j)
      if (d.find_root(sigma[j])->odd) s += (*c)[j].get_num();
    return even(s) ? 0 : 1;
  }

 private:
  DatumPtr datum_;
  std::optional<Base> base_;
};

// ν = ν′ + aω + bβ with ⟨ν′, h_β⟩ = 0 and ν′_k = 0 for the first coordinate
// k where β is nonzero.
struct SplitWeight {
  Weight rest;
  Rational a, b;
};

class Splitter {
 public:
  Splitter(const RootDatum& d, const Weight& beta, const Weight& omega)
      : d_(d), beta_(beta), omega_(omega), k_(first_nonzero(beta)), w_(d.pair_hbeta(omega, beta)) {
    if (sgn(w_) == 0) throw std::invalid_argument("⟨ω, h_β⟩ must be nonzero");
  }

  SplitWeight operator()(const Weight& nu) const {
    const Rational a = d_.pair_hbeta(nu, beta_) / w_;
    Weight rest = nu - a * omega_;
    const Rational b = rest[k_] / beta_[k_];
    rest -= b * beta_;
    return {std::move(rest), a, b};
  }

 private:
  const RootDatum& d_;
  Weight beta_, omega_;
  std::size_t k_;
  Rational w_;
};

}  // namespace

bool is_w_invariant(const RingElement& x) { return w_invariant(x); }
bool is_w_invariant(const LaurentElement& x) { return w_invariant(x); }

RingElement w_symmetrize(const RingElement& x) {
  RingElement out(x.datum());
  for (const auto& [w, c] : x.terms())
    for (const auto& v : x.datum()->weyl_orbit(w)) out.add_term(v, c);
  return out;
}

XiCoeff ch_xi_C_coeff(const RootDatum& datum, const Weight& nu) {
  if (datum.h_equals_t()) return {1, 0};
  std::size_t z = 0;
  for (std::size_t k = 0; k < nu.size(); ++k)
    if (sgn(nu[k]) != 0) ++z;
  if (z == 0) return {1, 0};
  Integer d = 1;
  d <<= static_cast<mp_bitcnt_t>((z + 1) / 2 - 1);
  return {d, d};
}

RingElement ch_xi_C(const DatumPtr& datum, const Weight& nu) {
  return RingElement::monomial(datum, nu, ch_xi_C_coeff(*datum, nu));
}

Integer sdim_C(const RootDatum& datum, const Weight& nu) { return ch_xi_C_coeff(datum, nu).psi(-1); }

bool Lattice::contains(const RootDatum& d, const Weight& nu) const {
  switch (kind) {
    case Kind::full:
      for (const auto& alpha : d.pi())
        if (!is_integer(d.coroot(nu, alpha))) return false;
      return true;
    case Kind::integral: {
      if (d.family() != Family::sl) return nu.is_integral();
      // ν + t(Σε − Σδ) ∈ ℤ^{m+n} for some t: ε coordinates share a
      // fractional part f, δ coordinates have −f.
      const Rational t = d.eps_count() > 0 ? Rational(floor(nu[0])) - nu[0] : nu.delta(0) - Rational(floor(nu.delta(0)));
      for (std::size_t k = 0; k < nu.size(); ++k)
        if (!is_integer(nu[k] + (k < d.eps_count() ? t : Rational(-t)))) return false;
      return true;
    }
    case Kind::half:
      if (d.family() != Family::q) throw std::invalid_argument("the half-integral lattice is defined for q only");
      for (std::size_t k = 0; k < nu.size(); ++k) {
        const Rational twice = 2 * nu[k];
        if (!is_integer(twice) || even(twice.get_num())) return false;
      }
      return true;
    case Kind::user: {
      if (!linalg::linearly_independent(generators))
        throw std::invalid_argument("lattice generators must be linearly independent");
      const auto c = linalg::coordinates(generators, nu);
      return c && std::all_of(c->begin(), c->end(), [](const Rational& v) { return is_integer(v); });
    }
  }
  return false;
}

bool in_R(const RingElement& x, const Lattice& lattice) {
  const RootDatum& d = *x.datum();
  for (const auto& [w, c] : x.terms()) {
    if (!lattice.contains(d, w)) return false;
    const XiCoeff pattern = ch_xi_C_coeff(d, w);
    if (pattern.b == 0) continue;  // pattern 1: every coefficient is a multiple
    // ℤ[ξ]·d(1+ξ) = {k(1+ξ) : d | k}.
    if (c.a != c.b || !mpz_divisible_p(c.a.get_mpz_t(), pattern.a.get_mpz_t())) return false;
  }
  return true;
}

bool string_condition(const RingElement& x, const Weight& beta, Failure* why) {
  return lines_vanish(
      x, beta, [](const Integer& i) { return even(i) ? XiCoeff{1, 0} : XiCoeff{0, -1}; }, why);
}

bool string_condition(const LaurentElement& x, const Weight& beta, int sign, Failure* why) {
  return lines_vanish(
      x, beta, [sign](const Integer& i) { return Integer(sign > 0 && !even(i) ? -1 : 1); }, why);
}

std::vector<Weight> iso_transversal(const RootDatum& datum) {
  std::set<Weight> covered;
  std::vector<Weight> out;
  for (const auto& beta : datum.isotropic_roots()) {
    if (covered.count(beta)) continue;
    out.push_back(beta);
    for (const auto& w : datum.weyl_orbit(beta)) {
      covered.insert(w);
      covered.insert(-w);
    }
  }
  return out;
}

bool in_A(const RingElement& x, const Lattice& lattice, bool all_beta, Failure* why) {
  const RootDatum& d = *x.datum();
  if (!in_R(x, lattice)) {
    if (why) *why = {"not in R(P)", std::nullopt};
    return false;
  }
  if (!is_w_invariant(x)) {
    if (why) *why = {"not W-invariant", std::nullopt};
    return false;
  }
  for (const auto& beta : all_beta ? d.isotropic_roots() : iso_transversal(d))
    if (!string_condition(x, beta, why)) return false;
  return true;
}

bool in_A_psi(const LaurentElement& x, int sign, const Lattice& lattice, bool all_beta, Failure* why) {
  const RootDatum& d = *x.datum();
  for (const auto& [w, c] : x.terms()) {
    if (!lattice.contains(d, w)) {
      if (why) *why = {"support outside the lattice", w};
      return false;
    }
  }
  if (!is_w_invariant(x)) {
    if (why) *why = {"not W-invariant", std::nullopt};
    return false;
  }
  for (const auto& beta : all_beta ? d.isotropic_roots() : iso_transversal(d))
    if (!string_condition(x, beta, sign, why)) return false;
  return true;
}

bool sv_condition(const LaurentElement& f, const Weight& beta, const Weight& omega, int sign) {
  const RootDatum& d = *f.datum();
  if (!d.is_isotropic(beta)) throw std::invalid_argument(beta.to_string() + " is not an isotropic root");
  const Splitter split(d, beta, omega);
  // ∂f/∂x = Σ a f_{a,b} x^{a−1} y^b. Membership in the ideal (y ± 1) is
  // checked on each class {x^{a−1} y^{b₀+ℤ}} by evaluating y at ∓1.
  struct Key {
    Weight rest;
    Rational a, frac;
    bool operator<(const Key& o) const {
      if (rest != o.rest) return rest < o.rest;
      if (a != o.a) return a < o.a;
      return frac < o.frac;
    }
  };
  std::map<Key, Rational> sums;
  for (const auto& [w, m] : f.terms()) {
    const auto s = split(w);
    if (sgn(s.a) == 0) continue;
    const Integer whole = floor(s.b);
    const Rational term = s.a * Rational(m);
    const bool flip = sign > 0 && !even(whole);
    sums[{s.rest, s.a, s.b - Rational(whole)}] += flip ? Rational(-term) : term;
  }
  return std::all_of(sums.begin(), sums.end(), [](const auto& kv) { return sgn(kv.second) == 0; });
}

bool ev_condition(const LaurentElement& f, const Weight& beta, const Weight& omega, int y_value) {
  const RootDatum& d = *f.datum();
  if (!d.is_isotropic(beta)) throw std::invalid_argument(beta.to_string() + " is not an isotropic root");
  const Splitter split(d, beta, omega);
  // ev_c(f) = Σ_{ν′, j} n_{ν′, j} c^j; independence of c means n_{ν′, j} = 0 for j ≠ 0.
  std::map<std::pair<Weight, Integer>, Integer> n;
  for (const auto& [w, m] : f.terms()) {
    const auto s = split(w);
    if (!is_integer(s.a) || !is_integer(s.b))
      throw std::invalid_argument("support " + w.to_string() + " is outside (t')* + ℤβ + ℤω");
    if (sgn(s.a) == 0) continue;
    const bool flip = y_value < 0 && !even(s.b.get_num());
    n[{s.rest, s.a.get_num()}] += flip ? Integer(-m) : m;
  }
  return std::all_of(n.begin(), n.end(), [](const auto& kv) { return kv.second == 0; });
}

std::map<Rational, RingElement> str_split(const RingElement& x) {
  const RootDatum& d = *x.datum();
  if (d.family() != Family::p) throw std::invalid_argument("str_split is defined for the p family");
  Weight str = d.zero();
  for (std::size_t i = 0; i < d.eps_count(); ++i) str[i] = 1;
  std::map<Rational, RingElement> out;
  for (const auto& [w, c] : x.terms()) {
    const Rational frac = w[0] - Rational(floor(w[0]));
    for (std::size_t k = 1; k < w.size(); ++k)
      if (!is_integer(w[k] - frac))
        throw std::invalid_argument(w.to_string() + " is not in ℚ·str + P_int");
    auto it = out.try_emplace(frac, RingElement(x.datum())).first;
    it->second.add_term(w - frac * str, c);
  }
  return out;
}

int parity(const DatumPtr& datum, const Weight& nu) { return ParityMap(datum)(nu); }

LaurentElement iota(const LaurentElement& x) {
  const ParityMap p(x.datum());
  LaurentElement out(x.datum());
  for (const auto& [w, c] : x.terms()) out.add_term(w, p(w) ? Integer(-c) : c);
  return out;
}

RingElement iota(const RingElement& x) {
  const ParityMap p(x.datum());
  RingElement out(x.datum());
  for (const auto& [w, c] : x.terms()) out.add_term(w, p(w) ? -c : c);
  return out;
}

RingElement gl11_character(const DatumPtr& datum, const Weight& lambda) {
  const RootDatum& d = *datum;
  if (d.family() != Family::gl || d.m() != 1 || d.n() != 1)
    throw std::invalid_argument("gl11_character needs gl(1|1)");
  const Weight beta = d.eps(0) - d.delta(0);
  RingElement out = RingElement::monomial(datum, lambda, {1, 0});
  // λ ∈ ℚβ iff λ_ε + λ_δ = 0; then L(λ) is one-dimensional.
  if (sgn(lambda[0] + lambda[1]) != 0) out.add_term(lambda - beta, XiCoeff::xi());
  return out;
}

}  // namespace superchar
