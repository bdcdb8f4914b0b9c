#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "superchar/rational.hpp"
#include "superchar/root_datum.hpp"

namespace superchar {

/// a + bξ in ℤ[ξ]/(ξ² − 1).
struct XiCoeff {
  Integer a = 0;
  Integer b = 0;

  static XiCoeff xi() { return {0, 1}; }

  bool is_zero() const { return a == 0 && b == 0; }
  /// ψ₊ (ξ ↦ 1) or ψ₋ (ξ ↦ −1).
  Integer psi(int sign) const { return sign > 0 ? Integer(a + b) : Integer(a - b); }

  XiCoeff& operator+=(const XiCoeff& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  XiCoeff& operator-=(const XiCoeff& o) {
    a -= o.a;
    b -= o.b;
    return *this;
  }
  friend XiCoeff operator+(XiCoeff x, const XiCoeff& y) { return x += y; }
  friend XiCoeff operator-(XiCoeff x, const XiCoeff& y) { return x -= y; }
  friend XiCoeff operator-(const XiCoeff& x) { return {-x.a, -x.b}; }
  friend XiCoeff operator*(const XiCoeff& x, const XiCoeff& y) {
    return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend bool operator==(const XiCoeff& x, const XiCoeff& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const XiCoeff& x, const XiCoeff& y) { return !(x == y); }

  /// "1", "-ξ", "2+3ξ".
  std::string to_string() const;
};

inline bool coeff_is_zero(const XiCoeff& c) { return c.is_zero(); }
inline bool coeff_is_zero(const Integer& c) { return c == 0; }
std::string coeff_to_string(const XiCoeff& c);
std::string coeff_to_string(const Integer& c);

/// Finitely supported Σ m_ν e^ν over the weights of one datum, kept without
/// zero coefficients.
template <class Coeff>
class GroupRingElement {
 public:
  using Terms = std::map<Weight, Coeff>;

  GroupRingElement() = default;
  explicit GroupRingElement(DatumPtr datum) : datum_(std::move(datum)) {}

  static GroupRingElement monomial(DatumPtr datum, const Weight& nu, Coeff c) {
    GroupRingElement x(std::move(datum));
    x.add_term(nu, c);
    return x;
  }

  const DatumPtr& datum() const { return datum_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Coeff coeff(const Weight& nu) const {
    auto it = terms_.find(nu);
    return it == terms_.end() ? Coeff{} : it->second;
  }

  std::vector<Weight> support() const {
    std::vector<Weight> out;
    for (const auto& [w, c] : terms_) out.push_back(w);
    return out;
  }

  void add_term(const Weight& nu, const Coeff& c) {
    if (coeff_is_zero(c)) return;
    if (!datum_->same_shape(nu)) throw std::invalid_argument("weight does not belong to " + datum_->name());
    auto [it, fresh] = terms_.emplace(nu, c);
    if (fresh) return;
    it->second += c;
    if (coeff_is_zero(it->second)) terms_.erase(it);
  }

  void set_term(const Weight& nu, const Coeff& c) {
    terms_.erase(nu);
    add_term(nu, c);
  }

  GroupRingElement& operator+=(const GroupRingElement& o) {
    check(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  GroupRingElement& operator-=(const GroupRingElement& o) {
    check(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  GroupRingElement& operator*=(const Coeff& s) {
    Terms out;
    for (const auto& [w, c] : terms_) {
      Coeff p = c * s;
      if (!coeff_is_zero(p)) out.emplace(w, std::move(p));
    }
    terms_ = std::move(out);
    return *this;
  }

  friend GroupRingElement operator+(GroupRingElement x, const GroupRingElement& y) { return x += y; }
  friend GroupRingElement operator-(GroupRingElement x, const GroupRingElement& y) { return x -= y; }
  friend GroupRingElement operator-(GroupRingElement x) {
    for (auto& [w, c] : x.terms_) c = -c;
    return x;
  }
  friend GroupRingElement operator*(GroupRingElement x, const Coeff& s) { return x *= s; }
  friend GroupRingElement operator*(const Coeff& s, GroupRingElement x) { return x *= s; }
  friend GroupRingElement operator*(const GroupRingElement& x, const GroupRingElement& y) {
    x.check(y);
    GroupRingElement out(x.datum_);
    for (const auto& [u, c] : x.terms_)
      for (const auto& [v, d] : y.terms_) out.add_term(u + v, c * d);
    return out;
  }
  GroupRingElement& operator*=(const GroupRingElement& o) { return *this = *this * o; }

  friend bool operator==(const GroupRingElement& x, const GroupRingElement& y) {
    return same_datum(x.datum_, y.datum_) && x.terms_ == y.terms_;
  }
  friend bool operator!=(const GroupRingElement& x, const GroupRingElement& y) { return !(x == y); }

  /// Termwise image under a map of weights (e.g. a Weyl group element).
  template <class F>
  GroupRingElement map_weights(F&& f) const {
    GroupRingElement out(datum_);
    for (const auto& [w, c] : terms_) out.add_term(f(w), c);
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
      if (!s.empty()) s += " + ";
      const std::string cs = coeff_to_string(c);
      s += (cs == "1" ? std::string() : cs == "-1" ? std::string("-") : "(" + cs + ")") + "e^" + w.to_string();
    }
    return s;
  }

  static bool same_datum(const DatumPtr& a, const DatumPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->family() == b->family() && a->m() == b->m() && a->n() == b->n();
  }

 private:
  void check(const GroupRingElement& o) const {
    if (!same_datum(datum_, o.datum_)) throw std::invalid_argument("ring elements over different algebras");
  }

  DatumPtr datum_;
  Terms terms_;
};

inline XiCoeff operator*(const Integer& k, const XiCoeff& c) { return {k * c.a, k * c.b}; }

/// An element of ℤ[P₀; ξ].
using RingElement = GroupRingElement<XiCoeff>;
/// An element of ℤ[P₀], the image of ψ₊ or ψ₋.
using LaurentElement = GroupRingElement<Integer>;

inline RingElement one(DatumPtr datum) {
  const Weight z = datum->zero();
  return RingElement::monomial(std::move(datum), z, {1, 0});
}

/// ψ₊ for sign > 0, ψ₋ for sign < 0.
LaurentElement psi(const RingElement& x, int sign);
/// Inverse of ψ₊ × ψ₋; throws std::invalid_argument unless the two images
/// agree mod 2 termwise.
RingElement from_psi(const LaurentElement& plus, const LaurentElement& minus);

bool is_w_invariant(const RingElement& x);
bool is_w_invariant(const LaurentElement& x);
/// Σ over the W-orbit of each support weight, with the coefficient of the
/// orbit representative. Used to build W-invariant samples.
RingElement w_symmetrize(const RingElement& x);

/// The coefficient of ch_ξ C_ν: 1 when h = t; for q, d(1+ξ) with
/// d = 2^{⌈z/2⌉−1} and z the number of nonzero coordinates, 1 when z = 0.
XiCoeff ch_xi_C_coeff(const RootDatum& datum, const Weight& nu);
RingElement ch_xi_C(const DatumPtr& datum, const Weight& nu);
/// sdim C_ν = ψ₋ of the coefficient.
Integer sdim_C(const RootDatum& datum, const Weight& nu);

struct Lattice {
  enum class Kind { full, integral, half, user };
  Kind kind = Kind::full;
  std::vector<Weight> generators;  // Kind::user only, linearly independent

  static Lattice full() { return {Kind::full, {}}; }
  static Lattice integral() { return {Kind::integral, {}}; }
  static Lattice half() { return {Kind::half, {}}; }
  static Lattice user(std::vector<Weight> gens) { return {Kind::user, std::move(gens)}; }

  /// full: ⟨ν, α^∨⟩ ∈ ℤ for α ∈ π. integral: the lattice of weights of the
  /// standard representation (modulo the supertrace for sl). half: q only,
  /// every coordinate in ½ + ℤ. user: the ℤ-span of the generators.
  bool contains(const RootDatum& datum, const Weight& nu) const;
};

bool in_R(const RingElement& x, const Lattice& lattice = Lattice::full());

/// Reason an element fails a test, for diagnostics.
struct Failure {
  std::string reason;
  std::optional<Weight> at;
};

/// The defining string condition of A for one isotropic β: on every line ν + ℤβ with ⟨ν, h_β⟩ ≠ 0,
/// Σ_i (−ξ)^i m_{ν+iβ} = 0.
bool string_condition(const RingElement& x, const Weight& beta, Failure* why = nullptr);
/// The ψ± image of the same condition: Σ_i (∓1)^i m_{ν+iβ} = 0 for sign ±.
bool string_condition(const LaurentElement& x, const Weight& beta, int sign, Failure* why = nullptr);

/// One isotropic root per W × {±1} orbit.
std::vector<Weight> iso_transversal(const RootDatum& datum);

bool in_A(const RingElement& x, const Lattice& lattice = Lattice::full(), bool all_beta = false,
          Failure* why = nullptr);
/// A_± at the ψ level: W-invariant, support in the lattice, ψ± strings vanish.
bool in_A_psi(const LaurentElement& x, int sign, const Lattice& lattice = Lattice::full(), bool all_beta = false,
              Failure* why = nullptr);

/// Derivative form: with x = e^ω, y = e^β, ∂f/∂x ∈ ℤ[t*](y + 1) for sign > 0,
/// (y − 1) for sign < 0. Needs ⟨ω, h_β⟩ ≠ 0.
bool sv_condition(const LaurentElement& f, const Weight& beta, const Weight& omega, int sign);

/// Evaluation form: x ↦ c, y ↦ y_value; true iff the result does not depend
/// on c. The support must lie in (t′)* + ℤβ + ℤω; throws otherwise.
bool ev_condition(const LaurentElement& f, const Weight& beta, const Weight& omega, int y_value = 1);

/// p family: x = Σ_c e^{c·str} a_c with a_c integral; keys are c ∈ [0, 1).
std::map<Rational, RingElement> str_split(const RingElement& x);

/// Parity p(ν) of a weight for ι; throws if ν is outside the domain
/// (integral weights for gl and osp, ℤΔ for sl and p, never for q).
int parity(const DatumPtr& datum, const Weight& nu);
LaurentElement iota(const LaurentElement& x);
RingElement iota(const RingElement& x);

/// ch_ξ L(λ) for gl(1|1).
RingElement gl11_character(const DatumPtr& datum, const Weight& lambda);

}  // namespace superchar
