#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "superchar/rational.hpp"
#include "superchar/weight.hpp"

namespace superchar {

enum class Family { gl, sl, q, p, ospB, ospD };

std::string to_string(Family family);
/// Accepts "gl", "sl", "q", "p", "ospB", "ospD".
Family parse_family(const std::string& name);

/// A root together with its parity. For the q family every root is both even
/// and odd, so parity is a pair of flags rather than an enum.
struct Root {
  Weight weight;
  bool even = false;
  bool odd = false;
  bool isotropic = false;
};

/// Root data of one of the supported families.
///
///  gl(m|n), sl(m|n)   ε₁..ε_m, δ₁..δ_n; sl weights are kept in the
///                     representative with coordinate sum zero
///  q(n), p(n)         ε₁..ε_n, no δ coordinates
///  ospB (2m+1|2n)     osp(2m+1|2n)
///  ospD (2m|2n)       osp(2m|2n), m ≥ 1
class RootDatum {
 public:
  Family family() const { return family_; }
  /// For q and p, m() is the rank and n() is zero.
  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }
  std::size_t eps_count() const { return eps_; }
  std::size_t delta_count() const { return delta_; }
  std::string name() const;

  /// gl, sl and osp: the families with an invariant form.
  bool is_kac_moody() const { return family_ != Family::q && family_ != Family::p; }
  /// False only for q, where the Cartan subalgebra is bigger than t.
  bool h_equals_t() const { return family_ != Family::q; }

  Weight zero() const { return Weight(eps_, delta_); }
  Weight eps(std::size_t i) const;
  Weight delta(std::size_t j) const;
  /// Builds a weight and brings it to canonical form (matters for sl only).
  Weight weight(std::vector<Rational> eps, std::vector<Rational> delta) const;
  Weight normalize(Weight w) const;
  bool same_shape(const Weight& w) const { return w.eps_count() == eps_ && w.delta_count() == delta_; }

  const std::vector<Root>& roots() const { return roots_; }
  const Root* find_root(const Weight& w) const;
  bool is_root(const Weight& w) const { return find_root(w) != nullptr; }
  bool is_isotropic(const Weight& w) const;
  std::vector<Weight> isotropic_roots() const;
  std::vector<Weight> even_roots() const;
  /// Δ₀̄⁺, the positive even roots determined by pi().
  const std::vector<Weight>& positive_even_roots() const { return positive_even_; }
  const std::vector<Weight>& pi() const { return pi_; }
  bool in_pi(const Weight& alpha) const;

  /// (μ|ν). Throws std::logic_error for q and p.
  Rational form(const Weight& mu, const Weight& nu) const;
  /// ⟨λ, α^∨⟩ for an even root α.
  Rational coroot(const Weight& lambda, const Weight& alpha) const;
  /// A rational vanishing exactly when ⟨ν, h_β⟩ does; β must be isotropic.
  Rational pair_hbeta(const Weight& nu, const Weight& beta) const;

  Weight simple_reflection(const Weight& alpha, const Weight& lambda) const;
  /// Sorted orbit of λ under W.
  std::vector<Weight> weyl_orbit(const Weight& lambda) const;
  Integer weyl_order() const;
  /// Simple reflections, left to right as applied, whose product is w₀.
  const std::vector<Weight>& longest_word() const { return longest_word_; }
  Weight apply_longest(const Weight& w) const;

 private:
  friend std::shared_ptr<const RootDatum> build_root_datum(Family, std::size_t, std::size_t);
  RootDatum() = default;

  void check_shape(const Weight& w) const;

  Family family_ = Family::gl;
  std::size_t m_ = 0, n_ = 0, eps_ = 0, delta_ = 0;
  std::vector<Root> roots_;  // sorted by weight
  std::vector<Weight> pi_;
  std::vector<Weight> positive_even_;
  std::vector<Weight> longest_word_;
};

using DatumPtr = std::shared_ptr<const RootDatum>;

/// Throws std::invalid_argument for unsupported parameters.
DatumPtr build_root_datum(Family family, std::size_t m, std::size_t n);

}  // namespace superchar
