#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>

#include "superchar/base_forest.hpp"
#include "superchar/dominance.hpp"
#include "superchar/xi_ring.hpp"

namespace superchar {

/// Raised when the defining system of b_λ has no solution, or no integral one.
/// Either outcome contradicts the hypotheses the construction rests on, so it
/// is reported rather than repaired.
class ShortBasisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ShortBasisElement {
  Weight lambda;
  RingElement element;
  /// Dimension of the solution space of the linear system, summed over the
  /// ψ₊ and ψ₋ systems; 0 means b_λ is pinned down uniquely.
  std::size_t solution_dim = 0;
  bool integral = true;
};

/// Solves for b_λ over a fixed base and caches the results.
///
/// Unknowns are one coefficient per W-orbit of Y_λ ∪ {λ}; b_λ has coefficient
/// ch_ξ C_λ at λ, vanishes at the other points of P⁺(Δ⁺), and every charged
/// β-string vanishes. The system is solved separately after ψ₊ and ψ₋ and the
/// two solutions are glued back over ℤ[ξ].
///
/// Not thread safe: the cache is mutated by compute().
class ShortBasisSolver {
 public:
  /// Throws std::domain_error for the p family or a base failing (Pr1).
  explicit ShortBasisSolver(const Base& base);

  const Base& base() const { return base_; }
  bool is_dominant_integrable(const Weight& lambda) const { return test_(lambda); }

  /// Throws std::invalid_argument if λ ∉ P⁺(Δ⁺), ShortBasisError if the system
  /// is inconsistent or its solution is not integral.
  const ShortBasisElement& compute(const Weight& lambda);

 private:
  Base base_;
  IntegrabilityTest test_;
  std::map<Weight, ShortBasisElement> cache_;
};

ShortBasisElement compute_b(const Base& base, const Weight& lambda);

/// Σ_{ν ∈ Wλ} ch_ξ C_ν; b_λ when there are no isotropic roots.
RingElement orbit_sum_b(const DatumPtr& datum, const Weight& lambda);

struct AxiomReport {
  bool no_other_dominant = true;  // (b): coefficient ch_ξ C_λ at λ, no other point of P⁺(Δ⁺)
  bool xi_fixed = true;           // (c): ξb = b when sdim C_λ = 0
  bool below = true;              // (d): supp ⊂ {ν ≤ λ}
  bool in_A = true;
  std::string detail;

  bool all() const { return no_other_dominant && xi_fixed && below && in_A; }
};

AxiomReport verify_axioms(const Base& base, const RingElement& candidate, const Weight& lambda);

struct Decomposition {
  std::map<Weight, XiCoeff> coefficients;
  RingElement remainder;
};

/// x = Σ n_λ b_λ + remainder by peeling maximal points of supp ∩ P⁺(Δ⁺).
/// Throws std::invalid_argument if x ∉ A(g) or a leading coefficient is not a
/// ℤ[ξ]-multiple of ch_ξ C_λ.
Decomposition decompose(ShortBasisSolver& solver, const RingElement& x);
Decomposition decompose(const Base& base, const RingElement& x);

}  // namespace superchar
