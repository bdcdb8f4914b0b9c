#pragma once

#include <span>
#include <utility>
#include <vector>

#include "superchar/base_forest.hpp"

namespace superchar {

/// ⟨λ, α^∨⟩ ∈ ℕ for every α ∈ π.
bool is_dominant_pi(const RootDatum& datum, const Weight& lambda);

/// Highest weight of L(λ; Σ) with respect to the base reached from Σ by
/// reflecting in the isotropic roots of `path`, in order.
Weight track_highest_weight(const Base& from, const Weight& lambda, std::span<const Weight> path);

/// Decides λ ∈ P⁺(Δ⁺(Σ)), i.e. L(λ; Σ) is finite dimensional.
///
/// Kac–Moody families go through every base containing α or α/2 for each
/// α ∈ π; q uses the criterion "s_αλ = λ implies ⟨λ, h_α⟩ = 0". The p family
/// has no criterion and throws std::domain_error. Construction walks the odd
/// reflection graph once, so keep one instance per base for repeated queries.
class IntegrabilityTest {
 public:
  explicit IntegrabilityTest(const Base& base);

  const Base& base() const { return base_; }
  bool operator()(const Weight& lambda) const;

 private:
  Base base_;
  // For each α ∈ π, the reflection paths from base_ to the bases containing α or α/2.
  std::vector<std::pair<Weight, std::vector<std::vector<Weight>>>> routes_;
};

bool is_dominant_integrable(const Base& base, const Weight& lambda);

/// λ ∈ P⁺(π) and λ − β ∈ P⁺(π) whenever β ∈ Σ_iso has ⟨λ, h_β⟩ ≠ 0.
/// Throws std::domain_error unless satisfies_coro_hypothesis(base).
bool is_dominant_integrable_closed(const Base& base, const Weight& lambda);
/// The same formula without checking the hypothesis.
bool closed_formula(const Base& base, const Weight& lambda);

/// Y_λ = {μ ∈ P⁺(π) : μ < λ}, sorted. Throws std::domain_error when the base
/// fails (Pr1), since the set may then be infinite.
std::vector<Weight> enumerate_Y(const Base& base, const Weight& lambda);

/// Upper bounds on the Σ-coordinates of λ − μ over μ in the rational dominant
/// cone below λ; the box enumerate_Y searches.
std::vector<Integer> y_box(const Base& base, const Weight& lambda);

}  // namespace superchar
