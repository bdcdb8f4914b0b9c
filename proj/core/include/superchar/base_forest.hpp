#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "superchar/linalg.hpp"
#include "superchar/root_datum.hpp"

namespace superchar {

/// A base Σ of a compatible system of positive roots.
///
/// Equality is equality of Δ⁺: the order of `sigma()` is presentation only
/// (it follows the word, or the order of the reflected base).
class Base {
 public:
  const DatumPtr& datum() const { return datum_; }
  const std::vector<Weight>& sigma() const { return sigma_; }
  /// Δ⁺(Σ), sorted.
  const std::vector<Weight>& positive_roots() const { return positive_; }
  /// Σ_iso in sigma order.
  std::vector<Weight> iso_simple() const;

  bool contains(const Weight& w) const;
  bool is_positive(const Weight& root) const;
  /// Coordinates of w in Σ, or nullopt if w is outside the span.
  std::optional<linalg::Vector> coordinates(const Weight& w) const { return projector_.coordinates(w); }

  friend bool operator==(const Base& a, const Base& b) { return a.positive_ == b.positive_; }
  friend bool operator<(const Base& a, const Base& b) { return a.positive_ < b.positive_; }

 private:
  friend Base make_base(DatumPtr datum, std::vector<Weight> sigma);

  DatumPtr datum_;
  std::vector<Weight> sigma_;
  std::vector<Weight> positive_;
  linalg::Projector projector_;
};

/// Validates Σ (roots, linearly independent, Δ = Δ⁺ ⊔ −Δ⁺ with Δ⁺ ⊂ ℕΣ,
/// Δ₀̄⁺ ⊂ Δ⁺) and throws std::invalid_argument otherwise.
Base make_base(DatumPtr datum, std::vector<Weight> sigma);

enum class BaseKind { mixed, distinguished };

Base default_base(DatumPtr datum, BaseKind kind);

/// Word bases: gl and sl words in ε and δ (UTF-8 or ASCII e/d); the k-th ε
/// letter stands for ε_k. osp words are accepted too, with the simple roots
/// closing the chain: ε or δ for (2m+1|2n); 2δ, or w ± ε when the word ends
/// in ε, for (2m|2n).
Base base_from_word(DatumPtr datum, std::string_view word);
/// Word of a gl or sl base ("εδε"); nullopt for other families.
std::optional<std::string> word_of(const Base& base);

/// r_β Σ for β ∈ Σ_iso. Kac–Moody families only.
Base odd_reflect(const Base& base, const Weight& beta);

/// All bases reachable from `start` by odd reflections, sorted.
std::vector<Base> enumerate_bases(const Base& start);

/// The odd reflection graph, kept around for path queries.
class BaseGraph {
 public:
  explicit BaseGraph(const Base& start);

  /// In breadth-first order; index 0 is the start.
  const std::vector<Base>& bases() const { return bases_; }
  std::size_t index_of(const Base& base) const;
  /// Sequence of isotropic roots to reflect in, from `from` to `to`.
  std::vector<Weight> path(std::size_t from, std::size_t to) const;
  /// Indices of the bases containing α or α/2.
  std::vector<std::size_t> containing(const Weight& alpha) const;

 private:
  struct Edge {
    std::size_t to;
    Weight beta;
  };
  std::vector<Base> bases_;
  std::vector<std::vector<Edge>> edges_;
};

enum class NodeKind { circle, otimes, bullet };

struct Diagram {
  std::vector<NodeKind> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, sorted

  std::size_t count(NodeKind kind) const;
  /// Edges with both ends odd.
  std::size_t odd_edges() const;
  /// One line: nodes "o", "(x)", "*" with the edge list, e.g. "(x)-(x)".
  std::string to_ascii() const;
};

Diagram dynkin_diagram(const Base& base);
bool isomorphic(const Diagram& a, const Diagram& b);

struct Pr2Report {
  bool holds = true;
  /// An α ∈ π that is not a sum of at most two simple roots.
  std::optional<Weight> witness;
};

/// Each α ∈ π is a sum of at most two elements of Σ. Cross-checked against
/// the diagram count ℓ′ − ℓ = #(⊗) − #(odd edges); a disagreement throws
/// std::logic_error.
Pr2Report satisfies_pr2(const Base& base);

/// For every α ∈ π with neither α nor α/2 in Σ, some β ∈ Σ_iso has α or α/2
/// in r_β Σ.
bool satisfies_coro_hypothesis(const Base& base);

/// −ℝ≥0 Δ⁺ ∩ (dominant cone) = {0}, with the −w₀ and same-letter shortcuts.
bool check_pr1(const Base& base);
/// The same, always by Fourier–Motzkin.
bool check_pr1_cone(const Base& base);
/// −w₀ Δ⁺ = Δ⁺.
bool minus_w0_stable(const Base& base);

/// Diagram matches the mixed diagram of the family.
bool is_mixed(const Base& base);

/// ν ≤ λ: λ − ν ∈ ℕΣ.
bool leq(const Base& base, const Weight& nu, const Weight& lambda);

}  // namespace superchar
