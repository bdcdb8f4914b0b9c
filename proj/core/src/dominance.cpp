#include "superchar/dominance.hpp"

#include <algorithm>
#include <stdexcept>

#include "superchar/fourier_motzkin.hpp"

namespace superchar {

bool is_dominant_pi(const RootDatum& datum, const Weight& lambda) {
  for (const auto& alpha : datum.pi())
    if (!is_natural(datum.coroot(lambda, alpha))) return false;
  return true;
}

Weight track_highest_weight(const Base& from, const Weight& lambda, std::span<const Weight> path) {
  const RootDatum& d = *from.datum();
  Base current = from;
  Weight hw = lambda;
  for (const auto& beta : path) {
    Base next = odd_reflect(current, beta);
    if (sgn(d.pair_hbeta(hw, beta)) != 0) hw -= beta;
    current = std::move(next);
  }
  return hw;
}

IntegrabilityTest::IntegrabilityTest(const Base& base) : base_(base) {
  const RootDatum& d = *base.datum();
  if (d.family() == Family::p)
    throw std::domain_error("no finite-dimensionality criterion is available for the p family");
  if (!d.is_kac_moody()) return;
  const BaseGraph graph(base);
  for (const auto& alpha : d.pi()) {
    std::vector<std::vector<Weight>> paths;
    for (auto k : graph.containing(alpha)) paths.push_back(graph.path(0, k));
    if (paths.empty()) throw std::logic_error("no base contains " + alpha.to_string() + " or its half");
    routes_.emplace_back(alpha, std::move(paths));
  }
}

bool IntegrabilityTest::operator()(const Weight& lambda) const {
  const RootDatum& d = *base_.datum();
  if (!is_dominant_pi(d, lambda)) return false;
  if (d.family() == Family::q) {
    for (const auto& alpha : d.pi())
      if (d.simple_reflection(alpha, lambda) == lambda && sgn(d.pair_hbeta(lambda, alpha)) != 0) return false;
    return true;
  }
  for (const auto& [alpha, paths] : routes_) {
    bool ok = false;
    for (const auto& path : paths) {
      if (is_natural(d.coroot(track_highest_weight(base_, lambda, path), alpha))) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

bool is_dominant_integrable(const Base& base, const Weight& lambda) { return IntegrabilityTest(base)(lambda); }

bool closed_formula(const Base& base, const Weight& lambda) {
  const RootDatum& d = *base.datum();
  if (!is_dominant_pi(d, lambda)) return false;
  for (const auto& beta : base.iso_simple())
    if (sgn(d.pair_hbeta(lambda, beta)) != 0 && !is_dominant_pi(d, lambda - beta)) return false;
  return true;
}

bool is_dominant_integrable_closed(const Base& base, const Weight& lambda) {
  if (!satisfies_coro_hypothesis(base))
    throw std::domain_error("the closed form needs a base satisfying the odd reflection hypothesis "
                            "(see satisfies_coro_hypothesis)");
  return closed_formula(base, lambda);
}

std::vector<Integer> y_box(const Base& base, const Weight& lambda) {
  const RootDatum& d = *base.datum();
  const auto& sigma = base.sigma();
  const std::size_t k = sigma.size();
  InequalitySystem sys(k);
  sys.add_nonnegativity();
  for (const auto& alpha : d.pi()) {
    std::vector<Rational> row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = d.coroot(sigma[j], alpha);
    sys.add_le(std::move(row), d.coroot(lambda, alpha));
  }
  std::vector<Integer> box;
  for (std::size_t j = 0; j < k; ++j) {
    const auto range = sys.project(j);
    if (!range) return std::vector<Integer>(k, Integer(-1));  // nothing dominant below λ
    if (!range->upper) throw std::logic_error("unbounded search box below " + lambda.to_string());
    box.push_back(floor(*range->upper));
  }
  return box;
}

std::vector<Weight> enumerate_Y(const Base& base, const Weight& lambda) {
  const RootDatum& d = *base.datum();
  if (!check_pr1(base)) throw std::domain_error("base fails (Pr1); Y_λ may be infinite");
  const auto& sigma = base.sigma();
  const auto box = y_box(base, lambda);
  std::vector<Weight> out;
  if (sigma.empty() || box.front() < 0) return out;

  std::vector<Integer> k(sigma.size(), Integer(0));
  // Odometer over the integer box.
  while (true) {
    bool nonzero = false;
    Weight mu = lambda;
    for (std::size_t j = 0; j < sigma.size(); ++j) {
      if (k[j] == 0) continue;
      nonzero = true;
      mu -= Rational(k[j]) * sigma[j];
    }
    if (nonzero && is_dominant_pi(d, mu)) out.push_back(std::move(mu));
    std::size_t j = 0;
    while (j < k.size() && k[j] == box[j]) k[j++] = 0;
    if (j == k.size()) break;
    ++k[j];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace superchar
