#include "superchar/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "superchar/linalg.hpp"

namespace superchar {

std::string to_string(Family family) {
  switch (family) {
    case Family::gl: return "gl";
    case Family::sl: return "sl";
    case Family::q: return "q";
    case Family::p: return "p";
    case Family::ospB: return "ospB";
    case Family::ospD: return "ospD";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  if (name == "gl") return Family::gl;
  if (name == "sl") return Family::sl;
  if (name == "q") return Family::q;
  if (name == "p") return Family::p;
  if (name == "ospB") return Family::ospB;
  if (name == "ospD") return Family::ospD;
  throw std::invalid_argument("unknown family '" + name + "'");
}

namespace {

Integer factorial(std::size_t k) {
  Integer r = 1;
  for (std::size_t i = 2; i <= k; ++i) r *= static_cast<unsigned long>(i);
  return r;
}

Integer power_of_two(std::size_t k) {
  Integer r = 1;
  r <<= static_cast<mp_bitcnt_t>(k);
  return r;
}

// Indices of the nonzero coordinates of a root of q or p type.
std::vector<std::size_t> support(const Weight& w) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < w.size(); ++k)
    if (sgn(w[k]) != 0) out.push_back(k);
  return out;
}

}  // namespace

std::string RootDatum::name() const {
  const auto m = std::to_string(m_), n = std::to_string(n_);
  switch (family_) {
    case Family::gl: return "gl(" + m + "|" + n + ")";
    case Family::sl: return "sl(" + m + "|" + n + ")";
    case Family::q: return "q(" + m + ")";
    case Family::p: return "p(" + m + ")";
    case Family::ospB: return "osp(" + std::to_string(2 * m_ + 1) + "|" + std::to_string(2 * n_) + ")";
    case Family::ospD: return "osp(" + std::to_string(2 * m_) + "|" + std::to_string(2 * n_) + ")";
  }
  return "?";
}

Weight RootDatum::eps(std::size_t i) const {
  if (i >= eps_) throw std::out_of_range("no such ε coordinate");
  return normalize(Weight::eps_unit(eps_, delta_, i));
}

Weight RootDatum::delta(std::size_t j) const {
  if (j >= delta_) throw std::out_of_range("no such δ coordinate");
  return normalize(Weight::delta_unit(eps_, delta_, j));
}

Weight RootDatum::weight(std::vector<Rational> eps, std::vector<Rational> delta) const {
  if (eps.size() != eps_ || delta.size() != delta_)
    throw std::invalid_argument(name() + " expects " + std::to_string(eps_) + " ε and " + std::to_string(delta_) +
                                " δ coordinates");
  return normalize(Weight(std::move(eps), std::move(delta)));
}

Weight RootDatum::normalize(Weight w) const {
  check_shape(w);
  if (family_ != Family::sl) return w;
  // t* of sl(m|n) is t* of gl(m|n) modulo the supertrace Σε−Σδ, whose
  // coordinate sum is m−n. The zero-sum representative is the one dual to a
  // traceless element under the form.
  Rational sum = 0;
  for (std::size_t k = 0; k < w.size(); ++k) sum += w[k];
  if (sgn(sum) == 0) return w;
  const Rational shift = sum / Rational(static_cast<long>(m_) - static_cast<long>(n_));
  for (std::size_t k = 0; k < w.size(); ++k) w[k] -= k < eps_ ? shift : -shift;
  return w;
}

void RootDatum::check_shape(const Weight& w) const {
  if (!same_shape(w)) throw std::invalid_argument("weight does not belong to " + name());
}

const Root* RootDatum::find_root(const Weight& w) const {
  auto it = std::lower_bound(roots_.begin(), roots_.end(), w,
                             [](const Root& r, const Weight& x) { return r.weight < x; });
  if (it == roots_.end() || it->weight != w) return nullptr;
  return &*it;
}

bool RootDatum::is_isotropic(const Weight& w) const {
  const Root* r = find_root(w);
  return r && r->isotropic;
}

std::vector<Weight> RootDatum::isotropic_roots() const {
  std::vector<Weight> out;
  for (const auto& r : roots_)
    if (r.isotropic) out.push_back(r.weight);
  return out;
}

std::vector<Weight> RootDatum::even_roots() const {
  std::vector<Weight> out;
  for (const auto& r : roots_)
    if (r.even) out.push_back(r.weight);
  return out;
}

bool RootDatum::in_pi(const Weight& alpha) const {
  return std::find(pi_.begin(), pi_.end(), alpha) != pi_.end();
}

Rational RootDatum::form(const Weight& mu, const Weight& nu) const {
  if (!is_kac_moody()) throw std::logic_error("form unavailable for " + name());
  check_shape(mu);
  check_shape(nu);
  Rational s = 0;
  for (std::size_t k = 0; k < eps_; ++k) s += mu[k] * nu[k];
  for (std::size_t k = eps_; k < eps_ + delta_; ++k) s -= mu[k] * nu[k];
  return s;
}

Rational RootDatum::coroot(const Weight& lambda, const Weight& alpha) const {
  check_shape(lambda);
  const Root* r = find_root(alpha);
  if (!r || !r->even) throw std::invalid_argument(alpha.to_string() + " is not an even root of " + name());
  if (is_kac_moody()) return 2 * form(lambda, alpha) / form(alpha, alpha);
  // q and p: even roots are ε_i − ε_j.
  std::size_t i = 0, j = 0;
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    if (sgn(alpha[k]) > 0) i = k;
    if (sgn(alpha[k]) < 0) j = k;
  }
  return lambda[i] - lambda[j];
}

Rational RootDatum::pair_hbeta(const Weight& nu, const Weight& beta) const {
  check_shape(nu);
  if (!is_isotropic(beta)) throw std::invalid_argument(beta.to_string() + " is not an isotropic root of " + name());
  if (is_kac_moody()) return form(nu, beta);
  const auto s = support(beta);
  // q: β = ε_i − ε_j, h_β ∝ h_i + h_j. p: β = ±(ε_i + ε_j), h_β ∝ h_i − h_j.
  if (family_ == Family::q) return nu[s[0]] + nu[s[1]];
  return nu[s[0]] - nu[s[1]];
}

Weight RootDatum::simple_reflection(const Weight& alpha, const Weight& lambda) const {
  if (!in_pi(alpha)) throw std::invalid_argument(alpha.to_string() + " is not a simple even root of " + name());
  return lambda - coroot(lambda, alpha) * alpha;
}

std::vector<Weight> RootDatum::weyl_orbit(const Weight& lambda) const {
  check_shape(lambda);
  std::set<Weight> seen{lambda};
  std::deque<Weight> queue{lambda};
  while (!queue.empty()) {
    const Weight w = queue.front();
    queue.pop_front();
    for (const auto& alpha : pi_) {
      Weight v = simple_reflection(alpha, w);
      if (seen.insert(v).second) queue.push_back(std::move(v));
    }
  }
  return {seen.begin(), seen.end()};
}

Integer RootDatum::weyl_order() const {
  switch (family_) {
    case Family::gl:
    case Family::sl: return factorial(m_) * factorial(n_);
    case Family::q:
    case Family::p: return factorial(m_);
    case Family::ospB: return power_of_two(m_) * factorial(m_) * power_of_two(n_) * factorial(n_);
    case Family::ospD: return power_of_two(m_ - 1) * factorial(m_) * power_of_two(n_) * factorial(n_);
  }
  return 1;
}

Weight RootDatum::apply_longest(const Weight& w) const {
  Weight v = w;
  for (const auto& alpha : longest_word_) v = simple_reflection(alpha, v);
  return v;
}

DatumPtr build_root_datum(Family family, std::size_t m, std::size_t n) {
  auto d = std::shared_ptr<RootDatum>(new RootDatum());
  d->family_ = family;
  d->m_ = m;
  d->n_ = n;

  switch (family) {
    case Family::gl:
      if (m + n == 0) throw std::invalid_argument("gl(0|0) is not supported");
      break;
    case Family::sl:
      if (m == n) throw std::invalid_argument("sl(m|n) requires m != n");
      break;
    case Family::q:
    case Family::p:
      if (m == 0) throw std::invalid_argument(to_string(family) + " requires rank at least 1");
      if (n != 0) throw std::invalid_argument(to_string(family) + " takes a single rank parameter");
      break;
    case Family::ospB:
      if (m + n == 0) throw std::invalid_argument("osp(1|0) is not supported");
      break;
    case Family::ospD:
      if (m == 0) throw std::invalid_argument("osp(2m|2n) requires m >= 1");
      break;
  }
  d->eps_ = m;
  d->delta_ = (family == Family::q || family == Family::p) ? 0 : n;

  const std::size_t E = d->eps_, D = d->delta_;
  auto e = [&](std::size_t i) { return Weight::eps_unit(E, D, i); };
  auto dl = [&](std::size_t j) { return Weight::delta_unit(E, D, j); };

  std::vector<Root> roots;
  auto add = [&](Weight w, bool even, bool odd, bool iso) { roots.push_back({std::move(w), even, odd, iso}); };
  auto add_pm = [&](const Weight& w, bool even, bool odd, bool iso) {
    add(w, even, odd, iso);
    add(-w, even, odd, iso);
  };

  switch (family) {
    case Family::gl:
    case Family::sl:
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          if (i != j) add(e(i) - e(j), true, false, false);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j) add(dl(i) - dl(j), true, false, false);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) add_pm(e(i) - dl(j), false, true, true);
      break;
    case Family::q:
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          if (i != j) add(e(i) - e(j), true, true, true);
      break;
    case Family::p:
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j)
          if (i != j) add(e(i) - e(j), true, false, false);
        add(2 * e(i), false, true, false);
        for (std::size_t j = i + 1; j < m; ++j) add_pm(e(i) + e(j), false, true, true);
      }
      break;
    case Family::ospB:
    case Family::ospD: {
      const bool b = family == Family::ospB;
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
          add_pm(e(i) - e(j), true, false, false);
          add_pm(e(i) + e(j), true, false, false);
        }
        if (b) add_pm(e(i), true, false, false);
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          add_pm(dl(i) - dl(j), true, false, false);
          add_pm(dl(i) + dl(j), true, false, false);
        }
        add_pm(2 * dl(i), true, false, false);
        if (b) add_pm(dl(i), false, true, false);
      }
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          add_pm(e(i) - dl(j), false, true, true);
          add_pm(e(i) + dl(j), false, true, true);
        }
      break;
    }
  }
  for (auto& r : roots) r.weight = d->normalize(r.weight);
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) { return a.weight < b.weight; });
  d->roots_ = std::move(roots);

  std::vector<Weight> pi;
  for (std::size_t i = 0; i + 1 < E; ++i) pi.push_back(e(i) - e(i + 1));
  if (family == Family::ospB && m >= 1) pi.push_back(e(m - 1));
  if (family == Family::ospD && m >= 2) pi.push_back(e(m - 2) + e(m - 1));
  for (std::size_t j = 0; j + 1 < D; ++j) pi.push_back(dl(j) - dl(j + 1));
  if ((family == Family::ospB || family == Family::ospD) && n >= 1) pi.push_back(2 * dl(n - 1));
  for (auto& a : pi) a = d->normalize(a);
  d->pi_ = std::move(pi);

  Weight rho = d->zero();
  for (const auto& r : d->roots_) {
    if (!r.even) continue;
    const auto c = linalg::coordinates(d->pi_, r.weight);
    if (!c) throw std::logic_error("even root outside the span of π");
    if (std::all_of(c->begin(), c->end(), [](const Rational& x) { return sgn(x) >= 0; })) {
      d->positive_even_.push_back(r.weight);
      rho += r.weight;
    }
  }

  // A reduced word for w₀: reflect the regular dominant ρ₀ until antidominant.
  for (bool moved = true; moved;) {
    moved = false;
    for (const auto& alpha : d->pi_) {
      if (sgn(d->coroot(rho, alpha)) > 0) {
        rho = d->simple_reflection(alpha, rho);
        d->longest_word_.push_back(alpha);
        moved = true;
        break;
      }
    }
  }
  return d;
}

}  // namespace superchar
