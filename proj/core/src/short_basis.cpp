#include "superchar/short_basis.hpp"

#include <algorithm>
#include <set>

#include "superchar/linalg.hpp"

namespace superchar {

namespace {

bool even(const Integer& i) { return mpz_even_p(i.get_mpz_t()) != 0; }

const Base& checked(const Base& base) {
  const RootDatum& d = *base.datum();
  if (d.family() == Family::p) throw std::domain_error("short bases are not constructed for the p family");
  if (!check_pr1(base)) throw std::domain_error("base fails (Pr1); b_λ is not available");
  return base;
}

struct Orbit {
  Weight rep;
  std::vector<Weight> points;
  XiCoeff pattern;  // coefficient of ch_ξ C on the orbit
  bool fixed_zero = false;
};

// Solves the ψ_sign system. Returns the value of ψ_sign(t_μ) for each orbit
// (entries for orbits absent from the system are left at zero) and adds the
// nullity to `nullity`.
std::vector<Rational> solve_level(const RootDatum& d, const std::vector<Orbit>& orbits, std::size_t lambda_orbit,
                                  int sign, std::size_t& nullity) {
  // Column of each orbit, or npos when its ψ_sign pattern is zero, it is
  // pinned to zero, or it is λ's (known) orbit.
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> column(orbits.size(), npos);
  std::size_t columns = 0;
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    if (o == lambda_orbit || orbits[o].fixed_zero || orbits[o].pattern.psi(sign) == 0) continue;
    column[o] = columns++;
  }
  const Rational lambda_value = orbits[lambda_orbit].pattern.psi(sign);

  std::map<Weight, std::size_t> orbit_of;
  for (std::size_t o = 0; o < orbits.size(); ++o)
    for (const auto& w : orbits[o].points) orbit_of.emplace(w, o);

  linalg::Matrix a;
  linalg::Vector rhs;
  for (const auto& beta : d.isotropic_roots()) {
    std::size_t k = 0;
    while (sgn(beta[k]) == 0) ++k;
    // line representative -> (row, constant)
    std::map<Weight, std::pair<linalg::Vector, Rational>> lines;
    for (const auto& [w, o] : orbit_of) {
      const Integer i = floor(w[k] / beta[k]);
      const Weight rep = w - Rational(i) * beta;
      if (sgn(d.pair_hbeta(rep, beta)) == 0) continue;
      auto& [row, constant] = lines.try_emplace(rep, linalg::Vector(columns), Rational(0)).first->second;
      const Rational unit = (sign > 0 && !even(i)) ? -1 : 1;
      if (o == lambda_orbit) constant -= unit * lambda_value;
      else if (column[o] != npos) row[column[o]] += unit * Rational(orbits[o].pattern.psi(sign));
    }
    for (auto& [rep, eq] : lines) {
      a.push_back(std::move(eq.first));
      rhs.push_back(std::move(eq.second));
    }
  }
  std::vector<Rational> values(orbits.size(), Rational(0));
  values[lambda_orbit] = 1;
  if (columns == 0) {
    for (const auto& c : rhs)
      if (sgn(c) != 0) throw ShortBasisError("string conditions are inconsistent");
    return values;
  }
  const auto sol = linalg::solve(std::move(a), std::move(rhs), columns);
  if (!sol) throw ShortBasisError("string conditions are inconsistent");
  nullity += sol->nullity;
  for (std::size_t o = 0; o < orbits.size(); ++o)
    if (column[o] != npos) values[o] = sol->x[column[o]];
  return values;
}

}  // namespace

ShortBasisSolver::ShortBasisSolver(const Base& base) : base_(checked(base)), test_(base) {}

const ShortBasisElement& ShortBasisSolver::compute(const Weight& lambda) {
  if (auto it = cache_.find(lambda); it != cache_.end()) return it->second;
  const RootDatum& d = *base_.datum();
  if (!test_(lambda)) throw std::invalid_argument(lambda.to_string() + " is not dominant integrable");

  std::vector<Orbit> orbits;
  std::size_t lambda_orbit = 0;
  auto add_orbit = [&](const Weight& mu, bool is_lambda) {
    Orbit o{mu, d.weyl_orbit(mu), ch_xi_C_coeff(d, mu), false};
    o.fixed_zero = !is_lambda && test_(mu);
    if (is_lambda) lambda_orbit = orbits.size();
    orbits.push_back(std::move(o));
  };
  add_orbit(lambda, true);
  for (const auto& mu : enumerate_Y(base_, lambda)) add_orbit(mu, false);

  ShortBasisElement out;
  out.lambda = lambda;
  const auto plus = solve_level(d, orbits, lambda_orbit, +1, out.solution_dim);
  const auto minus = solve_level(d, orbits, lambda_orbit, -1, out.solution_dim);

  out.element = RingElement(base_.datum());
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    const XiCoeff& pat = orbits[o].pattern;
    XiCoeff c;
    if (pat.psi(-1) == 0) {
      // pattern k(1+ξ): t·k(1+ξ) = ψ₊(t)·k(1+ξ).
      if (!is_integer(plus[o])) out.integral = false;
      c = plus[o].get_num() * pat;
    } else {
      // pattern 1: t = ((u₊+u₋)/2, (u₊−u₋)/2).
      const Rational a = (plus[o] + minus[o]) / 2, b = (plus[o] - minus[o]) / 2;
      if (!is_integer(a) || !is_integer(b)) out.integral = false;
      c = {a.get_num(), b.get_num()};
    }
    if (!out.integral)
      throw ShortBasisError("b_" + lambda.to_string() + " has non-integral coefficients on the orbit of " +
                            orbits[o].rep.to_string());
    for (const auto& w : orbits[o].points) out.element.add_term(w, c);
  }
  return cache_.emplace(lambda, std::move(out)).first->second;
}

ShortBasisElement compute_b(const Base& base, const Weight& lambda) {
  ShortBasisSolver solver(base);
  return solver.compute(lambda);
}

RingElement orbit_sum_b(const DatumPtr& datum, const Weight& lambda) {
  const RootDatum& d = *datum;
  if (!d.isotropic_roots().empty()) throw std::invalid_argument(d.name() + " has isotropic roots");
  if (!is_dominant_pi(d, lambda)) throw std::invalid_argument(lambda.to_string() + " is not in P⁺(π)");
  RingElement out(datum);
  for (const auto& nu : d.weyl_orbit(lambda)) out.add_term(nu, ch_xi_C_coeff(d, nu));
  return out;
}

AxiomReport verify_axioms(const Base& base, const RingElement& candidate, const Weight& lambda) {
  const RootDatum& d = *base.datum();
  const IntegrabilityTest test(base);
  AxiomReport r;
  auto note = [&](const std::string& s) { r.detail += (r.detail.empty() ? "" : "; ") + s; };

  if (candidate.coeff(lambda) != ch_xi_C_coeff(d, lambda)) {
    r.no_other_dominant = false;
    note("coefficient at λ is " + candidate.coeff(lambda).to_string());
  }
  for (const auto& [w, c] : candidate.terms()) {
    if (w != lambda && test(w)) {
      r.no_other_dominant = false;
      note("dominant integrable " + w.to_string() + " in support");
      break;
    }
  }
  if (sdim_C(d, lambda) == 0 && candidate * XiCoeff::xi() != candidate) {
    r.xi_fixed = false;
    note("ξb ≠ b although sdim C_λ = 0");
  }
  for (const auto& [w, c] : candidate.terms()) {
    if (!leq(base, w, lambda)) {
      r.below = false;
      note(w.to_string() + " is not below λ");
      break;
    }
  }
  Failure why;
  if (!in_A(candidate, Lattice::full(), true, &why)) {
    r.in_A = false;
    note("not in A: " + why.reason + (why.at ? " at " + why.at->to_string() : ""));
  }
  return r;
}

Decomposition decompose(ShortBasisSolver& solver, const RingElement& x) {
  const Base& base = solver.base();
  const RootDatum& d = *base.datum();
  Failure why;
  if (!in_A(x, Lattice::full(), false, &why)) throw std::invalid_argument("element is not in A: " + why.reason);

  Decomposition out{{}, x};
  RingElement& rest = out.remainder;
  for (std::size_t guard = 0;; ++guard) {
    if (guard > 100000) throw std::logic_error("decompose does not terminate");
    std::vector<Weight> tops;
    for (const auto& [w, c] : rest.terms())
      if (solver.is_dominant_integrable(w)) tops.push_back(w);
    if (tops.empty()) break;
    // First maximal element in the sorted order.
    const Weight* pick = nullptr;
    for (const auto& w : tops) {
      const bool dominated = std::any_of(tops.begin(), tops.end(),
                                         [&](const Weight& v) { return v != w && leq(base, w, v); });
      if (!dominated) {
        pick = &w;
        break;
      }
    }
    const Weight lambda = *pick;
    const XiCoeff m = rest.coeff(lambda);
    const XiCoeff pat = ch_xi_C_coeff(d, lambda);
    XiCoeff n;
    if (pat.b == 0) {
      n = m;
    } else {
      if (m.a != m.b || !mpz_divisible_p(m.a.get_mpz_t(), pat.a.get_mpz_t()))
        throw std::invalid_argument("coefficient " + m.to_string() + " at " + lambda.to_string() +
                                    " is not a multiple of ch_ξ C_λ");
      n = {m.a / pat.a, 0};
    }
    rest -= solver.compute(lambda).element * n;
    out.coefficients[lambda] += n;
  }
  for (auto it = out.coefficients.begin(); it != out.coefficients.end();)
    it = it->second.is_zero() ? out.coefficients.erase(it) : std::next(it);
  return out;
}

Decomposition decompose(const Base& base, const RingElement& x) {
  ShortBasisSolver solver(base);
  return decompose(solver, x);
}

}  // namespace superchar
