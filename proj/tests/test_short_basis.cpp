#include <doctest.h>

#include "superchar/superchar.hpp"
#include "support/generators.hpp"

using namespace superchar;

namespace {

std::vector<Weight> dominant_in_box(ShortBasisSolver& s, int bound) {
  const RootDatum& d = *s.base().datum();
  std::vector<Weight> out;
  const std::size_t dim = d.zero().size();
  std::vector<int> c(dim, -bound);
  while (true) {
    Weight w = d.zero();
    for (std::size_t k = 0; k < dim; ++k) w[k] = c[k];
    w = d.normalize(w);
    if (s.is_dominant_integrable(w) && (out.empty() || out.back() != w)) out.push_back(w);
    std::size_t k = 0;
    while (k < dim && c[k] == bound) c[k++] = -bound;
    if (k == dim) break;
    ++c[k];
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

TEST_CASE("gl(2|1): b_ε1") {
  const auto d = build_root_datum(Family::gl, 2, 1);
  const Base base = default_base(d, BaseKind::mixed);
  const auto b = compute_b(base, d->eps(0));
  RingElement expected(d);
  expected.add_term(d->eps(0), {1, 0});
  expected.add_term(d->eps(1), {1, 0});
  expected.add_term(d->delta(0), XiCoeff::xi());
  CHECK(b.element == expected);
  CHECK(b.solution_dim == 0);
  CHECK(verify_axioms(base, b.element, d->eps(0)).all());
  CHECK_THROWS_AS(compute_b(base, d->delta(0)), std::invalid_argument);
}

TEST_CASE("without isotropic roots b_λ is the orbit sum") {
  const auto gl3 = build_root_datum(Family::gl, 3, 0);
  const Weight l = gl3->weight({2, 1, 0}, {});
  CHECK(compute_b(default_base(gl3, BaseKind::mixed), l).element == orbit_sum_b(gl3, l));
  const auto q1 = build_root_datum(Family::q, 1, 0);
  const Weight one_ = q1->weight({1}, {});
  CHECK(orbit_sum_b(q1, one_) == RingElement::monomial(q1, one_, {1, 1}));
  CHECK(compute_b(default_base(q1, BaseKind::mixed), one_).element == orbit_sum_b(q1, one_));
  CHECK_THROWS(orbit_sum_b(build_root_datum(Family::gl, 1, 1), build_root_datum(Family::gl, 1, 1)->zero()));
}

TEST_CASE("q(2): b_(2,0)") {
  const auto d = build_root_datum(Family::q, 2, 0);
  const auto b = compute_b(default_base(d, BaseKind::mixed), d->weight({2, 0}, {}));
  RingElement expected(d);
  expected.add_term(d->weight({2, 0}, {}), {1, 1});
  expected.add_term(d->weight({0, 2}, {}), {1, 1});
  expected.add_term(d->weight({1, 1}, {}), {2, 2});
  CHECK(b.element == expected);
  CHECK(psi(b.element, -1).is_zero());
}

TEST_CASE("short basis elements satisfy their axioms") {
  for (auto [d, bound] : std::vector<std::pair<DatumPtr, int>>{{build_root_datum(Family::gl, 2, 1), 2},
                                                               {build_root_datum(Family::gl, 1, 2), 2},
                                                               {build_root_datum(Family::gl, 2, 2), 1},
                                                               {build_root_datum(Family::q, 3, 0), 2},
                                                               {build_root_datum(Family::ospB, 1, 1), 2}}) {
    ShortBasisSolver solver(default_base(d, BaseKind::mixed));
    for (const auto& l : dominant_in_box(solver, bound)) {
      CAPTURE(d->name());
      CAPTURE(l.to_string());
      const auto& b = solver.compute(l);
      CHECK(b.solution_dim == 0);
      CHECK(b.integral);
      CHECK(is_w_invariant(b.element));
      const auto report = verify_axioms(solver.base(), b.element, l);
      CHECK_MESSAGE(report.all(), report.detail);
    }
  }
}

TEST_CASE("refusals") {
  CHECK_THROWS_AS(ShortBasisSolver(default_base(build_root_datum(Family::p, 2, 0), BaseKind::mixed)), std::domain_error);
  CHECK_THROWS_AS(ShortBasisSolver(base_from_word(build_root_datum(Family::gl, 2, 1), "εεδ")), std::domain_error);
}

TEST_CASE("gl(2|1): b_ε1² decomposes") {
  const auto d = build_root_datum(Family::gl, 2, 1);
  ShortBasisSolver solver(default_base(d, BaseKind::mixed));
  const auto& b = solver.compute(d->eps(0)).element;
  const auto dec = decompose(solver, b * b);
  CHECK(dec.remainder.is_zero());
  REQUIRE(dec.coefficients.size() == 2);
  CHECK(dec.coefficients.at(d->weight({1, 0}, {1})) == XiCoeff{0, 2});
  CHECK(dec.coefficients.at(d->weight({2, 0}, {0})) == XiCoeff{1, 0});
  CHECK_THROWS_AS(decompose(solver, RingElement::monomial(d, d->eps(0), {1, 0})), std::invalid_argument);
}

TEST_CASE("decomposition recovers random combinations") {
  superchar::testing::Gen gen(61);
  for (auto d : {build_root_datum(Family::gl, 2, 1), build_root_datum(Family::q, 2, 0)}) {
    ShortBasisSolver solver(default_base(d, BaseKind::mixed));
    const auto pool = dominant_in_box(solver, 2);
    for (int t = 0; t < 20; ++t) {
      std::map<Weight, XiCoeff> coeffs;
      RingElement x(d);
      for (int k = 0; k < 3; ++k) {
        const Weight& l = gen.pick(pool);
        XiCoeff c = gen.coeff(2);
        if (c.is_zero()) continue;
        // For q the coefficient is only determined modulo the annihilator of 1 + ξ.
        if (d->family() == Family::q && !l.is_zero()) c = {c.a, 0};
        coeffs[l] += c;
        x += solver.compute(l).element * c;
      }
      std::erase_if(coeffs, [](const auto& e) { return e.second.is_zero(); });
      const auto dec = decompose(solver, x);
      CHECK(dec.remainder.is_zero());
      RingElement rebuilt(d);
      for (const auto& [l, c] : dec.coefficients) rebuilt += solver.compute(l).element * c;
      CHECK(rebuilt == x);
      if (d->family() != Family::q) CHECK(dec.coefficients == coeffs);
    }
  }
}
