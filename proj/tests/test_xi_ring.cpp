#include <doctest.h>

#include <algorithm>

#include "superchar/superchar.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace superchar;
using superchar::testing::Gen;

TEST_CASE("ℤ[ξ] arithmetic") {
  const XiCoeff xi = XiCoeff::xi();
  CHECK(xi * xi == XiCoeff{1, 0});
  CHECK((XiCoeff{2, 3} * XiCoeff{1, -1}) == XiCoeff{-1, 1});
  CHECK(XiCoeff{2, 3}.psi(+1) == 5);
  CHECK(XiCoeff{2, 3}.psi(-1) == -1);
  CHECK(XiCoeff{1, -1}.to_string() == "1-ξ");
  CHECK(XiCoeff{0, -1}.to_string() == "-ξ");
}

TEST_CASE("group ring laws and ψ± are ring maps") {
  Gen gen(51);
  const auto d = build_root_datum(Family::gl, 2, 1);
  for (int t = 0; t < 40; ++t) {
    const auto x = gen.element(d, 3, 2), y = gen.element(d, 3, 2), z = gen.element(d, 2, 2);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    CHECK((x - x).is_zero());
    for (int s : {+1, -1}) CHECK(psi(x * y, s) == psi(x, s) * psi(y, s));
    CHECK(from_psi(psi(x, +1), psi(x, -1)) == x);
  }
  LaurentElement plus(d), minus(d);
  plus.add_term(d->zero(), 1);
  CHECK_THROWS_AS(from_psi(plus, minus), std::invalid_argument);
  const auto other = build_root_datum(Family::gl, 1, 1);
  CHECK_THROWS(gen.element(d, 1, 1) + one(other));
}

TEST_CASE("Clifford coefficients match explicit modules") {
  for (std::size_t z = 0; z <= 6; ++z) {
    const auto m = superchar::testing::clifford_module(z);
    CHECK(m.irreducible);
    CHECK(m.parity_invariant == (z % 2 == 1));
  }
  for (int n = 1; n <= 6; ++n) {
    const auto d = build_root_datum(Family::q, n, 0);
    for (int z = 0; z <= n; ++z) {
      std::vector<Rational> c(n, 0);
      for (int k = 0; k < z; ++k) c[k] = k + 1;
      const Weight nu = d->weight(c, {});
      const auto module = superchar::testing::clifford_module(z);
      const XiCoeff coeff = ch_xi_C_coeff(*d, nu);
      CAPTURE(n);
      CAPTURE(z);
      CHECK(coeff.psi(+1) == Integer(module.even + module.odd));
      CHECK(coeff.psi(-1) == Integer(module.even) - Integer(module.odd));
      CHECK(sdim_C(*d, nu) == coeff.psi(-1));
    }
  }
  const auto gl = build_root_datum(Family::gl, 2, 1);
  CHECK(ch_xi_C_coeff(*gl, gl->eps(0)) == XiCoeff{1, 0});
}

TEST_CASE("gl(1|1): simple characters lie in A") {
  const auto d = build_root_datum(Family::gl, 1, 1);
  const RingElement v = gl11_character(d, d->eps(0));
  CHECK(v.coeff(d->eps(0)) == XiCoeff{1, 0});
  CHECK(v.coeff(d->delta(0)) == XiCoeff::xi());
  CHECK(in_A(v));
  CHECK(in_A(gl11_character(d, d->weight({Rational(1, 2)}, {Rational(-1, 2)})) * v));
  // Typical with ⟨λ, h_β⟩ = 0: one-dimensional.
  CHECK(gl11_character(d, d->weight({1}, {-1})).size() == 1);
  RingElement bad = v;
  bad.add_term(d->delta(0), {1, 0});
  Failure why;
  CHECK_FALSE(in_A(bad, Lattice::full(), false, &why));
  CHECK(why.at);
  CHECK_FALSE(why.reason.empty());
}

TEST_CASE("one isotropic root per orbit is enough for W-invariant elements") {
  Gen gen(52);
  for (auto d : {build_root_datum(Family::gl, 2, 1), build_root_datum(Family::gl, 2, 2), build_root_datum(Family::q, 3, 0),
                 build_root_datum(Family::ospB, 1, 1)}) {
    CHECK(iso_transversal(*d).size() == 1);
    const Base b = default_base(d, BaseKind::mixed);
    for (int t = 0; t < 60; ++t) {
      RingElement x = w_symmetrize(gen.element(d, 2, 2));
      CHECK(is_w_invariant(x));
      CHECK(in_A(x) == in_A(x, Lattice::full(), true));
    }
    (void)b;
  }
  const auto d = build_root_datum(Family::gl, 2, 1);
  CHECK_FALSE(in_A(RingElement::monomial(d, d->eps(0), {1, 0})));
}

TEST_CASE("lattices") {
  const auto q = build_root_datum(Family::q, 2, 0);
  const Weight half = q->weight({Rational(1, 2), Rational(-1, 2)}, {});
  CHECK(Lattice::half().contains(*q, half));
  CHECK_FALSE(Lattice::integral().contains(*q, half));
  CHECK(Lattice::full().contains(*q, half));
  const auto gl = build_root_datum(Family::gl, 2, 1);
  const Lattice even = Lattice::user({Rational(2) * gl->eps(0), Rational(2) * gl->eps(1), Rational(2) * gl->delta(0)});
  CHECK(even.contains(*gl, gl->weight({2, -4}, {0})));
  CHECK_FALSE(even.contains(*gl, gl->eps(0)));
  CHECK(in_R(ch_xi_C(q, q->weight({1, 0}, {}))));
}

TEST_CASE("string conditions survive ψ±") {
  Gen gen(53);
  const auto d = build_root_datum(Family::gl, 2, 1);
  const Weight beta = d->eps(0) - d->delta(0);
  ShortBasisSolver solver(default_base(d, BaseKind::mixed));
  const std::vector<Weight> pool{d->zero(), d->eps(0), d->weight({1, 0}, {1}), d->weight({2, 0}, {0})};
  for (int t = 0; t < 30; ++t) {
    const RingElement x = solver.compute(gen.pick(pool)).element * solver.compute(gen.pick(pool)).element * gen.coeff(2) +
                          solver.compute(gen.pick(pool)).element;
    REQUIRE(string_condition(x, beta));
    for (int s : {+1, -1}) CHECK(string_condition(psi(x, s), beta, s));
  }
}

TEST_CASE("derivative and evaluation forms") {
  const auto d = build_root_datum(Family::gl, 2, 1);
  const Weight beta = d->delta(0) - d->eps(1), omega = d->eps(1);
  const auto b = compute_b(default_base(d, BaseKind::mixed), d->eps(0)).element;
  const LaurentElement good = psi(b, -1);
  CHECK(in_A_psi(good, -1, Lattice::integral()));
  CHECK(sv_condition(good, beta, omega, -1));
  CHECK(ev_condition(good, beta, omega));
  RingElement sym(d);
  sym.add_term(d->eps(0), {1, 0});
  sym.add_term(d->eps(1), {1, 0});
  const LaurentElement bad = psi(sym, -1);
  CHECK_FALSE(in_A_psi(bad, -1, Lattice::integral()));
  CHECK_FALSE(sv_condition(bad, beta, omega, -1));
  CHECK_FALSE(ev_condition(bad, beta, omega));
  CHECK_THROWS(sv_condition(good, beta, d->zero(), -1));
}

TEST_CASE("ι is an involution exchanging A₋ and A₊") {
  Gen gen(54);
  const auto d = build_root_datum(Family::gl, 2, 1);
  const auto b = compute_b(default_base(d, BaseKind::mixed), d->eps(0)).element;
  for (int t = 0; t < 30; ++t) {
    const LaurentElement f = psi(b * w_symmetrize(gen.element(d, 2, 1)) + w_symmetrize(gen.element(d, 1, 1)), -1);
    CHECK(iota(iota(f)) == f);
    CHECK(in_A_psi(f, -1, Lattice::integral()) == in_A_psi(iota(f), +1, Lattice::integral()));
  }
  const auto q = build_root_datum(Family::q, 2, 0);
  CHECK_THROWS(parity(q, q->zero()));
}

TEST_CASE("p(n): splitting along str reassembles the element") {
  Gen gen(55);
  const auto d = build_root_datum(Family::p, 2, 0);
  for (int t = 0; t < 30; ++t) {
    RingElement x(d);
    for (int k = 0; k < 4; ++k) {
      Rational c(gen.integer(-3, 3), gen.integer(1, 4));
      c.canonicalize();
      x.add_term(d->weight({gen.integer(-2, 2) + c, gen.integer(-2, 2) + c}, {}), gen.coeff(2));
    }
    RingElement sum(d);
    for (const auto& [c, a] : str_split(x)) {
      CHECK(c >= 0);
      CHECK(c < 1);
      CHECK(std::all_of(a.terms().begin(), a.terms().end(), [](const auto& t) { return t.first.is_integral(); }));
      sum += a.map_weights([&](const Weight& w) { return w + d->weight({c, c}, {}); });
    }
    CHECK(sum == x);
  }
}
