#include <doctest.h>

#include <algorithm>
#include <set>

#include "superchar/superchar.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace superchar;

namespace {

struct Counts {
  std::size_t even, odd;
};

Counts count_roots(const RootDatum& d) {
  Counts c{0, 0};
  for (const auto& r : d.roots()) {
    c.even += r.even;
    c.odd += r.odd;
  }
  return c;
}

Integer factorial(unsigned k) {
  Integer f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("root counts and Weyl group orders") {
  for (unsigned m = 1; m <= 3; ++m)
    for (unsigned n = 0; n <= 3; ++n) {
      const auto gl = build_root_datum(Family::gl, m, n);
      const auto c = count_roots(*gl);
      CHECK(c.even == m * (m - 1) + n * (n - 1));
      CHECK(c.odd == 2 * m * n);
      CHECK(gl->weyl_order() == factorial(m) * factorial(n));
      if (n == 0) continue;
      const auto b = build_root_datum(Family::ospB, m, n);
      CHECK(count_roots(*b).even == 2 * m * m + 2 * n * n);
      CHECK(count_roots(*b).odd == 4 * m * n + 2 * n);
      CHECK(b->weyl_order() == (Integer(1) << (m + n)) * factorial(m) * factorial(n));
      const auto dd = build_root_datum(Family::ospD, m, n);
      CHECK(count_roots(*dd).even == 2 * m * (m - 1) + 2 * n * n);
      CHECK(count_roots(*dd).odd == 4 * m * n);
      CHECK(dd->weyl_order() == (Integer(1) << (m + n - 1)) * factorial(m) * factorial(n));
    }
  for (unsigned n = 1; n <= 4; ++n) {
    const auto q = build_root_datum(Family::q, n, 0);
    CHECK(q->roots().size() == n * (n - 1));
    CHECK(std::all_of(q->roots().begin(), q->roots().end(), [](const Root& r) { return r.even && r.odd && r.isotropic; }));
    CHECK(q->weyl_order() == factorial(n));
    const auto p = build_root_datum(Family::p, n, 0);
    CHECK(count_roots(*p).even == n * (n - 1));
    CHECK(count_roots(*p).odd == n * n);
  }
}

TEST_CASE("names and parameter validation") {
  CHECK(build_root_datum(Family::gl, 2, 1)->name() == "gl(2|1)");
  CHECK(build_root_datum(Family::ospB, 1, 1)->name() == "osp(3|2)");
  CHECK(build_root_datum(Family::ospD, 2, 1)->name() == "osp(4|2)");
  CHECK(build_root_datum(Family::q, 2, 0)->name() == "q(2)");
  CHECK(parse_family("ospB") == Family::ospB);
  CHECK_THROWS_AS(parse_family("e8"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_datum(Family::ospD, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_root_datum(Family::q, 0, 0), std::invalid_argument);
}

TEST_CASE("sl weights are normalized to supertrace zero") {
  const auto d = build_root_datum(Family::sl, 2, 1);
  CHECK(d->normalize(d->weight({1, 1}, {-1})) == d->normalize(d->zero()));
  CHECK(d->normalize(d->eps(0)) != d->normalize(d->eps(1)));
}

TEST_CASE("h_β pairing matches explicit odd root vectors") {
  superchar::testing::Gen gen(21);
  std::vector<DatumPtr> data{build_root_datum(Family::gl, 1, 1), build_root_datum(Family::gl, 2, 1),
                             build_root_datum(Family::gl, 2, 2), build_root_datum(Family::q, 2, 0),
                             build_root_datum(Family::q, 3, 0), build_root_datum(Family::p, 2, 0),
                             build_root_datum(Family::p, 3, 0)};
  for (const auto& d : data) {
    CAPTURE(d->name());
    for (const auto& beta : d->isotropic_roots()) {
      if (d->family() == Family::p && sgn(*std::min_element(beta.coords().begin(), beta.coords().end())) < 0)
        continue;
      // [e_β, e_−β] is symmetric in the two odd vectors, so h_β is only fixed
      // up to a sign per root; one sign must serve every ν.
      int sign = 0;
      for (int t = 0; t < 20; ++t) {
        const Weight nu = gen.integral_weight(*d, 4);
        const Rational lib = d->pair_hbeta(nu, beta), mat = superchar::testing::matrix_pairing(*d, nu, beta);
        if (sign == 0 && sgn(mat) != 0) sign = sgn(lib) * sgn(mat);
        CHECK(lib == sign * mat);
      }
      CHECK(sign != 0);
    }
  }
}

TEST_CASE("h_β vanishes exactly where the form does (osp)") {
  superchar::testing::Gen gen(22);
  for (auto d : {build_root_datum(Family::ospB, 1, 1), build_root_datum(Family::ospD, 2, 1)})
    for (const auto& beta : d->isotropic_roots())
      for (int t = 0; t < 20; ++t) {
        const Weight nu = gen.integral_weight(*d, 3);
        CHECK((sgn(d->pair_hbeta(nu, beta)) == 0) == (sgn(d->form(nu, beta)) == 0));
      }
}

TEST_CASE("Weyl orbits agree with closure under simple reflections") {
  superchar::testing::Gen gen(23);
  for (auto d : {build_root_datum(Family::gl, 3, 2), build_root_datum(Family::ospB, 1, 2),
                 build_root_datum(Family::ospD, 2, 1), build_root_datum(Family::q, 3, 0)}) {
    for (int t = 0; t < 10; ++t) {
      const Weight w = gen.integral_weight(*d, 2);
      const auto orbit = d->weyl_orbit(w);
      CHECK(std::set<Weight>(orbit.begin(), orbit.end()) == superchar::testing::orbit_by_closure(*d, w));
    }
  }
}

TEST_CASE("the longest element sends positive even roots to negative ones") {
  for (auto d : {build_root_datum(Family::gl, 3, 2), build_root_datum(Family::ospB, 2, 1),
                 build_root_datum(Family::ospD, 3, 1), build_root_datum(Family::ospD, 2, 2),
                 build_root_datum(Family::q, 4, 0), build_root_datum(Family::p, 3, 0)}) {
    CAPTURE(d->name());
    std::set<Weight> neg;
    for (const auto& a : d->positive_even_roots()) neg.insert(-a);
    std::set<Weight> image;
    for (const auto& a : d->positive_even_roots()) image.insert(d->apply_longest(a));
    CHECK(image == neg);
    const auto gl = build_root_datum(Family::gl, 3, 2);
    CHECK(gl->apply_longest(gl->weight({1, 2, 3}, {4, 5})) == gl->weight({3, 2, 1}, {5, 4}));
  }
}

TEST_CASE("π is the simple system of the even part") {
  const auto d = build_root_datum(Family::ospB, 2, 1);
  // B2 × C1: ε1−ε2, ε2, 2δ1.
  std::set<Weight> expected{d->eps(0) - d->eps(1), d->eps(1), Rational(2) * d->delta(0)};
  CHECK(std::set<Weight>(d->pi().begin(), d->pi().end()) == expected);
  for (const auto& a : d->pi()) CHECK(d->in_pi(a));
  CHECK(d->coroot(d->eps(1), d->eps(1)) == 2);
  CHECK(d->simple_reflection(d->eps(1), d->eps(1)) == -d->eps(1));
}
