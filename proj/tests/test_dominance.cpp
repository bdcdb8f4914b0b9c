#include <doctest.h>

#include <set>

#include "superchar/superchar.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace superchar;

TEST_CASE("gl(2|1), mixed base") {
  const auto d = build_root_datum(Family::gl, 2, 1);
  const Base b = default_base(d, BaseKind::mixed);
  CHECK(is_dominant_pi(*d, d->eps(0)));
  CHECK_FALSE(is_dominant_pi(*d, d->eps(1)));
  CHECK(is_dominant_integrable(b, d->eps(0)));
  CHECK_FALSE(is_dominant_integrable(b, d->delta(0)));
  const auto y = enumerate_Y(b, d->eps(0));
  CHECK(std::set<Weight>(y.begin(), y.end()) == std::set<Weight>{d->delta(0), d->weight({1, 1}, {-1})});
}

TEST_CASE("distinguished gl bases: finite dimensional iff π-dominant") {
  superchar::testing::Gen gen(41);
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 2}}) {
    const auto d = build_root_datum(Family::gl, m, n);
    const IntegrabilityTest test(default_base(d, BaseKind::distinguished));
    for (int t = 0; t < 200; ++t) {
      const Weight l = gen.integral_weight(*d, 3);
      CHECK(test(l) == is_dominant_pi(*d, l));
    }
  }
}

TEST_CASE("odd reflections carry highest weights back and forth") {
  superchar::testing::Gen gen(42);
  for (auto d : {build_root_datum(Family::gl, 2, 2), build_root_datum(Family::ospB, 1, 1)}) {
    const BaseGraph g(default_base(d, BaseKind::mixed));
    for (int t = 0; t < 30; ++t) {
      const Weight l = gen.integral_weight(*d, 3);
      for (std::size_t i = 0; i < g.bases().size(); ++i) {
        const auto path = g.path(0, i);
        const Weight there = track_highest_weight(g.bases()[0], l, path);
        std::vector<Weight> back;
        for (auto it = path.rbegin(); it != path.rend(); ++it) back.push_back(-*it);
        CHECK(track_highest_weight(g.bases()[i], there, back) == l);
      }
    }
  }
}

TEST_CASE("the verdict does not depend on the base the weight is written in") {
  const auto d = build_root_datum(Family::gl, 2, 1);
  const BaseGraph g(default_base(d, BaseKind::mixed));
  std::vector<IntegrabilityTest> tests;
  for (const auto& b : g.bases()) tests.emplace_back(b);
  superchar::testing::Gen gen(43);
  for (int t = 0; t < 100; ++t) {
    const Weight l = gen.integral_weight(*d, 3);
    for (std::size_t i = 0; i < g.bases().size(); ++i)
      CHECK(tests[i](track_highest_weight(g.bases()[0], l, g.path(0, i))) == tests[0](l));
  }
}

TEST_CASE("closed formula agrees where its hypothesis holds") {
  superchar::testing::Gen gen(44);
  std::size_t covered = 0;
  for (auto d : {build_root_datum(Family::gl, 2, 1), build_root_datum(Family::gl, 3, 1), build_root_datum(Family::gl, 1, 2),
                 build_root_datum(Family::ospB, 1, 1), build_root_datum(Family::ospD, 2, 1)}) {
    const Base b = default_base(d, BaseKind::mixed);
    if (!satisfies_coro_hypothesis(b)) continue;
    ++covered;
    const IntegrabilityTest test(b);
    for (int t = 0; t < 200; ++t) {
      const Weight l = gen.integral_weight(*d, 3);
      CHECK(test(l) == is_dominant_integrable_closed(b, l));
    }
  }
  CHECK(covered >= 3);
}

TEST_CASE("closed formula refuses bases outside its hypothesis") {
  const auto d = build_root_datum(Family::gl, 2, 2);
  const Base b = default_base(d, BaseKind::mixed);
  CHECK_THROWS_AS(is_dominant_integrable_closed(b, d->zero()), std::domain_error);
  // The unchecked formula is wrong here: the distinguished highest weight of
  // this module is (2,3|−1,−1), which is not dominant.
  const Weight l = d->weight({2, 1}, {0, 0});
  CHECK(closed_formula(b, l));
  CHECK_FALSE(is_dominant_integrable(b, l));
}

TEST_CASE("q(n): fixed weights need ⟨λ, h_α⟩ = 0") {
  const auto d = build_root_datum(Family::q, 2, 0);
  const Base b = default_base(d, BaseKind::mixed);
  CHECK_FALSE(is_dominant_integrable(b, d->weight({1, 1}, {})));
  CHECK(is_dominant_integrable(b, d->weight({2, 1}, {})));
  CHECK(is_dominant_integrable(b, d->weight({1, -1}, {})));
  CHECK(is_dominant_integrable(b, d->zero()));
  CHECK_FALSE(is_dominant_integrable(b, d->weight({0, 1}, {})));
  CHECK_THROWS_AS(is_dominant_integrable(default_base(build_root_datum(Family::p, 2, 0), BaseKind::mixed),
                                         build_root_datum(Family::p, 2, 0)->zero()),
                  std::domain_error);
}

TEST_CASE("Y_λ agrees with a breadth-first search") {
  superchar::testing::Gen gen(45);
  for (auto d : {build_root_datum(Family::gl, 2, 1), build_root_datum(Family::gl, 3, 1), build_root_datum(Family::q, 2, 0),
                 build_root_datum(Family::q, 3, 0), build_root_datum(Family::ospB, 1, 1)}) {
    const Base b = default_base(d, BaseKind::mixed);
    if (!check_pr1(b)) continue;
    for (int t = 0; t < 25; ++t) {
      const Weight l = gen.integral_weight(*d, 3);
      const auto y = enumerate_Y(b, l);
      CHECK(std::set<Weight>(y.begin(), y.end()) == superchar::testing::y_by_search(b, l));
    }
  }
  CHECK_THROWS_AS(enumerate_Y(base_from_word(build_root_datum(Family::gl, 2, 1), "εεδ"),
                              build_root_datum(Family::gl, 2, 1)->eps(0)),
                  std::domain_error);
}

TEST_CASE("highest weight tracking is path independent") {
  for (auto [d, bound] : std::vector<std::pair<DatumPtr, int>>{{build_root_datum(Family::gl, 2, 1), 3},
                                                               {build_root_datum(Family::gl, 2, 2), 3}}) {
    const BaseGraph g(default_base(d, BaseKind::mixed));
    const std::size_t n = g.bases().size();
    superchar::testing::Gen gen(46);
    for (int t = 0; t < 150; ++t) {
      const Weight l = gen.integral_weight(*d, bound);
      for (std::size_t i = 0; i < n; ++i) {
        const Weight direct = track_highest_weight(g.bases()[0], l, g.path(0, i));
        for (std::size_t k = 0; k < n; ++k) {
          auto detour = g.path(0, k);
          const auto rest = g.path(k, i);
          detour.insert(detour.end(), rest.begin(), rest.end());
          CHECK(track_highest_weight(g.bases()[0], l, detour) == direct);
        }
      }
    }
  }
}

TEST_CASE("Y is monotone") {
  superchar::testing::Gen gen(47);
  for (auto d : {build_root_datum(Family::gl, 2, 1), build_root_datum(Family::q, 3, 0)}) {
    const Base b = default_base(d, BaseKind::mixed);
    for (int t = 0; t < 20; ++t) {
      const Weight l = gen.integral_weight(*d, 3);
      const auto y = enumerate_Y(b, l);
      const std::set<Weight> ys(y.begin(), y.end());
      for (const auto& mu : y)
        for (const auto& nu : enumerate_Y(b, mu)) CHECK(ys.count(nu) == 1);
    }
  }
}
