#pragma once

// Reference computations that share no code with the library: explicit
// supermatrices, explicit Clifford modules, and breadth-first searches.

#include <complex>
#include <deque>
#include <set>
#include <vector>

#include "superchar/superchar.hpp"

namespace superchar::testing {

// ---------------------------------------------------------------- matrices

using Mat = std::vector<std::vector<Rational>>;

inline Mat zero_mat(std::size_t n) { return Mat(n, std::vector<Rational>(n, Rational(0))); }

inline Mat unit(std::size_t n, std::size_t i, std::size_t j) {
  Mat m = zero_mat(n);
  m[i][j] = 1;
  return m;
}

inline Mat mul(const Mat& a, const Mat& b) {
  Mat c = zero_mat(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < a.size(); ++k)
      if (sgn(a[i][k]) != 0)
        for (std::size_t j = 0; j < a.size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Mat add(Mat a, const Mat& b, int s = 1) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) a[i][j] += s * b[i][j];
  return a;
}

inline Mat anticommutator(const Mat& x, const Mat& y) { return add(mul(x, y), mul(y, x)); }

// ⟨ν, [e_β, e_−β]⟩ computed from explicit odd root vectors in gl(m|n), q(n)
// and p(n). The Cartan element is read off the diagonal; for q and p the
// weight only sees the upper-left block.
inline Rational matrix_pairing(const RootDatum& d, const Weight& nu, const Weight& beta) {
  const std::size_t m = d.eps_count(), n = d.delta_count();
  auto index_of = [&](const Weight& w, int sign) -> std::size_t {
    for (std::size_t k = 0; k < w.size(); ++k)
      if (w[k] == sign) return k;
    return w.size();
  };
  Mat e, f;
  std::size_t size = 0;
  switch (d.family()) {
    case Family::gl: {
      size = m + n;
      const std::size_t i = index_of(beta, 1), j = index_of(beta, -1);
      e = unit(size, i, j);
      f = unit(size, j, i);
      break;
    }
    case Family::q: {
      size = 2 * m;
      const std::size_t i = index_of(beta, 1), j = index_of(beta, -1);
      e = add(unit(size, i, m + j), unit(size, m + i, j));
      f = add(unit(size, j, m + i), unit(size, m + j, i));
      break;
    }
    case Family::p: {
      size = 2 * m;
      std::size_t i = m, j = m;
      for (std::size_t k = 0; k < m; ++k)
        if (sgn(beta[k]) != 0) (i == m ? i : j) = k;
      if (j == m || sgn(beta[i]) < 0) throw std::invalid_argument("oracle takes p roots εi+εj with i < j");
      // Upper right block symmetric, lower left block skew.
      e = add(unit(size, i, m + j), unit(size, j, m + i));
      f = add(unit(size, m + j, i), unit(size, m + i, j), -1);
      break;
    }
    default:
      throw std::invalid_argument("no matrix oracle for this family");
  }
  const Mat h = anticommutator(e, f);
  Rational out = 0;
  for (std::size_t k = 0; k < nu.size(); ++k) out += nu[k] * h[k][k];
  return out;
}

// ---------------------------------------------------------------- Clifford

struct CliffordModule {
  std::size_t even = 0, odd = 0;
  bool irreducible = false;
  bool parity_invariant = false;  // isomorphic to its parity shift
};

using CMat = std::vector<std::vector<std::complex<double>>>;

inline CMat ckron(const CMat& a, const CMat& b) {
  CMat c(a.size() * b.size(), std::vector<std::complex<double>>(a.size() * b.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k)
        for (std::size_t l = 0; l < b.size(); ++l) c[i * b.size() + k][j * b.size() + l] = a[i][j] * b[k][l];
  return c;
}

inline std::size_t complex_rank(std::vector<std::vector<std::complex<double>>> a) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t best = rank;
    for (std::size_t r = rank; r < a.size(); ++r)
      if (std::abs(a[r][c]) > std::abs(a[best][c])) best = r;
    if (std::abs(a[best][c]) < 1e-9) continue;
    std::swap(a[rank], a[best]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank) continue;
      const auto f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

// The graded Clifford module on z anticommuting odd generators with square 1,
// built by the Jordan–Wigner construction in dimension 2^⌈z/2⌉. Irreducibility
// and parity invariance are decided by computing graded commutants.
inline CliffordModule clifford_module(std::size_t z) {
  using C = std::complex<double>;
  if (z == 0) return {1, 0, true, false};
  const std::size_t qubits = (z + 1) / 2;
  const CMat I{{1, 0}, {0, 1}}, X{{0, 1}, {1, 0}}, Y{{0, C(0, -1)}, {C(0, 1), 0}}, Z{{1, 0}, {0, -1}};
  auto chain = [&](std::size_t pos, const CMat& mid) {
    CMat out{{1}};
    for (std::size_t q = 0; q < qubits; ++q) out = ckron(out, q < pos ? Z : q == pos ? mid : I);
    return out;
  };
  std::vector<CMat> gens;
  for (std::size_t k = 0; k < z; ++k) gens.push_back(chain(k / 2, k % 2 == 0 ? X : Y));
  CMat grading{{1}};
  for (std::size_t q = 0; q < qubits; ++q) grading = ckron(grading, Z);
  const std::size_t dim = grading.size();

  CliffordModule out;
  for (std::size_t i = 0; i < dim; ++i) (grading[i][i].real() > 0 ? out.even : out.odd)++;

  // T with T Γ = s Γ T and T γ = s γ T for every generator: s = +1 for even
  // module endomorphisms, s = −1 for odd isomorphisms M → ΠM.
  auto commutant_dim = [&](int s) {
    std::vector<std::vector<C>> rows;
    auto impose = [&](const CMat& g, int sign) {
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
          std::vector<C> row(dim * dim, 0);
          for (std::size_t k = 0; k < dim; ++k) {
            row[i * dim + k] += g[k][j];                        // (T g)_ij
            row[k * dim + j] -= static_cast<double>(sign) * g[i][k];  // (g T)_ij
          }
          rows.push_back(std::move(row));
        }
    };
    impose(grading, s);
    for (const auto& g : gens) impose(g, s);
    return dim * dim - complex_rank(rows);
  };
  out.irreducible = commutant_dim(+1) == 1;
  out.parity_invariant = commutant_dim(-1) > 0;
  return out;
}

// ---------------------------------------------------------------- searches

// Sums of elements of `steps` with height (value of `height`) at most `cap`,
// starting from zero. `height` must be positive on every step.
template <class H>
std::set<Weight> positive_sums(const Weight& zero, const std::vector<Weight>& steps, H height, const Rational& cap) {
  std::set<Weight> seen{zero};
  std::deque<Weight> queue{zero};
  while (!queue.empty()) {
    const Weight x = queue.front();
    queue.pop_front();
    for (const auto& s : steps) {
      Weight y = x + s;
      if (height(y) <= cap && seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  return seen;
}

// A linear functional equal to one on every simple root of the base.
inline std::vector<Rational> unit_height(const Base& base) {
  const std::size_t dim = base.datum()->zero().size();
  linalg::Matrix a;
  for (const auto& s : base.sigma()) a.emplace_back(s.coords().begin(), s.coords().end());
  auto sol = linalg::solve(a, linalg::Vector(base.sigma().size(), Rational(1)), dim);
  if (!sol) throw std::logic_error("simple roots are dependent");
  return sol->x;
}

inline Rational apply(const std::vector<Rational>& h, const Weight& w) {
  Rational s = 0;
  for (std::size_t k = 0; k < w.size(); ++k) s += h[k] * w[k];
  return s;
}

// Y_λ by subtracting simple roots, depth capped by the coordinate box.
inline std::set<Weight> y_by_search(const Base& base, const Weight& lambda) {
  const RootDatum& d = *base.datum();
  Integer cap = 0;
  for (const auto& b : y_box(base, lambda)) cap += b > 0 ? b : Integer(0);
  std::set<Weight> seen{lambda}, out;
  std::deque<std::pair<Weight, Integer>> queue{{lambda, Integer(0)}};
  while (!queue.empty()) {
    auto [w, depth] = queue.front();
    queue.pop_front();
    if (w != lambda && is_dominant_pi(d, w)) out.insert(w);
    if (depth >= cap) continue;
    for (const auto& s : base.sigma()) {
      Weight v = w - s;
      if (seen.insert(v).second) queue.emplace_back(std::move(v), depth + 1);
    }
  }
  return out;
}

// Weyl orbit by closing under simple reflections, written out coordinate-wise.
inline std::set<Weight> orbit_by_closure(const RootDatum& d, const Weight& lambda) {
  std::set<Weight> seen{lambda};
  std::deque<Weight> queue{lambda};
  while (!queue.empty()) {
    const Weight w = queue.front();
    queue.pop_front();
    for (const auto& a : d.pi()) {
      Weight r = d.simple_reflection(a, w);
      if (seen.insert(r).second) queue.push_back(std::move(r));
    }
  }
  return seen;
}

}  // namespace superchar::testing
