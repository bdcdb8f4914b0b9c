#include "superchar/base_forest.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

#include "superchar/fourier_motzkin.hpp"

namespace superchar {

namespace {

bool all_natural(const linalg::Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return is_natural(x); });
}

bool all_nonpositive_integers(const linalg::Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return is_integer(x) && sgn(x) <= 0; });
}

enum class Letter { eps, delta };

std::vector<Letter> parse_word(std::string_view word) {
  std::vector<Letter> out;
  for (std::size_t k = 0; k < word.size();) {
    const unsigned char c = static_cast<unsigned char>(word[k]);
    if (c == 'e' || c == 'E') {
      out.push_back(Letter::eps);
      ++k;
    } else if (c == 'd' || c == 'D') {
      out.push_back(Letter::delta);
      ++k;
    } else if (c == 0xCE && k + 1 < word.size() && static_cast<unsigned char>(word[k + 1]) == 0xB5) {
      out.push_back(Letter::eps);
      k += 2;
    } else if (c == 0xCE && k + 1 < word.size() && static_cast<unsigned char>(word[k + 1]) == 0xB4) {
      out.push_back(Letter::delta);
      k += 2;
    } else if (c == ' ') {
      ++k;
    } else {
      throw std::invalid_argument("word '" + std::string(word) + "' has a letter other than ε/δ (e/d)");
    }
  }
  return out;
}

std::string render_word(const std::vector<Letter>& letters) {
  std::string s;
  for (auto l : letters) s += l == Letter::eps ? "ε" : "δ";
  return s;
}

std::vector<Letter> repeat(std::initializer_list<Letter> unit, std::size_t times) {
  std::vector<Letter> out;
  for (std::size_t t = 0; t < times; ++t) out.insert(out.end(), unit);
  return out;
}

std::vector<Letter> concat(std::vector<Letter> a, const std::vector<Letter>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

constexpr Letter E = Letter::eps;
constexpr Letter D = Letter::delta;

// Letter weights: the k-th ε letter is ε_k, the k-th δ letter is δ_k.
std::vector<Weight> letter_weights(const RootDatum& d, const std::vector<Letter>& letters) {
  std::size_t ne = 0, nd = 0;
  for (auto l : letters) (l == E ? ne : nd)++;
  if (ne != d.eps_count() || nd != d.delta_count())
    throw std::invalid_argument("word " + render_word(letters) + " needs " + std::to_string(d.eps_count()) +
                                " ε and " + std::to_string(d.delta_count()) + " δ letters for " + d.name());
  std::vector<Weight> out;
  ne = nd = 0;
  for (auto l : letters) out.push_back(l == E ? d.eps(ne++) : d.delta(nd++));
  return out;
}

Base word_base(const DatumPtr& datum, const std::vector<Letter>& letters) {
  const RootDatum& d = *datum;
  const auto w = letter_weights(d, letters);
  std::vector<Weight> sigma;
  for (std::size_t k = 0; k + 1 < w.size(); ++k) sigma.push_back(w[k] - w[k + 1]);
  switch (d.family()) {
    case Family::gl:
    case Family::sl: break;
    case Family::ospB:
      sigma.push_back(w.back());
      break;
    case Family::ospD:
      if (letters.back() == D) {
        sigma.push_back(2 * w.back());
      } else if (w.size() >= 2) {
        sigma.push_back(w[w.size() - 2] + w.back());
      }
      break;
    default: throw std::invalid_argument("words describe gl, sl and osp bases only");
  }
  return make_base(datum, std::move(sigma));
}

std::vector<Letter> mixed_word(const RootDatum& d, bool gl_nn_alternating) {
  const std::size_t m = d.m(), n = d.n();
  switch (d.family()) {
    case Family::gl:
    case Family::sl:
      if (m > n) return concat(repeat({E, D}, n), repeat({E}, m - n));
      if (m < n) return concat(repeat({D, E}, m), repeat({D}, n - m));
      // gl(n|n): the mixed diagram comes from (εδ)ⁿ, but the working base is
      // (εδ)ⁿ⁻¹δε, whose short basis is unique.
      if (gl_nn_alternating) return repeat({E, D}, n);
      return concat(repeat({E, D}, n - 1), {D, E});
    case Family::ospB:
      if (m >= n) return concat(repeat({E}, m - n), repeat({E, D}, n));
      return concat(concat(repeat({D}, n - m - 1), repeat({D, E}, m)), {D});
    case Family::ospD:
      if (m >= n) return concat(repeat({E}, m - n), repeat({D, E}, n));
      return concat(repeat({D}, n - m), repeat({D, E}, m));
    default: break;
  }
  throw std::logic_error("no mixed word for " + d.name());
}

std::vector<Letter> distinguished_word(const RootDatum& d) {
  const std::size_t m = d.m(), n = d.n();
  switch (d.family()) {
    case Family::gl:
    case Family::sl: return concat(repeat({E}, m), repeat({D}, n));
    case Family::ospB: return concat(repeat({D}, n), repeat({E}, m));
    case Family::ospD:
      if (m == 1) return concat({E}, repeat({D}, n));
      return concat(repeat({D}, n), repeat({E}, m));
    default: break;
  }
  throw std::logic_error("no distinguished word for " + d.name());
}

}  // namespace

std::vector<Weight> Base::iso_simple() const {
  std::vector<Weight> out;
  for (const auto& s : sigma_)
    if (datum_->is_isotropic(s)) out.push_back(s);
  return out;
}

bool Base::contains(const Weight& w) const { return std::find(sigma_.begin(), sigma_.end(), w) != sigma_.end(); }

bool Base::is_positive(const Weight& root) const { return std::binary_search(positive_.begin(), positive_.end(), root); }

Base make_base(DatumPtr datum, std::vector<Weight> sigma) {
  if (!datum) throw std::invalid_argument("make_base: null datum");
  const RootDatum& d = *datum;
  for (const auto& s : sigma)
    if (!d.is_root(s)) throw std::invalid_argument(s.to_string() + " is not a root of " + d.name());
  Base b;
  try {
    b.projector_ = linalg::Projector(sigma);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("simple roots are linearly dependent");
  }
  for (const auto& r : d.roots()) {
    const auto c = b.projector_.coordinates(r.weight);
    if (!c) throw std::invalid_argument("root " + r.weight.to_string() + " is outside the span of the simple roots");
    if (all_natural(*c)) {
      b.positive_.push_back(r.weight);
    } else if (!all_nonpositive_integers(*c)) {
      throw std::invalid_argument("root " + r.weight.to_string() + " is not in ±ℕΣ");
    }
  }
  for (const auto& a : d.positive_even_roots())
    if (!std::binary_search(b.positive_.begin(), b.positive_.end(), a))
      throw std::invalid_argument("base is not compatible with the even positive roots");
  b.datum_ = std::move(datum);
  b.sigma_ = std::move(sigma);
  return b;
}

Base default_base(DatumPtr datum, BaseKind kind) {
  const RootDatum& d = *datum;
  switch (d.family()) {
    case Family::q: return make_base(datum, d.pi());
    case Family::p: {
      auto sigma = d.pi();
      sigma.push_back(2 * d.eps(d.m() - 1));
      return make_base(datum, std::move(sigma));
    }
    default: break;
  }
  const auto letters = kind == BaseKind::mixed ? mixed_word(d, false) : distinguished_word(d);
  return word_base(datum, letters);
}

Base base_from_word(DatumPtr datum, std::string_view word) { return word_base(datum, parse_word(word)); }

std::optional<std::string> word_of(const Base& base) {
  const RootDatum& d = *base.datum();
  if (d.family() != Family::gl && d.family() != Family::sl) return std::nullopt;
  struct Item {
    Weight w;
    Letter l;
  };
  std::vector<Item> items;
  for (std::size_t i = 0; i < d.eps_count(); ++i) items.push_back({d.eps(i), E});
  for (std::size_t j = 0; j < d.delta_count(); ++j) items.push_back({d.delta(j), D});
  // a precedes b iff a − b is positive; Δ⁺ is a total order on the letters.
  std::sort(items.begin(), items.end(),
            [&](const Item& a, const Item& b) { return base.is_positive(a.w - b.w); });
  std::vector<Letter> letters;
  for (const auto& it : items) letters.push_back(it.l);
  return render_word(letters);
}

Base odd_reflect(const Base& base, const Weight& beta) {
  const RootDatum& d = *base.datum();
  if (!d.is_kac_moody()) throw std::invalid_argument("odd reflections are defined for Kac–Moody families only");
  if (!base.contains(beta) || !d.is_isotropic(beta))
    throw std::invalid_argument(beta.to_string() + " is not an isotropic simple root");
  std::vector<Weight> sigma;
  for (const auto& a : base.sigma()) {
    if (a == beta) sigma.push_back(-beta);
    else if (sgn(d.form(a, beta)) != 0) sigma.push_back(a + beta);
    else sigma.push_back(a);
  }
  Base out = make_base(base.datum(), std::move(sigma));

  std::vector<Weight> expected;
  for (const auto& r : base.positive_roots())
    if (r != beta) expected.push_back(r);
  expected.push_back(-beta);
  std::sort(expected.begin(), expected.end());
  if (expected != out.positive_roots()) throw std::logic_error("odd reflection changed more than ±β");
  return out;
}

BaseGraph::BaseGraph(const Base& start) {
  std::map<std::vector<Weight>, std::size_t> index;
  bases_.push_back(start);
  edges_.emplace_back();
  index.emplace(start.positive_roots(), 0);
  if (!start.datum()->is_kac_moody()) return;
  for (std::size_t k = 0; k < bases_.size(); ++k) {
    for (const auto& beta : bases_[k].iso_simple()) {
      Base next = odd_reflect(bases_[k], beta);
      auto [it, fresh] = index.emplace(next.positive_roots(), bases_.size());
      if (fresh) {
        bases_.push_back(std::move(next));
        edges_.emplace_back();
      }
      edges_[k].push_back({it->second, beta});
    }
  }
}

std::size_t BaseGraph::index_of(const Base& base) const {
  for (std::size_t k = 0; k < bases_.size(); ++k)
    if (bases_[k] == base) return k;
  throw std::invalid_argument("base is not in this odd reflection graph");
}

std::vector<Weight> BaseGraph::path(std::size_t from, std::size_t to) const {
  if (from >= bases_.size() || to >= bases_.size()) throw std::out_of_range("no such base");
  std::vector<std::optional<std::pair<std::size_t, Weight>>> parent(bases_.size());
  std::vector<bool> seen(bases_.size(), false);
  std::deque<std::size_t> queue{from};
  seen[from] = true;
  while (!queue.empty() && !seen[to]) {
    const std::size_t k = queue.front();
    queue.pop_front();
    for (const auto& e : edges_[k]) {
      if (seen[e.to]) continue;
      seen[e.to] = true;
      parent[e.to] = std::make_pair(k, e.beta);
      queue.push_back(e.to);
    }
  }
  if (!seen[to]) throw std::logic_error("odd reflection graph is disconnected");
  std::vector<Weight> steps;
  for (std::size_t k = to; k != from; k = parent[k]->first) steps.push_back(parent[k]->second);
  std::reverse(steps.begin(), steps.end());
  return steps;
}

std::vector<std::size_t> BaseGraph::containing(const Weight& alpha) const {
  const Weight half = Rational(1, 2) * alpha;
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < bases_.size(); ++k)
    if (bases_[k].contains(alpha) || bases_[k].contains(half)) out.push_back(k);
  return out;
}

std::vector<Base> enumerate_bases(const Base& start) {
  auto all = BaseGraph(start).bases();
  std::sort(all.begin(), all.end());
  return all;
}

std::size_t Diagram::count(NodeKind kind) const {
  return static_cast<std::size_t>(std::count(nodes.begin(), nodes.end(), kind));
}

std::size_t Diagram::odd_edges() const {
  return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [&](const auto& e) {
    return nodes[e.first] != NodeKind::circle && nodes[e.second] != NodeKind::circle;
  }));
}

std::string Diagram::to_ascii() const {
  auto glyph = [](NodeKind k) {
    switch (k) {
      case NodeKind::circle: return "o";
      case NodeKind::otimes: return "(x)";
      case NodeKind::bullet: return "*";
    }
    return "?";
  };
  auto linked = [&](std::size_t i, std::size_t j) {
    return std::find(edges.begin(), edges.end(), std::make_pair(i, j)) != edges.end();
  };
  std::string s;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (k > 0) s += linked(k - 1, k) ? "-" : " ";
    s += glyph(nodes[k]);
  }
  std::string extra;
  for (const auto& [i, j] : edges) {
    if (j == i + 1) continue;
    extra += (extra.empty() ? "" : ",") + std::to_string(i + 1) + "~" + std::to_string(j + 1);
  }
  if (!extra.empty()) s += " [" + extra + "]";
  return s;
}

Diagram dynkin_diagram(const Base& base) {
  const RootDatum& d = *base.datum();
  if (!d.is_kac_moody()) throw std::invalid_argument("diagrams are drawn for Kac–Moody families only");
  Diagram g;
  const auto& s = base.sigma();
  for (const auto& a : s) {
    const Root* r = d.find_root(a);
    g.nodes.push_back(r->even ? NodeKind::circle : r->isotropic ? NodeKind::otimes : NodeKind::bullet);
  }
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (sgn(d.form(s[i], s[j])) != 0) g.edges.emplace_back(i, j);
  return g;
}

bool isomorphic(const Diagram& a, const Diagram& b) {
  const std::size_t n = a.nodes.size();
  if (n != b.nodes.size() || a.edges.size() != b.edges.size()) return false;
  for (auto k : {NodeKind::circle, NodeKind::otimes, NodeKind::bullet})
    if (a.count(k) != b.count(k)) return false;
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& [i, j] : b.edges) adj[i][j] = adj[j][i] = true;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t k = 0; ok && k < n; ++k) ok = a.nodes[k] == b.nodes[perm[k]];
    for (std::size_t e = 0; ok && e < a.edges.size(); ++e) ok = adj[perm[a.edges[e].first]][perm[a.edges[e].second]];
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Pr2Report satisfies_pr2(const Base& base) {
  const RootDatum& d = *base.datum();
  if (!d.is_kac_moody()) throw std::invalid_argument("(Pr2) is checked for Kac–Moody families only");
  Pr2Report report;
  for (const auto& alpha : d.pi()) {
    const auto c = base.coordinates(alpha);
    Rational height = 0;
    for (const auto& x : *c) height += x;
    if (height > 2) {
      report.holds = false;
      report.witness = alpha;
      break;
    }
  }
  const Diagram g = dynkin_diagram(base);
  const long lhs = static_cast<long>(base.sigma().size()) - static_cast<long>(d.pi().size());
  const long rhs = static_cast<long>(g.count(NodeKind::otimes)) - static_cast<long>(g.odd_edges());
  if ((lhs == rhs) != report.holds) throw std::logic_error("(Pr2) disagrees with the diagram count on " + d.name());
  return report;
}

bool satisfies_coro_hypothesis(const Base& base) {
  const RootDatum& d = *base.datum();
  if (!d.is_kac_moody()) throw std::invalid_argument("the hypothesis concerns Kac–Moody families only");
  const auto iso = base.iso_simple();
  for (const auto& alpha : d.pi()) {
    const Weight half = Rational(1, 2) * alpha;
    if (base.contains(alpha) || base.contains(half)) continue;
    bool found = false;
    for (const auto& beta : iso) {
      const Base r = odd_reflect(base, beta);
      if (r.contains(alpha) || r.contains(half)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool minus_w0_stable(const Base& base) {
  const RootDatum& d = *base.datum();
  for (const auto& r : base.positive_roots())
    if (!base.is_positive(-d.apply_longest(r))) return false;
  return true;
}

bool check_pr1_cone(const Base& base) {
  const RootDatum& d = *base.datum();
  const auto& sigma = base.sigma();
  const std::size_t k = sigma.size();
  if (k == 0) return true;
  InequalitySystem sys(k);
  sys.add_nonnegativity();
  sys.add_eq(std::vector<Rational>(k, Rational(1)), 1);
  for (const auto& alpha : d.pi()) {
    std::vector<Rational> row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = d.coroot(sigma[j], alpha);
    sys.add_le(std::move(row), 0);
  }
  // A feasible point is a nonzero element of −ℝ≥0Δ⁺ in the dominant cone.
  return !sys.feasible();
}

bool check_pr1(const Base& base) {
  const RootDatum& d = *base.datum();
  if ((d.family() == Family::gl || d.family() == Family::sl) && d.m() != d.n()) {
    const auto w = *word_of(base);
    if (!w.empty() && w.substr(0, 2) == w.substr(w.size() - 2)) return true;
  }
  if (minus_w0_stable(base)) return true;
  return check_pr1_cone(base);
}

bool is_mixed(const Base& base) {
  const RootDatum& d = *base.datum();
  if (!d.is_kac_moody()) return false;
  const Base reference = word_base(base.datum(), mixed_word(d, true));
  return isomorphic(dynkin_diagram(base), dynkin_diagram(reference));
}

bool leq(const Base& base, const Weight& nu, const Weight& lambda) {
  const auto c = base.coordinates(lambda - nu);
  return c && all_natural(*c);
}

}  // namespace superchar
