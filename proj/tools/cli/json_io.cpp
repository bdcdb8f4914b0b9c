#include "json_io.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <regex>
#include <stdexcept>

namespace superchar::cli {

namespace {

std::size_t to_size(const std::string& s) {
  if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw std::invalid_argument("bad algebra parameter '" + s + "'");
  return static_cast<std::size_t>(std::stoul(s));
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("expected a rational as a string like \"-1/2\", got " + j.dump());
}

std::vector<Rational> rationals(const Json& j, const char* key) {
  std::vector<Rational> out;
  if (!j.contains(key)) return out;
  if (!j.at(key).is_array()) throw std::invalid_argument(std::string("\"") + key + "\" must be an array");
  for (const auto& v : j.at(key)) out.push_back(rational_from_json(v));
  return out;
}

Integer integer_from_json(const Json& j) {
  const Rational r = rational_from_json(j);
  if (!is_integer(r)) throw std::invalid_argument("expected an integer, got " + j.dump());
  return r.get_num();
}

}  // namespace

DatumPtr algebra_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("family")) throw std::invalid_argument("algebra must be an object with \"family\"");
  const Family f = parse_family(j.at("family").get<std::string>());
  const auto get = [&](const char* key) -> std::optional<std::size_t> {
    if (!j.contains(key)) return std::nullopt;
    const auto v = j.at(key).get<long>();
    if (v < 0) throw std::invalid_argument("negative algebra parameter");
    return static_cast<std::size_t>(v);
  };
  auto m = get("m"), n = get("n");
  if (f == Family::q || f == Family::p) {
    // A single rank; {"family":"q","n":2} and {"family":"q","m":2,"n":0} both work.
    if (m && n && *m != 0 && *n != 0) throw std::invalid_argument("q and p take one rank parameter");
    const std::size_t rank = m && *m != 0 ? *m : n.value_or(0);
    return build_root_datum(f, rank, 0);
  }
  if (!m || !n) throw std::invalid_argument("algebra needs \"m\" and \"n\"");
  return build_root_datum(f, *m, *n);
}

DatumPtr parse_algebra(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (!s.empty() && s.front() == '{') return algebra_from_json(Json::parse(s));
  std::smatch mt;
  static const std::regex pair_re(R"((gl|sl|osp)\((\d+)\|(\d+)\))");
  static const std::regex rank_re(R"((q|p)\(?(\d+)\)?)");
  if (std::regex_match(s, mt, pair_re)) {
    const std::string fam = mt[1];
    const std::size_t a = to_size(mt[2]), b = to_size(mt[3]);
    if (fam == "gl") return build_root_datum(Family::gl, a, b);
    if (fam == "sl") return build_root_datum(Family::sl, a, b);
    if (b % 2 != 0) throw std::invalid_argument("osp(M|N) needs N even");
    if (a % 2 == 1) return build_root_datum(Family::ospB, a / 2, b / 2);
    return build_root_datum(Family::ospD, a / 2, b / 2);
  }
  if (std::regex_match(s, mt, rank_re))
    return build_root_datum(mt[1] == "q" ? Family::q : Family::p, to_size(mt[2]), 0);
  throw std::invalid_argument("cannot parse algebra '" + text + "'");
}

Json algebra_to_json(const RootDatum& d) {
  return Json{{"family", to_string(d.family())}, {"m", d.m()}, {"n", d.n()}};
}

Weight weight_from_json(const RootDatum& d, const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("weight must be an object with \"eps\" and \"delta\"");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "eps" && it.key() != "delta") throw std::invalid_argument("unknown weight key '" + it.key() + "'");
  return d.weight(rationals(j, "eps"), rationals(j, "delta"));
}

Json weight_to_json(const Weight& w) {
  Json eps = Json::array(), delta = Json::array();
  for (std::size_t i = 0; i < w.eps_count(); ++i) eps.push_back(to_string(w.eps(i)));
  for (std::size_t j = 0; j < w.delta_count(); ++j) delta.push_back(to_string(w.delta(j)));
  return Json{{"eps", eps}, {"delta", delta}};
}

Json coeff_to_json(const XiCoeff& c) { return Json::array({c.a.get_str(), c.b.get_str()}); }

XiCoeff coeff_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("coefficient must be [a, b] for a + bξ");
  return {integer_from_json(j[0]), integer_from_json(j[1])};
}

Json ring_to_json(const RingElement& x) {
  Json terms = Json::array();
  for (const auto& [w, c] : x.terms()) terms.push_back(Json{{"weight", weight_to_json(w)}, {"coeff", coeff_to_json(c)}});
  return Json{{"algebra", algebra_to_json(*x.datum())}, {"terms", terms}};
}

RingElement ring_from_json(const Json& j) {
  // bshort output wraps the element; accept it as is.
  if (j.is_object() && j.contains("element") && !j.contains("terms")) return ring_from_json(j.at("element"));
  if (!j.is_object() || !j.contains("algebra") || !j.contains("terms"))
    throw std::invalid_argument("ring element needs \"algebra\" and \"terms\"");
  const DatumPtr d = j.at("algebra").is_string() ? parse_algebra(j.at("algebra").get<std::string>())
                                                 : algebra_from_json(j.at("algebra"));
  RingElement x(d);
  for (const auto& t : j.at("terms")) x.add_term(weight_from_json(*d, t.at("weight")), coeff_from_json(t.at("coeff")));
  return x;
}

Json laurent_to_json(const LaurentElement& x) {
  Json terms = Json::array();
  for (const auto& [w, c] : x.terms()) terms.push_back(Json{{"weight", weight_to_json(w)}, {"coeff", c.get_str()}});
  return Json{{"algebra", algebra_to_json(*x.datum())}, {"terms", terms}};
}

Base parse_base(const DatumPtr& d, const std::string& text) {
  if (text.empty() || text == "mixed") return default_base(d, BaseKind::mixed);
  if (text == "distinguished") return default_base(d, BaseKind::distinguished);
  if (std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
    const auto all = enumerate_bases(default_base(d, BaseKind::mixed));
    const std::size_t k = std::stoul(text);
    if (k >= all.size()) throw std::invalid_argument("base index out of range (" + std::to_string(all.size()) + " bases)");
    return all[k];
  }
  return base_from_word(d, text);
}

Json base_to_json(const Base& b) {
  const RootDatum& d = *b.datum();
  Json sigma = Json::array();
  for (const auto& s : b.sigma()) sigma.push_back(weight_to_json(s));
  Json out;
  if (auto w = word_of(b)) out["word"] = *w;
  out["sigma"] = sigma;
  out["positive_roots"] = b.positive_roots().size();
  if (d.is_kac_moody()) {
    out["diagram"] = dynkin_diagram(b).to_ascii();
    const auto pr2 = satisfies_pr2(b);
    out["flags"] = Json{{"pr1", check_pr1(b)},
                        {"pr2", pr2.holds},
                        {"coro", satisfies_coro_hypothesis(b)},
                        {"mixed", is_mixed(b)}};
    if (pr2.witness) out["pr2_witness"] = weight_to_json(*pr2.witness);
  } else {
    out["flags"] = Json{{"pr1", check_pr1(b)}};
  }
  return out;
}

}  // namespace superchar::cli
