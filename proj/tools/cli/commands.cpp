#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "acceptance.hpp"
#include "json_io.hpp"

namespace superchar::cli {

namespace {

struct Options {
  std::string algebra;
  std::string base = "mixed";
  std::string weight;
  std::string beta;
  std::string omega;
  std::string in;
  std::string out;
  std::string from_word;
  std::string test = "A";
  std::string lattice = "full";
  std::string sign = "-";
  bool all_beta = false;
  bool closed_form = false;
  std::vector<int> criteria;
};

// Raised for bad command-line input; maps to exit status 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

DatumPtr need_algebra(const Options& o) {
  if (o.algebra.empty()) throw UsageError("--algebra is required");
  return parse_algebra(o.algebra);
}

Weight parse_weight_arg(const RootDatum& d, const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  return weight_from_json(d, Json::parse(text));
}

Json read_input(const std::string& path) {
  if (path.empty()) throw UsageError("--in is required");
  if (path == "-") return Json::parse(std::cin);
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open " + path);
  return Json::parse(f);
}

Lattice parse_lattice(const std::string& s) {
  if (s == "full") return Lattice::full();
  if (s == "int" || s == "integral") return Lattice::integral();
  if (s == "half") return Lattice::half();
  throw UsageError("--lattice must be int, half or full");
}

int parse_sign(const std::string& s) {
  if (s == "+" || s == "plus") return 1;
  if (s == "-" || s == "minus") return -1;
  throw UsageError("--sign must be + or -");
}

Json weights_to_json(const std::vector<Weight>& ws) {
  Json a = Json::array();
  for (const auto& w : ws) a.push_back(weight_to_json(w));
  return a;
}

// A weight with ⟨ω, h_β⟩ ≠ 0: the first coordinate vector that works.
Weight default_omega(const RootDatum& d, const Weight& beta) {
  for (std::size_t k = 0; k < d.eps_count() + d.delta_count(); ++k) {
    const Weight w = d.normalize(k < d.eps_count() ? Weight::eps_unit(d.eps_count(), d.delta_count(), k)
                                                   : Weight::delta_unit(d.eps_count(), d.delta_count(), k - d.eps_count()));
    if (sgn(d.pair_hbeta(w, beta)) != 0) return w;
  }
  throw std::invalid_argument("no coordinate weight pairs nontrivially with h_β");
}

int cmd_describe(const Options& o, Json& out) {
  const auto d = need_algebra(o);
  Json roots = Json::array();
  for (const auto& r : d->roots())
    roots.push_back(Json{{"weight", weight_to_json(r.weight)}, {"even", r.even}, {"odd", r.odd}, {"isotropic", r.isotropic}});
  out = Json{{"algebra", algebra_to_json(*d)},
             {"name", d->name()},
             {"kac_moody", d->is_kac_moody()},
             {"h_equals_t", d->h_equals_t()},
             {"roots", roots},
             {"pi", weights_to_json(d->pi())},
             {"isotropic", weights_to_json(d->isotropic_roots())},
             {"weyl_order", d->weyl_order().get_str()}};
  return 0;
}

int cmd_bases(const Options& o, Json& out) {
  const auto d = need_algebra(o);
  const Base start = o.from_word.empty() ? default_base(d, BaseKind::mixed) : base_from_word(d, o.from_word);
  const auto all = enumerate_bases(start);
  Json list = Json::array();
  for (std::size_t k = 0; k < all.size(); ++k) {
    Json b = base_to_json(all[k]);
    b["index"] = k;
    list.push_back(b);
  }
  out = Json{{"algebra", algebra_to_json(*d)}, {"count", all.size()}, {"bases", list}};
  return 0;
}

int cmd_reflect(const Options& o, Json& out) {
  const auto d = need_algebra(o);
  const Base b = parse_base(d, o.base);
  const Weight beta = parse_weight_arg(*d, o.beta, "--beta");
  out = Json{{"from", base_to_json(b)}, {"beta", weight_to_json(beta)}, {"to", base_to_json(odd_reflect(b, beta))}};
  return 0;
}

int cmd_dominant(const Options& o, Json& out) {
  const auto d = need_algebra(o);
  const Base b = parse_base(d, o.base);
  const Weight w = parse_weight_arg(*d, o.weight, "--weight");
  const bool pi = is_dominant_pi(*d, w);
  const bool verdict = o.closed_form ? is_dominant_integrable_closed(b, w) : is_dominant_integrable(b, w);
  out = Json{{"weight", weight_to_json(w)},
             {"method", o.closed_form ? "closed-form" : "odd-reflections"},
             {"dominant_pi", pi},
             {"dominant_integrable", verdict}};
  return verdict ? 0 : 1;
}

int cmd_yset(const Options& o, Json& out) {
  const auto d = need_algebra(o);
  const Base b = parse_base(d, o.base);
  const Weight w = parse_weight_arg(*d, o.weight, "--weight");
  out = Json{{"weight", weight_to_json(w)}, {"Y", weights_to_json(enumerate_Y(b, w))}};
  return 0;
}

int cmd_bshort(const Options& o, Json& out) {
  const auto d = need_algebra(o);
  const Base b = parse_base(d, o.base);
  const Weight w = parse_weight_arg(*d, o.weight, "--weight");
  const auto e = compute_b(b, w);
  const auto axioms = verify_axioms(b, e.element, w);
  out = Json{{"lambda", weight_to_json(w)},
             {"element", ring_to_json(e.element)},
             {"solution_dim", e.solution_dim},
             {"integral", e.integral},
             {"axioms", Json{{"b", axioms.no_other_dominant}, {"c", axioms.xi_fixed}, {"d", axioms.below}, {"in_A", axioms.in_A}}}};
  return 0;
}

int cmd_check(const Options& o, Json& out) {
  const RingElement x = ring_from_json(read_input(o.in));
  const RootDatum& d = *x.datum();
  const Lattice lattice = parse_lattice(o.lattice);
  Failure why;
  bool verdict = false;
  const std::string& t = o.test;
  if (t == "A") {
    verdict = in_A(x, lattice, o.all_beta, &why);
  } else if (t == "R") {
    verdict = in_R(x, lattice);
  } else if (t == "W") {
    verdict = is_w_invariant(x);
  } else if (t == "string" || t == "sv" || t == "ev") {
    std::vector<Weight> betas;
    if (!o.beta.empty()) betas.push_back(parse_weight_arg(d, o.beta, "--beta"));
    else betas = o.all_beta ? d.isotropic_roots() : iso_transversal(d);
    verdict = true;
    for (const auto& beta : betas) {
      if (t == "string") {
        verdict = string_condition(x, beta, &why);
      } else {
        const Weight omega = o.omega.empty() ? default_omega(d, beta) : parse_weight_arg(d, o.omega, "--omega");
        verdict = t == "sv" ? sv_condition(psi(x, parse_sign(o.sign)), beta, omega, parse_sign(o.sign))
                            : ev_condition(psi(x, -1), beta, omega);
        if (!verdict) why = {t + " condition fails for β = " + beta.to_string(), std::nullopt};
      }
      if (!verdict) break;
    }
  } else {
    throw UsageError("--test must be one of A, R, W, string, sv, ev");
  }
  out = Json{{"test", t}, {"verdict", verdict}};
  if (!verdict && !why.reason.empty()) {
    Json ce{{"reason", why.reason}};
    if (why.at) ce["at"] = weight_to_json(*why.at);
    out["counterexample"] = ce;
  }
  return verdict ? 0 : 1;
}

int cmd_decompose(const Options& o, Json& out) {
  const RingElement x = ring_from_json(read_input(o.in));
  const Base b = parse_base(x.datum(), o.base);
  const auto dec = decompose(b, x);
  Json coeffs = Json::array();
  for (const auto& [w, c] : dec.coefficients) coeffs.push_back(Json{{"weight", weight_to_json(w)}, {"coeff", coeff_to_json(c)}});
  out = Json{{"coefficients", coeffs}, {"remainder", ring_to_json(dec.remainder)}};
  return dec.remainder.is_zero() ? 0 : 1;
}

int cmd_suite(const Options& o, Json& out) {
  const auto seed = acceptance::seed_from_env();
  const auto ids = o.criteria.empty() ? acceptance::criterion_ids() : o.criteria;
  Json rows = Json::array();
  bool all = true;
  std::cerr << "seed " << seed << "\n";
  for (int id : ids) {
    const auto r = acceptance::run_criterion(id, seed);
    std::cerr << acceptance::format_line(r) << "\n";
    all = all && r.passed;
    rows.push_back(Json{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
  }
  out = Json{{"seed", std::to_string(seed)}, {"criteria", rows}, {"all_passed", all}};
  return all ? 0 : 1;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Exact character rings of classical Lie superalgebras"};
  app.require_subcommand(1);
  Options o;

  auto add_algebra = [&](CLI::App* c) {
    c->add_option("--algebra", o.algebra, "JSON descriptor or shorthand such as gl(2|1), q2, osp(3|2)");
  };
  auto add_base = [&](CLI::App* c) {
    c->add_option("--base", o.base, "mixed, distinguished, a word such as εδε/ede, or a base index");
  };
  auto add_weight = [&](CLI::App* c) {
    c->add_option("--weight", o.weight, R"(weight as {"eps":["1","0"],"delta":["0"]})");
  };
  auto add_out = [&](CLI::App* c) { c->add_option("--out", o.out, "write the JSON result to this file"); };

  struct Sub {
    CLI::App* app;
    int (*fn)(const Options&, Json&);
  };
  std::vector<Sub> subs;

  auto* describe = app.add_subcommand("describe", "list roots, π and Δ_iso");
  add_algebra(describe);
  subs.push_back({describe, cmd_describe});

  auto* bases = app.add_subcommand("bases", "all bases reachable by odd reflections");
  add_algebra(bases);
  bases->add_option("--from-word", o.from_word, "start from this word instead of the mixed base");
  subs.push_back({bases, cmd_bases});

  auto* reflect = app.add_subcommand("reflect", "apply one odd reflection");
  add_algebra(reflect);
  add_base(reflect);
  reflect->add_option("--beta", o.beta, "isotropic simple root (weight JSON)");
  subs.push_back({reflect, cmd_reflect});

  auto* dominant = app.add_subcommand("dominant", "decide whether L(λ) is finite dimensional");
  add_algebra(dominant);
  add_base(dominant);
  add_weight(dominant);
  dominant->add_flag("--closed-form", o.closed_form, "use the closed formula (needs the odd reflection hypothesis)");
  subs.push_back({dominant, cmd_dominant});

  auto* yset = app.add_subcommand("yset", "π-dominant weights strictly below λ");
  add_algebra(yset);
  add_base(yset);
  add_weight(yset);
  subs.push_back({yset, cmd_yset});

  auto* bshort = app.add_subcommand("bshort", "solve for the short basis element b_λ");
  add_algebra(bshort);
  add_base(bshort);
  add_weight(bshort);
  subs.push_back({bshort, cmd_bshort});

  auto* check = app.add_subcommand("check", "membership tests for a ring element");
  check->add_option("--in", o.in, "ring element JSON file, or - for stdin");
  check->add_option("--test", o.test, "A, R, W, string, sv or ev");
  check->add_option("--lattice", o.lattice, "int, half or full");
  check->add_flag("--all-beta", o.all_beta, "check every isotropic root, not one per W-orbit");
  check->add_option("--beta", o.beta, "isotropic root for string/sv/ev");
  check->add_option("--omega", o.omega, "ω for sv/ev");
  check->add_option("--sign", o.sign, "+ or - for sv");
  subs.push_back({check, cmd_check});

  auto* decomp = app.add_subcommand("decompose", "expand an element of A(g) in the short basis");
  decomp->add_option("--in", o.in, "ring element JSON file, or - for stdin");
  add_base(decomp);
  subs.push_back({decomp, cmd_decompose});

  auto* suite = app.add_subcommand("suite", "run the acceptance criteria");
  suite->add_option("--criterion", o.criteria, "run only these criteria");
  subs.push_back({suite, cmd_suite});

  for (auto& s : subs) add_out(s.app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  for (const auto& s : subs) {
    if (!s.app->parsed()) continue;
    Json out;
    int code = 0;
    try {
      code = s.fn(o, out);
    } catch (const UsageError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    } catch (const Json::exception& e) {
      std::cerr << "error: malformed JSON: " << e.what() << "\n";
      return 2;
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    } catch (const std::exception& e) {
      std::cerr << "refused: " << e.what() << "\n";
      return 3;
    }
    const std::string text = out.dump(2) + "\n";
    if (o.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(o.out);
      if (!f) {
        std::cerr << "error: cannot write " << o.out << "\n";
        return 2;
      }
      f << text;
    }
    return code;
  }
  return 2;
}

}  // namespace superchar::cli
