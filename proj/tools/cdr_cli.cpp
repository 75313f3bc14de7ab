#include <iostream>
#include <regex>

#include <CLI11.hpp>

#include "cdr/brackets.hpp"
#include "cdr/character.hpp"
#include "cdr/lifting.hpp"
#include "cdr/serialize.hpp"
#include "cdr/verify.hpp"

using namespace cdr;

namespace {

struct Config {
  std::int64_t prec = 20;
  std::string gamma = "sl2z";
  std::string format = "json";
  std::uint64_t seed = 20240601;
};

// "1", "-3/2", "E4", "E6", "Delta", or "M<k>:<i>" for the i-th basis element of M_k.
BracketArg parse_form(const std::string& spec, const GammaDescriptor& gamma, std::int64_t prec) {
  static const std::regex rational_re(R"(-?\d+(/\d+)?)");
  static const std::regex basis_re(R"(M(\d+):(\d+))");
  std::smatch m;
  if (std::regex_match(spec, rational_re)) return BracketArg::scalar(Rational(spec));
  if (spec == "E4") return BracketArg::form(4, eisenstein(4, prec));
  if (spec == "E6") return BracketArg::form(6, eisenstein(6, prec));
  if (spec == "Delta") return BracketArg::form(12, delta(prec));
  if (std::regex_match(spec, m, basis_re)) {
    int k = std::stoi(m[1]);
    std::size_t i = std::stoul(m[2]);
    auto basis = basis_M(gamma, k, prec);
    if (i >= basis.size()) throw std::invalid_argument("M_" + std::to_string(k) + " has dimension " + std::to_string(basis.size()));
    return BracketArg::form(k, basis[i]);
  }
  throw std::invalid_argument("unrecognized form: " + spec);
}

json form_json(const BracketArg& f, const GammaDescriptor& gamma) {
  if (f.constant) return {{"weight", 0}, {"constant", rational_to_json(f.c)}};
  json out{{"weight", f.weight}, {"series", to_json(f.series)}};
  try {
    auto d = decompose(f.series, gamma, f.weight);
    json coords = json::array();
    for (const auto& c : d.coords) coords.push_back(rational_to_json(c));
    out["decomposition"] = d.member ? coords : json(nullptr);
  } catch (const PrecisionError&) {
    out["decomposition"] = nullptr;
  }
  return out;
}

json state_json(const FockState& s) {
  json out = json::array();
  for (const auto& [t, f] : s.terms()) {
    json coeff = json::array();
    for (const auto& [j, g] : f.terms()) coeff.push_back({{"b_power", j}, {"series", to_json(g)}});
    out.push_back({{"tuple", t.spec()}, {"modes", t.to_string()}, {"coeff", coeff}});
  }
  return out;
}

json lifting_json(const Lifting& l, const GammaDescriptor& gamma) {
  return {{"leading", l.leading.spec()},
          {"leading_modes", l.leading.to_string()},
          {"n0", l.n0},
          {"zero", l.zero},
          {"form", form_json(l.form, gamma)},
          {"state", state_json(l.state)}};
}

void print_lifting_text(const Lifting& l) {
  std::cout << "L(" << l.leading.spec() << ")  [" << l.leading.to_string() << "]  n0=" << l.n0 << "\n";
  if (l.zero) {
    std::cout << "  0\n";
    return;
  }
  for (const auto& [t, f] : l.state.terms()) std::cout << "  " << t.to_string() << " : " << f.to_string() << "\n";
}

int cmd_character(const Config& cfg, int qmax) {
  GammaDescriptor g = GammaDescriptor::resolve(cfg.gamma);
  auto closed = char_closed(g, qmax);
  auto sform = char_s_form(g, qmax);
  auto enumer = char_enumerate(g, qmax);
  const int bq = std::min(qmax, 4);
  auto basis = char_from_basis(g, bq, cfg.prec);
  bool agree = closed.coeffs == sform.coeffs && closed.coeffs == enumer.coeffs &&
               std::equal(basis.coeffs.begin(), basis.coeffs.end(), closed.coeffs.begin());
  if (cfg.format == "json") {
    json coeffs = json::array();
    for (const auto& c : closed.coeffs) coeffs.push_back(c.get_str());
    json out{{"gamma", g.name}, {"qmax", qmax}, {"coeffs", coeffs}, {"methods_agree", agree}, {"basis_qmax", bq}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "gamma " << g.name << "  qmax " << qmax << "\n";
    for (std::size_t n = 0; n < closed.coeffs.size(); ++n) std::cout << "q^" << n << "  " << closed.coeffs[n] << "\n";
    std::cout << "methods agree: " << (agree ? "yes" : "no") << " (basis count to q^" << bq << ")\n";
  }
  return agree ? 0 : 1;
}

int cmd_lift(const Config& cfg, const std::string& tuple, const std::string& form) {
  GammaDescriptor g = GammaDescriptor::resolve(cfg.gamma);
  FourTuple w = parse_fourtuple(tuple);
  BracketArg f = parse_form(form, g, cfg.prec);
  Lifting l = lift(w, f, cfg.prec);
  if (l.zero) {
    std::cerr << "warning: form weight " << f.weight << " does not match 2*part = " << 2 * w.part()
              << "; returning the zero lifting\n";
  }
  if (cfg.format == "json") {
    std::cout << lifting_json(l, g).dump() << "\n";
  } else {
    print_lifting_text(l);
  }
  return 0;
}

JacobiLikeSeries jacobi_of(const BracketArg& f, unsigned xmax, std::int64_t prec) {
  if (!f.constant) return ck_lift(f, xmax);
  JacobiLikeSeries j = ck_lift_const(xmax, prec);
  for (auto& x : j.x) x *= Scalar(f.c);
  return j;
}

int cmd_bracket(const Config& cfg, const std::string& fs, const std::string& hs, unsigned n, unsigned xmax) {
  GammaDescriptor g = GammaDescriptor::resolve(cfg.gamma);
  BracketArg f = parse_form(fs, g, cfg.prec), h = parse_form(hs, g, cfg.prec);
  QSeries r = modified_bracket(f, h, n, cfg.prec);
  BracketArg out = BracketArg::form(f.weight + h.weight + 2 * static_cast<int>(n), r);
  // X-coefficients of the Jacobi-like product of the two liftings
  auto coeffs = jacobi_product(jacobi_of(f, xmax, cfg.prec), jacobi_of(h, xmax, cfg.prec), g);
  if (cfg.format == "json") {
    json j = form_json(out, g);
    json jac = json::array();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      jac.push_back({{"x_power", i}, {"weight", coeffs[i].weight}, {"member", coeffs[i].membership.member}});
    }
    j["jacobi_product"] = jac;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "weight " << out.weight << "\n" << r.to_string(20) << "\n";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      std::cout << "X^" << i << " of the Jacobi-like product: weight " << coeffs[i].weight << ", "
                << (coeffs[i].membership.member ? "modular" : "not modular") << "\n";
    }
  }
  return 0;
}

int cmd_hecke(const Config& cfg, const std::string& fs, std::int64_t n, const std::string& tuple) {
  GammaDescriptor g = GammaDescriptor::sl2z();
  BracketArg f = parse_form(fs, g, cfg.prec * n);
  if (f.constant) throw std::invalid_argument("hecke: need a form of positive weight");
  QSeries r = hecke_T(f.weight, n, f.series).truncated(cfg.prec);
  json out = form_json(BracketArg::form(f.weight, r), g);
  std::string detail;
  std::optional<bool> commutes;
  if (!tuple.empty()) commutes = hecke_commutation_check(parse_fourtuple(tuple), f, n, std::min<std::int64_t>(cfg.prec, 10), &detail);
  if (cfg.format == "json") {
    out["n"] = n;
    if (commutes) out["commutes_with_lifting"] = *commutes;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "T_" << f.weight << "(" << n << ") " << fs << " = " << r.to_string(20) << "\n";
    if (commutes) std::cout << "commutes with lifting of " << tuple << ": " << (*commutes ? "yes" : "no") << " (" << detail << ")\n";
  }
  return commutes.value_or(true) ? 0 : 1;
}

int cmd_basis(const Config& cfg, int weight, std::optional<int> charge) {
  GammaDescriptor g = GammaDescriptor::resolve(cfg.gamma);
  auto basis = lifting_basis(g, weight, charge, cfg.prec);
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& l : basis) arr.push_back(lifting_json(l, g));
    std::cout << json{{"gamma", g.name}, {"weight", weight}, {"size", basis.size()}, {"liftings", arr}}.dump() << "\n";
  } else {
    std::cout << basis.size() << " liftings of weight " << weight << "\n";
    for (const auto& l : basis) print_lifting_text(l);
  }
  return 0;
}

int cmd_verify(const Config& cfg, const std::string& suite) {
  VerifyOptions opts;
  opts.seed = cfg.seed;
  opts.prec = cfg.prec;
  opts.gamma = cfg.gamma;
  auto results = run_suite(suite, opts);
  bool all = true;
  json arr = json::array();
  for (const auto& r : results) {
    all = all && r.pass;
    if (cfg.format == "json") {
      arr.push_back({{"suite", r.suite}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    } else {
      std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.suite << ": " << r.name;
      if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
      std::cout << "\n";
    }
  }
  if (cfg.format == "json") std::cout << json{{"suite", suite}, {"seed", cfg.seed}, {"all_pass", all}, {"checks", arr}}.dump() << "\n";
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with Gamma-invariant sections of the chiral de Rham complex"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--prec", cfg.prec, "q-precision")->check(CLI::Range(10, 100000));
  app.add_option("--gamma", cfg.gamma, "\"sl2z\" or a path to a modular-forms table");
  app.add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", cfg.seed, "seed for randomized checks");

  int qmax = 8;
  auto* character = app.add_subcommand("character", "graded character, computed three ways");
  character->add_option("--qmax", qmax, "highest q-power")->check(CLI::Range(0, 40));

  std::string tuple, form;
  auto* lift_cmd = app.add_subcommand("lift", "lifting L(w, f) of a four-tuple and a form");
  lift_cmd->add_option("tuple", tuple, "e.g. a[1]:phi[1]")->required();
  lift_cmd->add_option("form", form, "1, E4, E6, Delta, a rational constant, or M<k>:<i>")->required();

  std::string f1, f2;
  unsigned bracket_n = 1;
  auto* bracket = app.add_subcommand("bracket", "modified Rankin-Cohen bracket [f,h]~_n");
  bracket->add_option("first", f1, "first argument (form spec)")->required();
  bracket->add_option("second", f2, "second argument (form spec)")->required();
  bracket->add_option("n", bracket_n)->required();

  std::string hecke_form, hecke_tuple;
  std::int64_t hecke_n = 2;
  auto* hecke = app.add_subcommand("hecke", "Hecke operator T_k(n) on a form of SL(2,Z)");
  hecke->add_option("form", hecke_form)->required();
  hecke->add_option("n", hecke_n)->required()->check(CLI::PositiveNumber);
  hecke->add_option("--tuple", hecke_tuple, "also check commutation with the lifting of this tuple");

  int basis_weight = 0;
  std::optional<int> basis_charge;
  auto* basis = app.add_subcommand("basis", "basis of invariant sections of a given weight");
  basis->add_option("weight", basis_weight)->required()->check(CLI::NonNegativeNumber);
  basis->add_option("--charge", basis_charge);

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite)->check(CLI::IsMember({"fock", "envelope", "brackets", "lifting", "character", "hecke", "all"}));

  int xmax = 6;
  app.add_option("--xmax", xmax, "X-truncation for Jacobi-like series")->check(CLI::Range(0, 20));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*character) return cmd_character(cfg, qmax);
    if (*lift_cmd) return cmd_lift(cfg, tuple, form);
    if (*bracket) return cmd_bracket(cfg, f1, f2, bracket_n, static_cast<unsigned>(xmax));
    if (*hecke) return cmd_hecke(cfg, hecke_form, hecke_n, hecke_tuple);
    if (*basis) return cmd_basis(cfg, basis_weight, basis_charge);
    if (*verify) return cmd_verify(cfg, suite);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
