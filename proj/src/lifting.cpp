#include "cdr/lifting.hpp"

#include <algorithm>
#include <mutex>

#include "cdr/linalg.hpp"

namespace cdr {

Rational lifting_c(int n0, int n) {
  return factorial(2 * n0 - 1) / (factorial(n) * factorial(n + 2 * n0 - 1));
}

Rational lifting_d(int n) { return Rational(1) / (factorial(n) * factorial(n - 1)); }

namespace {

const Mode kA0{Mode::Sym::A, 0};
const Mode kB0{Mode::Sym::B, 0};

bool states_equal(const FockState& x, const FockState& y) { return (x - y).is_zero(); }

CoeffFn form_fn(const BracketArg& f) {
  return f.constant ? CoeffFn::constant(Scalar(f.c)) : CoeffFn(f.series);
}

/// D^n(w) for n = 0, 1, ... until it vanishes.
std::vector<EnvelopeElement> d_powers(const FourTuple& w) {
  std::vector<EnvelopeElement> out{EnvelopeElement::word(w)};
  for (;;) {
    EnvelopeElement next = D(out.back());
    if (next.is_zero()) break;
    out.push_back(std::move(next));
  }
  return out;
}

EnvelopeElement times_a0(const EnvelopeElement& a, int n) {
  return right_multiply(a, std::vector<Mode>(static_cast<std::size_t>(n), kA0));
}

}  // namespace

std::optional<std::string> bridge_check(const EnvelopeElement& a, const CoeffFn& f) {
  FockState lhs = sl2_zero_mode(Sl2::F, apply_operator(a, f));
  FockState rhs = apply_operator(adjoint(Sl2::F, a), f) + apply_operator(a, f.derivative().times_b(2));
  if (!states_equal(lhs, rhs)) return "F_(0)(A f) != (F.A) f + A(b^2 f') for A = " + a.to_string();
  bool bare = std::all_of(a.terms().begin(), a.terms().end(), [](const auto& kv) { return kv.first.k == 0 && kv.first.l == 0; });
  auto n = a.part();
  if (bare && n) {
    CoeffFn g = f.times_b() * Scalar(2 * *n) + f.derivative().times_b(2);
    FockState rhs2 = apply_operator(D(a), f) + apply_operator(a, g);
    if (!states_equal(lhs, rhs2)) return "F_(0)(w f) != D(w) f + w(2n b f + b^2 f') for w = " + a.to_string();
  }
  return std::nullopt;
}

void bridge_self_test() {
  static std::once_flag flag;
  std::call_once(flag, [] {
    const char* words[] = {"phi[1]:psi[1]", "a[1]", "b[1]", "a[2]:phi[1]", "phi[2,1]:b[1]"};
    std::vector<CoeffFn> fns{CoeffFn::b_power(2), CoeffFn(eisenstein(4, 4))};
    for (const char* w : words) {
      for (const auto& f : fns) {
        if (auto err = bridge_check(EnvelopeElement::word(parse_fourtuple(w)), f)) {
          throw std::logic_error("envelope self-test failed: " + *err);
        }
      }
    }
  });
}

Lifting lift(const FourTuple& w, const BracketArg& f, std::int64_t prec) {
  Lifting out;
  out.leading = w;
  out.form = f;
  out.n0 = w.part();
  out.prec = prec;
  const int weight = f.constant ? 0 : f.weight;
  if (weight != 2 * out.n0 || (f.constant && f.c == 0)) {
    out.zero = true;
    return out;
  }
  bridge_self_test();
  auto dn = d_powers(w);
  if (out.n0 >= 1) {
    CoeffFn g = form_fn(f);
    for (std::size_t n = 0; n < dn.size(); ++n) {
      Scalar c(lifting_c(out.n0, static_cast<int>(n)));
      out.op += times_a0(dn[n], static_cast<int>(n)) * c;
      out.state += apply_operator(dn[n], g.derivative(static_cast<unsigned>(n))) * c;
    }
  } else {
    CoeffFn e(quasi_e(prec));
    out.state = FockState(w, CoeffFn::constant(Scalar(1)));
    for (std::size_t n = 1; n < dn.size(); ++n) {
      Scalar d(lifting_d(static_cast<int>(n)));
      out.op += times_a0(dn[n], static_cast<int>(n) - 1) * d;
      out.state += apply_operator(dn[n], e.derivative(static_cast<unsigned>(n - 1))) * d;
    }
    out.state *= Scalar(f.c);
  }
  if (out.state.b_degree() > 0) {
    throw ArithmeticError("lifting of " + w.spec() + " has coefficients depending polynomially on b");
  }
  return out;
}

InvarianceReport verify_invariance(const EnvelopeElement& a, int n0, const std::optional<FourTuple>& w) {
  InvarianceReport r;
  const int m = std::max(n0, 1);
  if (!adjoint(Sl2::E, a).is_zero()) r.failures.push_back("E.A != 0");
  if (!(adjoint(Sl2::H, a) == a * Scalar(-2 * m))) r.failures.push_back("H.A != " + std::to_string(-2 * m) + " A");
  if (!(adjoint(Sl2::F, a) == right_multiply(a, {kB0}) * Scalar(2 * m))) {
    r.failures.push_back("F.A != " + std::to_string(2 * m) + " A b_0");
  }
  if (n0 == 0 && w) {
    FockState lhs = sl2_zero_mode(Sl2::F, FockState(*w, CoeffFn::constant(Scalar(1))));
    if (!states_equal(lhs, apply_operator(a, CoeffFn::constant(Scalar(1))))) r.failures.push_back("F_(0) w != A 1");
  }
  r.ok = r.failures.empty();
  return r;
}

InvarianceReport verify_invariance(const Lifting& l) {
  if (l.zero) return {};
  return verify_invariance(l.op, l.n0, l.n0 == 0 ? std::optional<FourTuple>(l.leading) : std::nullopt);
}

CoeffFn alpha_projection(const Lifting& l) { return l.state.coeff(l.leading); }

std::vector<Lifting> lifting_basis(const GammaDescriptor& gamma, int weight, std::optional<int> charge,
                                   std::int64_t prec) {
  std::vector<Lifting> out;
  for (const auto& t : enumerate_fourtuples(weight, charge)) {
    const int p = t.part();
    if (p < 0 || dim_M(gamma, 2 * p) == 0) continue;
    if (p == 0) {
      out.push_back(lift(t, BracketArg::scalar(1), prec));
      continue;
    }
    for (const auto& f : basis_M(gamma, 2 * p, prec)) out.push_back(lift(t, BracketArg::form(2 * p, f), prec));
  }
  return out;
}

namespace {

std::int64_t effective_prec(const QSeries& g, std::int64_t prec) {
  return g.bound() ? std::min<std::int64_t>(*g.bound(), prec) : prec;
}

}  // namespace

std::vector<LiftingTerm> decompose_liftings(const FockState& s, const GammaDescriptor& gamma, std::int64_t prec) {
  std::vector<LiftingTerm> out;
  FockState residual = s;
  while (!residual.is_zero()) {
    const int p = *residual.filtration_degree();
    FockState layer = residual.part_component(p);
    for (const auto& [t, coef] : layer.terms()) {
      if (coef.b_degree() > 0) throw NotMember("coefficient of " + t.spec() + " depends on b");
      QSeries g = coef.part(0);
      if (p < 0 || dim_M(gamma, 2 * p) == 0) {
        throw NotMember("nonzero coefficient of " + t.spec() + " where M_" + std::to_string(2 * p) + " = 0");
      }
      auto deg = g.homogeneous_pi_degree();
      if (!deg) throw NotMember("coefficient of " + t.spec() + " mixes powers of pi i");
      QSeries g0 = g * Scalar::pi_power(-*deg);
      Scalar scale = Scalar::pi_power(*deg);
      LiftingTerm term;
      term.tuple = t;
      if (p == 0) {
        Rational c = g0.coeff(0).rational();
        if (!(g0 - QSeries::constant(Scalar(c))).is_zero()) {
          throw NotMember("coefficient of part-0 tuple " + t.spec() + " is not constant");
        }
        term.form = BracketArg::scalar(1);
        term.coords = {c};
        term.scale = scale * Scalar(c);
      } else {
        Decomposition dec = decompose(g0, gamma, 2 * p);
        if (!dec.member) throw NotMember("coefficient of " + t.spec() + " is not in M_" + std::to_string(2 * p) + ": " + dec.reason);
        const std::int64_t pr = effective_prec(g0, prec);
        auto basis = basis_M(gamma, 2 * p, pr);
        QSeries form = QSeries(pr);
        for (std::size_t i = 0; i < basis.size(); ++i) form += basis[i] * Scalar(dec.coords[i]);
        term.form = BracketArg::form(2 * p, form);
        term.coords = dec.coords;
        term.scale = scale;
      }
      term.lifting = lift(t, term.form, effective_prec(g0, prec));
      residual -= term.lifting.state * term.scale;
      out.push_back(std::move(term));
    }
    if (auto np = residual.filtration_degree(); np && *np <= p) {
      throw NotMember("decomposition did not clear the part-" + std::to_string(p) + " layer");
    }
  }
  return out;
}

StructureReport structure_constants(const FourTuple& w, const BracketArg& f1, const FourTuple& v,
                                    const BracketArg& f2, int n, const GammaDescriptor& gamma, std::int64_t prec) {
  StructureReport rep;
  Lifting l1 = lift(w, f1, prec), l2 = lift(v, f2, prec);
  if (l1.zero || l2.zero) {
    rep.message = "zero lifting";
    return rep;
  }
  FockState s = nth_product(l1.state, n, l2.state);
  const int k = w.part(), l = v.part();
  for (const auto& term : decompose_liftings(s, gamma, prec)) {
    StructureConstant sc;
    sc.tuple = term.tuple;
    sc.bracket_index = term.tuple.part() - k - l;
    if (sc.bracket_index < 0) {
      sc.proportional = false;
    } else {
      QSeries br = modified_bracket(f1, f2, static_cast<unsigned>(sc.bracket_index), prec);
      QSeries got = term.form.constant ? QSeries::constant(Scalar(term.form.c)) : term.form.series;
      got *= term.scale;
      if (br.is_zero()) {
        sc.proportional = false;
      } else {
        const auto& [e, c] = *br.coeffs().begin();
        sc.constant = got.coeff(e) / c;
        sc.proportional = (got - br * sc.constant).is_zero();
      }
    }
    if (!sc.proportional) {
      rep.ok = false;
      rep.message = "coefficient of " + sc.tuple.spec() + " is not a multiple of the modified bracket";
    }
    rep.terms.push_back(std::move(sc));
  }
  return rep;
}

bool ideal_filter(const FockState& s, int n, const GammaDescriptor& gamma, std::int64_t prec) {
  auto terms = decompose_liftings(s, gamma, prec);
  return std::all_of(terms.begin(), terms.end(), [n](const LiftingTerm& t) { return t.tuple.part() >= n; });
}

namespace {

Scalar constant_coeff(const CoeffFn& f) {
  if (f.is_zero()) return Scalar();
  if (!f.is_polynomial() || f.b_degree() > 0) throw std::invalid_argument("hermitian_form: coefficients must be constant");
  return f.part(0).coeff(0);
}

/// (t 1, v) by moving modes of t across as their adjoints.
Scalar pair_monomial(const FourTuple& t, const FockState& v) {
  if (v.is_zero()) return Scalar();
  if (t.is_vacuum()) return constant_coeff(v.coeff(FourTuple{}));
  FourTuple rest = t;
  FockState moved;
  if (!t.lambda.empty()) {
    int n = t.lambda.parts.front();
    rest.lambda.parts.erase(rest.lambda.parts.begin());
    moved = apply_mode({Mode::Sym::B, n}, v) * Scalar(-n);
  } else if (!t.mu.empty()) {
    int m = t.mu.parts.front();
    rest.mu.parts.erase(rest.mu.parts.begin());
    moved = apply_mode({Mode::Sym::Psi, m - 1}, v);
  } else if (!t.nu.empty()) {
    int n = t.nu.parts.front();
    rest.nu.parts.erase(rest.nu.parts.begin());
    moved = apply_mode({Mode::Sym::Phi, n}, v);
  } else {
    int n = t.chi.parts.front();
    rest.chi.parts.erase(rest.chi.parts.begin());
    moved = apply_mode({Mode::Sym::A, n}, v) * Scalar(make_rational(1, n));
  }
  return pair_monomial(rest, moved);
}

}  // namespace

Scalar hermitian_form(const FockState& u, const FockState& v) {
  for (const auto& [t, f] : v.terms()) constant_coeff(f);
  Scalar out;
  for (const auto& [t, f] : u.terms()) out += constant_coeff(f).conj() * pair_monomial(t, v);
  return out;
}

FockState chiral_differential(const FockState& s) { return -nth_product(states::Q(), 0, s); }

namespace {

/// Coordinates of s in a lifting basis, matched by (tuple, basis index).
std::vector<Rational> basis_coordinates(const FockState& s, const std::vector<Lifting>& basis,
                                        const GammaDescriptor& gamma, std::int64_t prec) {
  std::vector<Rational> out(basis.size(), Rational(0));
  if (s.is_zero()) return out;
  for (const auto& term : decompose_liftings(s, gamma, prec)) {
    if (!term.scale.is_rational()) throw NotMember("coordinates are not rational");
    const Rational scale = term.scale.rational();
    std::size_t j = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!(basis[i].leading == term.tuple)) continue;
      out[i] = term.tuple.part() == 0 ? scale : term.coords[j] * scale;
      ++j;
    }
  }
  return out;
}

}  // namespace

CohomologyReport cohomology_weight0(const GammaDescriptor& gamma, std::int64_t prec) {
  CohomologyReport rep;
  std::vector<std::vector<Lifting>> chains;
  for (int l = 0;; ++l) {
    auto tuples = enumerate_fourtuples(0, l);
    if (tuples.empty()) break;
    chains.push_back(lifting_basis(gamma, 0, l, prec));
  }
  std::vector<std::size_t> ranks(chains.size() + 1, 0);
  for (std::size_t l = 0; l < chains.size(); ++l) {
    rep.chain_dims.push_back(static_cast<int>(chains[l].size()));
    if (l + 1 >= chains.size()) continue;
    Matrix m;
    for (const auto& b : chains[l]) m.push_back(basis_coordinates(chiral_differential(b.state), chains[l + 1], gamma, prec));
    ranks[l + 1] = m.empty() || chains[l + 1].empty() ? 0 : rank(m);
  }
  for (std::size_t l = 0; l < chains.size(); ++l) {
    std::size_t out_rank = l + 1 < ranks.size() ? ranks[l + 1] : 0;
    rep.cohomology.push_back(static_cast<int>(chains[l].size() - out_rank - ranks[l]));
  }
  return rep;
}

bool hecke_commutation_check(const FourTuple& w, const BracketArg& f, std::int64_t n, std::int64_t prec,
                             std::string* detail) {
  const int k = w.part();
  // the coset with d = n keeps only every n-th coefficient
  Lifting l = lift(w, f, prec * n);
  BracketArg tf = f.constant ? BracketArg::scalar(f.c * Rational(divisor_sigma(1, n)) / Rational(n))
                             : BracketArg::form(f.weight, hecke_T(f.weight, n, f.series));
  auto rpow = [](Rational x, int e) {
    Rational r(1);
    for (int i = 0; i < std::abs(e); ++i) r *= x;
    return e < 0 ? Rational(1 / r) : r;
  };
  FockState lhs;
  for (auto a : divisors(n)) {
    const std::int64_t d = n / a;
    Rational base(n, d * d);
    base.canonicalize();
    for (const auto& [t, coef] : l.state.terms()) {
      lhs.add(t, CoeffFn(slash_sum_b(coef.part(0), 0, a, d)) * Scalar(rpow(base, t.part())));
    }
  }
  lhs *= Scalar(rpow(Rational(n), k - 1));
  Lifting r = lift(w, tf, prec);
  FockState diff = lhs - r.state;
  std::optional<std::int64_t> reached;
  for (const FockState* st : {&lhs, &r.state}) {
    for (const auto& [t, c] : st->terms()) {
      for (const auto& [j, g] : c.terms()) {
        if (g.bound()) reached = reached ? std::min(*reached, *g.bound()) : *g.bound();
      }
    }
  }
  if (detail) {
    *detail = diff.is_zero() ? "agree to q^" + (reached ? std::to_string(*reached) : std::string("inf")) : diff.to_string();
  }
  return diff.is_zero() && (!reached || *reached >= prec);
}

}  // namespace cdr
