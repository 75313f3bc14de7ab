#include "cdr/verify.hpp"

#include <functional>
#include <sstream>

#include "cdr/brackets.hpp"
#include "cdr/character.hpp"
#include "cdr/envelope.hpp"
#include "cdr/lifting.hpp"

namespace cdr {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"fock", "envelope", "brackets", "lifting", "character", "hecke"};
  return names;
}

FourTuple random_tuple(std::mt19937_64& rng, int weight) {
  auto all = enumerate_fourtuples(weight);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return all[pick(rng)];
}

FockState borcherds_defect(const FockState& u, const FockState& v, const FockState& w, int m, int n, int k) {
  auto pu = u.parity(), pv = v.parity();
  if (!pu || !pv) throw std::invalid_argument("borcherds_defect: states must have definite parity");
  const int span = u.max_weight() + v.max_weight() + w.max_weight() + std::abs(m) + std::abs(n) + std::abs(k) + 2;
  FockState lhs, rhs;
  for (int j = 0; j <= span; ++j) {
    Rational c = binomial(m, j);
    if (c != 0) lhs += nth_product(nth_product(u, n + j, v), m + k - j, w) * Scalar(c);
    Rational d = binomial(n, j);
    if (d == 0) continue;
    if (j % 2) d = -d;
    rhs += nth_product(u, m + n - j, nth_product(v, k + j, w)) * Scalar(d);
    bool odd = (n % 2 != 0) != (*pu == 1 && *pv == 1);
    rhs += nth_product(v, n + k - j, nth_product(u, m + j, w)) * Scalar(odd ? d : Rational(-d));
  }
  return lhs - rhs;
}

namespace {

struct Ctx {
  const VerifyOptions& opts;
  std::mt19937_64 rng;
  std::vector<CheckResult> out;
  std::string suite;

  void record(const std::string& name, bool pass, const std::string& detail = "") {
    out.push_back({suite, name, pass, detail});
  }
  /// Runs fn, turning exceptions into failures.
  void check(const std::string& name, const std::function<std::pair<bool, std::string>()>& fn) {
    try {
      auto [ok, detail] = fn();
      record(name, ok, detail);
    } catch (const std::exception& e) {
      record(name, false, std::string("exception: ") + e.what());
    }
  }
};

bool zero(const FockState& s) { return s.is_zero(); }

CoeffFn random_coeff(std::mt19937_64& rng, std::int64_t prec) {
  std::uniform_int_distribution<int> pick(0, 4);
  switch (pick(rng)) {
    case 0: return CoeffFn::constant(Scalar(1));
    case 1: return CoeffFn::b_power(1);
    case 2: return CoeffFn::b_power(2, Scalar(3));
    case 3: return CoeffFn(eisenstein(2, prec));
    default: return CoeffFn(eisenstein(4, prec));
  }
}

FockState random_state(std::mt19937_64& rng, int max_weight, std::int64_t prec) {
  std::uniform_int_distribution<int> wt(0, max_weight);
  return FockState(random_tuple(rng, wt(rng)), random_coeff(rng, prec));
}

FockState T(const FockState& u) { return nth_product(u, -2, FockState::vacuum()); }

// ---------------------------------------------------------------- fock

void fock_suite(Ctx& c) {
  const std::int64_t prec = 8;
  std::vector<FockState> probes;
  for (int i = 0; i < 8; ++i) probes.push_back(random_state(c.rng, 3, prec));

  c.check("free-field commutation relations", [&] {
    using S = Mode::Sym;
    for (const auto& s : probes) {
      for (int m = -3; m <= 3; ++m) {
        for (int n = -3; n <= 3; ++n) {
          FockState ab = apply_mode({S::A, m}, apply_mode({S::B, n}, s)) - apply_mode({S::B, n}, apply_mode({S::A, m}, s));
          FockState pp = apply_mode({S::Psi, m}, apply_mode({S::Phi, n}, s)) + apply_mode({S::Phi, n}, apply_mode({S::Psi, m}, s));
          FockState expect = m + n == 0 ? s : FockState();
          if (!zero(ab - expect)) return std::make_pair(false, "[a_m,b_n] at m=" + std::to_string(m) + " n=" + std::to_string(n));
          if (!zero(pp - expect)) return std::make_pair(false, "{psi_m,phi_n} at m=" + std::to_string(m) + " n=" + std::to_string(n));
          FockState aa = apply_mode({S::A, m}, apply_mode({S::A, n}, s)) - apply_mode({S::A, n}, apply_mode({S::A, m}, s));
          FockState ff = apply_mode({S::Phi, m}, apply_mode({S::Phi, n}, s)) + apply_mode({S::Phi, n}, apply_mode({S::Phi, m}, s));
          if (!zero(aa) || !zero(ff)) return std::make_pair(false, std::string("like modes fail to (anti)commute"));
        }
      }
    }
    return std::make_pair(true, std::string());
  });

  c.check("vacuum and creation axioms", [&] {
    FockState vac = FockState::vacuum();
    for (const auto& s : probes) {
      if (!zero(nth_product(s, -1, vac) - s)) return std::make_pair(false, "u_(-1)1 != u for " + s.to_string());
      for (int n = 0; n <= 3; ++n) {
        if (!zero(nth_product(s, n, vac))) return std::make_pair(false, std::string("u_(n)1 != 0"));
        if (!zero(nth_product(vac, n, s))) return std::make_pair(false, std::string("1_(n)u != 0"));
      }
      if (!zero(nth_product(vac, -1, s) - s)) return std::make_pair(false, std::string("1_(-1)u != u"));
    }
    return std::make_pair(true, std::string());
  });

  c.check("Borcherds identity on 20 random triples", [&] {
    std::uniform_int_distribution<int> idx(-2, 2);
    for (int i = 0; i < 20; ++i) {
      FockState u = random_state(c.rng, 4, prec), v = random_state(c.rng, 4, prec), w = random_state(c.rng, 4, prec);
      int m = idx(c.rng), n = idx(c.rng), k = idx(c.rng);
      if (!zero(borcherds_defect(u, v, w, m, n, k))) {
        return std::make_pair(false, "m=" + std::to_string(m) + " n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    }
    return std::make_pair(true, std::string());
  });

  c.check("topological algebra OPEs as mode commutators", [&] {
    using namespace states;
    FockState vac = FockState::vacuum();
    struct Ope {
      const char* name;
      FockState u, v;
      std::vector<FockState> prods;
    };
    std::vector<Ope> opes{
        {"LL", omega(), omega(), {T(omega()), omega() * Scalar(2), {}, {}}},
        {"LJ", omega(), J(), {T(J()), J(), vac * Scalar(-1)}},
        {"LQ", omega(), Q(), {T(Q()), Q()}},
        {"LG", omega(), G(), {T(G()), G() * Scalar(2)}},
        {"JJ", J(), J(), {{}, vac}},
        {"JQ", J(), Q(), {Q()}},
        {"JG", J(), G(), {-G()}},
        {"QQ", Q(), Q(), {}},
        {"QG", Q(), G(), {omega(), J(), vac}},
        {"GG", G(), G(), {}},
    };
    for (const auto& o : opes) {
      for (const auto& s : probes) {
        for (int m = -1; m <= 2; ++m) {
          for (int n = -1; n <= 2; ++n) {
            FockState lhs = mode_commutator(o.u, m, o.v, n, s);
            FockState rhs = commutator_from_ope(o.prods, m, n, s);
            if (!zero(lhs - rhs)) return std::make_pair(false, std::string(o.name) + " at m=" + std::to_string(m) + " n=" + std::to_string(n));
          }
        }
      }
    }
    return std::make_pair(true, std::string());
  });

  c.check("level-0 affine sl2 relations", [&] {
    FockState e = sl2_state(Sl2::E), f = sl2_state(Sl2::F), h = sl2_state(Sl2::H);
    for (int i = 0; i < 4; ++i) {
      FockState s = random_state(c.rng, 4, prec);
      for (int m = -1; m <= 1; ++m) {
        for (int n = -1; n <= 1; ++n) {
          bool ok = zero(mode_commutator(e, m, f, n, s) - nth_product(h, m + n, s)) &&
                    zero(mode_commutator(h, m, e, n, s) - nth_product(e, m + n, s) * Scalar(2)) &&
                    zero(mode_commutator(h, m, f, n, s) + nth_product(f, m + n, s) * Scalar(2)) &&
                    zero(mode_commutator(h, m, h, n, s)) && zero(mode_commutator(e, m, e, n, s)) &&
                    zero(mode_commutator(f, m, f, n, s));
          if (!ok) return std::make_pair(false, "m=" + std::to_string(m) + " n=" + std::to_string(n) + " on " + s.to_string());
        }
      }
    }
    return std::make_pair(true, std::string());
  });
}

// ---------------------------------------------------------------- envelope

std::vector<EnvelopeElement> pbw_elements(int max_weight, int max_kl) {
  std::vector<EnvelopeElement> out;
  for (int w = 0; w <= max_weight; ++w) {
    for (const auto& t : enumerate_fourtuples(w)) {
      for (int k = 0; k <= max_kl; ++k) {
        for (int l = 0; l <= max_kl; ++l) out.push_back(EnvelopeElement::word(t, k, l));
      }
    }
  }
  return out;
}

void envelope_suite(Ctx& c) {
  c.check("E and H adjoints match the closed forms (weight <= 4, k,l <= 2)", [&] {
    for (const auto& a : pbw_elements(4, 2)) {
      for (Sl2 x : {Sl2::E, Sl2::H}) {
        if (!(adjoint(x, a) == adjoint_closed_form(x, a))) return std::make_pair(false, a.to_string());
      }
    }
    return std::make_pair(true, std::string());
  });

  c.check("graded Casimir eigenvalue 2n(n-1) for n in -2..3", [&] {
    for (int n = -2; n <= 3; ++n) {
      std::optional<FourTuple> t;
      for (int w = 0; w <= 6 && !t; ++w) {
        for (const auto& x : enumerate_fourtuples(w, std::nullopt, n)) {
          t = x;
          break;
        }
      }
      if (!t) return std::make_pair(false, "no tuple of part " + std::to_string(n));
      CoeffFn f = CoeffFn::b_power(3) + CoeffFn(eisenstein(4, 6));
      if (casimir_graded(*t, f) != Scalar(2 * n * (n - 1))) return std::make_pair(false, "part " + std::to_string(n));
    }
    return std::make_pair(true, std::string());
  });

  c.check("state/operator bridge on 20 random pairs", [&] {
    std::uniform_int_distribution<int> wt(0, 3), kl(0, 2);
    for (int i = 0; i < 20; ++i) {
      bool bare = i % 2 == 0;
      EnvelopeElement a = EnvelopeElement::word(random_tuple(c.rng, wt(c.rng)), bare ? 0 : kl(c.rng), bare ? 0 : kl(c.rng));
      CoeffFn f = random_coeff(c.rng, 6);
      if (auto err = bridge_check(a, f)) return std::make_pair(false, *err);
    }
    return std::make_pair(true, std::string());
  });

  c.check("D raises the graded part by one and is nilpotent on w a0^k", [&] {
    // a0 counts -1 and b0 counts +1
    auto graded = [](const PBWKey& key) { return key.word.part() + key.l - key.k; };
    std::uniform_int_distribution<int> wt(0, 4), kl(0, 2);
    for (int i = 0; i < 20; ++i) {
      PBWKey key{random_tuple(c.rng, wt(c.rng)), kl(c.rng), kl(c.rng)};
      EnvelopeElement a = EnvelopeElement::word(key.word, key.k, key.l);
      EnvelopeElement d = D(a);
      for (const auto& [dk, v] : d.terms()) {
        if (graded(dk) != graded(key) + 1) return std::make_pair(false, "part of D(" + a.to_string() + "): " + std::to_string(graded(dk)) + " vs " + std::to_string(graded(key)) + " at " + dk.to_string());
      }
      // b0 itself is not nilpotent: D(b0) = -b0^2
      int steps = 0;
      for (EnvelopeElement x = EnvelopeElement::word(key.word, key.k, 0); !x.is_zero(); x = D(x)) {
        if (++steps > 16) return std::make_pair(false, "D not nilpotent on " + a.to_string());
      }
    }
    return std::make_pair(true, std::string());
  });

  c.check("adjoint action satisfies the sl2 relations", [&] {
    std::uniform_int_distribution<int> wt(0, 3), kl(0, 2);
    for (int i = 0; i < 10; ++i) {
      EnvelopeElement a = EnvelopeElement::word(random_tuple(c.rng, wt(c.rng)), kl(c.rng), kl(c.rng));
      auto E = [](const EnvelopeElement& x) { return adjoint(Sl2::E, x); };
      auto F = [](const EnvelopeElement& x) { return adjoint(Sl2::F, x); };
      auto H = [](const EnvelopeElement& x) { return adjoint(Sl2::H, x); };
      bool ok = (E(F(a)) - F(E(a))) == H(a) && (H(E(a)) - E(H(a))) == E(a) * Scalar(2) &&
                (H(F(a)) - F(H(a))) == F(a) * Scalar(-2);
      if (!ok) return std::make_pair(false, a.to_string());
    }
    return std::make_pair(true, std::string());
  });

  c.check("Casimir on words acts by 2n(n-1) modulo higher part", [&] {
    for (int w = 0; w <= 3; ++w) {
      for (const auto& t : enumerate_fourtuples(w)) {
        EnvelopeElement a = EnvelopeElement::word(t);
        const int n = t.part();
        EnvelopeElement r = casimir(a) - a * Scalar(2 * n * (n - 1));
        for (const auto& [key, v] : r.terms()) {
          if (key.word.part() <= n) return std::make_pair(false, t.spec());
        }
      }
    }
    return std::make_pair(true, std::string());
  });
}

// ---------------------------------------------------------------- brackets

void brackets_suite(Ctx& c) {
  const std::int64_t p = std::max<std::int64_t>(c.opts.prec, 30);
  QSeries e4 = eisenstein(4, p), e6 = eisenstein(6, p);
  auto eq = [](const QSeries& a, const QSeries& b) { return agree(a, b); };
  c.check("[1,E4]~_1 = -E6/3", [&] {
    return std::make_pair(eq(modified_bracket(BracketArg::scalar(1), BracketArg::form(4, e4), 1, p), e6 * Scalar(make_rational(-1, 3))), std::string());
  });
  c.check("[1,1]~_2 = -E4/144", [&] {
    return std::make_pair(eq(one_one_bracket(2, p), e4 * Scalar(make_rational(-1, 144))), std::string());
  });
  c.check("[1,1]~_n = 0 for odd n <= 9", [&] {
    for (unsigned n = 1; n <= 9; n += 2) {
      if (!one_one_bracket(n, p).is_zero()) return std::make_pair(false, "n=" + std::to_string(n));
    }
    return std::make_pair(true, std::string());
  });
  c.check("[E4,E6]_1 = -3456 Delta", [&] {
    return std::make_pair(eq(rankin_cohen(BracketArg::form(4, e4), BracketArg::form(6, e6), 1), delta(p) * Scalar(-3456)), std::string());
  });
  c.check("E2 form of [1,1]~_n equals the defining sum", [&] {
    for (unsigned n = 1; n <= 6; ++n) {
      if (!eq(one_one_bracket(n, 20), one_one_bracket_e2_form(n, 20))) return std::make_pair(false, "n=" + std::to_string(n));
    }
    return std::make_pair(true, std::string());
  });
  c.check("unified bracket formula equals the case split", [&] {
    std::vector<BracketArg> args{BracketArg::scalar(1), BracketArg::form(4, eisenstein(4, 20)), BracketArg::form(6, eisenstein(6, 20))};
    for (const auto& f : args) {
      for (const auto& h : args) {
        for (unsigned n = 0; n <= 4; ++n) {
          if (!eq(modified_bracket(f, h, n, 20), modified_bracket_unified(f, h, n, 20))) return std::make_pair(false, "n=" + std::to_string(n));
        }
      }
    }
    return std::make_pair(true, std::string());
  });
  c.check("uniqueness probe over SL2Z has a one-dimensional kernel", [&] {
    std::ostringstream os;
    bool ok = true;
    for (int k : {4, 6}) {
      for (unsigned n = 1; n <= 4; ++n) {
        auto r = uniqueness_probe(k, n);
        if (r.kernel_dim != 1 || !r.proportional) {
          ok = false;
          os << "(k=" << k << ",n=" << n << ") dim " << r.kernel_dim << " ";
        }
      }
    }
    return std::make_pair(ok, os.str());
  });
  c.check("uniqueness probe for a generic form has a one-dimensional kernel", [&] {
    for (int k : {2, 4, 6, 12}) {
      for (unsigned n = 1; n <= 6; ++n) {
        auto r = uniqueness_probe_formal(k, n);
        if (r.kernel_dim != 1 || !r.proportional) return std::make_pair(false, "k=" + std::to_string(k) + " n=" + std::to_string(n));
      }
    }
    return std::make_pair(true, std::string());
  });
  c.check("Jacobi-like products land in M_{k+2n}", [&] {
    GammaDescriptor g = GammaDescriptor::sl2z();
    auto one = ck_lift_const(6, p);
    std::vector<JacobiLikeSeries> rights{ck_lift(BracketArg::form(4, e4), 6), ck_lift(BracketArg::form(6, e6), 6),
                                         ck_lift(BracketArg::form(12, delta(p)), 6), ck_lift_const(6, p)};
    for (const auto& r : rights) {
      for (const auto& coef : jacobi_product(one, r, g)) {
        if (!coef.membership.member) return std::make_pair(false, "weight " + std::to_string(coef.weight));
      }
    }
    return std::make_pair(true, std::string());
  });
}

// ---------------------------------------------------------------- lifting

void lifting_suite(Ctx& c) {
  const std::int64_t p = c.opts.prec;
  GammaDescriptor g = GammaDescriptor::resolve(c.opts.gamma);
  QSeries e2 = eisenstein(2, p);
  auto t = [](const char* s) { return parse_fourtuple(s); };

  c.check("J~ matches J + (pi i/3) b_{-1} E2", [&] {
    FockState expect(t("phi[1]:psi[1]"), CoeffFn::constant(Scalar(1)));
    expect.add(t("b[1]"), CoeffFn(e2 * Scalar(make_rational(1, 3), 1)));
    return std::make_pair(zero(lift(t("phi[1]:psi[1]"), BracketArg::scalar(1), p).state - expect), std::string());
  });
  c.check("Q~ matches Q - (pi i/3) phi_{-1} E2 - (pi i/3) phi_0 b_{-1} E2'", [&] {
    FockState expect(t("a[1]:phi[1]"), CoeffFn::constant(Scalar(1)));
    expect.add(t("phi[2]"), CoeffFn(e2 * Scalar(make_rational(-1, 3), 1)));
    expect.add(t("phi[1]:b[1]"), CoeffFn(e2).derivative() * Scalar(make_rational(-1, 3), 1));
    return std::make_pair(zero(lift(t("a[1]:phi[1]"), BracketArg::scalar(1), p).state - expect), std::string());
  });
  c.check("liftings satisfy the invariance systems", [&] {
    const char* words[] = {"phi[1]:psi[1]", "a[1]:phi[1]", "a[1]:b[1]", "psi[1]:b[1]", "b[1]", "phi[2]", "phi[1]:b[1]", "phi[2,1]"};
    for (const char* w : words) {
      FourTuple x = t(w);
      const int n0 = x.part();
      BracketArg f = n0 == 0 ? BracketArg::scalar(1) : BracketArg::form(2 * n0, n0 == 1 ? eisenstein(2, p) : eisenstein(4, p));
      Lifting l = lift(x, f, p);
      auto r = verify_invariance(l);
      if (!r.ok) return std::make_pair(false, std::string(w) + ": " + r.failures.front());
      if (!(alpha_projection(l) - (f.constant ? CoeffFn::constant(Scalar(1)) : CoeffFn(f.series))).is_zero()) {
        return std::make_pair(false, std::string(w) + ": leading coefficient");
      }
    }
    return std::make_pair(true, std::string());
  });
  c.check("lifting basis sizes match the character", [&] {
    auto ch = char_enumerate(g, 3);
    for (int k = 0; k <= 3; ++k) {
      if (Integer(static_cast<long>(lifting_basis(g, k, std::nullopt, p).size())) != ch.coeffs[k]) {
        return std::make_pair(false, "weight " + std::to_string(k));
      }
    }
    return std::make_pair(true, std::string());
  });
  c.check("decomposition recovers random combinations", [&] {
    auto basis = lifting_basis(g, 2, std::nullopt, p);
    std::uniform_int_distribution<int> coef(-3, 3);
    FockState s;
    std::map<std::pair<FourTuple, std::string>, Rational> used;
    for (const auto& b : basis) {
      int x = coef(c.rng);
      s += b.state * Scalar(x);
    }
    auto terms = decompose_liftings(s, g, p);
    FockState rebuilt;
    for (const auto& term : terms) rebuilt += term.lifting.state * term.scale;
    return std::make_pair(zero(s - rebuilt), std::string());
  });
  c.check("structure constants are multiples of modified brackets", [&] {
    auto basis1 = lifting_basis(g, 1, std::nullopt, p);
    for (const auto& x : basis1) {
      for (const auto& y : basis1) {
        for (int n = 0; n <= 1; ++n) {
          auto r = structure_constants(x.leading, x.form, y.leading, y.form, n, g, p);
          if (!r.ok) return std::make_pair(false, r.message);
        }
      }
    }
    return std::make_pair(true, std::string());
  });
  c.check("L_1 is closed under products", [&] {
    std::vector<Lifting> l1;
    for (const auto& b : lifting_basis(g, 1, std::nullopt, p)) {
      if (b.n0 >= 1) l1.push_back(b);
    }
    for (const auto& b : lifting_basis(g, 0, std::nullopt, p)) l1.push_back(b);
    for (const auto& x : l1) {
      for (const auto& y : l1) {
        if (x.n0 < 1 && y.n0 < 1) continue;
        for (int n = -1; n <= 1; ++n) {
          if (!ideal_filter(nth_product(x.state, n, y.state), 1, g, p)) return std::make_pair(false, x.leading.spec() + " x " + y.leading.spec());
        }
      }
    }
    return std::make_pair(true, std::string());
  });
  c.check("Gram matrix of part-0 monomials is diagonal and positive", [&] {
    for (int w = 0; w <= 3; ++w) {
      auto tuples = enumerate_fourtuples(w, std::nullopt, 0);
      for (const auto& x : tuples) {
        for (const auto& y : tuples) {
          Scalar v = hermitian_form(FockState(x, CoeffFn::constant(Scalar(1))), FockState(y, CoeffFn::constant(Scalar(1))));
          if (x == y ? !(v.is_rational() && v.rational() > 0) : !v.is_zero()) return std::make_pair(false, x.spec() + " , " + y.spec());
        }
      }
    }
    return std::make_pair(true, std::string());
  });
  c.check("chiral differential squares to zero and [Q~_(0), G_(1)] = L_0", [&] {
    Lifting qt = lift(t("a[1]:phi[1]"), BracketArg::scalar(1), p);
    for (int w = 0; w <= 3; ++w) {
      for (const auto& b : lifting_basis(g, w, std::nullopt, p)) {
        if (!zero(chiral_differential(chiral_differential(b.state)))) return std::make_pair(false, "d^2 on " + b.leading.spec());
        FockState lhs = mode_commutator(qt.state, 0, states::G(), 1, b.state);
        if (!zero(lhs - b.state * Scalar(w))) return std::make_pair(false, "L_0 on " + b.leading.spec());
      }
    }
    return std::make_pair(true, std::string());
  });
  c.check("weight-0 cohomology", [&] {
    auto r = cohomology_weight0(g, p);
    bool ok = r.cohomology.size() >= 2 && r.cohomology[0] == 1 && r.cohomology[1] == dim_M(g, 2);
    std::ostringstream os;
    for (int x : r.cohomology) os << x << " ";
    return std::make_pair(ok, os.str());
  });
}

// ---------------------------------------------------------------- character

void character_suite(Ctx& c) {
  GammaDescriptor g = GammaDescriptor::resolve(c.opts.gamma);
  const int qmax = g.kind == GammaDescriptor::Kind::SL2Z ? 12 : 8;
  c.check("closed form, s-form and enumeration agree", [&] {
    auto a = char_closed(g, qmax), b = char_s_form(g, qmax), e = char_enumerate(g, qmax);
    return std::make_pair(a.coeffs == b.coeffs && a.coeffs == e.coeffs, std::string());
  });
  c.check("lifting-basis count agrees to q^4", [&] {
    auto a = char_closed(g, 4), b = char_from_basis(g, 4, c.opts.prec);
    return std::make_pair(a.coeffs == b.coeffs, std::string());
  });
  c.check("partition generating functions", [&] {
    const int nmax = 30;
    for (int k = 0; k <= 8; ++k) {
      auto gf = gf_parts_exactly(k, nmax), gd = gf_distinct_parts_exactly(k, nmax);
      for (int n = 0; n <= nmax; ++n) {
        long direct = 0, direct_d = 0;
        for (const auto& p : partitions(n)) {
          if (p.length() == k) {
            ++direct;
            if (p.is_distinct()) ++direct_d;
          }
        }
        if (gf[n] != direct || gd[n] != direct_d) return std::make_pair(false, "k=" + std::to_string(k) + " n=" + std::to_string(n));
      }
    }
    return std::make_pair(true, std::string());
  });
  c.check("t-graded trace specializes to the character", [&] {
    auto e = char_enumerate(g, qmax);
    for (const auto& [n, row] : e.trace) {
      Integer total = 0;
      for (const auto& [m, cnt] : row) total += cnt * dim_M(g, -m);
      if (total != e.coeffs[n]) return std::make_pair(false, "q^" + std::to_string(n));
    }
    return std::make_pair(true, std::string());
  });
}

// ---------------------------------------------------------------- hecke

void hecke_suite(Ctx& c) {
  const std::int64_t p = 20;
  c.check("T_4(2) E4 = 9 E4 and T_4(3) E4 = 28 E4", [&] {
    QSeries e4 = eisenstein(4, 3 * p);
    bool ok = agree(hecke_T(4, 2, e4), e4 * Scalar(9)) && agree(hecke_T(4, 3, e4), e4 * Scalar(28));
    return std::make_pair(ok, std::string());
  });
  c.check("coefficient formula equals coset sum", [&] {
    for (int k : {4, 6, 12}) {
      QSeries f = k == 12 ? delta(3 * p) : eisenstein(k, 3 * p);
      for (std::int64_t n : {2, 3}) {
        if (!agree(hecke_T(k, n, f), hecke_T_cosets(k, n, f))) return std::make_pair(false, "k=" + std::to_string(k));
      }
    }
    return std::make_pair(true, std::string());
  });
  c.check("E2 is fixed by the normalized coset operator", [&] {
    QSeries e2 = eisenstein(2, 3 * p);
    bool ok = agree(t_prime(2, e2), e2) && agree(t_prime(3, e2), e2);
    return std::make_pair(ok, std::string());
  });
  c.check("Hecke operators commute with lifting", [&] {
    std::string d1, d2;
    bool a = hecke_commutation_check(parse_fourtuple("phi[1]:b[1]"), BracketArg::form(4, eisenstein(4, 20)), 2, 10, &d1);
    bool b = hecke_commutation_check(parse_fourtuple("phi[1]:psi[1]"), BracketArg::scalar(1), 2, 10, &d2);
    return std::make_pair(a && b, d1 + "; " + d2);
  });
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opts) {
  if (suite == "all") {
    std::vector<CheckResult> out;
    for (const auto& s : suite_names()) {
      auto r = run_suite(s, opts);
      out.insert(out.end(), r.begin(), r.end());
    }
    return out;
  }
  Ctx c{opts, std::mt19937_64(opts.seed), {}, suite};
  if (suite == "fock") {
    fock_suite(c);
  } else if (suite == "envelope") {
    envelope_suite(c);
  } else if (suite == "brackets") {
    brackets_suite(c);
  } else if (suite == "lifting") {
    lifting_suite(c);
  } else if (suite == "character") {
    character_suite(c);
  } else if (suite == "hecke") {
    hecke_suite(c);
  } else {
    throw std::invalid_argument("unknown suite: " + suite);
  }
  return c.out;
}

}  // namespace cdr
