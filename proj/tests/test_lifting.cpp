#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cdr/lifting.hpp"
#include "oracles.hpp"

using namespace cdr;

namespace {
const std::int64_t P = 16;
FourTuple T(const char* s) { return parse_fourtuple(s); }
GammaDescriptor sl2z() { return GammaDescriptor::sl2z(); }
GammaDescriptor g02() { return GammaDescriptor::load(CDR_DATA_DIR "/gamma0_2.json"); }
oracle::Vec pi_free(const QSeries& s, const Scalar& undo) { return oracle::coeffs(s * undo, static_cast<int>(P)); }
}  // namespace

TEST_CASE("lifting of J") {
  Lifting l = lift(T("phi[1]:psi[1]"), BracketArg::scalar(1), P);
  REQUIRE(l.state.terms().size() == 2);
  CHECK(l.state.coeff(T("phi[1]:psi[1]")) == CoeffFn::constant(Scalar(1)));
  // coefficient of b_{-1} is (pi i/3) E2
  CoeffFn c = l.state.coeff(T("b[1]"));
  CHECK(c.b_degree() == 0);
  CHECK(pi_free(c.part(0), Scalar(Rational(3), -1)) == oracle::eisenstein(2, P));
}

TEST_CASE("lifting of Q") {
  Lifting l = lift(T("a[1]:phi[1]"), BracketArg::scalar(1), P);
  REQUIRE(l.state.terms().size() == 3);
  CHECK(pi_free(l.state.coeff(T("phi[2]")).part(0), Scalar(Rational(-3), -1)) == oracle::eisenstein(2, P));
  // -(pi i/3) d/dtau E2 = -(2 (pi i)^2/3) theta E2
  CHECK(pi_free(l.state.coeff(T("phi[1]:b[1]")).part(0), Scalar(make_rational(-3, 2), -2)) ==
        oracle::theta(oracle::eisenstein(2, P)));
}

TEST_CASE("weight mismatch gives the zero lifting") {
  Lifting l = lift(T("b[1]"), BracketArg::form(4, eisenstein(4, P)), P);
  CHECK(l.zero);
  CHECK(l.state.is_zero());
  CHECK(lift(T("a[1]:phi[1]"), BracketArg::scalar(0), P).state.is_zero());
}

TEST_CASE("constants scale liftings") {
  Lifting one = lift(T("phi[1]:psi[1]"), BracketArg::scalar(1), P);
  Lifting three = lift(T("phi[1]:psi[1]"), BracketArg::scalar(3), P);
  CHECK((three.state - one.state * Scalar(3)).is_zero());
}

TEST_CASE("invariance and leading coefficient") {
  QSeries e4 = eisenstein(4, P);
  QSeries f2 = basis_M(g02(), 2, P)[0];
  struct Case { const char* w; BracketArg f; };
  std::vector<Case> cases{
      {"phi[1]:psi[1]", BracketArg::scalar(1)}, {"a[1]:phi[1]", BracketArg::scalar(1)},
      {"a[1]:b[1]", BracketArg::scalar(1)},     {"psi[1]:b[1]", BracketArg::scalar(1)},
      {"b[1]", BracketArg::form(2, f2)},        {"phi[2]", BracketArg::form(2, f2)},
      {"phi[1]:b[1]", BracketArg::form(4, e4)}, {"phi[2,1]", BracketArg::form(4, e4)},
      {"b[1,1]", BracketArg::form(4, e4)},      {"a[1]:phi[2]:b[1]", BracketArg::form(2, f2)},
      {"phi[3,2,1]:b[1]", BracketArg::form(8, e4 * e4)},
  };
  for (const auto& c : cases) {
    Lifting l = lift(T(c.w), c.f, P);
    CHECK_MESSAGE(verify_invariance(l).ok, c.w);
    CoeffFn lead = alpha_projection(l);
    CoeffFn expect = c.f.constant ? CoeffFn::constant(Scalar(c.f.c)) : CoeffFn(c.f.series);
    CHECK_MESSAGE((lead - expect).is_zero(), c.w);
  }
}

TEST_CASE("lifting basis sizes") {
  CHECK(lifting_basis(sl2z(), 0, std::nullopt, P).size() == 1);
  CHECK(lifting_basis(sl2z(), 1, std::nullopt, P).size() == 4);
  CHECK(lifting_basis(sl2z(), 2, std::nullopt, P).size() == 12);
  CHECK(lifting_basis(g02(), 1, std::nullopt, P).size() == 8);
}

TEST_CASE("decomposition into liftings") {
  Lifting j = lift(T("phi[1]:psi[1]"), BracketArg::scalar(1), P);
  Lifting q = lift(T("a[1]:phi[1]"), BracketArg::scalar(1), P);
  FockState s = j.state * Scalar(2) - q.state * Scalar(make_rational(1, 3));
  auto terms = decompose_liftings(s, sl2z(), P);
  REQUIRE(terms.size() == 2);
  FockState back;
  for (const auto& t : terms) back += t.lifting.state * t.scale;
  CHECK((back - s).is_zero());
  // a bare monomial with q-series coefficient is not invariant
  FockState bad(T("b[1]"), CoeffFn(eisenstein(2, P)));
  CHECK_THROWS(decompose_liftings(bad, sl2z(), P));
}

TEST_CASE("J~_(1) J~ is the vacuum") {
  Lifting j = lift(T("phi[1]:psi[1]"), BracketArg::scalar(1), P);
  FockState p = nth_product(j.state, 1, j.state);
  auto terms = decompose_liftings(p, sl2z(), P);
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].tuple.is_vacuum());
  CHECK(terms[0].scale == Scalar(1));
}

TEST_CASE("structure constants follow modified brackets") {
  auto r = structure_constants(T("phi[1]:b[1]"), BracketArg::form(4, eisenstein(4, P)), T("phi[1]:psi[1]"),
                               BracketArg::scalar(1), 0, sl2z(), P);
  CHECK_MESSAGE(r.ok, r.message);
  auto r2 = structure_constants(T("a[1]:phi[1]"), BracketArg::scalar(1), T("psi[1]:b[1]"), BracketArg::scalar(1), 0,
                                sl2z(), P);
  CHECK_MESSAGE(r2.ok, r2.message);
}

TEST_CASE("Hermitian form") {
  FockState ab(T("a[1]:b[1]"), CoeffFn::constant(Scalar(1)));
  CHECK(hermitian_form(FockState::vacuum(), FockState::vacuum()) == Scalar(1));
  CHECK(hermitian_form(ab, ab) == Scalar(1));
  FockState j(T("phi[1]:psi[1]"), CoeffFn::constant(Scalar(1)));
  CHECK(hermitian_form(j, ab).is_zero());
  // antilinear in the first slot
  CHECK(hermitian_form(ab * Scalar(Rational(1), 1), ab) == Scalar(Rational(-1), 1));
}

TEST_CASE("chiral differential") {
  for (const auto& b : lifting_basis(sl2z(), 2, std::nullopt, P)) {
    CHECK(chiral_differential(chiral_differential(b.state)).is_zero());
  }
  auto c = cohomology_weight0(sl2z(), P);
  REQUIRE(c.cohomology.size() >= 2);
  CHECK(c.cohomology[0] == 1);
  CHECK(c.cohomology[1] == 0);
  auto c2 = cohomology_weight0(g02(), P);
  CHECK(c2.cohomology[0] == 1);
  CHECK(c2.cohomology[1] == 1);
}

TEST_CASE("ideal filtration") {
  Lifting x = lift(T("phi[1]:b[1]"), BracketArg::form(4, eisenstein(4, P)), P);
  Lifting j = lift(T("phi[1]:psi[1]"), BracketArg::scalar(1), P);
  CHECK(ideal_filter(nth_product(j.state, -1, x.state), 1, sl2z(), P));
  CHECK(!ideal_filter(j.state, 1, sl2z(), P));
}

TEST_CASE("Hecke operators and lifting") {
  std::string d;
  CHECK(hecke_commutation_check(T("phi[1]:b[1]"), BracketArg::form(4, eisenstein(4, 20)), 2, 8, &d));
  CHECK(hecke_commutation_check(T("phi[1]:psi[1]"), BracketArg::scalar(1), 3, 6, &d));
  CHECK(hecke_commutation_check(T("phi[2]"), BracketArg::form(4, eisenstein(4, 20)), 3, 6, &d));
}
