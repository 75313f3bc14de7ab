#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cdr/fock.hpp"
#include "cdr/modforms.hpp"
#include "cdr/verify.hpp"

using namespace cdr;
using S = Mode::Sym;

namespace {

FockState st(const char* spec) { return FockState(parse_fourtuple(spec), CoeffFn::constant(Scalar(1))); }
FockState vac() { return FockState::vacuum(); }
FockState T(const FockState& u) { return nth_product(u, -2, vac()); }

// 2 prod (1+q^n)^2 / (1-q^n)^2, coefficients to q^{n-1}
std::vector<long> tuple_counts(int n) {
  std::vector<long> c(n, 0);
  c[0] = 2;
  for (int m = 1; m < n; ++m) {
    for (int r = 0; r < 2; ++r) {
      for (int i = n - 1; i >= m; --i) c[i] += c[i - m];   // 1 + q^m
      for (int i = m; i < n; ++i) c[i] += c[i - m];        // 1/(1 - q^m)
    }
  }
  return c;
}

}  // namespace

TEST_CASE("tuple enumeration matches the free-field generating function") {
  auto c = tuple_counts(8);
  CHECK(enumerate_fourtuples(0).size() == 2);
  for (int w = 0; w < 8; ++w) CHECK(static_cast<long>(enumerate_fourtuples(w).size()) == c[w]);
}

TEST_CASE("tuple syntax and statistics") {
  FourTuple t = parse_fourtuple("a[2]:phi[1]:psi[1]:b[1,1]");
  CHECK(t.weight() == 2 + 0 + 1 + 2);
  // part counts parts: -l(lambda) + l(mu) - l(nu) + l(chi)
  CHECK(t.part() == -1 + 1 - 1 + 2);
  CHECK(t.charge() == 0);
  CHECK(parse_fourtuple(t.spec()) == t);
  CHECK(t.to_string() == "a_{-2} phi_{0} psi_{-1} b_{-1} b_{-1}");
  CHECK(parse_fourtuple("1").is_vacuum());
  CHECK_THROWS(parse_fourtuple("phi[1,1]"));
}

TEST_CASE("single modes on monomials") {
  CHECK(apply_mode({S::B, 1}, st("a[1]")) == vac() * Scalar(-1));
  CHECK(apply_mode({S::A, 1}, st("b[1]")) == vac());
  CHECK(apply_mode({S::Psi, 0}, st("phi[1]")) == vac());
  CHECK(apply_mode({S::Phi, 1}, st("psi[1]")) == vac());
  CHECK(apply_mode({S::A, 2}, st("b[2]")) == vac());
  CHECK(apply_mode({S::B, 2}, st("a[2]")) == vac() * Scalar(-1));
  CHECK(apply_mode({S::A, 1}, st("a[1]")).is_zero());
  // a_0 = d/db, b_0 = multiplication by b
  FockState f = FockState::function(CoeffFn::b_power(3));
  CHECK(apply_mode({S::A, 0}, f) == FockState::function(CoeffFn::b_power(2, Scalar(3))));
  CHECK(apply_mode({S::B, 0}, f) == FockState::function(CoeffFn::b_power(4)));
  // phi_0 twice vanishes
  CHECK(apply_mode({S::Phi, 0}, st("phi[1]")).is_zero());
}

TEST_CASE("a_0 on q-series coefficients is 2 pi i d/dtau") {
  QSeries e4 = eisenstein(4, 10);
  FockState s = FockState::function(CoeffFn(e4));
  FockState d = apply_mode({S::A, 0}, s);
  CHECK(d.coeff(FourTuple{}).part(0) == tau_derivative(e4));
}

TEST_CASE("OPEs of the topological algebra") {
  using namespace states;
  CHECK(nth_product(J(), 1, J()) == vac());
  CHECK(nth_product(J(), 0, J()).is_zero());
  CHECK(nth_product(J(), 0, Q()) == Q());
  CHECK(nth_product(J(), 0, G()) == -G());
  CHECK(nth_product(Q(), 0, G()) == omega());
  CHECK(nth_product(Q(), 1, G()) == J());
  CHECK(nth_product(Q(), 2, G()) == vac());
  CHECK(nth_product(omega(), 0, omega()) == T(omega()));
  CHECK(nth_product(omega(), 1, omega()) == omega() * Scalar(2));
  CHECK(nth_product(omega(), 3, omega()).is_zero());
  CHECK(nth_product(omega(), 2, J()) == vac() * Scalar(-1));
  CHECK(nth_product(omega(), 1, G()) == G() * Scalar(2));
  for (int n = 0; n <= 3; ++n) {
    CHECK(nth_product(Q(), n, Q()).is_zero());
    CHECK(nth_product(G(), n, G()).is_zero());
  }
}

TEST_CASE("L_0 measures weight and J_0 measures charge") {
  for (int w = 0; w <= 3; ++w) {
    for (const auto& t : enumerate_fourtuples(w)) {
      FockState s(t, CoeffFn::constant(Scalar(1)));
      CHECK(nth_product(states::omega(), 1, s) == s * Scalar(w));
      CHECK(nth_product(states::J(), 0, s) == s * Scalar(t.charge()));
    }
  }
}

TEST_CASE("sl2 vectors at level zero") {
  FockState e = sl2_state(Sl2::E), f = sl2_state(Sl2::F), h = sl2_state(Sl2::H);
  CHECK(nth_product(e, 0, f) == h);
  CHECK(nth_product(h, 0, e) == e * Scalar(2));
  CHECK(nth_product(h, 0, f) == f * Scalar(-2));
  for (int n = 1; n <= 3; ++n) {
    CHECK(nth_product(e, n, f).is_zero());
    CHECK(nth_product(h, n, h).is_zero());
  }
}

TEST_CASE("Borcherds identity on random triples") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> idx(-2, 2), wt(0, 3);
  for (int i = 0; i < 12; ++i) {
    FockState u(random_tuple(rng, wt(rng)), CoeffFn::b_power(1));
    FockState v(random_tuple(rng, wt(rng)), CoeffFn(eisenstein(4, 6)));
    FockState w(random_tuple(rng, wt(rng)), CoeffFn::constant(Scalar(1)));
    CHECK(borcherds_defect(u, v, w, idx(rng), idx(rng), idx(rng)).is_zero());
  }
}

TEST_CASE("skew symmetry for J and Q") {
  // u_(0)v = -v_(0)u + T(v_(1)u) - ..., and the series stops after two terms here
  using namespace states;
  CHECK(nth_product(J(), 0, Q()) == nth_product(Q(), 0, J()) * Scalar(-1) + T(nth_product(Q(), 1, J())));
}
