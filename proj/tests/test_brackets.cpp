#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cdr/brackets.hpp"
#include "oracles.hpp"

using namespace cdr;
using oracle::add, oracle::mul, oracle::scale, oracle::theta;

namespace {
const int N = 30;
BracketArg E4() { return BracketArg::form(4, eisenstein(4, N)); }
BracketArg E6() { return BracketArg::form(6, eisenstein(6, N)); }
}  // namespace

TEST_CASE("extended binomials") {
  CHECK(extended_binomial(-1, 0) == 1);
  for (long n = 1; n <= 6; ++n) CHECK(extended_binomial(n - 1, n) == make_rational(1, n));
  CHECK(extended_binomial(5, 2) == 10);
  CHECK(extended_binomial(2, 4) == 0);
}

TEST_CASE("quasi_e is (pi i/6) E2") {
  QSeries e = quasi_e(20);
  CHECK(e.homogeneous_pi_degree() == 1);
  CHECK(oracle::coeffs(e * Scalar(Rational(6), -1), 20) == oracle::eisenstein(2, 20));
}

TEST_CASE("[1,E4]~_1 = theta E4 - E2 E4/3 = -E6/3") {
  auto e2 = oracle::eisenstein(2, N), e4 = oracle::eisenstein(4, N), e6 = oracle::eisenstein(6, N);
  auto expect = add(theta(e4), scale(mul(e2, e4), mpq_class(-1, 3)));
  CHECK(expect == scale(e6, mpq_class(-1, 3)));
  CHECK(oracle::coeffs(modified_bracket(BracketArg::scalar(1), E4(), 1, N), N) == expect);
}

TEST_CASE("[1,1]~_2 = (12 theta E2 - E2^2)/144 = -E4/144") {
  auto e2 = oracle::eisenstein(2, N), e4 = oracle::eisenstein(4, N);
  auto expect = scale(add(scale(theta(e2), 12), mul(e2, e2), -1), mpq_class(1, 144));
  CHECK(expect == scale(e4, mpq_class(-1, 144)));
  CHECK(oracle::coeffs(one_one_bracket(2, N), N) == expect);
}

TEST_CASE("[1,1]~ vanishes in odd degree") {
  for (unsigned n = 1; n <= 9; n += 2) CHECK(one_one_bracket(n, N).is_zero());
}

TEST_CASE("[E4,E6]_1 = 4 E4 theta E6 - 6 E6 theta E4 = -3456 Delta") {
  auto e4 = oracle::eisenstein(4, N), e6 = oracle::eisenstein(6, N);
  auto expect = add(scale(mul(e4, theta(e6)), 4), mul(e6, theta(e4)), -6);
  CHECK(expect == scale(oracle::delta(N), -3456));
  CHECK(oracle::coeffs(rankin_cohen(E4(), E6(), 1), N) == expect);
}

TEST_CASE("bracket symmetry [f,h]_n = (-1)^n [h,f]_n") {
  for (unsigned n = 0; n <= 4; ++n) {
    QSeries a = rankin_cohen(E4(), E6(), n), b = rankin_cohen(E6(), E4(), n);
    CHECK(agree(a, n % 2 ? -b : b));
  }
}

TEST_CASE("modified bracket equals Rankin-Cohen for two forms and scales with constants") {
  for (unsigned n = 0; n <= 3; ++n) {
    CHECK(agree(modified_bracket(E4(), E6(), n, N), rankin_cohen(E4(), E6(), n)));
    CHECK(agree(modified_bracket(BracketArg::scalar(3), E4(), n, N), modified_bracket(BracketArg::scalar(1), E4(), n, N) * Scalar(3)));
  }
}

TEST_CASE("brackets are Pi-free and modular") {
  GammaDescriptor g = GammaDescriptor::sl2z();
  std::vector<BracketArg> args{BracketArg::scalar(1), E4(), E6()};
  for (const auto& f : args) {
    for (const auto& h : args) {
      for (unsigned n = 1; n <= 4; ++n) {
        QSeries r = modified_bracket(f, h, n, N);
        CHECK(r.pi_degree_zero());
        CHECK(decompose(r, g, f.weight + h.weight + 2 * static_cast<int>(n)).member);
      }
    }
  }
}

TEST_CASE("E2 form of [1,1]~_n agrees with the defining sum") {
  for (unsigned n = 1; n <= 6; ++n) CHECK(agree(one_one_bracket(n, 20), one_one_bracket_e2_form(n, 20)));
}

TEST_CASE("Cohen-Kuznetsov products") {
  auto c = jacobi_product(ck_lift_const(6, N), ck_lift(E4(), 6), GammaDescriptor::sl2z());
  // X^0: E4/3!
  CHECK(agree(c[0].series, eisenstein(4, N) * Scalar(make_rational(1, 6))));
  for (const auto& x : c) CHECK(x.membership.member);
  auto cc = jacobi_product(ck_lift_const(6, N), ck_lift_const(6, N), GammaDescriptor::sl2z());
  CHECK(cc[1].series.is_zero());
  CHECK(cc[2].membership.member);
  CHECK(cc[2].membership.coords.size() == 1);
}

TEST_CASE("generic-form uniqueness probe") {
  for (int k : {4, 6, 12}) {
    for (unsigned n = 1; n <= 5; ++n) {
      auto r = uniqueness_probe_formal(k, n);
      CHECK(r.kernel_dim == 1);
      CHECK(r.proportional);
    }
  }
}

TEST_CASE("SL2Z uniqueness probe in low degree") {
  for (int k : {4, 6}) {
    for (unsigned n = 1; n <= 2; ++n) {
      auto r = uniqueness_probe(k, n);
      CHECK(r.kernel_dim == 1);
      CHECK(r.proportional);
    }
  }
  CHECK(uniqueness_probe(12, 3).kernel_dim == 1);
}
