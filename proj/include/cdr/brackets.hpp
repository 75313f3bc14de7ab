#pragma once

#include <vector>

#include "cdr/modforms.hpp"

namespace cdr {

/// Binomial with (-1)! := 1, so C(n-1, n) = 1/n and C(-1, 0) = 1.
Rational extended_binomial(long n, long k);

/// E = (Pi/6) E2.
QSeries quasi_e(std::int64_t prec);

/// Argument of a bracket: either a form of weight >= 1 or a constant c.
struct BracketArg {
  int weight = 0;
  QSeries series;
  bool constant = true;
  Rational c = 1;

  static BracketArg form(int weight, QSeries f);
  static BracketArg scalar(Rational c);
};

/// r-th tau-derivative, with 1^{(0)} = 1 and 1^{(r)} = E^{(r-1)} for constants.
QSeries generalized_derivative(const BracketArg& f, unsigned r, std::int64_t prec);

/// Classical bracket (2 Pi)^{-n} sum (-1)^r C(n+k-1,s) C(n+l-1,r) f^{(r)} h^{(s)}.
QSeries rankin_cohen(const BracketArg& f, const BracketArg& h, unsigned n);
/// [1,f]~_n for f of weight >= 1.
QSeries one_bracket(const BracketArg& f, unsigned n);
/// [1,1]~_n.
QSeries one_one_bracket(unsigned n, std::int64_t prec);
/// The same bracket as E2^{(n-1)} plus a quadratic sum in E2 derivatives over r+s = n-2.
QSeries one_one_bracket_e2_form(unsigned n, std::int64_t prec);
/// Case split over constant/nonconstant arguments.
QSeries modified_bracket(const BracketArg& f, const BracketArg& h, unsigned n, std::int64_t prec);
/// One formula for all cases, using extended binomials and 1^{(r)} = E^{(r-1)}.
QSeries modified_bracket_unified(const BracketArg& f, const BracketArg& h, unsigned n, std::int64_t prec);

/// Jacobi-like series sum_n x[n] X^n of the given weight.
struct JacobiLikeSeries {
  int weight = 0;
  std::vector<QSeries> x;

  /// X^n coefficient divided by (2 Pi)^n.
  QSeries normalized(unsigned n) const;
  /// Series in -X.
  JacobiLikeSeries negated_variable() const;
};

JacobiLikeSeries ck_lift(const BracketArg& f, unsigned xmax);
JacobiLikeSeries ck_lift_const(unsigned xmax, std::int64_t prec);

struct JacobiCoefficient {
  int weight;
  QSeries series;  // normalized X^n coefficient
  Decomposition membership;
};

/// Coefficients of phi(-X) * psi(X), each tested for membership in M_{k+l+2n}.
std::vector<JacobiCoefficient> jacobi_product(const JacobiLikeSeries& phi, const JacobiLikeSeries& psi,
                                              const GammaDescriptor& gamma);

struct ProbeResult {
  std::size_t kernel_dim = 0;
  std::vector<Rational> vector;    // c_r for r = 0..n, when the kernel is a line
  std::vector<Rational> expected;  // (-1)^r C(n-1,s) C(n+k-1,r)
  bool proportional = false;
};

/// Universal combinations sum_r c_r 1^{(r)} f^{(n-r)} landing in M_{k+2n} for all f in M_k(SL2Z).
ProbeResult uniqueness_probe(int k, unsigned n, std::int64_t prec = 30);
/// The same question for a generic f: derivatives are written through E2 and Serre
/// derivatives, and modularity means every E2-bearing monomial cancels.
ProbeResult uniqueness_probe_formal(int k, unsigned n);

}  // namespace cdr
