#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cdr/scalar.hpp"

namespace cdr {

/// Raised when a requested coefficient lies beyond the known precision, or an
/// operation would leave no known coefficients at all.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Truncated expansion in q^{1/M} with Scalar coefficients.
///
/// Exponents are stored as integers e standing for q^{e/M}; every stored e
/// satisfies e < bound(), and nothing is known about exponents >= bound().
/// A series without a bound is exact (a finite Laurent polynomial).
class QSeries {
 public:
  /// Exact zero.
  QSeries() = default;
  /// Zero known up to (not including) q^prec.
  explicit QSeries(std::int64_t prec);

  static QSeries constant(const Scalar& c, std::optional<std::int64_t> prec = std::nullopt);
  /// c[i] is the coefficient of q^i; precision prec.
  static QSeries from_coeffs(const std::vector<Rational>& c, std::int64_t prec);
  /// c * q^{num/den}, exact.
  static QSeries monomial(std::int64_t num, std::int64_t den, const Scalar& c = Scalar(1));
  /// Zero with explicit denominator and bound (in q^{1/denom} units); used when
  /// filling coefficients one by one.
  static QSeries blank(std::int64_t denom, std::optional<std::int64_t> bound);
  /// Collapse the denominator as far as the stored exponents allow.
  QSeries normalized() const;

  std::int64_t denom() const { return denom_; }
  std::optional<std::int64_t> bound() const { return bound_; }
  bool is_exact() const { return !bound_.has_value(); }
  /// Precision in q-units (bound / denom); empty for exact series.
  std::optional<Rational> prec() const;
  const std::map<std::int64_t, Scalar>& coeffs() const { return coeffs_; }

  /// Coefficient of q^{e/denom()}.
  Scalar coeff(std::int64_t e) const;
  /// Coefficient of q^n for integral n.
  Scalar operator[](std::int64_t n) const;

  bool is_zero() const { return coeffs_.empty(); }
  bool has_integral_exponents() const { return denom_ == 1; }
  bool pi_degree_zero() const;
  /// Pi-degree d when every coefficient is a rational multiple of Pi^d.
  std::optional<int> homogeneous_pi_degree() const;
  /// Smallest stored exponent, in q^{1/denom} units.
  std::optional<std::int64_t> valuation() const;
  /// Extreme Pi-degrees over all stored coefficients (0 for the zero series).
  int min_pi_degree() const;
  int max_pi_degree() const;
  /// Coefficients of Pi^d only.
  QSeries pi_part(int d) const;

  /// Same series expressed with denominator L (a multiple of denom()).
  QSeries with_denom(std::int64_t L) const;
  /// Drop every term with q-exponent >= prec and record the new precision.
  QSeries truncated(const Rational& prec) const;
  QSeries truncated(std::int64_t prec) const { return truncated(Rational(prec)); }

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const Scalar& c);
  QSeries operator-() const;
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(QSeries a, const Scalar& c) { return a *= c; }
  friend QSeries operator*(const Scalar& c, QSeries a) { return a *= c; }

  /// Exact structural equality (denominator, bound, coefficients).
  friend bool operator==(const QSeries& a, const QSeries& b);
  friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

  std::string to_string(std::size_t max_terms = 12) const;

  void set_coeff(std::int64_t e, const Scalar& c);

 private:
  void normalize();

  std::int64_t denom_ = 1;
  std::optional<std::int64_t> bound_;
  std::map<std::int64_t, Scalar> coeffs_;

  friend QSeries rebase(const QSeries& x, const Rational& a);
};

/// True when a - b vanishes on the common known range.
bool agree(const QSeries& a, const QSeries& b);

QSeries power(const QSeries& x, unsigned n);

/// theta = q d/dq.
QSeries theta(const QSeries& x);
QSeries theta(const QSeries& x, unsigned n);
/// d/dtau = 2 Pi theta.
QSeries tau_derivative(const QSeries& x);
QSeries tau_derivative(const QSeries& x, unsigned n);
/// Substitution tau -> a*tau, i.e. q -> q^a for positive rational a.
QSeries rebase(const QSeries& x, const Rational& a);

}  // namespace cdr
