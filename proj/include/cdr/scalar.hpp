#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace cdr {

using Rational = mpq_class;
using Integer = mpz_class;

/// Raised when an exact computation is asked for something it cannot represent.
class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational make_rational(long num, long den = 1);
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& s);
Rational factorial(long n);
Rational binomial(long n, long k);  // generalized upper index, k >= 0

/// Exact scalar: a Laurent polynomial over Q in the formal symbol Pi,
/// where Pi stands for pi*i. Pi is invertible and satisfies no relation.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : Scalar(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& r, int pi_deg = 0);  // NOLINT(google-explicit-constructor)

  static Scalar pi_power(int deg) { return Scalar(Rational(1), deg); }

  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  /// The Pi-degree-0 part; throws if other degrees are present.
  Rational rational() const;
  Rational coeff(int pi_deg) const;
  /// Degree d if the scalar is c*Pi^d with c != 0.
  std::optional<int> monomial_degree() const;
  int min_degree() const;
  int max_degree() const;

  /// Complex conjugation: Pi -> -Pi.
  Scalar conj() const;
  Scalar times_pi(int deg) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator*=(const Rational& r);
  Scalar operator-() const;
  /// Division by a nonzero monomial c*Pi^d.
  Scalar operator/(const Scalar& o) const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator*(Scalar a, const Rational& r) { return a *= r; }
  friend Scalar operator*(const Rational& r, Scalar a) { return a *= r; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void prune();
  std::map<int, Rational> terms_;
};

}  // namespace cdr
