#pragma once

#include <map>
#include <string>
#include <vector>

#include "cdr/partition.hpp"
#include "cdr/qseries.hpp"

namespace cdr {

/// Function of b: sum_j b^j g_j(q) with q = exp(2 pi i b).
class CoeffFn {
 public:
  CoeffFn() = default;
  CoeffFn(const QSeries& g);  // NOLINT(google-explicit-constructor)
  static CoeffFn constant(const Scalar& c);
  static CoeffFn b_power(int j, const Scalar& c = Scalar(1));

  const std::map<int, QSeries>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Highest power of b present (-1 for zero).
  int b_degree() const;
  /// Coefficient series of b^j.
  QSeries part(int j) const;
  /// True when every q-series is constant and exact (a polynomial in b).
  bool is_polynomial() const;

  /// d/db, using d/db g(q) = 2 Pi theta g.
  CoeffFn derivative() const;
  CoeffFn derivative(unsigned n) const;
  CoeffFn times_b(int j = 1) const;

  CoeffFn& operator+=(const CoeffFn& o);
  CoeffFn& operator-=(const CoeffFn& o);
  CoeffFn& operator*=(const Scalar& c);
  CoeffFn operator-() const;
  friend CoeffFn operator+(CoeffFn a, const CoeffFn& b) { return a += b; }
  friend CoeffFn operator-(CoeffFn a, const CoeffFn& b) { return a -= b; }
  friend CoeffFn operator*(CoeffFn a, const Scalar& c) { return a *= c; }
  friend CoeffFn operator*(const Scalar& c, CoeffFn a) { return a *= c; }
  friend CoeffFn operator*(const CoeffFn& a, const CoeffFn& b);
  /// Equal on the common known range.
  friend bool operator==(const CoeffFn& a, const CoeffFn& b) { return (a - b).is_zero(); }

  std::string to_string() const;

 private:
  void add_term(int j, const QSeries& g);
  std::map<int, QSeries> terms_;
};

/// Finite sum of monomial states with function coefficients.
class FockState {
 public:
  FockState() = default;
  FockState(const FourTuple& t, const CoeffFn& f);
  static FockState vacuum();
  static FockState function(const CoeffFn& f);

  const std::map<FourTuple, CoeffFn>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const FourTuple& t, const CoeffFn& f);
  CoeffFn coeff(const FourTuple& t) const;

  /// Max over terms (0 for the zero state).
  int max_weight() const;
  std::optional<int> weight() const;
  std::optional<int> charge() const;
  std::optional<int> part() const;
  /// Minimal part over terms (filtration degree); empty for zero.
  std::optional<int> filtration_degree() const;
  /// Parity of the fermion number, if homogeneous.
  std::optional<int> parity() const;
  int b_degree() const;
  /// Terms whose tuple has the given part.
  FockState part_component(int p) const;
  /// Truncate every coefficient series to O(q^prec).
  FockState truncated(std::int64_t prec) const;

  FockState& operator+=(const FockState& o);
  FockState& operator-=(const FockState& o);
  FockState& operator*=(const Scalar& c);
  FockState operator-() const;
  friend FockState operator+(FockState a, const FockState& b) { return a += b; }
  friend FockState operator-(FockState a, const FockState& b) { return a -= b; }
  friend FockState operator*(FockState a, const Scalar& c) { return a *= c; }
  friend FockState operator*(const Scalar& c, FockState a) { return a *= c; }
  /// Multiply every coefficient function by f.
  FockState times(const CoeffFn& f) const;
  /// Equal on the common known range.
  friend bool operator==(const FockState& a, const FockState& b) { return (a - b).is_zero(); }

  std::string to_string() const;

 private:
  std::map<FourTuple, CoeffFn> terms_;
};

/// Mode with the Fourier indexing a(z) = sum a_n z^{-n-1}, b(z) = sum b_n z^{-n},
/// phi(z) = sum phi_n z^{-n}, psi(z) = sum psi_n z^{-n-1}.
struct Mode {
  enum class Sym { A, B, Phi, Psi };
  Sym sym;
  int index;

  bool is_odd() const { return sym == Sym::Phi || sym == Sym::Psi; }
  bool is_annihilator() const;
  bool is_creation() const;
  std::string to_string() const;
  bool operator==(const Mode&) const = default;
};

/// Generators as states: a = a_{-1} 1, b = b (the function), phi = phi_0 1, psi = psi_{-1} 1.
enum class Generator { A, B, Phi, Psi };
/// x_{(n)} as a Fourier mode: a_{(n)} = a_n, b_{(n)} = b_{n+1}, phi_{(n)} = phi_{n+1}, psi_{(n)} = psi_n.
Mode field_mode(Generator x, int n);
FockState generator_state(Generator x);

FockState apply_mode(const Mode& m, const FockState& s);
/// f(b)_{(k)} acting on s.
FockState apply_fn_mode(const CoeffFn& f, int k, const FockState& s);
/// u_{(n)} v.
FockState nth_product(const FockState& u, int n, const FockState& v);

namespace states {
FockState E();
FockState F();
FockState H();
FockState J();
FockState Q();
FockState G();
FockState omega();
}  // namespace states

enum class Sl2 { E, F, H };
FockState sl2_state(Sl2 x);
FockState sl2_zero_mode(Sl2 x, const FockState& s);
/// Induced action on the associated graded: f -> -f', -2nf - 2bf', 2nbf + b^2 f' with n = part(t).
CoeffFn graded_sl2(Sl2 x, const FourTuple& t, const CoeffFn& f);

/// Commutator [u_{(m)}, v_{(n)}] on s, using the supercommutator when both are odd.
FockState mode_commutator(const FockState& u, int m, const FockState& v, int n, const FockState& s);
/// Right side sum_j C(m,j) (u_{(j)}v)_{(m+n-j)} s with u_{(j)}v supplied by the caller.
FockState commutator_from_ope(const std::vector<FockState>& ope, int m, int n, const FockState& s);

}  // namespace cdr
