#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cdr/qseries.hpp"

namespace cdr {

Integer divisor_sigma(int k, std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);

/// Normalized Eisenstein series E_k, k in {2, 4, 6}, to O(q^prec).
QSeries eisenstein(int k, std::int64_t prec);
/// Delta = (E4^3 - E6^2)/1728.
QSeries delta(std::int64_t prec);

/// Dimension and basis data for M_k(Gamma), either SL(2,Z) or a table.
struct GammaDescriptor {
  enum class Kind { SL2Z, UserTable };
  Kind kind = Kind::SL2Z;
  std::string name = "sl2z";
  std::map<int, int> dims;
  std::map<int, std::vector<QSeries>> bases;
  std::int64_t prec = 0;

  static GammaDescriptor sl2z();
  static GammaDescriptor from_json_text(const std::string& text);
  static GammaDescriptor load(const std::string& path);
  /// "sl2z" or a path to a table file.
  static GammaDescriptor resolve(const std::string& spec);
};

int dim_M(const GammaDescriptor& gamma, int k);
/// Basis of M_k(Gamma) to O(q^prec); for SL(2,Z) in reduced echelon form.
std::vector<QSeries> basis_M(const GammaDescriptor& gamma, int k, std::int64_t prec);

struct Decomposition {
  bool member = false;
  std::vector<Rational> coords;                  // with respect to basis_M
  std::optional<std::int64_t> failing_exponent;  // first exponent of the residual
  std::string reason;
};

constexpr std::int64_t kDefaultSafetyMargin = 10;

/// Express f in basis_M(gamma, k). Throws PrecisionError if f is known to fewer
/// than dim + margin coefficients.
Decomposition decompose(const QSeries& f, const GammaDescriptor& gamma, int k,
                        std::int64_t margin = kDefaultSafetyMargin);

/// Holomorphic at infinity, integral exponents, Pi-degree 0.
bool is_plain_qexpansion(const QSeries& f);

/// f[[a,b],[0,d]]_k.
QSeries slash_upper(const QSeries& f, int k, std::int64_t a, std::int64_t b, std::int64_t d);
/// Sum over b mod d of f[[a,b],[0,d]]_k.
QSeries slash_sum_b(const QSeries& f, int k, std::int64_t a, std::int64_t d);

/// T_k(n) by the coefficient formula.
QSeries hecke_T(int k, std::int64_t n, const QSeries& f);
/// T_k(n) by summing slash_sum_b over ad = n.
QSeries hecke_T_cosets(int k, std::int64_t n, const QSeries& f);
/// (1/sigma(n)) times the weight-2 sum over all cosets of determinant n.
QSeries t_prime(std::int64_t n, const QSeries& f);

}  // namespace cdr
