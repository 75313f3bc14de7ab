#include "cdr/modforms.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "cdr/linalg.hpp"
#include "cdr/serialize.hpp"

namespace cdr {

namespace {

Rational rpow(const Rational& x, long e) {
  Rational r(1);
  Rational base = e >= 0 ? x : 1 / x;
  for (long i = 0; i < (e >= 0 ? e : -e); ++i) r *= base;
  return r;
}

/// n^{k/2}, rejecting irrational values.
Rational det_power(std::int64_t n, int k) {
  if (k % 2 == 0) return rpow(Rational(n), k / 2);
  Integer root;
  Integer nz(static_cast<long>(n));
  mpz_sqrt(root.get_mpz_t(), nz.get_mpz_t());
  if (root * root != nz) {
    throw ArithmeticError("det^(k/2) is irrational for odd k = " + std::to_string(k) +
                          " and det = " + std::to_string(n));
  }
  return rpow(Rational(root), k);
}

void require_plain(const QSeries& f, const char* what) {
  if (!f.has_integral_exponents()) throw std::invalid_argument(std::string(what) + ": fractional exponents");
  if (!f.pi_degree_zero()) throw std::invalid_argument(std::string(what) + ": coefficients must have Pi-degree 0");
}

std::int64_t series_bound(const QSeries& f) {
  if (!f.bound()) throw PrecisionError("an exact series has no natural precision here");
  return *f.bound();
}

}  // namespace

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

Integer divisor_sigma(int k, std::int64_t n) {
  Integer s = 0;
  for (auto d : divisors(n)) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
    s += p;
  }
  return s;
}

QSeries eisenstein(int k, std::int64_t prec) {
  long factor = 0;
  switch (k) {
    case 2: factor = -24; break;
    case 4: factor = 240; break;
    case 6: factor = -504; break;
    default: throw std::invalid_argument("eisenstein: weight must be 2, 4 or 6");
  }
  std::vector<Rational> c(static_cast<std::size_t>(prec));
  c[0] = 1;
  for (std::int64_t n = 1; n < prec; ++n) c[n] = Rational(factor * divisor_sigma(k - 1, n));
  return QSeries::from_coeffs(c, prec);
}

QSeries delta(std::int64_t prec) {
  QSeries e4 = eisenstein(4, prec);
  QSeries e6 = eisenstein(6, prec);
  return (power(e4, 3) - power(e6, 2)) * Scalar(make_rational(1, 1728));
}

GammaDescriptor GammaDescriptor::sl2z() { return GammaDescriptor{}; }

GammaDescriptor GammaDescriptor::from_json_text(const std::string& text) {
  json j = json::parse(text);
  GammaDescriptor g;
  g.kind = Kind::UserTable;
  g.name = j.at("name").get<std::string>();
  g.prec = j.value("prec", std::int64_t{0});
  for (const auto& [w, n] : j.at("dims").items()) {
    int weight = std::stoi(w);
    if (weight % 2 != 0) throw std::invalid_argument("gamma table: odd weight " + w);
    if (n.get<int>() < 0) throw std::invalid_argument("gamma table: negative dimension at weight " + w);
    g.dims[weight] = n.get<int>();
  }
  if (j.contains("bases")) {
    for (const auto& [w, list] : j.at("bases").items()) {
      int weight = std::stoi(w);
      std::vector<QSeries> basis;
      for (const auto& s : list) {
        QSeries f = qseries_from_json(s);
        require_plain(f, "gamma table basis");
        if (f.valuation() && *f.valuation() < 0) throw std::invalid_argument("gamma table: negative exponent");
        basis.push_back(std::move(f));
      }
      auto it = g.dims.find(weight);
      if (it == g.dims.end() || it->second != static_cast<int>(basis.size())) {
        throw std::invalid_argument("gamma table: basis size disagrees with dims at weight " + w);
      }
      g.bases[weight] = std::move(basis);
    }
  }
  return g;
}

GammaDescriptor GammaDescriptor::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open gamma table " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

GammaDescriptor GammaDescriptor::resolve(const std::string& spec) {
  if (spec.empty() || spec == "sl2z" || spec == "SL2Z") return sl2z();
  return load(spec);
}

int dim_M(const GammaDescriptor& gamma, int k) {
  if (k < 0) return 0;
  if (gamma.kind == GammaDescriptor::Kind::UserTable) {
    auto it = gamma.dims.find(k);
    if (it == gamma.dims.end()) {
      throw std::out_of_range("gamma table " + gamma.name + " has no dimension for weight " + std::to_string(k));
    }
    return it->second;
  }
  if (k % 2 != 0) return 0;
  if (k == 2) return 0;
  return k % 12 == 2 ? k / 12 : k / 12 + 1;
}

std::vector<QSeries> basis_M(const GammaDescriptor& gamma, int k, std::int64_t prec) {
  if (dim_M(gamma, k) == 0) return {};
  if (gamma.kind == GammaDescriptor::Kind::UserTable) {
    auto it = gamma.bases.find(k);
    if (it == gamma.bases.end()) {
      throw std::out_of_range("gamma table " + gamma.name + " has no basis at weight " + std::to_string(k));
    }
    std::vector<QSeries> out;
    for (const auto& f : it->second) {
      if (f.bound() && *f.bound() < prec) {
        throw PrecisionError("gamma table " + gamma.name + " is known only to q^" + std::to_string(*f.bound()));
      }
      out.push_back(f.is_exact() ? f + QSeries(prec) : f.truncated(prec));
    }
    return out;
  }
  QSeries e4 = eisenstein(4, prec);
  QSeries e6 = eisenstein(6, prec);
  Matrix rows;
  for (int b = 0; 6 * b <= k; ++b) {
    int rest = k - 6 * b;
    if (rest % 4 != 0) continue;
    QSeries m = power(e4, rest / 4) * power(e6, b) + QSeries(prec);
    std::vector<Rational> row(static_cast<std::size_t>(prec));
    for (std::int64_t e = 0; e < prec; ++e) row[e] = m[e].rational();
    rows.push_back(std::move(row));
  }
  auto pivots = rref(rows);
  if (pivots.size() != rows.size()) throw PrecisionError("precision too low to separate the weight-" + std::to_string(k) + " basis");
  std::vector<QSeries> out;
  for (const auto& row : rows) out.push_back(QSeries::from_coeffs(row, prec));
  return out;
}

bool is_plain_qexpansion(const QSeries& f) {
  return f.has_integral_exponents() && f.pi_degree_zero() && !(f.valuation() && *f.valuation() < 0);
}

Decomposition decompose(const QSeries& f, const GammaDescriptor& gamma, int k, std::int64_t margin) {
  Decomposition out;
  if (!f.has_integral_exponents()) {
    out.reason = "fractional exponents";
    return out;
  }
  if (f.valuation() && *f.valuation() < 0) {
    out.failing_exponent = *f.valuation();
    out.reason = "pole at infinity";
    return out;
  }
  for (const auto& [e, c] : f.coeffs()) {
    if (!c.is_rational()) {
      out.failing_exponent = e;
      out.reason = "coefficient with nonzero Pi-degree";
      return out;
    }
  }
  int d = dim_M(gamma, k);
  std::int64_t n;
  if (f.bound()) {
    n = *f.bound();
  } else {
    std::int64_t top = f.coeffs().empty() ? 0 : f.coeffs().rbegin()->first + 1;
    n = std::max<std::int64_t>(top, d + margin);
  }
  if (gamma.kind == GammaDescriptor::Kind::UserTable && gamma.prec > 0) n = std::min(n, gamma.prec);
  if (n < d + margin) {
    throw PrecisionError("precision q^" + std::to_string(n) + " too low to decide membership in M_" +
                         std::to_string(k) + " (need " + std::to_string(d + margin) + ")");
  }
  auto basis = basis_M(gamma, k, n);
  // echelonize the basis while tracking the change of basis
  Matrix rows;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::vector<Rational> row(static_cast<std::size_t>(n) + basis.size(), Rational(0));
    for (std::int64_t e = 0; e < n; ++e) row[e] = basis[i][e].rational();
    row[n + i] = 1;
    rows.push_back(std::move(row));
  }
  auto pivots = rref(rows);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] >= static_cast<std::size_t>(n)) {
      throw PrecisionError("basis of M_" + std::to_string(k) + " is dependent to precision q^" + std::to_string(n));
    }
  }
  std::vector<Rational> residual(static_cast<std::size_t>(n));
  for (std::int64_t e = 0; e < n; ++e) residual[e] = f[e].rational();
  out.coords.assign(basis.size(), Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    Rational c = residual[pivots[i]];
    if (c == 0) continue;
    for (std::int64_t e = 0; e < n; ++e) residual[e] -= c * rows[i][e];
    for (std::size_t j = 0; j < basis.size(); ++j) out.coords[j] += c * rows[i][n + j];
  }
  for (std::int64_t e = 0; e < n; ++e) {
    if (residual[e] != 0) {
      out.coords.clear();
      out.failing_exponent = e;
      out.reason = "residual does not vanish";
      return out;
    }
  }
  out.member = true;
  return out;
}

QSeries slash_upper(const QSeries& f, int k, std::int64_t a, std::int64_t b, std::int64_t d) {
  if (a <= 0 || d <= 0) throw std::invalid_argument("slash_upper: need a, d > 0");
  Rational factor = det_power(a * d, k) * rpow(Rational(d), -k);
  // f((a tau + b)/d): q^{e/M} -> exp(2 pi i e b/(M d)) q^{e a/(M d)}
  std::int64_t M = f.denom();
  QSeries out = QSeries::blank(M * d, f.bound() ? std::optional<std::int64_t>(*f.bound() * a) : std::nullopt);
  for (const auto& [e, c] : f.coeffs()) {
    Rational phase(e * b, M * d);
    phase.canonicalize();
    Rational twice = 2 * phase;
    if (twice.get_den() != 1) {
      throw ArithmeticError("slash_upper: root of unity of order " + twice.get_den().get_str() + " not representable");
    }
    bool negate = mpz_odd_p(twice.get_num_mpz_t()) != 0;
    Scalar v = c * factor;
    out.set_coeff(e * a, negate ? -v : v);
  }
  return out.normalized();
}

QSeries slash_sum_b(const QSeries& f, int k, std::int64_t a, std::int64_t d) {
  if (a <= 0 || d <= 0) throw std::invalid_argument("slash_sum_b: need a, d > 0");
  if (!f.has_integral_exponents()) throw std::invalid_argument("slash_sum_b: fractional exponents");
  // sum_b exp(2 pi i e b/d) = d if d | e, else 0
  Rational factor = det_power(a * d, k) * rpow(Rational(d), 1 - k);
  std::optional<std::int64_t> bound;
  if (f.bound()) bound = (*f.bound() + d - 1) / d * a;
  QSeries out = QSeries::blank(1, bound);
  for (const auto& [e, c] : f.coeffs()) {
    if (e % d != 0) continue;
    out.set_coeff(e / d * a, c * factor);
  }
  return out.normalized();
}

QSeries hecke_T(int k, std::int64_t n, const QSeries& f) {
  if (n < 1) throw std::invalid_argument("hecke_T: n must be positive");
  require_plain(f, "hecke_T");
  std::int64_t p = series_bound(f);
  std::int64_t out_prec = (p - 1) / n + 1;
  std::vector<Rational> c(static_cast<std::size_t>(out_prec));
  for (std::int64_t m = 0; m < out_prec; ++m) {
    std::int64_t g = std::gcd(m, n);
    Rational s(0);
    for (auto d : divisors(g)) {
      s += rpow(Rational(d), k - 1) * f[m * n / (d * d)].rational();
    }
    c[m] = s;
  }
  return QSeries::from_coeffs(c, out_prec);
}

QSeries hecke_T_cosets(int k, std::int64_t n, const QSeries& f) {
  if (k % 2 != 0) throw ArithmeticError("hecke_T_cosets: odd weight");
  QSeries sum;
  for (auto a : divisors(n)) sum += slash_sum_b(f, k, a, n / a);
  return sum * Scalar(rpow(Rational(n), k / 2 - 1));
}

QSeries t_prime(std::int64_t n, const QSeries& f) {
  QSeries sum;
  for (auto a : divisors(n)) sum += slash_sum_b(f, 2, a, n / a);
  return sum * Scalar(Rational(1) / Rational(divisor_sigma(1, n)));
}

}  // namespace cdr
