#include "cdr/brackets.hpp"

#include "cdr/linalg.hpp"

#include <map>

namespace cdr {

namespace {

Rational ext_factorial(long n) {
  if (n == -1) return Rational(1);
  return factorial(n);
}

Scalar two_pi_power(int n) {
  Rational r(1);
  for (int i = 0; i < (n >= 0 ? n : -n); ++i) r *= 2;
  if (n < 0) r = 1 / r;
  return Scalar(r, n);
}

std::int64_t prec_of(const BracketArg& f, std::int64_t fallback) {
  if (!f.constant && f.series.bound()) return *f.series.bound();
  return fallback;
}

QSeries normalize_out(const QSeries& raw, unsigned n) {
  QSeries out = raw * two_pi_power(-static_cast<int>(n));
  if (!out.pi_degree_zero()) throw ArithmeticError("bracket left a nonzero Pi-degree residue: " + out.to_string(4));
  return out;
}

}  // namespace

Rational extended_binomial(long n, long k) {
  if (k < 0 || n - k < -1 || n < -1) return Rational(0);
  return ext_factorial(n) / (factorial(k) * ext_factorial(n - k));
}

QSeries quasi_e(std::int64_t prec) { return eisenstein(2, prec) * Scalar(make_rational(1, 6), 1); }

BracketArg BracketArg::form(int weight, QSeries f) {
  if (weight < 1) throw std::invalid_argument("bracket: a form argument needs weight >= 1");
  BracketArg a;
  a.weight = weight;
  a.series = std::move(f);
  a.constant = false;
  return a;
}

BracketArg BracketArg::scalar(Rational c) {
  BracketArg a;
  a.c = std::move(c);
  return a;
}

QSeries generalized_derivative(const BracketArg& f, unsigned r, std::int64_t prec) {
  if (!f.constant) return tau_derivative(f.series, r);
  if (r == 0) return QSeries::constant(Scalar(f.c), prec);
  return tau_derivative(quasi_e(prec), r - 1) * Scalar(f.c);
}

QSeries rankin_cohen(const BracketArg& f, const BracketArg& h, unsigned n) {
  if (f.constant || h.constant) throw std::invalid_argument("rankin_cohen: arguments must be nonconstant");
  const long k = f.weight, l = h.weight;
  QSeries sum;
  for (unsigned r = 0; r <= n; ++r) {
    unsigned s = n - r;
    Rational c = binomial(n + k - 1, s) * binomial(n + l - 1, r);
    if (r % 2 == 1) c = -c;
    sum += tau_derivative(f.series, r) * tau_derivative(h.series, s) * Scalar(c);
  }
  return normalize_out(sum, n);
}

QSeries one_bracket(const BracketArg& f, unsigned n) {
  if (f.constant) throw std::invalid_argument("one_bracket: argument must be nonconstant");
  if (n == 0) return f.series;
  const long k = f.weight;
  std::int64_t prec = prec_of(f, 0);
  QSeries e = quasi_e(prec);
  QSeries sum = tau_derivative(f.series, n) * Scalar(make_rational(1, n));
  for (unsigned r = 1; r <= n; ++r) {
    unsigned s = n - r;
    Rational c = binomial(n - 1, s) * binomial(n + k - 1, r);
    if (r % 2 == 1) c = -c;
    sum += tau_derivative(e, r - 1) * tau_derivative(f.series, s) * Scalar(c);
  }
  return normalize_out(sum, n);
}

QSeries one_one_bracket(unsigned n, std::int64_t prec) {
  if (n == 0) return QSeries::constant(Scalar(1), prec);
  QSeries e = quasi_e(prec);
  QSeries sum = tau_derivative(e, n - 1) * Scalar(make_rational(n % 2 == 0 ? 2 : 0, n));
  for (unsigned r = 1; r + 1 <= n; ++r) {
    unsigned s = n - r;
    Rational c = binomial(n - 1, s) * binomial(n - 1, r);
    if (r % 2 == 1) c = -c;
    sum += tau_derivative(e, r - 1) * tau_derivative(e, s - 1) * Scalar(c);
  }
  return normalize_out(sum, n) + QSeries(prec);
}

QSeries one_one_bracket_e2_form(unsigned n, std::int64_t prec) {
  if (n == 0) return QSeries::constant(Scalar(1), prec);
  QSeries e2 = eisenstein(2, prec);
  QSeries sum = tau_derivative(e2, n - 1) * Scalar(make_rational(n % 2 == 0 ? 2 : 0, 12 * n)) *
                two_pi_power(1 - static_cast<int>(n));
  if (n >= 2) {
    QSeries quad;
    for (unsigned r = 0; r <= n - 2; ++r) {
      unsigned s = n - 2 - r;
      Rational c = binomial(n - 1, r) * binomial(n - 1, s);
      if (r % 2 == 0) c = -c;
      quad += tau_derivative(e2, r) * tau_derivative(e2, s) * Scalar(c);
    }
    sum += quad * Scalar(make_rational(1, 144)) * two_pi_power(2 - static_cast<int>(n));
  }
  if (!sum.pi_degree_zero()) throw ArithmeticError("bracket left a nonzero Pi-degree residue");
  return sum + QSeries(prec);
}

QSeries modified_bracket(const BracketArg& f, const BracketArg& h, unsigned n, std::int64_t prec) {
  if (!f.constant && !h.constant) return rankin_cohen(f, h, n);
  if (f.constant && h.constant) return one_one_bracket(n, prec) * Scalar(f.c * h.c);
  if (f.constant) return one_bracket(h, n) * Scalar(f.c);
  Rational sign = n % 2 == 0 ? Rational(1) : Rational(-1);
  return one_bracket(f, n) * Scalar(h.c * sign);
}

QSeries modified_bracket_unified(const BracketArg& f, const BracketArg& h, unsigned n, std::int64_t prec) {
  const long k = f.weight, l = h.weight;
  std::int64_t p = prec_of(f, prec_of(h, prec));
  QSeries sum = QSeries(p);
  for (unsigned r = 0; r <= n; ++r) {
    unsigned s = n - r;
    Rational c = extended_binomial(n + k - 1, s) * extended_binomial(n + l - 1, r);
    if (c == 0) continue;
    if (r % 2 == 1) c = -c;
    sum += generalized_derivative(f, r, p) * generalized_derivative(h, s, p) * Scalar(c);
  }
  return normalize_out(sum, n);
}

QSeries JacobiLikeSeries::normalized(unsigned n) const {
  QSeries out = x.at(n) * two_pi_power(-static_cast<int>(n));
  if (!out.pi_degree_zero()) throw ArithmeticError("Jacobi-like coefficient is not Pi-degree 0 after normalization");
  return out;
}

JacobiLikeSeries JacobiLikeSeries::negated_variable() const {
  JacobiLikeSeries out = *this;
  for (std::size_t n = 1; n < out.x.size(); n += 2) out.x[n] = -out.x[n];
  return out;
}

JacobiLikeSeries ck_lift(const BracketArg& f, unsigned xmax) {
  if (f.constant) throw std::invalid_argument("ck_lift: use ck_lift_const for constants");
  JacobiLikeSeries out;
  out.weight = f.weight;
  QSeries d = f.series;
  for (unsigned n = 0; n <= xmax; ++n) {
    out.x.push_back(d * Scalar(1 / (factorial(n) * factorial(n + f.weight - 1))));
    d = tau_derivative(d);
  }
  return out;
}

JacobiLikeSeries ck_lift_const(unsigned xmax, std::int64_t prec) {
  JacobiLikeSeries out;
  out.x.push_back(QSeries::constant(Scalar(1), prec));
  QSeries d = quasi_e(prec);
  for (unsigned n = 1; n <= xmax; ++n) {
    out.x.push_back(d * Scalar(1 / (factorial(n) * factorial(n - 1))));
    d = tau_derivative(d);
  }
  return out;
}

std::vector<JacobiCoefficient> jacobi_product(const JacobiLikeSeries& phi, const JacobiLikeSeries& psi,
                                              const GammaDescriptor& gamma) {
  if (phi.x.size() != psi.x.size()) throw std::invalid_argument("jacobi_product: Xmax mismatch");
  JacobiLikeSeries prod;
  prod.weight = phi.weight + psi.weight;
  JacobiLikeSeries neg = phi.negated_variable();
  for (std::size_t n = 0; n < phi.x.size(); ++n) {
    QSeries c;
    for (std::size_t i = 0; i <= n; ++i) c += neg.x[i] * psi.x[n - i];
    prod.x.push_back(std::move(c));
  }
  std::vector<JacobiCoefficient> out;
  for (std::size_t n = 0; n < prod.x.size(); ++n) {
    JacobiCoefficient jc;
    jc.weight = prod.weight + 2 * static_cast<int>(n);
    jc.series = prod.normalized(static_cast<unsigned>(n));
    jc.membership = decompose(jc.series, gamma, jc.weight);
    out.push_back(std::move(jc));
  }
  return out;
}

ProbeResult uniqueness_probe(int k, unsigned n, std::int64_t prec) {
  GammaDescriptor sl2z = GammaDescriptor::sl2z();
  auto forms = basis_M(sl2z, k, prec);
  auto target = basis_M(sl2z, k + 2 * static_cast<int>(n), prec);
  BracketArg one = BracketArg::scalar(1);
  const std::size_t nc = n + 1;
  const std::size_t ny = target.size();
  const std::size_t ncols = nc + forms.size() * ny;
  Matrix rows;
  for (std::size_t fi = 0; fi < forms.size(); ++fi) {
    BracketArg f = BracketArg::form(k, forms[fi]);
    std::vector<QSeries> terms;
    for (unsigned r = 0; r <= n; ++r) {
      QSeries t = generalized_derivative(one, r, prec) * generalized_derivative(f, n - r, prec);
      terms.push_back(t * two_pi_power(-static_cast<int>(n)));
    }
    for (std::int64_t e = 0; e < prec; ++e) {
      std::vector<Rational> row(ncols, Rational(0));
      for (unsigned r = 0; r <= n; ++r) row[r] = terms[r][e].rational();
      for (std::size_t j = 0; j < ny; ++j) row[nc + fi * ny + j] = -target[j][e].rational();
      rows.push_back(std::move(row));
    }
  }
  auto ker = kernel(rows, ncols);
  // project to the c-part
  Matrix proj;
  for (const auto& v : ker) proj.emplace_back(v.begin(), v.begin() + static_cast<long>(nc));
  ProbeResult res;
  auto pivots = rref(proj);
  res.kernel_dim = pivots.size();
  for (unsigned r = 0; r <= n; ++r) {
    Rational c = extended_binomial(n - 1, n - r) * extended_binomial(n + k - 1, r);
    res.expected.push_back(r % 2 == 1 ? -c : c);
  }
  if (res.kernel_dim == 1) {
    res.vector = proj[0];
    // proportional iff the 2 x (n+1) matrix has rank 1
    Matrix both = {res.vector, res.expected};
    res.proportional = rank(both) == 1;
  }
  return res;
}

namespace {

// Polynomials in X = E2, E4, E6 and the Serre derivatives f_j of a generic form f.
using Monomial = std::vector<int>;  // exponents of X, E4, E6, f_0, f_1, ...
using Poly = std::map<Monomial, Rational>;

void add_term(Poly& p, const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = p.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      Monomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      add_term(out, m, ca * cb);
    }
  }
  return out;
}

// theta = q d/dq via the Ramanujan system and theta f_j = f_{j+1} + (k+2j)/12 X f_j.
Poly theta_poly(const Poly& p, int k) {
  Poly out;
  for (const auto& [m, c] : p) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      Monomial base = m;
      --base[i];
      const Rational e = c * m[i];
      auto with = [&](std::initializer_list<std::pair<std::size_t, int>> bumps, const Rational& coef) {
        Monomial t = base;
        for (auto [idx, d] : bumps) t[idx] += d;
        add_term(out, t, e * coef);
      };
      if (i == 0) {
        with({{0, 2}}, make_rational(1, 12));
        with({{1, 1}}, make_rational(-1, 12));
      } else if (i == 1) {
        with({{0, 1}, {1, 1}}, make_rational(1, 3));
        with({{2, 1}}, make_rational(-1, 3));
      } else if (i == 2) {
        with({{0, 1}, {2, 1}}, make_rational(1, 2));
        with({{1, 2}}, make_rational(-1, 2));
      } else {
        const int j = static_cast<int>(i) - 3;
        with({{i + 1, 1}}, Rational(1));
        with({{0, 1}, {i, 1}}, make_rational(k + 2 * j, 12));
      }
    }
  }
  return out;
}

}  // namespace

ProbeResult uniqueness_probe_formal(int k, unsigned n) {
  const std::size_t nvars = 3 + n + 2;
  Monomial x(nvars, 0), f0(nvars, 0);
  x[0] = 1;
  f0[3] = 1;
  std::vector<Poly> fder{Poly{{f0, Rational(1)}}};
  for (unsigned s = 1; s <= n; ++s) fder.push_back(theta_poly(fder.back(), k));
  std::vector<Poly> one{Poly{{Monomial(nvars, 0), Rational(1)}}};
  Poly e2{{x, make_rational(1, 12)}};
  for (unsigned r = 1; r <= n; ++r) {
    one.push_back(e2);
    e2 = theta_poly(e2, 2);
  }
  std::vector<Poly> terms;
  for (unsigned r = 0; r <= n; ++r) terms.push_back(multiply(one[r], fder[n - r]));
  // modular iff every monomial containing X cancels
  std::map<Monomial, std::vector<Rational>> rows;
  for (unsigned r = 0; r <= n; ++r) {
    for (const auto& [m, c] : terms[r]) {
      if (m[0] == 0) continue;
      auto& row = rows.try_emplace(m, std::vector<Rational>(n + 1, Rational(0))).first->second;
      row[r] += c;
    }
  }
  Matrix mat;
  for (auto& [m, row] : rows) mat.push_back(row);
  auto ker = kernel(mat, n + 1);
  ProbeResult res;
  res.kernel_dim = ker.size();
  for (unsigned r = 0; r <= n; ++r) {
    Rational c = extended_binomial(n - 1, n - r) * extended_binomial(n + k - 1, r);
    res.expected.push_back(r % 2 == 1 ? -c : c);
  }
  if (res.kernel_dim == 1) {
    res.vector = ker[0];
    Matrix both = {res.vector, res.expected};
    res.proportional = rank(both) == 1;
  }
  return res;
}

}  // namespace cdr
