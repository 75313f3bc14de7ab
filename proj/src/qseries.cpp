#include "cdr/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cdr {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  // b > 0
  std::int64_t q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

std::optional<std::int64_t> min_bound(std::optional<std::int64_t> a, std::optional<std::int64_t> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

void check_bound(const std::optional<std::int64_t>& b) {
  if (b && *b <= 0) throw PrecisionError("q-series precision underflow");
}

}  // namespace

QSeries::QSeries(std::int64_t prec) : bound_(prec) { check_bound(bound_); }

QSeries QSeries::constant(const Scalar& c, std::optional<std::int64_t> prec) {
  QSeries s;
  s.bound_ = prec;
  check_bound(prec);
  if (!c.is_zero()) s.coeffs_.emplace(0, c);
  return s;
}

QSeries QSeries::from_coeffs(const std::vector<Rational>& c, std::int64_t prec) {
  QSeries s(prec);
  for (std::size_t i = 0; i < c.size() && static_cast<std::int64_t>(i) < prec; ++i) {
    if (c[i] != 0) s.coeffs_.emplace(static_cast<std::int64_t>(i), Scalar(c[i]));
  }
  return s;
}

QSeries QSeries::monomial(std::int64_t num, std::int64_t den, const Scalar& c) {
  if (den <= 0) throw std::invalid_argument("monomial denominator must be positive");
  QSeries s;
  s.denom_ = den;
  if (!c.is_zero()) s.coeffs_.emplace(num, c);
  s.normalize();
  return s;
}

QSeries QSeries::blank(std::int64_t denom, std::optional<std::int64_t> bound) {
  if (denom <= 0) throw std::invalid_argument("q-series denominator must be positive");
  check_bound(bound);
  QSeries s;
  s.denom_ = denom;
  s.bound_ = bound;
  return s;
}

QSeries QSeries::normalized() const {
  QSeries out = *this;
  out.normalize();
  return out;
}

std::optional<Rational> QSeries::prec() const {
  if (!bound_) return std::nullopt;
  Rational r(*bound_, denom_);
  r.canonicalize();
  return r;
}

Scalar QSeries::coeff(std::int64_t e) const {
  if (bound_ && e >= *bound_) {
    throw PrecisionError("coefficient q^(" + std::to_string(e) + "/" + std::to_string(denom_) +
                         ") beyond precision");
  }
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? Scalar() : it->second;
}

Scalar QSeries::operator[](std::int64_t n) const { return coeff(n * denom_); }

bool QSeries::pi_degree_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return kv.second.is_rational(); });
}

std::optional<int> QSeries::homogeneous_pi_degree() const {
  std::optional<int> deg;
  for (const auto& [e, c] : coeffs_) {
    auto d = c.monomial_degree();
    if (!d) return std::nullopt;
    if (deg && *deg != *d) return std::nullopt;
    deg = d;
  }
  return deg;
}

std::optional<std::int64_t> QSeries::valuation() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.begin()->first;
}

int QSeries::min_pi_degree() const {
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    int d = c.min_degree();
    m = first ? d : std::min(m, d);
    first = false;
  }
  return m;
}

int QSeries::max_pi_degree() const {
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    int d = c.max_degree();
    m = first ? d : std::max(m, d);
    first = false;
  }
  return m;
}

QSeries QSeries::pi_part(int d) const {
  QSeries out = *this;
  out.coeffs_.clear();
  for (const auto& [e, c] : coeffs_) {
    Rational r = c.coeff(d);
    if (r != 0) out.coeffs_.emplace(e, Scalar(r, d));
  }
  out.normalize();
  return out;
}

QSeries QSeries::with_denom(std::int64_t L) const {
  if (L <= 0 || L % denom_ != 0) throw std::invalid_argument("with_denom: not a multiple of the denominator");
  std::int64_t f = L / denom_;
  QSeries out;
  out.denom_ = L;
  if (bound_) out.bound_ = *bound_ * f;
  for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e * f, c);
  return out;
}

QSeries QSeries::truncated(const Rational& prec) const {
  // new bound in 1/denom units: ceil(prec * denom)
  Rational scaled = prec * denom_;
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  std::int64_t nb = q.get_si();
  if (bound_ && *bound_ < nb) throw PrecisionError("cannot truncate beyond the known precision");
  check_bound(nb);
  QSeries out;
  out.denom_ = denom_;
  out.bound_ = nb;
  for (const auto& [e, c] : coeffs_) {
    if (e < nb) out.coeffs_.emplace(e, c);
  }
  out.normalize();
  return out;
}

void QSeries::set_coeff(std::int64_t e, const Scalar& c) {
  if (bound_ && e >= *bound_) throw PrecisionError("set_coeff beyond precision");
  if (c.is_zero()) {
    coeffs_.erase(e);
  } else {
    coeffs_[e] = c;
  }
}

void QSeries::normalize() {
  if (denom_ == 1) return;
  std::int64_t g = denom_;
  for (const auto& [e, c] : coeffs_) {
    g = std::gcd(g, e < 0 ? -e : e);
    if (g == 1) return;
  }
  denom_ /= g;
  std::map<std::int64_t, Scalar> nc;
  for (auto& [e, c] : coeffs_) nc.emplace(e / g, std::move(c));
  coeffs_ = std::move(nc);
  if (bound_) bound_ = ceil_div(*bound_, g);
}

QSeries& QSeries::operator+=(const QSeries& o) {
  std::int64_t L = std::lcm(denom_, o.denom_);
  if (L != denom_) *this = with_denom(L);
  const QSeries& b = (o.denom_ == L) ? o : o.with_denom(L);
  bound_ = min_bound(bound_, b.bound_);
  for (const auto& [e, c] : b.coeffs_) {
    auto [it, inserted] = coeffs_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }
  if (bound_) {
    coeffs_.erase(coeffs_.lower_bound(*bound_), coeffs_.end());
  }
  check_bound(bound_);
  normalize();
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) { return *this += -o; }

QSeries& QSeries::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    normalize();
    return *this;
  }
  for (auto& [e, v] : coeffs_) v *= c;
  return *this;
}

QSeries QSeries::operator-() const {
  QSeries out = *this;
  for (auto& [e, v] : out.coeffs_) v = -v;
  return out;
}

QSeries operator*(const QSeries& x, const QSeries& y) {
  std::int64_t L = std::lcm(x.denom_, y.denom_);
  const QSeries a = x.with_denom(L);
  const QSeries b = y.with_denom(L);
  // O(q^A) * y is O(q^{A + low(y)}), where low(y) is the least exponent y can have
  auto low = [](const QSeries& s) -> std::optional<std::int64_t> {
    auto v = s.valuation();
    if (v && s.bound_) return std::min(*v, *s.bound_);
    if (v) return v;
    return s.bound_;
  };
  std::optional<std::int64_t> bound;
  if (a.bound_) {
    if (auto lb = low(b)) bound = *a.bound_ + *lb;
  }
  if (b.bound_) {
    if (auto la = low(a)) bound = min_bound(bound, *b.bound_ + *la);
  }
  check_bound(bound);
  QSeries out;
  out.denom_ = L;
  out.bound_ = bound;
  for (const auto& [ea, ca] : a.coeffs_) {
    for (const auto& [eb, cb] : b.coeffs_) {
      std::int64_t e = ea + eb;
      if (bound && e >= *bound) break;
      Scalar p = ca * cb;
      auto [it, inserted] = out.coeffs_.emplace(e, p);
      if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) out.coeffs_.erase(it);
      }
    }
  }
  out.normalize();
  return out;
}

bool operator==(const QSeries& a, const QSeries& b) {
  return a.denom_ == b.denom_ && a.bound_ == b.bound_ && a.coeffs_ == b.coeffs_;
}

std::string QSeries::to_string(std::size_t max_terms) const {
  std::ostringstream os;
  std::size_t n = 0;
  for (const auto& [e, c] : coeffs_) {
    if (n == max_terms) {
      os << " + ...";
      break;
    }
    if (n > 0) os << " + ";
    os << "(" << c.to_string() << ")";
    if (e != 0) {
      os << "*q";
      if (denom_ == 1) {
        if (e != 1) os << "^" << e;
      } else {
        os << "^(" << e << "/" << denom_ << ")";
      }
    }
    ++n;
  }
  if (n == 0) os << "0";
  if (bound_) {
    os << " + O(q^";
    if (denom_ == 1) {
      os << *bound_;
    } else {
      os << "(" << *bound_ << "/" << denom_ << ")";
    }
    os << ")";
  }
  return os.str();
}

bool agree(const QSeries& a, const QSeries& b) { return (a - b).is_zero(); }

QSeries power(const QSeries& x, unsigned n) {
  QSeries r = QSeries::constant(Scalar(1));
  for (unsigned i = 0; i < n; ++i) r = r * x;
  return r;
}

QSeries theta(const QSeries& x) {
  QSeries out = x;
  for (const auto& [e, c] : x.coeffs()) {
    out.set_coeff(e, c * make_rational(e, x.denom()));
  }
  return out;
}

QSeries theta(const QSeries& x, unsigned n) {
  QSeries r = x;
  for (unsigned i = 0; i < n; ++i) r = theta(r);
  return r;
}

QSeries tau_derivative(const QSeries& x) { return theta(x) * Scalar(Rational(2), 1); }

QSeries tau_derivative(const QSeries& x, unsigned n) {
  QSeries r = x;
  for (unsigned i = 0; i < n; ++i) r = tau_derivative(r);
  return r;
}

QSeries rebase(const QSeries& x, const Rational& a) {
  if (a <= 0) throw std::invalid_argument("rebase factor must be positive");
  std::int64_t p = a.get_num().get_si();
  std::int64_t d = a.get_den().get_si();
  QSeries out;
  out.denom_ = x.denom_ * d;
  if (x.bound_) out.bound_ = *x.bound_ * p;
  for (const auto& [e, c] : x.coeffs_) out.coeffs_.emplace(e * p, c);
  out.normalize();
  return out;
}

}  // namespace cdr
