#include "cdr/scalar.hpp"

#include <sstream>

namespace cdr {

Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0) {
    throw std::invalid_argument("malformed rational: '" + s + "'");
  }
  r.canonicalize();
  return r;
}

Rational factorial(long n) {
  if (n < 0) throw ArithmeticError("factorial of negative integer");
  Integer z;
  mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(z);
}

Rational binomial(long n, long k) {
  if (k < 0) return Rational(0);
  Rational r(1);
  for (long i = 0; i < k; ++i) {
    r *= Rational(n - i);
    r /= Rational(i + 1);
  }
  return r;
}

Scalar::Scalar(const Rational& r, int pi_deg) {
  if (r != 0) terms_.emplace(pi_deg, r);
}

bool Scalar::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational Scalar::rational() const {
  if (!is_rational()) throw ArithmeticError("scalar has nonzero Pi-degree part: " + to_string());
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Rational Scalar::coeff(int pi_deg) const {
  auto it = terms_.find(pi_deg);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> Scalar::monomial_degree() const {
  if (terms_.size() != 1) return std::nullopt;
  return terms_.begin()->first;
}

int Scalar::min_degree() const {
  if (terms_.empty()) throw ArithmeticError("degree of zero scalar");
  return terms_.begin()->first;
}

int Scalar::max_degree() const {
  if (terms_.empty()) throw ArithmeticError("degree of zero scalar");
  return terms_.rbegin()->first;
}

Scalar Scalar::conj() const {
  Scalar out = *this;
  for (auto& [d, c] : out.terms_) {
    if (d % 2 != 0) c = -c;
  }
  return out;
}

Scalar Scalar::times_pi(int deg) const {
  Scalar out;
  for (const auto& [d, c] : terms_) out.terms_.emplace(d + deg, c);
  return out;
}

void Scalar::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& [d, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(d, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (const auto& [d, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(d, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out;
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [da, ca] : a.terms_) {
    for (const auto& [db, cb] : b.terms_) {
      Rational p = ca * cb;
      auto [it, inserted] = out.terms_.emplace(da + db, p);
      if (!inserted) it->second += p;
    }
  }
  out.prune();
  return out;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  *this = *this * o;
  return *this;
}

Scalar& Scalar::operator*=(const Rational& r) {
  if (r == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, c] : terms_) c *= r;
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& [d, c] : out.terms_) c = -c;
  return out;
}

Scalar Scalar::operator/(const Scalar& o) const {
  auto deg = o.monomial_degree();
  if (!deg) throw ArithmeticError("division by non-monomial scalar " + o.to_string());
  Rational inv = 1 / o.terms_.begin()->second;
  Scalar out = times_pi(-*deg);
  out *= inv;
  return out;
}

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Rational a = abs(c);
    if (d == 0) {
      os << cdr::to_string(a);
      continue;
    }
    if (a != 1) os << cdr::to_string(a) << "*";
    os << "Pi";
    if (d != 1) os << "^" << d;
  }
  return os.str();
}

}  // namespace cdr
