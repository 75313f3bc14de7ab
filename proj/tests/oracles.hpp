#pragma once

// Independent reference computations for the tests: plain rational vectors,
// trial-division divisor sums, and brute-force counting.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "cdr/qseries.hpp"

namespace oracle {

using Vec = std::vector<mpq_class>;

inline mpz_class sigma(int k, long n) {
  mpz_class s = 0;
  for (long d = 1; d <= n; ++d) {
    if (n % d == 0) {
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
      s += p;
    }
  }
  return s;
}

/// E2, E4, E6 from 1 - 24, 240, -504 times divisor sums.
inline Vec eisenstein(int k, int n) {
  const long c = k == 2 ? -24 : k == 4 ? 240 : -504;
  Vec v(n, 0);
  v[0] = 1;
  for (int i = 1; i < n; ++i) v[i] = mpq_class(sigma(k - 1, i) * c);
  return v;
}

inline Vec mul(const Vec& a, const Vec& b) {
  Vec out(std::min(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) out[i] += a[j] * b[i - j];
  }
  return out;
}

inline Vec add(const Vec& a, const Vec& b, const mpq_class& s = 1) {
  Vec out(std::min(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + s * b[i];
  return out;
}

inline Vec scale(Vec a, const mpq_class& s) {
  for (auto& x : a) x *= s;
  return a;
}

inline Vec theta(Vec a) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] *= static_cast<long>(i);
  return a;
}

/// q prod (1 - q^n)^24.
inline Vec delta(int n) {
  Vec p(n, 0);
  p[0] = 1;
  for (int m = 1; m < n; ++m) {
    for (int r = 0; r < 24; ++r) {
      for (int i = n - 1; i >= m; --i) p[i] -= p[i - m];
    }
  }
  Vec out(n, 0);
  for (int i = 1; i < n; ++i) out[i] = p[i - 1];
  return out;
}

/// Number of partitions of n into exactly k parts, each at most maxpart.
inline long count_parts(int n, int k, int maxpart) {
  if (k == 0) return n == 0 ? 1 : 0;
  long c = 0;
  for (int p = std::min(n, maxpart); p >= 1; --p) c += count_parts(n - p, k - 1, p);
  return c;
}

inline long count_distinct_parts(int n, int k, int maxpart) {
  if (k == 0) return n == 0 ? 1 : 0;
  long c = 0;
  for (int p = std::min(n, maxpart); p >= 1; --p) c += count_distinct_parts(n - p, k - 1, p - 1);
  return c;
}

/// Coefficients of q^0..q^{n-1} of a library series, which must be Pi-free.
inline Vec coeffs(const cdr::QSeries& s, int n) {
  Vec v(n, 0);
  for (int i = 0; i < n; ++i) v[i] = s[i].rational();
  return v;
}

}  // namespace oracle
