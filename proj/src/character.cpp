#include "cdr/character.hpp"

#include <stdexcept>

#include "cdr/lifting.hpp"
#include "cdr/partition.hpp"

namespace cdr {

namespace {

using Poly = std::vector<Integer>;  // truncated power series in q

Poly mul(const Poly& a, const Poly& b) {
  Poly out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// prod_{i=1}^k 1/(1-q^i) for k = 0..kmax.
std::vector<Poly> inverse_products(int kmax, int qmax) {
  std::vector<Poly> out;
  Poly cur(static_cast<std::size_t>(qmax) + 1, 0);
  cur[0] = 1;
  out.push_back(cur);
  for (int i = 1; i <= kmax; ++i) {
    // multiply by 1/(1-q^i): running sum with stride i
    for (int e = i; e <= qmax; ++e) cur[e] += cur[e - i];
    out.push_back(cur);
  }
  return out;
}

void add_shifted(Poly& acc, const Poly& p, long shift, const Integer& c) {
  if (c == 0) return;
  for (long e = 0; e + shift < static_cast<long>(acc.size()); ++e) {
    if (e + shift < 0) continue;
    acc[static_cast<std::size_t>(e + shift)] += c * p[static_cast<std::size_t>(e)];
  }
}

}  // namespace

CharacterSeries char_closed(const GammaDescriptor& gamma, int qmax) {
  CharacterSeries out;
  out.coeffs.assign(static_cast<std::size_t>(qmax) + 1, 0);
  auto inv = inverse_products(2 * qmax + 4, qmax);
  for (int m = 0; m <= qmax + 1; ++m) {
    int dim = dim_M(gamma, 2 * m);
    if (dim == 0) continue;
    for (int n = 0; m + 2 * n <= qmax + 1; ++n) {
      for (int u = 0; u <= n; ++u) {
        for (int v = 0; v <= m + n; ++v) {
          long e = m + 2 * n + u * (u - 1) / 2 + v * (v - 3) / 2;
          if (e > qmax) continue;
          Poly p = mul(mul(inv[u], inv[v]), mul(inv[n - u], inv[m + n - v]));
          add_shifted(out.coeffs, p, e, dim);
        }
      }
    }
  }
  return out;
}

CharacterSeries char_s_form(const GammaDescriptor& gamma, int qmax) {
  CharacterSeries out;
  out.coeffs.assign(static_cast<std::size_t>(qmax) + 1, 0);
  auto inv = inverse_products(qmax + 2, qmax);
  for (int s1 = 0; s1 <= qmax; ++s1) {
    for (int s2 = 0; s1 + s2 <= qmax; ++s2) {
      for (int s3 = 0; s1 + s2 + s3 * (s3 + 1) / 2 <= qmax; ++s3) {
        for (int s4 = 0; s1 + s2 + s3 * (s3 + 1) / 2 + s4 * (s4 - 1) / 2 <= qmax; ++s4) {
          int dim = dim_M(gamma, 2 * (-s1 + s2 - s3 + s4));
          if (dim == 0) continue;
          long e = s1 + s2 + s3 * (s3 + 1) / 2 + s4 * (s4 - 1) / 2;
          Poly p = mul(mul(inv[s1], inv[s2]), mul(inv[s3], inv[s4]));
          add_shifted(out.coeffs, p, e, dim);
        }
      }
    }
  }
  return out;
}

std::map<int, std::map<int, Integer>> trace_product(int qmax) {
  // bivariate series: t-exponent -> q-series
  using Bi = std::map<int, Poly>;
  const std::size_t len = static_cast<std::size_t>(qmax) + 1;
  Bi acc;
  acc[0] = Poly(len, 0);
  acc[0][0] = 1;
  auto times = [&](const Bi& a, const Bi& factor) {
    Bi out;
    for (const auto& [ta, pa] : a) {
      for (const auto& [tb, pb] : factor) {
        Poly prod = mul(pa, pb);
        auto& slot = out[ta + tb];
        if (slot.empty()) slot.assign(len, 0);
        for (std::size_t i = 0; i < len; ++i) slot[i] += prod[i];
      }
    }
    return out;
  };
  auto mono = [&](int t, int q) {
    Bi f;
    Poly p(len, 0);
    if (q <= qmax) p[static_cast<std::size_t>(q)] = 1;
    f[t] = p;
    return f;
  };
  auto plus = [&](Bi a, const Bi& b) {
    for (const auto& [t, p] : b) {
      auto& slot = a[t];
      if (slot.empty()) slot.assign(len, 0);
      for (std::size_t i = 0; i < len; ++i) slot[i] += p[i];
    }
    return a;
  };
  for (int n = 1; n <= qmax; ++n) {
    for (int sign : {2, -2}) {
      // 1/(1 - t^{sign} q^n)
      Bi geo = mono(0, 0);
      for (int k = 1; k * n <= qmax; ++k) geo = plus(geo, mono(sign * k, k * n));
      acc = times(acc, geo);
    }
    acc = times(acc, plus(mono(0, 0), mono(2, n)));
    acc = times(acc, plus(mono(0, 0), mono(-2, n)));
  }
  acc = times(acc, plus(mono(0, 0), mono(-2, 0)));
  std::map<int, std::map<int, Integer>> out;
  for (const auto& [t, p] : acc) {
    for (std::size_t n = 0; n < len; ++n) {
      if (p[n] != 0) out[static_cast<int>(n)][t] = p[n];
    }
  }
  return out;
}

std::map<int, std::map<int, Integer>> trace_enumerate(int qmax) {
  std::map<int, std::map<int, Integer>> out;
  for (int n = 0; n <= qmax; ++n) {
    for (const auto& t : enumerate_fourtuples(n)) out[n][-2 * t.part()] += 1;
  }
  return out;
}

CharacterSeries char_enumerate(const GammaDescriptor& gamma, int qmax) {
  auto tally = trace_enumerate(qmax);
  auto product = trace_product(qmax);
  if (tally != product) throw std::logic_error("four-tuple tally disagrees with the product expansion");
  CharacterSeries out;
  out.coeffs.assign(static_cast<std::size_t>(qmax) + 1, 0);
  for (const auto& [n, row] : tally) {
    for (const auto& [m, c] : row) {
      // t^m carries part -m/2, paired with M_{-m}
      out.coeffs[static_cast<std::size_t>(n)] += c * dim_M(gamma, -m);
    }
  }
  out.trace = std::move(tally);
  return out;
}

CharacterSeries char_from_basis(const GammaDescriptor& gamma, int qmax, std::int64_t prec) {
  if (qmax > 6) throw std::invalid_argument("char_from_basis: qmax must be at most 6");
  CharacterSeries out;
  for (int k = 0; k <= qmax; ++k) {
    out.coeffs.emplace_back(static_cast<long>(lifting_basis(gamma, k, std::nullopt, prec).size()));
  }
  return out;
}

std::vector<Integer> gf_parts_exactly(int k, int nmax) {
  Poly out(static_cast<std::size_t>(nmax) + 1, 0);
  if (k > nmax) return out;
  auto inv = inverse_products(k, nmax);
  add_shifted(out, inv[k], k, 1);
  return out;
}

std::vector<Integer> gf_distinct_parts_exactly(int k, int nmax) {
  Poly out(static_cast<std::size_t>(nmax) + 1, 0);
  long shift = static_cast<long>(k) * (k + 1) / 2;
  if (shift > nmax) return out;
  auto inv = inverse_products(k, nmax);
  add_shifted(out, inv[k], shift, 1);
  return out;
}

}  // namespace cdr
