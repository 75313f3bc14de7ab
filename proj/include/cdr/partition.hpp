#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace cdr {

/// Weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  int size() const;  // |lambda|
  int length() const { return static_cast<int>(parts.size()); }
  bool empty() const { return parts.empty(); }
  bool is_distinct() const;
  bool is_valid() const;
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;
};

std::vector<Partition> partitions(int n);
std::vector<Partition> distinct_partitions(int n);
/// Partitions of n into exactly k parts (p_k(n)), and the distinct analogue.
std::int64_t count_partitions_k(int n, int k);
std::int64_t count_distinct_partitions_k(int n, int k);

/// (lambda, mu, nu, chi) indexing a_{-lambda} phi_{-mu} psi_{-nu} b_{-chi},
/// where phi_{-mu} = phi_{-mu_1+1} phi_{-mu_2+1} ...
struct FourTuple {
  Partition lambda, mu, nu, chi;

  int weight() const;
  int charge() const;
  int part() const;
  bool is_valid() const;
  bool is_vacuum() const { return lambda.empty() && mu.empty() && nu.empty() && chi.empty(); }
  int fermion_count() const { return mu.length() + nu.length(); }
  /// Monomial in mode notation, e.g. "a_{-1} phi_{0} psi_{-1}".
  std::string to_string() const;
  /// Partition notation, e.g. "a[1]:phi[1]:psi[1]".
  std::string spec() const;

  auto operator<=>(const FourTuple& o) const {
    if (auto c = part() <=> o.part(); c != 0) return c;
    return std::tie(lambda, mu, nu, chi) <=> std::tie(o.lambda, o.mu, o.nu, o.chi);
  }
  bool operator==(const FourTuple&) const = default;
};

/// Parse "a[1,1]:phi[1]:psi[2]:b[1]"; empty string or "1" is the vacuum.
FourTuple parse_fourtuple(const std::string& s);

/// All four-tuples of the given weight, optionally filtered, in tuple order.
std::vector<FourTuple> enumerate_fourtuples(int weight, std::optional<int> charge = std::nullopt,
                                            std::optional<int> part = std::nullopt);

}  // namespace cdr
