#pragma once

#include <map>
#include <vector>

#include "cdr/modforms.hpp"

namespace cdr {

struct CharacterSeries {
  std::vector<Integer> coeffs;                 // coefficient of q^n, n = 0..qmax
  std::map<int, std::map<int, Integer>> trace; // n -> (t-exponent m -> c(m,n)); empty when not computed
};

/// Closed form as a sum over (m, n, u, v).
CharacterSeries char_closed(const GammaDescriptor& gamma, int qmax);
/// The same sum written over (s1, s2, s3, s4).
CharacterSeries char_s_form(const GammaDescriptor& gamma, int qmax);
/// c(m,n) from the product formula for tr t^{H_(0)} q^{L_0} on the free-field algebra.
std::map<int, std::map<int, Integer>> trace_product(int qmax);
/// c(m,n) by enumerating four-tuples.
std::map<int, std::map<int, Integer>> trace_enumerate(int qmax);
/// Pair c(-2m, n) with dim M_{2m}. Throws if enumeration and product disagree.
CharacterSeries char_enumerate(const GammaDescriptor& gamma, int qmax);
/// Count of lifting_basis per weight.
CharacterSeries char_from_basis(const GammaDescriptor& gamma, int qmax, std::int64_t prec = 12);

/// Sum_n p_k(n) x^n and Sum_n p'_k(n) x^n to x^nmax from the closed generating functions.
std::vector<Integer> gf_parts_exactly(int k, int nmax);
std::vector<Integer> gf_distinct_parts_exactly(int k, int nmax);

}  // namespace cdr
