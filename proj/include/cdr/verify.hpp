#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cdr/fock.hpp"
#include "cdr/modforms.hpp"

namespace cdr {

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 20240601;
  std::int64_t prec = 20;
  std::string gamma = "sl2z";
};

const std::vector<std::string>& suite_names();
/// Runs one suite, or every suite for "all". Throws on an unknown name.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opts);

/// Sum_j C(m,j) (u_(n+j) v)_(m+k-j) w minus the right side of the Borcherds identity.
FockState borcherds_defect(const FockState& u, const FockState& v, const FockState& w, int m, int n, int k);

/// Uniformly random four-tuple of the given weight.
FourTuple random_tuple(std::mt19937_64& rng, int weight);

}  // namespace cdr
