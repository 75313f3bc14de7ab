#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cdr/character.hpp"
#include "oracles.hpp"

using namespace cdr;

namespace {
std::vector<long> as_long(const std::vector<Integer>& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}
}  // namespace

TEST_CASE("SL2Z character, low coefficients by hand") {
  auto c = char_closed(GammaDescriptor::sl2z(), 2);
  // weight 0: vacuum; weight 1: two part-0 tuples and two part-2 tuples paired with E4
  CHECK(c.coeffs[0] == 1);
  CHECK(c.coeffs[1] == 4);
  CHECK(c.coeffs[2] == 12);
}

TEST_CASE("three computations of the character agree") {
  GammaDescriptor g = GammaDescriptor::sl2z();
  auto a = char_closed(g, 12), b = char_s_form(g, 12), e = char_enumerate(g, 12);
  CHECK(a.coeffs == b.coeffs);
  CHECK(a.coeffs == e.coeffs);
  CHECK(as_long(a.coeffs) == std::vector<long>{1, 4, 12, 32, 76, 170, 358, 722, 1404, 2644, 4846, 8674, 15200});
  auto basis = char_from_basis(g, 3);
  CHECK(std::equal(basis.coeffs.begin(), basis.coeffs.end(), a.coeffs.begin()));
}

TEST_CASE("character for a level-two table") {
  GammaDescriptor g = GammaDescriptor::load(CDR_DATA_DIR "/gamma0_2.json");
  auto a = char_closed(g, 8), e = char_enumerate(g, 8);
  CHECK(a.coeffs == e.coeffs);
  // weight 0: the vacuum with M_0, and phi_0 with M_2
  CHECK(a.coeffs[0] == 2);
  CHECK(a.coeffs[1] == 8);
}

TEST_CASE("weight-one trace buckets") {
  auto t = trace_enumerate(1);
  std::map<int, Integer> expect{{-4, 2}, {-2, 2}, {0, 2}, {2, 2}};
  CHECK(t.at(1) == expect);
  CHECK(trace_product(6) == trace_enumerate(6));
}

TEST_CASE("all dimensions zero gives the zero series") {
  std::string dims;
  for (int k = 0; k <= 40; k += 2) dims += (k ? ", " : "") + ("\"" + std::to_string(k) + "\": 0");
  GammaDescriptor g = GammaDescriptor::from_json_text(R"({"name": "empty", "dims": {)" + dims + "}}");
  auto c = char_closed(g, 5);
  for (const auto& x : c.coeffs) CHECK(x == 0);
}

TEST_CASE("partition generating functions against brute force") {
  const int nmax = 30;
  for (int k = 0; k <= 7; ++k) {
    auto a = gf_parts_exactly(k, nmax), b = gf_distinct_parts_exactly(k, nmax);
    for (int n = 0; n <= nmax; ++n) {
      CHECK(a[n] == oracle::count_parts(n, k, n));
      CHECK(b[n] == oracle::count_distinct_parts(n, k, n));
    }
  }
}
