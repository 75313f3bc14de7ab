#include "cdr/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cdr {

int Partition::size() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

bool Partition::is_distinct() const {
  return std::adjacent_find(parts.begin(), parts.end()) == parts.end();
}

bool Partition::is_valid() const {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) return false;
    if (i > 0 && parts[i] > parts[i - 1]) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << ")";
  return os.str();
}

namespace {

void gen_partitions(int n, int max_part, bool distinct, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition{cur});
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(n - p, distinct ? p - 1 : p, distinct, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  gen_partitions(n, n, false, cur, out);
  return out;
}

std::vector<Partition> distinct_partitions(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  gen_partitions(n, n, true, cur, out);
  return out;
}

std::int64_t count_partitions_k(int n, int k) {
  // p_k(n) = p_{k-1}(n-1) + p_k(n-k)
  if (n < 0 || k < 0) return 0;
  if (n == 0 && k == 0) return 1;
  if (n == 0 || k == 0) return 0;
  static std::map<std::pair<int, int>, std::int64_t> memo;
  auto key = std::make_pair(n, k);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::int64_t v = count_partitions_k(n - 1, k - 1) + count_partitions_k(n - k, k);
  memo[key] = v;
  return v;
}

std::int64_t count_distinct_partitions_k(int n, int k) {
  // removing a staircase k, k-1, ..., 1 leaves a partition into at most k parts
  int shift = k * (k + 1) / 2;
  if (n < shift) return 0;
  std::int64_t s = 0;
  for (int i = 0; i <= k; ++i) s += count_partitions_k(n - shift, i);
  return s;
}

int FourTuple::weight() const { return lambda.size() + mu.size() + nu.size() + chi.size() - mu.length(); }
int FourTuple::charge() const { return mu.length() - nu.length(); }
int FourTuple::part() const { return -lambda.length() + mu.length() - nu.length() + chi.length(); }

bool FourTuple::is_valid() const {
  return lambda.is_valid() && mu.is_valid() && nu.is_valid() && chi.is_valid() && mu.is_distinct() &&
         nu.is_distinct();
}

std::string FourTuple::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const char* sym, const Partition& p, int shift) {
    for (int x : p.parts) {
      os << (first ? "" : " ") << sym << "_{" << (-x + shift) << "}";
      first = false;
    }
  };
  emit("a", lambda, 0);
  emit("phi", mu, 1);
  emit("psi", nu, 0);
  emit("b", chi, 0);
  if (first) os << "1";
  return os.str();
}

std::string FourTuple::spec() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const char* sym, const Partition& p) {
    if (p.empty()) return;
    os << (first ? "" : ":") << sym << "[";
    for (std::size_t i = 0; i < p.parts.size(); ++i) os << (i ? "," : "") << p.parts[i];
    os << "]";
    first = false;
  };
  emit("a", lambda);
  emit("phi", mu);
  emit("psi", nu);
  emit("b", chi);
  if (first) os << "1";
  return os.str();
}

FourTuple parse_fourtuple(const std::string& s) {
  FourTuple t;
  if (s.empty() || s == "1") return t;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ':')) {
    auto open = item.find('[');
    auto close = item.find(']');
    if (open == std::string::npos || close == std::string::npos || close < open) {
      throw std::invalid_argument("malformed tuple component '" + item + "'");
    }
    std::string sym = item.substr(0, open);
    Partition* target = nullptr;
    if (sym == "a") target = &t.lambda;
    else if (sym == "phi") target = &t.mu;
    else if (sym == "psi") target = &t.nu;
    else if (sym == "b") target = &t.chi;
    else throw std::invalid_argument("unknown mode symbol '" + sym + "'");
    if (!target->empty()) throw std::invalid_argument("repeated component '" + sym + "'");
    std::stringstream parts(item.substr(open + 1, close - open - 1));
    std::string num;
    while (std::getline(parts, num, ',')) {
      if (num.empty()) continue;
      target->parts.push_back(std::stoi(num));
    }
    std::sort(target->parts.rbegin(), target->parts.rend());
  }
  if (!t.is_valid()) throw std::invalid_argument("invalid four-tuple '" + s + "' (phi and psi parts must be distinct and positive)");
  return t;
}

std::vector<FourTuple> enumerate_fourtuples(int weight, std::optional<int> charge, std::optional<int> part) {
  std::vector<FourTuple> out;
  if (weight < 0) return out;
  // mu contributes |mu| - p(mu): shift parts down by one, giving distinct parts >= 0
  std::vector<std::vector<Partition>> ords(weight + 1), dists(weight + 1), mus(weight + 1);
  for (int n = 0; n <= weight; ++n) {
    ords[n] = partitions(n);
    dists[n] = distinct_partitions(n);
    for (const auto& d : dists[n]) {
      Partition m;
      for (int x : d.parts) m.parts.push_back(x + 1);
      mus[n].push_back(m);
      m.parts.push_back(1);  // the part 1 contributes weight 0
      mus[n].push_back(m);
    }
  }
  for (int wl = 0; wl <= weight; ++wl) {
    for (int wm = 0; wl + wm <= weight; ++wm) {
      for (int wn = 0; wl + wm + wn <= weight; ++wn) {
        int wc = weight - wl - wm - wn;
        for (const auto& l : ords[wl]) {
          for (const auto& m : mus[wm]) {
            for (const auto& n : dists[wn]) {
              for (const auto& c : ords[wc]) {
                FourTuple t{l, m, n, c};
                if (charge && t.charge() != *charge) continue;
                if (part && t.part() != *part) continue;
                out.push_back(std::move(t));
              }
            }
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cdr
