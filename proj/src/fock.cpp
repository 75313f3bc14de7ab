#include "cdr/fock.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace cdr {

// ---------------------------------------------------------------- CoeffFn

CoeffFn::CoeffFn(const QSeries& g) { add_term(0, g); }

CoeffFn CoeffFn::constant(const Scalar& c) { return CoeffFn(QSeries::constant(c)); }

CoeffFn CoeffFn::b_power(int j, const Scalar& c) {
  CoeffFn f;
  f.add_term(j, QSeries::constant(c));
  return f;
}

void CoeffFn::add_term(int j, const QSeries& g) {
  if (j < 0) throw std::invalid_argument("negative power of b");
  auto it = terms_.find(j);
  if (it == terms_.end()) {
    if (!g.is_zero()) terms_.emplace(j, g);
    return;
  }
  it->second += g;
  if (it->second.is_zero()) terms_.erase(it);
}

int CoeffFn::b_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

QSeries CoeffFn::part(int j) const {
  auto it = terms_.find(j);
  return it == terms_.end() ? QSeries() : it->second;
}

bool CoeffFn::is_polynomial() const {
  for (const auto& [j, g] : terms_) {
    if (!g.is_exact()) return false;
    for (const auto& [e, c] : g.coeffs()) {
      if (e != 0) return false;
    }
  }
  return true;
}

CoeffFn CoeffFn::derivative() const {
  CoeffFn out;
  for (const auto& [j, g] : terms_) {
    if (j > 0) out.add_term(j - 1, g * Scalar(j));
    out.add_term(j, tau_derivative(g));
  }
  return out;
}

CoeffFn CoeffFn::derivative(unsigned n) const {
  CoeffFn f = *this;
  for (unsigned i = 0; i < n; ++i) f = f.derivative();
  return f;
}

CoeffFn CoeffFn::times_b(int j) const {
  CoeffFn out;
  for (const auto& [i, g] : terms_) out.terms_.emplace(i + j, g);
  return out;
}

CoeffFn& CoeffFn::operator+=(const CoeffFn& o) {
  for (const auto& [j, g] : o.terms_) add_term(j, g);
  return *this;
}

CoeffFn& CoeffFn::operator-=(const CoeffFn& o) {
  for (const auto& [j, g] : o.terms_) add_term(j, -g);
  return *this;
}

CoeffFn& CoeffFn::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [j, g] : terms_) g *= c;
  return *this;
}

CoeffFn CoeffFn::operator-() const {
  CoeffFn out = *this;
  for (auto& [j, g] : out.terms_) g = -g;
  return out;
}

CoeffFn operator*(const CoeffFn& a, const CoeffFn& b) {
  CoeffFn out;
  for (const auto& [i, g] : a.terms_) {
    for (const auto& [j, h] : b.terms_) out.add_term(i + j, g * h);
  }
  return out;
}

std::string CoeffFn::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [j, g] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (j > 0) os << "b^" << j << "*";
    os << "[" << g.to_string(6) << "]";
  }
  return os.str();
}

// ---------------------------------------------------------------- FockState

FockState::FockState(const FourTuple& t, const CoeffFn& f) { add(t, f); }

FockState FockState::vacuum() { return FockState(FourTuple{}, CoeffFn::constant(Scalar(1))); }

FockState FockState::function(const CoeffFn& f) { return FockState(FourTuple{}, f); }

void FockState::add(const FourTuple& t, const CoeffFn& f) {
  if (f.is_zero()) return;
  auto it = terms_.find(t);
  if (it == terms_.end()) {
    terms_.emplace(t, f);
    return;
  }
  it->second += f;
  if (it->second.is_zero()) terms_.erase(it);
}

CoeffFn FockState::coeff(const FourTuple& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? CoeffFn() : it->second;
}

int FockState::max_weight() const {
  int w = 0;
  for (const auto& [t, f] : terms_) w = std::max(w, t.weight());
  return w;
}

namespace {

template <typename Fn>
std::optional<int> common_value(const std::map<FourTuple, CoeffFn>& terms, Fn fn) {
  std::optional<int> v;
  for (const auto& [t, f] : terms) {
    int x = fn(t);
    if (v && *v != x) return std::nullopt;
    v = x;
  }
  return v;
}

}  // namespace

std::optional<int> FockState::weight() const { return common_value(terms_, [](const FourTuple& t) { return t.weight(); }); }
std::optional<int> FockState::charge() const { return common_value(terms_, [](const FourTuple& t) { return t.charge(); }); }
std::optional<int> FockState::part() const { return common_value(terms_, [](const FourTuple& t) { return t.part(); }); }
std::optional<int> FockState::parity() const {
  return common_value(terms_, [](const FourTuple& t) { return t.fermion_count() % 2; });
}

std::optional<int> FockState::filtration_degree() const {
  std::optional<int> v;
  for (const auto& [t, f] : terms_) v = v ? std::min(*v, t.part()) : t.part();
  return v;
}

int FockState::b_degree() const {
  int d = -1;
  for (const auto& [t, f] : terms_) d = std::max(d, f.b_degree());
  return d;
}

FockState FockState::part_component(int p) const {
  FockState out;
  for (const auto& [t, f] : terms_) {
    if (t.part() == p) out.terms_.emplace(t, f);
  }
  return out;
}

FockState FockState::truncated(std::int64_t prec) const {
  FockState out;
  for (const auto& [t, f] : terms_) {
    CoeffFn g;
    for (const auto& [j, s] : f.terms()) {
      QSeries x = s.is_exact() ? s + QSeries(prec) : s.truncated(prec);
      g += CoeffFn(x).times_b(j);
    }
    out.add(t, g);
  }
  return out;
}

FockState& FockState::operator+=(const FockState& o) {
  for (const auto& [t, f] : o.terms_) add(t, f);
  return *this;
}

FockState& FockState::operator-=(const FockState& o) {
  for (const auto& [t, f] : o.terms_) add(t, -f);
  return *this;
}

FockState& FockState::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, f] : terms_) f *= c;
  return *this;
}

FockState FockState::operator-() const {
  FockState out = *this;
  for (auto& [t, f] : out.terms_) f = -f;
  return out;
}

FockState FockState::times(const CoeffFn& g) const {
  FockState out;
  for (const auto& [t, f] : terms_) out.add(t, f * g);
  return out;
}

std::string FockState::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, f] : terms_) {
    if (!first) os << "\n";
    first = false;
    os << t.to_string() << " (x) " << f.to_string();
  }
  return os.str();
}

// ---------------------------------------------------------------- modes

bool Mode::is_annihilator() const {
  switch (sym) {
    case Sym::Psi: return index >= 0;
    default: return index >= 1;
  }
}

bool Mode::is_creation() const {
  switch (sym) {
    case Sym::Phi: return index <= 0;
    default: return index <= -1;
  }
}

std::string Mode::to_string() const {
  const char* names[] = {"a", "b", "phi", "psi"};
  return std::string(names[static_cast<int>(sym)]) + "_{" + std::to_string(index) + "}";
}

Mode field_mode(Generator x, int n) {
  switch (x) {
    case Generator::A: return {Mode::Sym::A, n};
    case Generator::B: return {Mode::Sym::B, n + 1};
    case Generator::Phi: return {Mode::Sym::Phi, n + 1};
    case Generator::Psi: return {Mode::Sym::Psi, n};
  }
  throw std::logic_error("unknown generator");
}

FockState generator_state(Generator x) {
  FourTuple t;
  switch (x) {
    case Generator::A: t.lambda.parts = {1}; break;
    case Generator::Phi: t.mu.parts = {1}; break;
    case Generator::Psi: t.nu.parts = {1}; break;
    case Generator::B: return FockState::function(CoeffFn::b_power(1));
  }
  return FockState(t, CoeffFn::constant(Scalar(1)));
}

namespace {

/// Insert part p into a partition kept in decreasing order; returns the
/// number of parts strictly greater than p, or -1 if p is already present
/// and the partition is distinct.
int insert_part(Partition& part, int p, bool distinct) {
  auto& v = part.parts;
  auto pos = std::find_if(v.begin(), v.end(), [p](int x) { return x <= p; });
  if (distinct && pos != v.end() && *pos == p) return -1;
  int before = static_cast<int>(pos - v.begin());
  v.insert(pos, p);
  return before;
}

/// Remove one copy of p; returns the index it had, or -1.
int remove_part(Partition& part, int p) {
  auto& v = part.parts;
  auto pos = std::find(v.begin(), v.end(), p);
  if (pos == v.end()) return -1;
  int idx = static_cast<int>(pos - v.begin());
  v.erase(pos);
  return idx;
}

int count_part(const Partition& part, int p) {
  return static_cast<int>(std::count(part.parts.begin(), part.parts.end(), p));
}

void apply_mode_term(const Mode& m, const FourTuple& t, const CoeffFn& f, FockState& out) {
  using S = Mode::Sym;
  FourTuple r = t;
  if (m.sym == S::A && m.index == 0) {
    out.add(t, f.derivative());
    return;
  }
  if (m.sym == S::B && m.index == 0) {
    out.add(t, f.times_b());
    return;
  }
  if (m.is_creation()) {
    switch (m.sym) {
      case S::A: insert_part(r.lambda, -m.index, false); out.add(r, f); return;
      case S::B: insert_part(r.chi, -m.index, false); out.add(r, f); return;
      case S::Phi: {
        int i = insert_part(r.mu, -m.index + 1, true);
        if (i < 0) return;
        out.add(r, i % 2 ? -f : f);
        return;
      }
      case S::Psi: {
        int i = insert_part(r.nu, -m.index, true);
        if (i < 0) return;
        out.add(r, (i + t.mu.length()) % 2 ? -f : f);
        return;
      }
    }
  }
  switch (m.sym) {
    case S::A: {
      int c = count_part(t.chi, m.index);
      if (c == 0) return;
      remove_part(r.chi, m.index);
      out.add(r, f * Scalar(c));
      return;
    }
    case S::B: {
      int c = count_part(t.lambda, m.index);
      if (c == 0) return;
      remove_part(r.lambda, m.index);
      out.add(r, f * Scalar(-c));
      return;
    }
    case S::Phi: {
      int j = remove_part(r.nu, m.index);
      if (j < 0) return;
      out.add(r, (j + t.mu.length()) % 2 ? -f : f);
      return;
    }
    case S::Psi: {
      int j = remove_part(r.mu, m.index + 1);
      if (j < 0) return;
      out.add(r, j % 2 ? -f : f);
      return;
    }
  }
}

}  // namespace

FockState apply_mode(const Mode& m, const FockState& s) {
  FockState out;
  for (const auto& [t, f] : s.terms()) apply_mode_term(m, t, f, out);
  return out;
}

FockState apply_fn_mode(const CoeffFn& f, int k, const FockState& s) {
  FockState out;
  const int target = k + 1;  // indices of the b-modes sum to k+1
  for (const auto& [t, g] : s.terms()) {
    // positive b-modes remove a-modes of the same depth
    std::vector<std::pair<int, int>> avail;  // (depth, multiplicity)
    for (int x : t.lambda.parts) {
      if (!avail.empty() && avail.back().first == x) {
        ++avail.back().second;
      } else {
        avail.emplace_back(x, 1);
      }
    }
    std::vector<int> chosen(avail.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
      if (idx < avail.size()) {
        for (int c = 0; c <= avail[idx].second; ++c) {
          chosen[idx] = c;
          rec(idx + 1);
        }
        return;
      }
      int pos_sum = 0, pos_count = 0;
      Rational weight(1);
      FockState base(t, g);
      for (std::size_t i = 0; i < avail.size(); ++i) {
        for (int c = 0; c < chosen[i]; ++c) base = apply_mode({Mode::Sym::B, avail[i].first}, base);
        pos_sum += avail[i].first * chosen[i];
        pos_count += chosen[i];
        weight /= factorial(chosen[i]);
      }
      int neg_total = pos_sum - target;
      if (neg_total < 0 || base.is_zero()) return;
      for (const auto& neg : partitions(neg_total)) {
        int i = pos_count + neg.length();
        if (i == 0 && target != 0) continue;
        Rational w = weight;
        FockState st = base;
        int run = 0;
        for (std::size_t j = 0; j < neg.parts.size(); ++j) {
          st = apply_mode({Mode::Sym::B, -neg.parts[j]}, st);
          run = (j > 0 && neg.parts[j] == neg.parts[j - 1]) ? run + 1 : 1;
          w /= run;
        }
        out += st.times(f.derivative(static_cast<unsigned>(i))) * Scalar(w);
      }
    };
    rec(0);
  }
  return out;
}

namespace {

FockState generator_mode(Generator x, int n, const FockState& v) { return apply_mode(field_mode(x, n), v); }

FockState monomial_product(const FourTuple& t, const CoeffFn& f, int m, const FockState& v) {
  if (t.is_vacuum()) return apply_fn_mode(f, m, v);
  FourTuple rest = t;
  Generator x;
  int k;
  if (!t.lambda.empty()) {
    x = Generator::A;
    k = t.lambda.parts.front();
    rest.lambda.parts.erase(rest.lambda.parts.begin());
    k = -k;
  } else if (!t.mu.empty()) {
    x = Generator::Phi;
    k = -t.mu.parts.front();
    rest.mu.parts.erase(rest.mu.parts.begin());
  } else if (!t.nu.empty()) {
    x = Generator::Psi;
    k = -t.nu.parts.front();
    rest.nu.parts.erase(rest.nu.parts.begin());
  } else {
    x = Generator::B;
    k = -t.chi.parts.front() - 1;
    rest.chi.parts.erase(rest.chi.parts.begin());
  }
  const int px = (x == Generator::Phi || x == Generator::Psi) ? 1 : 0;
  const int pr = rest.fermion_count() % 2;
  const int wx = (x == Generator::A || x == Generator::Psi) ? 1 : 0;
  const int wr = rest.weight();
  const int wv = v.max_weight();
  FockState r(rest, f);
  FockState out;
  // (x_{(k)} r)_{(m)} v = sum_i (-1)^i C(k,i) [x_{(k-i)} r_{(m+i)} v - (-1)^{k + p(x)p(r)} r_{(m+k-i)} x_{(i)} v]
  for (int i = 0; m + i < wr + wv; ++i) {
    Rational c = binomial(k, i);
    if (c == 0) break;
    FockState inner = nth_product(r, m + i, v);
    if (inner.is_zero()) continue;
    FockState term = generator_mode(x, k - i, inner);
    out += term * Scalar(i % 2 ? -c : c);
  }
  const bool flip = ((k % 2 != 0) != (px * pr == 1));
  for (int i = 0; i < wx + wv; ++i) {
    Rational c = binomial(k, i);
    if (c == 0) break;
    FockState inner = generator_mode(x, i, v);
    if (inner.is_zero()) continue;
    FockState term = nth_product(r, m + k - i, inner);
    Rational sgn = (i % 2 ? -c : c);
    if (!flip) sgn = -sgn;
    out += term * Scalar(sgn);
  }
  return out;
}

}  // namespace

FockState nth_product(const FockState& u, int n, const FockState& v) {
  FockState out;
  if (v.is_zero()) return out;
  for (const auto& [t, f] : u.terms()) {
    if (n >= t.weight() + v.max_weight()) continue;
    out += monomial_product(t, f, n, v);
  }
  return out;
}

namespace states {

namespace {
FourTuple tup(std::vector<int> l, std::vector<int> m, std::vector<int> n, std::vector<int> c) {
  return FourTuple{Partition{std::move(l)}, Partition{std::move(m)}, Partition{std::move(n)}, Partition{std::move(c)}};
}
}  // namespace

FockState E() { return FockState(tup({1}, {}, {}, {}), CoeffFn::constant(Scalar(-1))); }

FockState F() {
  FockState s(tup({1}, {}, {}, {}), CoeffFn::b_power(2));
  s.add(tup({}, {1}, {1}, {}), CoeffFn::b_power(1, Scalar(2)));
  return s;
}

FockState H() {
  FockState s(tup({1}, {}, {}, {}), CoeffFn::b_power(1, Scalar(-2)));
  s.add(tup({}, {1}, {1}, {}), CoeffFn::constant(Scalar(-2)));
  return s;
}

FockState J() { return FockState(tup({}, {1}, {1}, {}), CoeffFn::constant(Scalar(1))); }
FockState Q() { return FockState(tup({1}, {1}, {}, {}), CoeffFn::constant(Scalar(1))); }
FockState G() { return FockState(tup({}, {}, {1}, {1}), CoeffFn::constant(Scalar(1))); }

FockState omega() {
  FockState s(tup({1}, {}, {}, {1}), CoeffFn::constant(Scalar(1)));
  s.add(tup({}, {2}, {1}, {}), CoeffFn::constant(Scalar(1)));
  return s;
}

}  // namespace states

FockState sl2_state(Sl2 x) {
  switch (x) {
    case Sl2::E: return states::E();
    case Sl2::F: return states::F();
    case Sl2::H: return states::H();
  }
  throw std::logic_error("unknown sl2 element");
}

FockState sl2_zero_mode(Sl2 x, const FockState& s) { return nth_product(sl2_state(x), 0, s); }

CoeffFn graded_sl2(Sl2 x, const FourTuple& t, const CoeffFn& f) {
  const int n = t.part();
  switch (x) {
    case Sl2::E: return -f.derivative();
    case Sl2::H: return f * Scalar(-2 * n) - f.derivative().times_b() * Scalar(2);
    case Sl2::F: return f.times_b() * Scalar(2 * n) + f.derivative().times_b(2);
  }
  throw std::logic_error("unknown sl2 element");
}

FockState mode_commutator(const FockState& u, int m, const FockState& v, int n, const FockState& s) {
  auto pu = u.parity(), pv = v.parity();
  if (!pu || !pv) throw std::invalid_argument("mode_commutator: states must have definite parity");
  FockState a = nth_product(u, m, nth_product(v, n, s));
  FockState b = nth_product(v, n, nth_product(u, m, s));
  return (*pu == 1 && *pv == 1) ? a + b : a - b;
}

FockState commutator_from_ope(const std::vector<FockState>& ope, int m, int n, const FockState& s) {
  FockState out;
  for (std::size_t j = 0; j < ope.size(); ++j) {
    Rational c = binomial(m, static_cast<long>(j));
    if (c == 0) continue;
    out += nth_product(ope[j], m + n - static_cast<int>(j), s) * Scalar(c);
  }
  return out;
}

}  // namespace cdr
