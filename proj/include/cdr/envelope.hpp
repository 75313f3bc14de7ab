#pragma once

#include <map>
#include <string>
#include <vector>

#include "cdr/fock.hpp"

namespace cdr {

/// PBW basis element a_{-lambda} phi_{-mu} psi_{-nu} b_{-chi} a_0^k b_0^l of U/K.
struct PBWKey {
  FourTuple word;
  int k = 0;
  int l = 0;

  auto operator<=>(const PBWKey&) const = default;
  bool operator==(const PBWKey&) const = default;
  std::string to_string() const;
};

class EnvelopeElement {
 public:
  EnvelopeElement() = default;
  EnvelopeElement(const PBWKey& key, const Scalar& c);
  static EnvelopeElement one();
  static EnvelopeElement word(const FourTuple& t, int k = 0, int l = 0);

  const std::map<PBWKey, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const PBWKey& key, const Scalar& c);

  std::optional<int> part() const;
  std::optional<int> weight() const;
  std::optional<int> parity() const;
  int max_depth() const;

  EnvelopeElement& operator+=(const EnvelopeElement& o);
  EnvelopeElement& operator-=(const EnvelopeElement& o);
  EnvelopeElement& operator*=(const Scalar& c);
  friend EnvelopeElement operator+(EnvelopeElement a, const EnvelopeElement& b) { return a += b; }
  friend EnvelopeElement operator-(EnvelopeElement a, const EnvelopeElement& b) { return a -= b; }
  friend EnvelopeElement operator*(EnvelopeElement a, const Scalar& c) { return a *= c; }
  friend EnvelopeElement operator*(const Scalar& c, EnvelopeElement a) { return a *= c; }
  friend bool operator==(const EnvelopeElement& a, const EnvelopeElement& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  std::map<PBWKey, Scalar> terms_;
};

/// Mode X times A, reduced to the PBW basis modulo K.
EnvelopeElement left_multiply(const Mode& x, const EnvelopeElement& a);
/// Product of a word of modes (leftmost first), reduced modulo K.
EnvelopeElement normal_order(const std::vector<Mode>& word);
/// A times a word of modes, reduced modulo K.
EnvelopeElement right_multiply(const EnvelopeElement& a, const std::vector<Mode>& word);

/// Normally ordered words of u_{(m)} that can act nontrivially. With
/// right_side set, only words usable on the right of an element modulo K
/// (no annihilators) are produced; otherwise annihilator indices are bounded
/// by depth.
struct ModeWord {
  Scalar coeff;
  std::vector<Mode> modes;
};
std::vector<ModeWord> mode_words(const FockState& u, int m, int depth, bool right_side);

/// x_{(0)}. A = x_{(0)} A - A x_{(0)} for the sl2 states, computed from the mode expansion.
EnvelopeElement adjoint(Sl2 x, const EnvelopeElement& a);
/// Closed forms for E and H on PBW elements.
EnvelopeElement adjoint_closed_form(Sl2 x, const EnvelopeElement& a);

/// 2 F.E. + H. + (1/2) H.H. on operators.
EnvelopeElement casimir(const EnvelopeElement& a);
/// Eigenvalue of the Casimir on the graded piece containing t (checked on f).
Scalar casimir_graded(const FourTuple& t, const CoeffFn& f);

/// D = F. + (H.) b_0, with b_0 multiplying on the right.
EnvelopeElement D(const EnvelopeElement& a);
/// The other reading, b_0 (H.A). Agrees with D on bare words only.
EnvelopeElement D_left(const EnvelopeElement& a);

/// (w a_0^k b_0^l) f = w (d/db)^k (b^l f).
FockState apply_operator(const EnvelopeElement& a, const CoeffFn& f);

}  // namespace cdr
