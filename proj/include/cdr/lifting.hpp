#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cdr/brackets.hpp"
#include "cdr/envelope.hpp"
#include "cdr/fock.hpp"
#include "cdr/modforms.hpp"

namespace cdr {

/// L(w,f): the invariant state with leading term w f.
struct Lifting {
  FourTuple leading;
  BracketArg form;       // weight 2*part(leading), or a constant when part is 0
  int n0 = 0;
  bool zero = false;     // weight mismatch
  EnvelopeElement op;    // A with state = A f (n0 >= 1) or w + A E (n0 = 0)
  FockState state;
  std::int64_t prec = 0;
};

/// Raised when a state fails to decompose into liftings.
class NotMember : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// c_n = (2n0-1)!/(n!(n+2n0-1)!) and d_n = 1/(n!(n-1)!).
Rational lifting_c(int n0, int n);
Rational lifting_d(int n);

Lifting lift(const FourTuple& w, const BracketArg& f, std::int64_t prec);

/// Checks F_{(0)}(A f) = (F.A) f + A(b^2 f') and, for bare words, the D form
/// F_{(0)}(w f) = D(w) f + w(2n b f + b^2 f'). Returns a description of the first failure.
std::optional<std::string> bridge_check(const EnvelopeElement& a, const CoeffFn& f);
/// Run once before the first lifting; throws on failure.
void bridge_self_test();

struct InvarianceReport {
  bool ok = true;
  std::vector<std::string> failures;
};

/// E.A = 0, H.A = -2 n0' A, F.A = 2 n0' A b_0 with n0' = max(n0, 1);
/// for n0 = 0 and a word w also F_{(0)} w = A 1.
InvarianceReport verify_invariance(const EnvelopeElement& a, int n0, const std::optional<FourTuple>& w = std::nullopt);
InvarianceReport verify_invariance(const Lifting& l);

/// The leading-part projection: coefficient of the leading tuple.
CoeffFn alpha_projection(const Lifting& l);

std::vector<Lifting> lifting_basis(const GammaDescriptor& gamma, int weight, std::optional<int> charge,
                                   std::int64_t prec);

struct LiftingTerm {
  FourTuple tuple;
  BracketArg form;       // coefficient form (constant for part 0)
  std::vector<Rational> coords;  // with respect to basis_M, or {c} for part 0
  Scalar scale;                  // the state contains scale * lifting
  Lifting lifting;
};

std::vector<LiftingTerm> decompose_liftings(const FockState& s, const GammaDescriptor& gamma, std::int64_t prec);

struct StructureConstant {
  FourTuple tuple;
  int bracket_index = 0;
  Scalar constant;
  bool proportional = true;
};

struct StructureReport {
  std::vector<StructureConstant> terms;
  bool ok = true;
  std::string message;
};

/// L(w,f1)_{(n)} L(v,f2) decomposed and compared with the modified brackets.
StructureReport structure_constants(const FourTuple& w, const BracketArg& f1, const FourTuple& v,
                                    const BracketArg& f2, int n, const GammaDescriptor& gamma, std::int64_t prec);

/// Every lifting in the decomposition has part >= n.
bool ideal_filter(const FockState& s, int n, const GammaDescriptor& gamma, std::int64_t prec);

/// Contravariant form on states with constant coefficients, antilinear in u.
Scalar hermitian_form(const FockState& u, const FockState& v);

/// d = -Q_{(0)}.
FockState chiral_differential(const FockState& s);

struct CohomologyReport {
  std::vector<int> chain_dims;   // by charge 0, 1, ...
  std::vector<int> cohomology;   // H^0, H^1, ...
};

CohomologyReport cohomology_weight0(const GammaDescriptor& gamma, std::int64_t prec);

/// T_{2k}(n) L(w,f) = L(w, T_{2k}(n) f) over SL(2,Z) with upper-triangular coset representatives.
bool hecke_commutation_check(const FourTuple& w, const BracketArg& f, std::int64_t n, std::int64_t prec,
                             std::string* detail = nullptr);

}  // namespace cdr
