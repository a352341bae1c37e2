// Skew pairings between the two bosonized halves, the pairing-induced
// 2-cocycle sigma(a (x) x, b (x) y) = eps(a) tau(b, x) eps(y), the
// generalized quantum double (H_- (x) H_+)^sigma presented by the diagonal
// product rules, and the central quotient that recovers H^lambda.
//
// The double of a two-component datum is itself a diagonal datum over
// Gamma' x Gamma, so the deformation machinery is reused wholesale: the
// cross rules x_i x_j = q_ij x_j x_i + lambda_ij (g_j' g_i - 1) are exactly
// the H^lambda rules of the induced datum.

#pragma once

#include "qdeform/deform.hpp"

namespace qdeform {

class SkewPairing {
 public:
  // component_relations live over the original datum and must be group-free
  // and single-component.  With reuse_gamma, Gamma' is a copy of Gamma
  // (each Gamma generator must be g_j of exactly one minus letter).
  SkewPairing(DatumPtr datum, const LinkingParams& lambda,
              const std::vector<NcPoly>& component_relations, int degree,
              bool reuse_gamma = false);

  const DatumPtr& original() const { return original_; }
  const DatumPtr& minus_datum() const { return minus_datum_; }
  const DatumPtr& plus_datum() const { return plus_datum_; }
  const HopfPres& minus_hopf() const { return minus_hopf_; }
  const HopfPres& plus_hopf() const { return plus_hopf_; }
  const LinkingParams& lambda() const { return lambda_; }
  bool reuse_gamma() const { return reuse_gamma_; }
  // original letter index of the k-th minus / plus letter
  const std::vector<int>& minus_letters() const { return minus_letters_; }
  const std::vector<int>& plus_letters() const { return plus_letters_; }
  // original minus letter behind the k-th Gamma' generator
  const std::vector<int>& gamma_gen_letter() const {
    return gamma_gen_letter_;
  }
  int degree() const { return degree_; }

  // tau(a, x) for monomials a of H_-, x of H_+, by coproduct recursion
  // down to the generator table; memoized
  Scalar eval(const Monomial& a, const Monomial& x);
  Scalar eval(const NcPoly& a, const NcPoly& x);
  // tau^-1(a, x) = tau(S(a), x)
  Scalar eval_inv(const Monomial& a, const Monomial& x);

 private:
  Scalar table(const Monomial& a, const Monomial& x) const;

  DatumPtr original_;
  LinkingParams lambda_;
  std::vector<int> minus_letters_, plus_letters_;
  bool reuse_gamma_ = false;
  int degree_ = 0;
  // gamma'-generator k corresponds to minus letter gamma_gen_letter_[k]
  std::vector<int> gamma_gen_letter_;
  DatumPtr minus_datum_, plus_datum_;
  HopfPres minus_hopf_, plus_hopf_;
  struct CrossLess {
    const YDDatum* da = nullptr;
    const YDDatum* dx = nullptr;
    bool operator()(const std::pair<Monomial, Monomial>& l,
                    const std::pair<Monomial, Monomial>& r) const {
      int c = deglex_cmp(*da, l.first, r.first);
      if (c != 0) return c < 0;
      return deglex_cmp(*dx, l.second, r.second) < 0;
    }
  };
  std::map<std::pair<Monomial, Monomial>, Scalar, CrossLess> memo_;
};

struct DoublePresentation {
  DatumPtr double_datum;  // minus letters then plus letters over Gamma' x Gamma
  HopfPres hopf;          // the deformed double (H_- (x) H_+)^sigma
  // the undeformed tensor-product Hopf algebra H_- (x) H_+ on the same
  // words: cross straightenings are trivial, so a merged basis monomial is
  // literally a (x) x; the pairing cocycle's identities live here
  HopfPres tensor_hopf;
  int gamma_prime_rank = 0;          // leading group coordinates are Gamma'
  std::vector<int> to_original;      // double letter -> original letter
  int degree = 0;
};

DoublePresentation build_double(const SkewPairing& tau, int degree,
                                ExecPolicy policy = ExecPolicy::serial);

// sigma(a (x) x, b (x) y) = eps(a) tau(b, x) eps(y) on basis monomials,
// a (x) x = (minus part, Gamma' part) (x) (plus part, Gamma part).
class PairingCocycle {
 public:
  PairingCocycle(SkewPairing& tau, const DoublePresentation& dpres)
      : tau_(tau), dpres_(dpres) {}

  Scalar sigma(const Monomial& m1, const Monomial& m2);
  Scalar sigma(const NcPoly& p1, const NcPoly& p2);

 private:
  SkewPairing& tau_;
  const DoublePresentation& dpres_;
};

CocycleTable cocycle_from_pairing(SkewPairing& tau,
                                  const DoublePresentation& dpres, int degree,
                                  int group_window = 1);

// Quotient by the Hopf ideal (g_j' (x) g_j^-1 - 1): checks that each
// generator is central and group-like, eliminates Gamma', and returns the
// re-completed presentation over (a copy of) Gamma.
HopfPres quotient_central(const SkewPairing& tau,
                          const DoublePresentation& dpres);

struct IsoReport {
  bool pass = true;
  std::vector<std::string> lines;
};

// Relation transport in both directions along x_i -> 1 (x) x_i,
// x_j -> x_j (x) 1, g -> 1 (x) g, plus equal normal-word counts.
IsoReport verify_double_iso(const HopfPres& quotient,
                            const DeformedPresentation& dp, int max_degree);

}  // namespace qdeform
