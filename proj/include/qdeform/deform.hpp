// The deformation triple built from admissible linking data: the graded
// Hopf algebra H (zero cross terms), the deformed Hopf algebra H^lambda
// (cross terms lambda_ij (g_i g_j - 1)), and the cleft object A (constant
// cross terms -lambda_ij).  On top of these: the section phi (identity on
// the shared normal basis, computed per component block), convolution
// inverses, extraction of the 2-cocycle sigma(g, h) = phi(g1) phi(h1)
// phi^-1(g2 h2), the deformed product, and graded dimension comparisons.

#pragma once

#include <functional>

#include "qdeform/bosonize.hpp"

namespace qdeform {

struct DeformedPresentation {
  DatumPtr datum;
  LinkingParams lambda;
  HopfPres hopf_h;       // H, the lambda = 0 bosonization
  HopfPres hopf_hlam;    // H^lambda
  Presentation cleft_a;  // A
  int degree = 0;        // completion bound of all three

  const Presentation& h() const { return hopf_h.pres(); }
  const Presentation& hlam() const { return hopf_hlam.pres(); }
  const Presentation& a() const { return cleft_a; }
};

// Builds and completes the three rule sets.  component_relations are shared
// group-free homogeneous relations (Serre elements, power relations); the
// cross rules are generated from the linking data.  Throws when validation
// or the coproduct well-definedness check fails.
DeformedPresentation build_deformation(
    DatumPtr datum, const LinkingParams& lambda,
    const std::vector<NcPoly>& component_relations, int degree,
    ExecPolicy policy = ExecPolicy::serial);

enum class SectionTarget { cleft, deformed };

// phi (target = cleft) or eta (target = deformed) on a basis monomial of H:
// the product of its per-component block factors in the target algebra.
NcPoly section_apply(const DeformedPresentation& dp, const Monomial& m,
                     SectionTarget target);

// Convolution inverse of a unit-preserving H-basis-indexed linear map into
// a target quotient, computed by letter-degree recursion.
class ConvolutionInverse {
 public:
  // phi sends a basis monomial of `source` into `target`
  ConvolutionInverse(const Presentation& source, const Presentation& target,
                     std::function<NcPoly(const Monomial&)> phi);

  // psi(m) with sum psi(m1) phi(m2) = eps(m)
  const NcPoly& at(const Monomial& m);

 private:
  const Presentation& source_;
  const Presentation& target_;
  std::function<NcPoly(const Monomial&)> phi_;
  std::map<Monomial, NcPoly, MonoLess> memo_;
};

struct ComoduleReport {
  bool pass = true;
  std::vector<std::string> lines;
};

// A is an (H^lambda, H)-comodule algebra: both coactions kill the A-rules
// and commute with each other up to the degree bound.
ComoduleReport comodule_check(const DeformedPresentation& dp, int max_degree,
                              ExecPolicy policy = ExecPolicy::serial);

// Memoized evaluator for the extracted 2-cocycle and its convolution
// inverse.  Values are verified to be scalars (coinvariance of Eq. (1.2)).
class ExtractedCocycle {
 public:
  explicit ExtractedCocycle(const DeformedPresentation& dp);

  Scalar sigma(const Monomial& g, const Monomial& h);
  Scalar sigma_inv(const Monomial& g, const Monomial& h);
  // bilinear extensions
  Scalar sigma(const NcPoly& g, const NcPoly& h);
  Scalar sigma_inv(const NcPoly& g, const NcPoly& h);

  const DeformedPresentation& dp() const { return dp_; }

 private:
  const DeformedPresentation& dp_;
  ConvolutionInverse phi_inv_;
  std::map<std::pair<Monomial, Monomial>, Scalar, MonoPairLess> memo_;
  std::map<std::pair<Monomial, Monomial>, Scalar, MonoPairLess> memo_inv_;
};

struct CocycleTable {
  enum class Source { extracted, pairing };
  Source source = Source::extracted;
  int degree = 0;
  std::vector<std::tuple<Monomial, Monomial, Scalar>> entries;  // canonical order
};

// Materializes sigma on basis pairs of total letter-degree <= degree.
// Requires 2 * degree <= dp.degree so that all products reduce.
CocycleTable extract_cocycle(const DeformedPresentation& dp, int degree,
                             int group_window = 1);

// The H^sigma product sigma(p1,r1) p2 r2 sigma^-1(p3,r3) of two basis
// monomials, expressed in the basis of H.
NcPoly deformed_product(const Monomial& p, const Monomial& r,
                        ExtractedCocycle& sigma, const HopfPres& h);

struct DimsRow {
  int degree = 0;
  long dim_h = 0;
  long dim_hlam = 0;
  bool equal = true;
};

struct DimsTable {
  std::vector<DimsRow> rows;
  // |Gamma| * sum of counts, when Gamma is finite
  std::optional<long> total_dimension;
  std::string str() const;
};

DimsTable graded_dims(const DeformedPresentation& dp, int n_max);

}  // namespace qdeform
