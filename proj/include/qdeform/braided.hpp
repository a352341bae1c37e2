// The braided coalgebra layer on T(V): multiplication of the braided tensor
// square, the braided coproduct Delta(x) = x(x)1 + 1(x)x extended as an
// algebra map, braided commutators, primitivity tests, degreewise primitive
// search (the saturation step of a pre-Nichols chain), and quantum Serre
// elements built by iterated braided commutators.

#pragma once

#include <map>
#include <optional>

#include "qdeform/groebner.hpp"
#include "qdeform/linalg.hpp"

namespace qdeform {

// Element of R (x) R with diagonal braiding; both legs group-free words.
class BTensor {
 public:
  explicit BTensor(DatumPtr datum) : datum_(std::move(datum)) {}

  static BTensor unit(DatumPtr datum);
  static BTensor of(DatumPtr datum, const Word& a, const Word& b,
                    const Scalar& c);

  const DatumPtr& datum() const { return datum_; }
  const std::map<std::pair<Word, Word>, Scalar>& terms() const {
    return terms_;
  }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Word& a, const Word& b, const Scalar& c);

  BTensor operator+(const BTensor& o) const;
  BTensor operator-(const BTensor& o) const;
  BTensor operator*(const BTensor& o) const;  // braided_mul_t2
  BTensor operator*(const Scalar& c) const;

  bool operator==(const BTensor& o) const;

  // reduce both legs modulo the presentation (rules must be group-free)
  BTensor reduced(const Presentation& pres) const;

  std::string str() const;

 private:
  DatumPtr datum_;
  std::map<std::pair<Word, Word>, Scalar> terms_;
};

// braiding scalar q(u, v) = prod_{x in u, y in v} q_xy
Scalar braiding_factor(const YDDatum& datum, const Word& u, const Word& v);

// Delta on a group-free polynomial, extended multiplicatively from
// Delta(x_i) = x_i (x) 1 + 1 (x) x_i via the braided tensor-square product.
BTensor braided_coproduct(const NcPoly& p);

// [v, w] = v w - q(v, w) w v for coweight-homogeneous group-free arguments.
NcPoly braided_commutator(const NcPoly& v, const NcPoly& w);

// Delta(p) - p(x)1 - 1(x)p reduces to zero in the quotient tensor square.
bool is_primitive(const NcPoly& p, const Presentation& pres);

// Basis of the primitives of letter-degree n inside the span of the normal
// words of `pres`, by exact kernel computation blockwise per Gamma-coweight.
// When `ideal` is given, the search is restricted to elements of the ideal
// it presents (elements reducing to zero), realizing one saturation step.
std::vector<NcPoly> find_primitives(const Presentation& pres, int n,
                                    const Presentation* ideal = nullptr);

// (ad_c x_i)^{1-a_ij}(x_j) by iterated braided commutators; the leading
// coefficient on x_i^{1-a_ij} x_j is 1.
NcPoly serre_element(DatumPtr datum, int i, int j, int a_ij);

}  // namespace qdeform
