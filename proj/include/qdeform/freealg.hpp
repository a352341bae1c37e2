// Noncommutative polynomials on the letters of a diagonal datum with
// group-algebra coefficients.  Canonical form puts the group element to the
// right of the word; multiplication straightens g * x = chi_x(g) * x * g
// eagerly.  Monomials are ordered deg-lex on words (letters ranked by
// component position, then declaration index), with the group exponent
// vector as the final tiebreak.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "qdeform/yd.hpp"

namespace qdeform {

using Word = std::vector<int>;  // letter indices into the datum

struct Monomial {
  Word word;
  GroupElement group;

  bool operator==(const Monomial& o) const {
    return word == o.word && group == o.group;
  }
};

// total order: word length, then rank-lex, then group exponents
int deglex_cmp(const YDDatum& datum, const Monomial& a, const Monomial& b);
int word_cmp(const YDDatum& datum, const Word& a, const Word& b);

struct MonoLess {
  const YDDatum* datum = nullptr;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return deglex_cmp(*datum, a, b) < 0;
  }
};

using TermMap = std::map<Monomial, Scalar, MonoLess>;

class NcPoly {
 public:
  NcPoly() = default;
  explicit NcPoly(DatumPtr datum);

  static NcPoly zero(DatumPtr datum);
  static NcPoly one(DatumPtr datum);
  static NcPoly scalar(DatumPtr datum, const Scalar& c);
  static NcPoly letter(DatumPtr datum, int i);
  static NcPoly group(DatumPtr datum, const GroupElement& g);
  static NcPoly monomial(DatumPtr datum, const Monomial& m, const Scalar& c);
  static NcPoly word(DatumPtr datum, const Word& w);

  const DatumPtr& datum() const { return datum_; }
  const Field& field() const { return datum_->field(); }

  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  // terms in ascending deglex order; iterate in reverse for rendering
  const TermMap& terms() const { return terms_; }

  void add_term(const Monomial& m, const Scalar& c);

  NcPoly operator+(const NcPoly& o) const;
  NcPoly operator-(const NcPoly& o) const;
  NcPoly operator-() const;
  NcPoly operator*(const NcPoly& o) const;  // nc_mul
  NcPoly operator*(const Scalar& c) const;
  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);

  bool operator==(const NcPoly& o) const;
  bool operator!=(const NcPoly& o) const { return !(*this == o); }

  // leading (deglex-greatest) term; poly must be nonzero
  std::pair<Monomial, Scalar> leading() const;

  // letter-degree of the deglex-leading term; -1 for zero
  int degree() const;
  // true when every monomial has word length == degree and shares it
  bool is_letter_homogeneous() const;
  // all group parts trivial
  bool is_group_free() const;

  // product over the word letters of g_i; only for group-free homogeneous use
  GroupElement coweight_of(const Monomial& m) const;
  // the conjugation character prod chi_i over the word letters
  Character weight_of(const Monomial& m) const;

  std::string str() const;

 private:
  DatumPtr datum_;
  TermMap terms_;
};

// scalar * poly
NcPoly operator*(const Scalar& c, const NcPoly& p);

// product of monomials under the straightening rule, as a scaled monomial:
// (w, g) * (w', g') = (prod_{y in w'} chi_y(g)) * (w w', g g')
std::pair<Monomial, Scalar> mono_mul(const YDDatum& datum, const Monomial& a,
                                     const Monomial& b);

std::string mono_str(const YDDatum& datum, const Monomial& m);

}  // namespace qdeform
