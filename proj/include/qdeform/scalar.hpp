// Exact coefficient arithmetic: rationals, rational functions in one
// indeterminate q, and cyclotomic fields Q(zeta_N) for root-of-unity work.
//
// Rational functions are stored as quotients of integer-coefficient
// polynomials in canonical form: primitive parts coprime, integer contents
// coprime, denominator with positive leading coefficient.  Cyclotomic
// elements are residues modulo Phi_N with a common positive integer
// denominator.  Equality is bit-equality of canonical forms.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdeform {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dense integer polynomial, coeff[i] is the coefficient of q^i.
// Normalized: no trailing zero coefficients; the zero polynomial is empty.
using IPoly = std::vector<mpz_class>;

namespace ipoly {

IPoly make(std::initializer_list<long> coeffs);
void trim(IPoly& p);
int degree(const IPoly& p);  // -1 for zero
bool is_zero(const IPoly& p);
bool is_one(const IPoly& p);
IPoly add(const IPoly& a, const IPoly& b);
IPoly sub(const IPoly& a, const IPoly& b);
IPoly neg(const IPoly& a);
IPoly mul(const IPoly& a, const IPoly& b);
IPoly mul_scalar(const IPoly& a, const mpz_class& c);
IPoly shift(const IPoly& a, int k);  // multiply by q^k, k >= 0
mpz_class content(const IPoly& p);   // nonnegative; 0 for zero poly
IPoly primitive_part(const IPoly& p);
IPoly divexact(const IPoly& a, const IPoly& b);  // throws if not exact
IPoly gcd(const IPoly& a, const IPoly& b);       // primitive, positive lc
IPoly cyclotomic(int n);                         // Phi_n, cached
std::string str(const IPoly& p, const std::string& var);

}  // namespace ipoly

enum class FieldKind { rational, rational_function, cyclotomic };

struct Field {
  FieldKind kind = FieldKind::rational;
  int cyclotomic_order = 0;

  static Field rationals() { return Field{FieldKind::rational, 0}; }
  static Field rational_functions() {
    return Field{FieldKind::rational_function, 0};
  }
  static Field cyclotomic(int n);

  bool operator==(const Field& o) const = default;
  std::string str() const;
};

// An exact element of Q, Q(q), or Q(zeta_N), tagged by its field.
class Scalar {
 public:
  Scalar() : field_(Field::rationals()), rat_(0) {}

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar integer(const Field& f, long n);
  static Scalar rational(const Field& f, long num, long den);
  // The distinguished generator: q for Q(q), zeta_N for Q(zeta_N).
  // Errors on the plain rationals.
  static Scalar generator(const Field& f);
  // zeta_N^k in Q(zeta_N).
  static Scalar root_of_unity(const Field& f, long k);

  const Field& field() const { return field_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const;  // throws on zero
  Scalar pow(long e) const;

  bool is_zero() const;
  bool is_one() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  // Arbitrary total order for use as a map key.
  bool operator<(const Scalar& o) const;

  // Image under q -> zeta_N; throws on a pole at zeta_N.
  Scalar specialize(int n) const;

  std::string str() const;

 private:
  void check_same_field(const Scalar& o) const;
  void normalize_rf();
  void normalize_cyc();

  Field field_;
  mpq_class rat_;           // rational
  IPoly num_, den_;         // rational_function, canonical quotient
  IPoly cnum_;              // cyclotomic residue, deg < deg Phi_N
  mpz_class cden_ = 1;      // cyclotomic denominator, > 0
};

// Balanced q-integer [m]_v = v^{m-1} + v^{m-3} + ... + v^{1-m}.
Scalar q_integer(int m, const Scalar& v);

// Balanced Gaussian binomial [n choose k]_v with [m]_v as above.
// Throws when the q-factorial denominator vanishes at a root of unity.
Scalar gauss_binomial(int n, int k, const Scalar& v);

}  // namespace qdeform
