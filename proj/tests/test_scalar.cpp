#include "doctest.h"
#include "qdeform/scalar.hpp"

using namespace qdeform;

namespace {

const Field QQ = Field::rationals();
const Field Qq = Field::rational_functions();

Scalar q() { return Scalar::generator(Qq); }
Scalar c(long n) { return Scalar::integer(Qq, n); }

// small deterministic generator for property checks
struct Rng {
  uint64_t s = 0x9e3779b97f4a7c15ull;
  uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  long pick(long lo, long hi) { return lo + long(next() % uint64_t(hi - lo + 1)); }
};

Scalar random_scalar(Rng& rng, const Field& f) {
  Scalar v = Scalar::zero(f);
  if (f.kind == FieldKind::cyclotomic) {
    for (int i = 0; i < 3; ++i)
      v += Scalar::integer(f, rng.pick(-3, 3)) *
           Scalar::root_of_unity(f, rng.pick(0, f.cyclotomic_order - 1));
    return v;
  }
  Scalar g = f.kind == FieldKind::rational_function ? Scalar::generator(f)
                                                    : Scalar::integer(f, 2);
  for (int i = 0; i < 3; ++i)
    v += Scalar::integer(f, rng.pick(-3, 3)) * g.pow(rng.pick(0, 3));
  long d = rng.pick(1, 3);
  return v / Scalar::integer(f, d);
}

}  // namespace

TEST_CASE("rational function normalization") {
  // (q^2 - 1)/(q - 1) -> q + 1
  Scalar a = (q() * q() - c(1)) / (q() - c(1));
  CHECK(a == q() + c(1));
  CHECK(a.str() == "q + 1");

  // invert(q - q^-1) -> q/(q^2 - 1)
  Scalar b = (q() - q().pow(-1)).inverse();
  CHECK(b == q() / (q() * q() - c(1)));
  CHECK(b.str() == "q/(q^2 - 1)");

  // zero is 0/1 and normalization is idempotent
  Scalar z = a - a;
  CHECK(z.is_zero());
  CHECK(z.str() == "0");
  CHECK((a + z) == a);

  // content handling: (2q + 2)/4 == (q + 1)/2
  Scalar d = (c(2) * q() + c(2)) / c(4);
  CHECK(d == (q() + c(1)) / c(2));
  CHECK(d.str() == "(q + 1)/2");
}

TEST_CASE("cyclotomic relation and inversion") {
  Field F5 = Field::cyclotomic(5);
  Scalar z = Scalar::generator(F5);
  // 1 + z + z^2 + z^3 + z^4 = 0
  Scalar s = Scalar::one(F5) + z + z.pow(2) + z.pow(3) + z.pow(4);
  CHECK(s.is_zero());
  CHECK(z.pow(5).is_one());

  // inverse via extended Euclid
  Scalar a = z - z.pow(4);
  CHECK((a * a.inverse()).is_one());
  Scalar half = Scalar::one(F5) / Scalar::integer(F5, 2);
  CHECK((half + half).is_one());

  CHECK_THROWS_AS(Scalar::zero(F5).inverse(), error);
}

TEST_CASE("specialization at roots of unity") {
  CHECK(q().pow(5).specialize(5).is_one());

  Field F5 = Field::cyclotomic(5);
  Scalar z = Scalar::generator(F5);
  CHECK((q() + q().pow(-1)).specialize(5) == z + z.pow(4));

  Scalar pole = c(1) / (q().pow(5) - c(1));
  CHECK_THROWS_AS(pole.specialize(5), error);
}

TEST_CASE("gauss binomial values") {
  CHECK(gauss_binomial(4, 0, q()).is_one());
  CHECK(gauss_binomial(7, 7, q()).is_one());
  // [2 choose 1]_q = q + q^-1 (frozen from expanding (q^2-q^-2)/(q-q^-1))
  CHECK(gauss_binomial(2, 1, q()) == q() + q().pow(-1));
  // [3 choose 1]_q = q^2 + 1 + q^-2
  CHECK(gauss_binomial(3, 1, q()) == q().pow(2) + c(1) + q().pow(-2));

  // at zeta_5: [5 choose k] vanishes for 0 < k < 5
  Field F5 = Field::cyclotomic(5);
  Scalar z = Scalar::generator(F5);
  for (int k = 1; k < 5; ++k) CHECK(gauss_binomial(5, k, z).is_zero());
  CHECK(gauss_binomial(5, 5, z).is_one());
}

TEST_CASE("q-Pascal identity up to n = 8") {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k < n; ++k) {
      Scalar lhs = gauss_binomial(n, k, q());
      Scalar rhs = q().pow(k) * gauss_binomial(n - 1, k, q()) +
                   q().pow(k - n) * gauss_binomial(n - 1, k - 1, q());
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("field axioms on random samples") {
  Rng rng;
  for (const Field& f : {QQ, Qq, Field::cyclotomic(5), Field::cyclotomic(3)}) {
    for (int t = 0; t < 25; ++t) {
      Scalar a = random_scalar(rng, f), b = random_scalar(rng, f),
             x = random_scalar(rng, f);
      CHECK((a + b) * x == a * x + b * x);
      CHECK((a * b) * x == a * (b * x));
      CHECK(a + b == b + a);
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
  }
}

TEST_CASE("kind mismatch is an error") {
  CHECK_THROWS_AS(q() + Scalar::one(QQ), error);
  CHECK_THROWS_AS(q() * Scalar::generator(Field::cyclotomic(5)), error);
}
