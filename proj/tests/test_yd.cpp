#include "doctest.h"
#include "fixtures.hpp"
#include "qdeform/yd.hpp"

using namespace qdeform;

namespace {
const Field Qq = Field::rational_functions();
Scalar q() { return Scalar::generator(Qq); }
}  // namespace

TEST_CASE("sl2 braiding matrix") {
  auto [datum, lambda] = fixtures::sl2();
  int e = datum->letter_index("e"), f = datum->letter_index("f");
  CHECK(datum->q(e, e) == q().pow(2));
  CHECK(datum->q(e, f) == q().pow(-2));
  CHECK(datum->q(f, e) == q().pow(2));
  CHECK(datum->q(f, f) == q().pow(-2));
  CHECK((datum->q(e, f) * datum->q(f, e)).is_one());

  auto m = braiding_matrix(*datum);
  CHECK(m[e][f] == datum->q(e, f));

  // monomial rank: minus component below plus
  CHECK(datum->rank(f) < datum->rank(e));
}

TEST_CASE("sl3 braiding entries") {
  auto [datum, lambda] = fixtures::sl3();
  int e1 = datum->letter_index("e1"), e2 = datum->letter_index("e2");
  CHECK(datum->q(e1, e2) == q().pow(-1));
  CHECK(datum->q(e1, e1) == q().pow(2));
  int f1 = datum->letter_index("f1");
  CHECK((datum->q(e2, f1) * datum->q(f1, e2)).is_one());
}

TEST_CASE("validation") {
  auto [datum, lambda] = fixtures::sl2();
  CHECK(validate(*datum, lambda).pass);

  SUBCASE("nonzero lambda on a non-trivial chi_i*chi_j pair fails") {
    // cross-symmetric datum with chi_e*chi_f != 1: rank-2 group
    auto G = GroupSpec::make({"K", "L"}, {});
    auto K = GroupElement::generator(G, 0);
    auto L = GroupElement::generator(G, 1);
    std::vector<Letter> letters = {
        {"e", 1, K, Character(G, {q().pow(3), q().pow(2)})},
        {"f", 0, L, Character(G, {q().pow(-2), q().pow(-2)})},
    };
    YDDatum bad(G, {"minus", "plus"}, letters);
    CHECK(validate(bad, LinkingParams{}).pass);  // symmetric, no linking

    LinkingParams lam;
    lam.set(bad, 0, 1, Scalar::one(Qq));
    auto rep = validate(bad, lam);
    CHECK_FALSE(rep.pass);
    CHECK(rep.failures.at(0).find("linking") != std::string::npos);
  }

  SUBCASE("broken cross symmetry fails") {
    auto G = GroupSpec::make({"K"}, {});
    auto K = GroupElement::generator(G, 0);
    std::vector<Letter> letters = {
        {"e", 1, K, Character(G, {q().pow(2)})},
        {"f", 0, K, Character(G, {q().pow(-4)})},
    };
    YDDatum bad(G, {"minus", "plus"}, letters);
    auto rep = validate(bad, LinkingParams{});
    CHECK_FALSE(rep.pass);
    CHECK(rep.failures.at(0).find("symmetry") != std::string::npos);
  }
}

TEST_CASE("linking parameter normalization lambda_ji = -q_ji lambda_ij") {
  auto [datum, lambda] = fixtures::sl2();
  int e = datum->letter_index("e"), f = datum->letter_index("f");
  Scalar c = (q() - q().pow(-1)).inverse();
  CHECK(lambda.get(*datum, e, f) == c);

  // supplying the pair in the other orientation stores the mirrored value
  LinkingParams other;
  other.set(*datum, f, e, -(datum->q(f, e)) * c);
  CHECK(other.get(*datum, e, f) ==
        -(datum->q(e, f)) * (-(datum->q(f, e)) * c));
  CHECK(other.get(*datum, e, f) == c);
}

TEST_CASE("twist_datum") {
  auto [datum, lambda] = fixtures::sl2();
  int n = datum->letter_count();

  SUBCASE("trivial bicharacter leaves the datum unchanged") {
    auto twisted = twist_datum(*datum, Bicharacter::trivial(datum->group(), Qq));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(twisted.q(i, j) == datum->q(i, j));
  }

  SUBCASE("conjugated-braiding identity and preserved validation") {
    Bicharacter beta(datum->group(), {{q()}});
    auto twisted = twist_datum(*datum, beta);
    for (int i = 0; i < n; ++i) {
      CHECK(twisted.q(i, i) == datum->q(i, i));
      for (int j = 0; j < n; ++j) {
        const auto& gi = datum->letter(i).g;
        const auto& gj = datum->letter(j).g;
        // q'_ij * beta(g_j, g_i) = beta(g_i, g_j) * q_ij
        CHECK(twisted.q(i, j) * beta(gj, gi) == beta(gi, gj) * datum->q(i, j));
      }
    }
    CHECK(validate(twisted, lambda).pass);
  }
}
