// Shared test data: the sl2 / sl3 / u_q(sl2) diagonal data built by hand,
// independently of the preset loader.

#pragma once

#include "qdeform/yd.hpp"

namespace qdeform::fixtures {

struct Data {
  DatumPtr datum;
  LinkingParams lambda;
};

// Letters e (component plus), f = FK (component minus) over Gamma = Z<K>,
// chi_e(K) = q^2, chi_f(K) = q^-2, lambda_ef = 1/(q - q^-1).
inline Data sl2() {
  Field F = Field::rational_functions();
  Scalar q = Scalar::generator(F);
  auto G = GroupSpec::make({"K"}, {});
  auto K = GroupElement::generator(G, 0);
  std::vector<Letter> letters = {
      {"e", 1, K, Character(G, {q.pow(2)})},
      {"f", 0, K, Character(G, {q.pow(-2)})},
  };
  auto datum =
      std::make_shared<YDDatum>(G, std::vector<std::string>{"minus", "plus"},
                                std::move(letters));
  LinkingParams lambda;
  Scalar c = (q - q.pow(-1)).inverse();
  lambda.set(*datum, 0, 1, c);  // lambda_{e,f}
  return {datum, lambda};
}

// Cartan matrix A2; letters e1, e2 (plus), f1, f2 (minus), g = K_i for both,
// chi_{e_j}(K_i) = q^{a_ij}, chi_{f_j}(K_i) = q^{-a_ij}.
inline Data sl3() {
  Field F = Field::rational_functions();
  Scalar q = Scalar::generator(F);
  auto G = GroupSpec::make({"K1", "K2"}, {});
  auto K1 = GroupElement::generator(G, 0);
  auto K2 = GroupElement::generator(G, 1);
  const int A[2][2] = {{2, -1}, {-1, 2}};
  std::vector<Letter> letters;
  for (int j = 0; j < 2; ++j)
    letters.push_back({"e" + std::to_string(j + 1), 1,
                       j == 0 ? K1 : K2,
                       Character(G, {q.pow(A[0][j]), q.pow(A[1][j])})});
  for (int j = 0; j < 2; ++j)
    letters.push_back({"f" + std::to_string(j + 1), 0,
                       j == 0 ? K1 : K2,
                       Character(G, {q.pow(-A[0][j]), q.pow(-A[1][j])})});
  auto datum =
      std::make_shared<YDDatum>(G, std::vector<std::string>{"minus", "plus"},
                                std::move(letters));
  LinkingParams lambda;
  Scalar c = (q - q.pow(-1)).inverse();
  lambda.set(*datum, datum->letter_index("e1"), datum->letter_index("f1"), c);
  lambda.set(*datum, datum->letter_index("e2"), datum->letter_index("f2"), c);
  return {datum, lambda};
}

// The plus component of sl3 alone: letters e1, e2 in one component.
inline Data sl3_plus() {
  Field F = Field::rational_functions();
  Scalar q = Scalar::generator(F);
  auto G = GroupSpec::make({"K1", "K2"}, {});
  auto K1 = GroupElement::generator(G, 0);
  auto K2 = GroupElement::generator(G, 1);
  std::vector<Letter> letters = {
      {"e1", 0, K1, Character(G, {q.pow(2), q.pow(-1)})},
      {"e2", 0, K2, Character(G, {q.pow(-1), q.pow(2)})},
  };
  auto datum = std::make_shared<YDDatum>(
      G, std::vector<std::string>{"plus"}, std::move(letters));
  return {datum, LinkingParams{}};
}

// Small quantum group data at a primitive 5th root of unity:
// Gamma = Z/5, chi_e(K) = zeta^2, chi_f(K) = zeta^-2.
inline Data uq_sl2_n5() {
  Field F = Field::cyclotomic(5);
  auto G = GroupSpec::make({}, {{"K", 5}});
  auto K = GroupElement::generator(G, 0);
  Scalar z = Scalar::generator(F);
  std::vector<Letter> letters = {
      {"e", 1, K, Character(G, {z.pow(2)})},
      {"f", 0, K, Character(G, {z.pow(-2)})},
  };
  auto datum =
      std::make_shared<YDDatum>(G, std::vector<std::string>{"minus", "plus"},
                                std::move(letters));
  LinkingParams lambda;
  Scalar c = (z - z.pow(-1)).inverse();
  lambda.set(*datum, 0, 1, c);
  return {datum, lambda};
}

}  // namespace qdeform::fixtures
