#include "doctest.h"
#include "fixtures.hpp"
#include "oracle_dense.hpp"
#include "qdeform/expr.hpp"
#include "qdeform/groebner.hpp"

using namespace qdeform;

namespace {
const Field Qq = Field::rational_functions();
Scalar q() { return Scalar::generator(Qq); }

// the lambda-deformed sl2 rule set: ef -> q^-2 fe + c (K^2 - 1)
Presentation sl2_lambda_pres(DatumPtr d) {
  NcPoly rel =
      parse_expression(d, "e*f - q^-2*f*e - (K^2 - 1)/(q - q^-1)");
  return Presentation(d, {orient(rel)}, 0);
}

std::vector<NcPoly> sl3_plus_serre(DatumPtr d) {
  return {parse_expression(d, "e1*e1*e2 - (q + q^-1)*e1*e2*e1 + e2*e1*e1"),
          parse_expression(d, "e2*e2*e1 - (q + q^-1)*e2*e1*e2 + e1*e2*e2")};
}
}  // namespace

TEST_CASE("orient") {
  auto [d, lambda] = fixtures::sl2();

  NcPoly rel = parse_expression(d, "e*f - q^-2*f*e - (K^2 - 1)/(q - q^-1)");
  RewriteRule r = orient(rel);
  CHECK(r.lhs == Word{d->letter_index("e"), d->letter_index("f")});
  CHECK(r.rhs == parse_expression(d, "q^-2*f*e + (K^2 - 1)/(q - q^-1)"));

  NcPoly arel = parse_expression(d, "e*f - q^-2*f*e + 1/(q - q^-1)");
  RewriteRule ar = orient(arel);
  CHECK(ar.rhs == parse_expression(d, "q^-2*f*e - 1/(q - q^-1)"));

  CHECK_THROWS_AS(orient(NcPoly::zero(d)), error);
  // leading monomial with a group part cannot be oriented as a word rule
  CHECK_THROWS_AS(orient(parse_expression(d, "e*f*K - f*e")), error);
}

TEST_CASE("reduce in the sl2 deformation") {
  auto [d, lambda] = fixtures::sl2();
  auto pres = sl2_lambda_pres(d);

  CHECK(reduce(parse_expression(d, "e*f"), pres) ==
        parse_expression(d, "q^-2*f*e + (K^2 - 1)/(q - q^-1)"));
  CHECK(reduce(parse_expression(d, "f*e"), pres) ==
        parse_expression(d, "f*e"));

  // (e,1)*(f,K) -> q^-2 (fe, K) + c(1, K^3) - c(1, K)
  NcPoly p = parse_expression(d, "e") * parse_expression(d, "f*K");
  CHECK(reduce(p, pres) ==
        parse_expression(d,
                         "q^-2*f*e*K + (K^3 - K)/(q - q^-1)"));
}

TEST_CASE("reduce properties") {
  auto [d, lambda] = fixtures::sl2();
  auto pres = sl2_lambda_pres(d);
  uint64_t s = 5;
  auto rnd = [&]() {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return (s >> 33);
  };
  for (int t = 0; t < 15; ++t) {
    NcPoly p(d), r(d);
    for (int k = 0; k < 3; ++k) {
      Word w;
      for (int l = int(rnd() % 4); l > 0; --l) w.push_back(int(rnd() % 2));
      p.add_term({w, GroupElement::generator(d->group(), 0).pow(int64_t(rnd() % 5) - 2)},
                 q().pow(long(rnd() % 5) - 2));
      Word w2;
      for (int l = int(rnd() % 3); l > 0; --l) w2.push_back(int(rnd() % 2));
      r.add_term({w2, GroupElement::identity(d->group())},
                 Scalar::integer(Qq, long(rnd() % 7) - 3));
    }
    NcPoly pr = reduce(p, pres);
    CHECK(reduce(pr, pres) == pr);  // idempotent
    CHECK(reduce(p + r, pres) == reduce(pr + reduce(r, pres), pres));
    CHECK(reduce(p * r, pres) == reduce(pr * r, pres));
    // filtration: letter-degree does not increase
    CHECK(reduce(p, pres).degree() <= p.degree());
    // Gamma-weight preserved: rules from admissible data are homogeneous
    for (const auto& rule : pres.rules())
      CHECK(is_weight_homogeneous(*d, rule));
  }
}

TEST_CASE("sl2 completion adds nothing and normal words are PBW") {
  auto [d, lambda] = fixtures::sl2();
  auto pres = sl2_lambda_pres(d);
  CompletionLog log;
  auto done = complete(pres, 6, ExecPolicy::serial, &log);
  CHECK(log.rules_added == 0);
  CHECK(done.rules().size() == 1);

  auto words2 = normal_words(done, 2);
  REQUIRE(words2.size() == 3);  // ee, fe, ff as words avoiding "ef"
  int e = d->letter_index("e"), f = d->letter_index("f");
  CHECK(words2[0] == Word{f, f});
  CHECK(words2[1] == Word{f, e});
  CHECK(words2[2] == Word{e, e});
  CHECK(normal_words(done, 0) == std::vector<Word>{Word{}});
  for (int n = 0; n <= 6; ++n)
    CHECK(normal_words(done, n).size() == size_t(n) + 1);
  CHECK_THROWS_AS(normal_words(done, 7), error);
}

TEST_CASE("sl3 plus-part Serre system vs the dense oracle") {
  auto [d, lambda] = fixtures::sl3_plus();
  auto rels = sl3_plus_serre(d);
  std::vector<RewriteRule> rules;
  for (const auto& r : rels) rules.push_back(orient(r));
  auto pres = complete(Presentation(d, std::move(rules), 0), 6);

  // frozen from the oracle: graded dims of T(V)/(Serre) for degrees 0..6
  const int expected[] = {1, 2, 4, 6, 9, 12, 16};
  for (int n = 0; n <= 6; ++n) {
    CHECK(int(normal_words(pres, n).size()) == expected[n]);
    CHECK(oracle::graded_dim(d, rels, n) == expected[n]);
  }

  auto cert = check_confluence(pres, 6);
  CHECK(cert.pass);
  CHECK(cert.overlaps_checked > 0);
}

TEST_CASE("uq-sl2 at zeta_5: mixed overlaps resolve") {
  auto [d, lambda] = fixtures::uq_sl2_n5();
  Field F5 = Field::cyclotomic(5);
  Scalar z = Scalar::generator(F5);
  // ef - z^-2 fe - c(K^2 - 1), e^5, f^5
  NcPoly cross = parse_expression(d, "e*f - z^-2*f*e - (K^2 - 1)/(z - z^-1)");
  NcPoly e5 = parse_expression(d, "e^5");
  NcPoly f5 = parse_expression(d, "f^5");
  Presentation pres(d, {orient(cross), orient(e5), orient(f5)}, 0);

  CompletionLog log;
  auto done = complete(pres, 10, ExecPolicy::serial, &log);
  CHECK(log.rules_added == 0);
  CHECK(done.rules().size() == 3);

  // e^5 f and e f^5 must reduce to zero both ways
  CHECK(reduce(parse_expression(d, "e^5*f"), done).is_zero());
  CHECK(reduce(parse_expression(d, "e*f^5"), done).is_zero());
  auto cert = check_confluence(done, 10);
  CHECK(cert.pass);

  // spot-check the q-binomial mechanism behind the cancellation:
  // e^k f = z^-2k f e^k + [k] c e^(k-1) (z^(2-2k) K^2 - z^(k-1) ... ) -- the
  // exact coefficient is regenerated by the engine, so just check e^4 f
  // against a direct two-route computation
  NcPoly lhs = reduce(parse_expression(d, "e*(e*e*e*f)"), done);
  NcPoly rhs = reduce(parse_expression(d, "(e*e)*(e*e*f)"), done);
  CHECK(lhs == rhs);
  CHECK(reduce(parse_expression(d, "e^5"), done).is_zero());
  (void)z;
}

TEST_CASE("completion is deterministic across policies") {
  auto [d, lambda] = fixtures::sl3_plus();
  auto rels = sl3_plus_serre(d);
  std::vector<RewriteRule> r1, r2;
  for (const auto& r : rels) r1.push_back(orient(r));
  for (const auto& r : rels) r2.push_back(orient(r));
  auto a = complete(Presentation(d, std::move(r1), 0), 6, ExecPolicy::serial);
  auto b = complete(Presentation(d, std::move(r2), 0), 6, ExecPolicy::openmp);
  REQUIRE(a.rules().size() == b.rules().size());
  for (size_t i = 0; i < a.rules().size(); ++i)
    CHECK(rule_str(*d, a.rules()[i]) == rule_str(*d, b.rules()[i]));
}
