#include "doctest.h"
#include "fixtures.hpp"
#include "qdeform/braided.hpp"
#include "qdeform/deform.hpp"
#include "qdeform/expr.hpp"

using namespace qdeform;

namespace {
const Field Qq = Field::rational_functions();
Scalar q() { return Scalar::generator(Qq); }
Scalar c_sl2() { return (q() - q().pow(-1)).inverse(); }

DeformedPresentation sl2_dp(int D = 6) {
  auto [d, lambda] = fixtures::sl2();
  return build_deformation(d, lambda, {}, D);
}

DeformedPresentation sl3_dp(int D = 6) {
  auto [d, lambda] = fixtures::sl3();
  std::vector<NcPoly> rels;
  int e1 = d->letter_index("e1"), e2 = d->letter_index("e2");
  int f1 = d->letter_index("f1"), f2 = d->letter_index("f2");
  rels.push_back(serre_element(d, e1, e2, -1));
  rels.push_back(serre_element(d, e2, e1, -1));
  rels.push_back(serre_element(d, f1, f2, -1));
  rels.push_back(serre_element(d, f2, f1, -1));
  return build_deformation(d, lambda, rels, D);
}

DeformedPresentation uq_dp(int D = 10) {
  auto [d, lambda] = fixtures::uq_sl2_n5();
  std::vector<NcPoly> rels = {parse_expression(d, "e^5"),
                              parse_expression(d, "f^5")};
  return build_deformation(d, lambda, rels, D);
}
}  // namespace

TEST_CASE("build_deformation produces the three sl2 rule variants") {
  auto dp = sl2_dp();
  const DatumPtr& d = dp.datum;

  REQUIRE(dp.hlam().rules().size() == 1);
  REQUIRE(dp.h().rules().size() == 1);
  REQUIRE(dp.a().rules().size() == 1);
  CHECK(dp.hlam().rules()[0].rhs ==
        parse_expression(d, "q^-2*f*e + (K^2 - 1)/(q - q^-1)"));
  CHECK(dp.h().rules()[0].rhs == parse_expression(d, "q^-2*f*e"));
  CHECK(dp.a().rules()[0].rhs ==
        parse_expression(d, "q^-2*f*e - 1/(q - q^-1)"));

  // rule-level filtration: dropping lower-degree terms of an H^lambda rule
  // recovers the H rule
  for (const auto& rule : dp.hlam().rules()) {
    int deg = static_cast<int>(rule.lhs.size());
    NcPoly top = NcPoly::zero(d);
    for (const auto& [m, c] : rule.rhs.terms())
      if (static_cast<int>(m.word.size()) == deg) top.add_term(m, c);
    bool found = false;
    for (const auto& hr : dp.h().rules()) {
      if (hr.lhs == rule.lhs) {
        CHECK(hr.rhs == top);
        found = true;
      }
    }
    CHECK(found);
  }
}

TEST_CASE("lambda = 0 degenerates to H") {
  auto [d, lambda] = fixtures::sl2();
  auto dp = build_deformation(d, LinkingParams{}, {}, 6);
  REQUIRE(dp.h().rules().size() == dp.hlam().rules().size());
  for (size_t i = 0; i < dp.h().rules().size(); ++i)
    CHECK(rule_str(*d, dp.h().rules()[i]) ==
          rule_str(*d, dp.hlam().rules()[i]));
  CHECK(reduce(parse_expression(d, "e*f - q^-2*f*e"), dp.hlam()).is_zero());
}

TEST_CASE("E F - F E = (K - K^-1)/(q - q^-1) with F = f K^-1") {
  auto dp = sl2_dp();
  const DatumPtr& d = dp.datum;
  NcPoly lhs = reduce(
      parse_expression(d, "e*(f*K^-1) - (f*K^-1)*e"), dp.hlam());
  CHECK(lhs == parse_expression(d, "(K - K^-1)/(q - q^-1)"));
  CHECK(reduce(parse_expression(d, "e*f - q^-2*f*e"), dp.hlam()) ==
        parse_expression(d, "(K^2 - 1)/(q - q^-1)"));
}

TEST_CASE("inadmissible lambda is rejected") {
  auto [d, lambda] = fixtures::sl3();
  LinkingParams bad;
  bad.set(*d, d->letter_index("e1"), d->letter_index("f2"),
          Scalar::one(Qq));  // chi_e1 chi_f2 != 1
  CHECK_THROWS_AS(build_deformation(d, bad, {}, 4), error);
}

TEST_CASE("comodule structure of A") {
  auto dp = sl2_dp(5);
  auto rep = comodule_check(dp, 3);
  if (!rep.pass)
    for (const auto& l : rep.lines)
      if (l.find("FAIL") != std::string::npos) MESSAGE(l);
  CHECK(rep.pass);

  // hand-corrupted A rule: constant shifted by 2c; the right coaction
  // residue no longer vanishes
  const DatumPtr& d = dp.datum;
  NcPoly bad_rel = parse_expression(d, "e*f - q^-2*f*e + 3/(q - q^-1)");
  DeformedPresentation broken{dp.datum,  dp.lambda, dp.hopf_h, dp.hopf_hlam,
                              complete(Presentation(d, {orient(bad_rel)}, 0), 5),
                              5};
  auto rep2 = comodule_check(broken, 2);
  CHECK_FALSE(rep2.pass);
}

TEST_CASE("convolution inverse of the section") {
  auto dp = sl2_dp();
  const DatumPtr& d = dp.datum;
  int e = d->letter_index("e");
  auto K = GroupElement::generator(d->group(), 0);
  auto id = GroupElement::identity(d->group());

  ConvolutionInverse phi_inv(dp.h(), dp.a(), [&](const Monomial& m) {
    return section_apply(dp, m, SectionTarget::cleft);
  });

  CHECK(phi_inv.at({Word{}, K}) == NcPoly::group(d, K.inverse()));
  CHECK(phi_inv.at({Word{e}, id}) == -parse_expression(d, "K^-1*e"));

  // phi^-1(ef as an H-element) = K^-2 (q^-2 f e - c)
  NcPoly ef_h = reduce(parse_expression(d, "e*f"), dp.h());
  NcPoly val = NcPoly::zero(d);
  for (const auto& [m, c] : ef_h.terms()) val += phi_inv.at(m) * c;
  CHECK(val == reduce(parse_expression(
                          d, "K^-2*(q^-2*f*e - 1/(q - q^-1))"),
                      dp.a()));

  // convolving back gives the counit on a sample of basis monomials
  for (const auto& m : basis_monomials(dp.h(), 3, 1)) {
    NcPoly acc = NcPoly::zero(d);
    TensorElem delta = coproduct_in(
        NcPoly::monomial(d, m, Scalar::one(Qq)), dp.h(), dp.h());
    for (const auto& [k, c] : delta.terms())
      acc += (phi_inv.at(k.first) *
              section_apply(dp, k.second, SectionTarget::cleft)) *
             c;
    acc = reduce(acc, dp.a());
    CHECK(acc == NcPoly::scalar(d, counit(NcPoly::monomial(
                                    d, m, Scalar::one(Qq)))));
  }
}

TEST_CASE("extracted cocycle values on sl2") {
  auto dp = sl2_dp();
  const DatumPtr& d = dp.datum;
  int e = d->letter_index("e"), f = d->letter_index("f");
  auto K = GroupElement::generator(d->group(), 0);
  auto id = GroupElement::identity(d->group());
  ExtractedCocycle sig(dp);

  CHECK(sig.sigma({Word{e}, id}, {Word{f}, id}) == -c_sl2());
  CHECK(sig.sigma({Word{f}, id}, {Word{e}, id}).is_zero());
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b)
      CHECK(sig.sigma({Word{}, K.pow(a)}, {Word{}, K.pow(b)}).is_one());
  // counit normalization
  CHECK(sig.sigma({Word{e}, id}, {Word{}, id}).is_zero());
  CHECK(sig.sigma({Word{}, id}, {Word{}, id}).is_one());

  // the dump has the same values in canonical order
  auto table = extract_cocycle(dp, 3);
  bool saw_ef = false;
  for (const auto& [m1, m2, v] : table.entries) {
    if (m1.word == Word{e} && m2.word == Word{f} && m1.group.is_identity() &&
        m2.group.is_identity()) {
      CHECK(v == -c_sl2());
      saw_ef = true;
    }
  }
  CHECK(saw_ef);
}

TEST_CASE("cocycle identities and convolution inverse") {
  auto dp = sl2_dp();
  const DatumPtr& d = dp.datum;
  ExtractedCocycle sig(dp);
  auto basis = basis_monomials(dp.h(), 3, 1);
  const Field& F = d->field();

  auto delta = [&](const Monomial& m) {
    return coproduct_in(NcPoly::monomial(d, m, Scalar::one(F)), dp.h(),
                        dp.h());
  };

  int checked = 0;
  for (const auto& g : basis) {
    for (const auto& h : basis) {
      // convolution: sum sigma(g1,h1) sigma^-1(g2,h2) = eps(g) eps(h)
      if (static_cast<int>(g.word.size() + h.word.size()) <= 3) {
        Scalar conv = Scalar::zero(F);
        TensorElem dg = delta(g), dh = delta(h);
        for (const auto& [kg, cg] : dg.terms())
          for (const auto& [kh, ch] : dh.terms())
            conv += sig.sigma(kg.first, kh.first) *
                    sig.sigma_inv(kg.second, kh.second) * cg * ch;
        Scalar eps = counit(NcPoly::monomial(d, g, Scalar::one(F))) *
                     counit(NcPoly::monomial(d, h, Scalar::one(F)));
        CHECK(conv == eps);
      }
      for (const auto& l : basis) {
        if (static_cast<int>(g.word.size() + h.word.size() + l.word.size()) >
            3)
          continue;
        // sigma(g1,h1) sigma(g2 h2, l) = sigma(h1,l1) sigma(g, h2 l2)
        Scalar lhs = Scalar::zero(F), rhs = Scalar::zero(F);
        TensorElem dg = delta(g), dh = delta(h), dl = delta(l);
        for (const auto& [kg, cg] : dg.terms()) {
          for (const auto& [kh, ch] : dh.terms()) {
            NcPoly prod =
                reduce(NcPoly::monomial(d, kg.second, Scalar::one(F)) *
                           NcPoly::monomial(d, kh.second, Scalar::one(F)),
                       dp.h());
            lhs += sig.sigma(kg.first, kh.first) *
                   sig.sigma(prod, NcPoly::monomial(d, l, Scalar::one(F))) *
                   cg * ch;
          }
        }
        for (const auto& [kh, ch] : dh.terms()) {
          for (const auto& [kl, cl] : dl.terms()) {
            NcPoly prod =
                reduce(NcPoly::monomial(d, kh.second, Scalar::one(F)) *
                           NcPoly::monomial(d, kl.second, Scalar::one(F)),
                       dp.h());
            rhs += sig.sigma(kh.first, kl.first) *
                   sig.sigma(NcPoly::monomial(d, g, Scalar::one(F)), prod) *
                   ch * cl;
          }
        }
        CHECK(lhs == rhs);
        ++checked;
      }
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("deformed product transports the H^lambda product along eta") {
  auto dp = sl2_dp();
  const DatumPtr& d = dp.datum;
  ExtractedCocycle sig(dp);
  int e = d->letter_index("e"), f = d->letter_index("f");
  auto id = GroupElement::identity(d->group());

  // e . f reproduces the H^lambda relation value
  NcPoly ef = deformed_product({Word{e}, id}, {Word{f}, id}, sig, dp.hopf_h);
  CHECK(ef == parse_expression(d, "q^-2*f*e + (K^2 - 1)/(q - q^-1)"));

  // group-likes multiply undeformed
  auto K = GroupElement::generator(d->group(), 0);
  CHECK(deformed_product({Word{}, K}, {Word{}, K.pow(2)}, sig, dp.hopf_h) ==
        NcPoly::group(d, K.pow(3)));

  // transport on all basis pairs of total degree <= 2:
  // p . r = eta^-1(eta(p) eta(r)) and eta is the basis identity
  for (const auto& p : basis_monomials(dp.h(), 2, 1)) {
    for (const auto& r : basis_monomials(dp.h(), 2, 1)) {
      if (static_cast<int>(p.word.size() + r.word.size()) > 2) continue;
      NcPoly via_sigma = deformed_product(p, r, sig, dp.hopf_h);
      NcPoly via_eta =
          reduce(NcPoly::monomial(d, p, Scalar::one(Qq)) *
                     NcPoly::monomial(d, r, Scalar::one(Qq)),
                 dp.hlam());
      CHECK(via_sigma == via_eta);
    }
  }
}

TEST_CASE("section is right H-colinear") {
  auto dp = sl2_dp();
  const DatumPtr& d = dp.datum;
  for (const auto& m : basis_monomials(dp.h(), 3, 1)) {
    // (phi (x) id) Delta_H(m)
    TensorElem lhs(d);
    TensorElem delta = coproduct_in(
        NcPoly::monomial(d, m, Scalar::one(Qq)), dp.h(), dp.h());
    for (const auto& [k, c] : delta.terms()) {
      NcPoly left = section_apply(dp, k.first, SectionTarget::cleft);
      TensorElem t(d);
      t.add(left, NcPoly::monomial(d, k.second, Scalar::one(Qq)));
      for (const auto& [k2, c2] : t.terms())
        lhs.add_term(k2.first, k2.second, c2 * c);
    }
    // delta_A(phi(m))
    TensorElem rhs = coproduct_in(section_apply(dp, m, SectionTarget::cleft),
                                  dp.a(), dp.h());
    CHECK(lhs == rhs);
  }
}

TEST_CASE("graded dimensions") {
  SUBCASE("sl2: n + 1 per degree") {
    auto dp = sl2_dp();
    auto t = graded_dims(dp, 6);
    for (int n = 0; n <= 6; ++n) {
      CHECK(t.rows[n].dim_h == n + 1);
      CHECK(t.rows[n].dim_hlam == n + 1);
      CHECK(t.rows[n].equal);
    }
    CHECK_FALSE(t.total_dimension.has_value());
  }
  SUBCASE("sl3: equal columns") {
    auto dp = sl3_dp();
    auto t = graded_dims(dp, 5);
    for (const auto& r : t.rows) CHECK(r.equal);
    // degree counts of the two-sided PBW factorization
    CHECK(t.rows[0].dim_h == 1);
    CHECK(t.rows[1].dim_h == 4);
    CHECK(t.rows[2].dim_h == 12);
    CHECK(t.rows[3].dim_h == 28);
  }
  SUBCASE("uq-sl2 at zeta_5: total dimension 125") {
    auto dp = uq_dp();
    auto t = graded_dims(dp, 10);
    for (const auto& r : t.rows) CHECK(r.equal);
    // oracle: direct enumeration of f^a e^b K^c with a, b, c < 5
    long expect = 0;
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b)
        for (int c = 0; c < 5; ++c) expect += 1;
    REQUIRE(t.total_dimension.has_value());
    CHECK(*t.total_dimension == expect);
    CHECK(*t.total_dimension == 125);
  }
}
