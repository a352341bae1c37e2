#include "qdeform/deform.hpp"

#include <sstream>
#include <tuple>

namespace qdeform {

namespace {

void check_coproduct_well_defined(const HopfPres& hp, const char* which) {
  for (const auto& rule : hp.pres().rules()) {
    TensorElem a = hp.coproduct(NcPoly::word(hp.datum(), rule.lhs));
    TensorElem b = hp.coproduct(rule.rhs);
    if (!(a == b))
      throw error(std::string(which) +
                  ": coproduct is not well-defined on rule " +
                  rule_str(*hp.datum(), rule) + "; residue " + (a - b).str());
  }
}

}  // namespace

DeformedPresentation build_deformation(
    DatumPtr datum, const LinkingParams& lambda,
    const std::vector<NcPoly>& component_relations, int degree,
    ExecPolicy policy) {
  auto rep = validate(*datum, lambda);
  if (!rep.pass) throw error("inadmissible linking data:\n" + rep.str());

  std::vector<RewriteRule> shared;
  for (const auto& rel : component_relations) {
    if (!rel.is_group_free())
      throw error("component relations must be group-free");
    RewriteRule r = orient(rel);
    if (!is_weight_homogeneous(*datum, r))
      throw error("component relation is not Gamma-weight homogeneous");
    shared.push_back(std::move(r));
  }

  std::vector<RewriteRule> rules_h = shared, rules_a = shared,
                           rules_hlam = shared;
  int n = datum->letter_count();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const Letter& hi = datum->letter(a);
      const Letter& lo = datum->letter(b);
      if (hi.component <= lo.component) continue;
      // braided commutator relation x_a x_b - q_ab x_b x_a
      NcPoly core = NcPoly::word(datum, {a, b}) -
                    datum->q(a, b) * NcPoly::word(datum, {b, a});
      Scalar lam = lambda.get(*datum, a, b);
      rules_h.push_back(orient(core));
      // A: [v,w] + lambda[v,w] = 0
      rules_a.push_back(orient(core + NcPoly::scalar(datum, lam)));
      // H^lambda: [v,w] - lambda (g_a g_b - 1) = 0
      NcPoly gterm = NcPoly::group(datum, hi.g * lo.g) - NcPoly::one(datum);
      rules_hlam.push_back(orient(core - gterm * lam));
    }
  }

  DeformedPresentation dp{
      datum,
      lambda,
      HopfPres(complete(Presentation(datum, std::move(rules_h), 0), degree,
                        policy)),
      HopfPres(complete(Presentation(datum, std::move(rules_hlam), 0), degree,
                        policy)),
      complete(Presentation(datum, std::move(rules_a), 0), degree, policy),
      degree};

  check_coproduct_well_defined(dp.hopf_h, "H");
  check_coproduct_well_defined(dp.hopf_hlam, "H^lambda");
  return dp;
}

NcPoly section_apply(const DeformedPresentation& dp, const Monomial& m,
                     SectionTarget target) {
  const Presentation& t =
      target == SectionTarget::cleft ? dp.a() : dp.hlam();
  const DatumPtr& d = dp.datum;
  NcPoly acc = NcPoly::one(d);
  size_t i = 0;
  while (i < m.word.size()) {
    size_t j = i;
    int comp = d->letter(m.word[i]).component;
    while (j < m.word.size() && d->letter(m.word[j]).component == comp) ++j;
    Word block(m.word.begin() + i, m.word.begin() + j);
    acc = reduce(acc * NcPoly::word(d, block), t);
    i = j;
  }
  return reduce(acc * NcPoly::group(d, m.group), t);
}

ConvolutionInverse::ConvolutionInverse(
    const Presentation& source, const Presentation& target,
    std::function<NcPoly(const Monomial&)> phi)
    : source_(source),
      target_(target),
      phi_(std::move(phi)),
      memo_(MonoLess{source.datum().get()}) {}

const NcPoly& ConvolutionInverse::at(const Monomial& m) {
  auto it = memo_.find(m);
  if (it != memo_.end()) return it->second;
  const DatumPtr& d = source_.datum();
  NcPoly res = NcPoly::zero(d);
  if (m.word.empty()) {
    // group-like: psi(g) = phi(g)^-1
    NcPoly pg = phi_(m);
    if (pg.term_count() != 1 || !pg.leading().first.word.empty())
      throw error("convolution inverse: phi(group-like) is not group-like");
    auto [gm, gc] = pg.leading();
    res = NcPoly::monomial(d, {Word{}, gm.group.inverse()}, gc.inverse());
  } else {
    TensorElem delta = coproduct_in(NcPoly::monomial(d, m, Scalar::one(d->field())),
                                    source_, source_);
    NcPoly acc = NcPoly::zero(d);
    Monomial top_right{Word{}, m.group};
    bool top_seen = false;
    for (const auto& [k, c] : delta.terms()) {
      if (k.first == m) {
        // the unique full-degree term m (x) (group part)
        if (!(k.second == top_right) || !c.is_one())
          throw error("convolution inverse: unexpected top coproduct term");
        top_seen = true;
        continue;
      }
      acc += (at(k.first) * phi_(k.second)) * c;
    }
    if (!top_seen) throw error("convolution inverse: missing top term");
    NcPoly unit_inv = at(top_right);  // phi(group part)^-1
    res = reduce((-acc) * unit_inv, target_);
  }
  auto [jt, fresh] = memo_.emplace(m, std::move(res));
  return jt->second;
}

ComoduleReport comodule_check(const DeformedPresentation& dp, int max_degree,
                              ExecPolicy policy) {
  const DatumPtr& d = dp.datum;
  struct Item {
    std::string label;
    std::function<std::optional<std::string>()> run;
  };
  std::vector<Item> items;

  for (const auto& rule : dp.a().rules()) {
    NcPoly rel = NcPoly::word(d, rule.lhs) - rule.rhs;
    std::string rname = rule_str(*d, rule);
    items.push_back({"COACTION-RIGHT " + rname, [rel, &dp]() {
      TensorElem t = coproduct_in(rel, dp.a(), dp.h());
      if (t.is_zero()) return std::optional<std::string>{};
      return std::optional<std::string>{t.str()};
    }});
    items.push_back({"COACTION-LEFT " + rname, [rel, &dp]() {
      TensorElem t = coproduct_in(rel, dp.hlam(), dp.a());
      if (t.is_zero()) return std::optional<std::string>{};
      return std::optional<std::string>{t.str()};
    }});
  }

  // the two coactions commute: (dL (x) id) dR = (id (x) dR) dL
  for (const auto& m : basis_monomials(dp.a(), max_degree, 1)) {
    std::string name = mono_str(*d, m);
    items.push_back({"COACTION-COMPAT " + name, [m, &dp, d]() {
      using Key = std::tuple<Monomial, Monomial, Monomial>;
      auto cmp = [dptr = d.get()](const Key& x, const Key& y) {
        int c = deglex_cmp(*dptr, std::get<0>(x), std::get<0>(y));
        if (c != 0) return c < 0;
        c = deglex_cmp(*dptr, std::get<1>(x), std::get<1>(y));
        if (c != 0) return c < 0;
        return deglex_cmp(*dptr, std::get<2>(x), std::get<2>(y)) < 0;
      };
      std::map<Key, Scalar, decltype(cmp)> lhs(cmp), rhs(cmp);
      auto add = [](auto& t, const Key& k, const Scalar& x) {
        auto it = t.find(k);
        if (it == t.end()) {
          if (!x.is_zero()) t.emplace(k, x);
        } else {
          it->second += x;
          if (it->second.is_zero()) t.erase(it);
        }
      };
      NcPoly pm = NcPoly::monomial(d, m, Scalar::one(d->field()));
      TensorElem dr = coproduct_in(pm, dp.a(), dp.h());
      for (const auto& [k, c] : dr.terms()) {
        TensorElem dl = coproduct_in(
            NcPoly::monomial(d, k.first, Scalar::one(d->field())), dp.hlam(),
            dp.a());
        for (const auto& [k2, c2] : dl.terms())
          add(lhs, {k2.first, k2.second, k.second}, c * c2);
      }
      TensorElem dl = coproduct_in(pm, dp.hlam(), dp.a());
      for (const auto& [k, c] : dl.terms()) {
        TensorElem dr2 = coproduct_in(
            NcPoly::monomial(d, k.second, Scalar::one(d->field())), dp.a(),
            dp.h());
        for (const auto& [k2, c2] : dr2.terms())
          add(rhs, {k.first, k2.first, k2.second}, c * c2);
      }
      bool ok = lhs.size() == rhs.size();
      if (ok) {
        auto it = lhs.begin();
        auto jt = rhs.begin();
        for (; it != lhs.end(); ++it, ++jt) {
          if (cmp(it->first, jt->first) || cmp(jt->first, it->first) ||
              !(it->second == jt->second)) {
            ok = false;
            break;
          }
        }
      }
      if (ok) return std::optional<std::string>{};
      return std::optional<std::string>{"coaction compatibility residue"};
    }});
  }

  auto results = par_map<std::optional<std::string>>(
      items.size(), policy, [&](size_t k) { return items[k].run(); });
  ComoduleReport rep;
  for (size_t k = 0; k < items.size(); ++k) {
    if (results[k]) {
      rep.pass = false;
      rep.lines.push_back(items[k].label + " FAIL [" + *results[k] + "]");
    } else {
      rep.lines.push_back(items[k].label + " PASS");
    }
  }
  return rep;
}

ExtractedCocycle::ExtractedCocycle(const DeformedPresentation& dp)
    : dp_(dp),
      phi_inv_(dp.h(), dp.a(),
               [&dp](const Monomial& m) {
                 return section_apply(dp, m, SectionTarget::cleft);
               }),
      memo_(MonoPairLess{dp.datum.get()}),
      memo_inv_(MonoPairLess{dp.datum.get()}) {}

Scalar ExtractedCocycle::sigma(const Monomial& g, const Monomial& h) {
  auto key = std::make_pair(g, h);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  const DatumPtr& d = dp_.datum;
  const Field& F = d->field();
  NcPoly one = NcPoly::one(d);
  TensorElem dg = coproduct_in(NcPoly::monomial(d, g, Scalar::one(F)),
                               dp_.h(), dp_.h());
  TensorElem dh = coproduct_in(NcPoly::monomial(d, h, Scalar::one(F)),
                               dp_.h(), dp_.h());
  NcPoly total = NcPoly::zero(d);
  for (const auto& [kg, cg] : dg.terms()) {
    NcPoly left1 = section_apply(dp_, kg.first, SectionTarget::cleft);
    for (const auto& [kh, ch] : dh.terms()) {
      NcPoly left2 = section_apply(dp_, kh.first, SectionTarget::cleft);
      NcPoly left = reduce(left1 * left2, dp_.a());
      // phi^-1 of the H-product of the right pieces
      NcPoly mid = reduce(NcPoly::monomial(d, kg.second, Scalar::one(F)) *
                              NcPoly::monomial(d, kh.second, Scalar::one(F)),
                          dp_.h());
      NcPoly right = NcPoly::zero(d);
      for (const auto& [mm, mc] : mid.terms()) right += phi_inv_.at(mm) * mc;
      total += reduce(left * right, dp_.a()) * (cg * ch);
    }
  }
  Scalar value = counit(total);
  if (!(total == NcPoly::scalar(d, value)))
    throw error("extracted cocycle value is not coinvariant on (" +
                mono_str(*d, g) + ", " + mono_str(*d, h) + "): " +
                total.str());
  memo_.emplace(key, value);
  return value;
}

Scalar ExtractedCocycle::sigma_inv(const Monomial& g, const Monomial& h) {
  auto key = std::make_pair(g, h);
  auto it = memo_inv_.find(key);
  if (it != memo_inv_.end()) return it->second;
  const DatumPtr& d = dp_.datum;
  const Field& F = d->field();
  Scalar value = Scalar::zero(F);
  if (g.word.empty() && h.word.empty()) {
    value = sigma(g, h).inverse();
  } else {
    TensorElem dg = coproduct_in(NcPoly::monomial(d, g, Scalar::one(F)),
                                 dp_.h(), dp_.h());
    TensorElem dh = coproduct_in(NcPoly::monomial(d, h, Scalar::one(F)),
                                 dp_.h(), dp_.h());
    Scalar acc = Scalar::zero(F);
    Scalar top = Scalar::zero(F);
    bool top_seen = false;
    for (const auto& [kg, cg] : dg.terms()) {
      for (const auto& [kh, ch] : dh.terms()) {
        if (kg.first == g && kh.first == h) {
          // top term: sigma^-1(g,h) sigma(group parts)
          top = sigma(kg.second, kh.second) * cg * ch;
          top_seen = true;
          continue;
        }
        acc += sigma_inv(kg.first, kh.first) * sigma(kg.second, kh.second) *
               cg * ch;
      }
    }
    if (!top_seen || top.is_zero())
      throw error("cocycle inverse recursion lost its top term");
    value = (-acc) / top;
  }
  memo_inv_.emplace(key, value);
  return value;
}

Scalar ExtractedCocycle::sigma(const NcPoly& g, const NcPoly& h) {
  Scalar r = Scalar::zero(dp_.datum->field());
  for (const auto& [mg, cg] : g.terms())
    for (const auto& [mh, ch] : h.terms()) r += sigma(mg, mh) * cg * ch;
  return r;
}

Scalar ExtractedCocycle::sigma_inv(const NcPoly& g, const NcPoly& h) {
  Scalar r = Scalar::zero(dp_.datum->field());
  for (const auto& [mg, cg] : g.terms())
    for (const auto& [mh, ch] : h.terms()) r += sigma_inv(mg, mh) * cg * ch;
  return r;
}

CocycleTable extract_cocycle(const DeformedPresentation& dp, int degree,
                             int group_window) {
  if (2 * degree > dp.degree)
    throw error("extract_cocycle needs the presentations completed to " +
                std::to_string(2 * degree));
  ExtractedCocycle sig(dp);
  CocycleTable table;
  table.source = CocycleTable::Source::extracted;
  table.degree = degree;
  auto basis = basis_monomials(dp.h(), degree, group_window);
  for (const auto& m1 : basis) {
    for (const auto& m2 : basis) {
      if (static_cast<int>(m1.word.size() + m2.word.size()) > degree)
        continue;
      table.entries.emplace_back(m1, m2, sig.sigma(m1, m2));
    }
  }
  return table;
}

NcPoly deformed_product(const Monomial& p, const Monomial& r,
                        ExtractedCocycle& sigma, const HopfPres& h) {
  const DatumPtr& d = h.datum();
  const Field& F = d->field();
  using Triple = std::tuple<Monomial, Monomial, Monomial, Scalar>;
  auto expand2 = [&](const Monomial& m) {
    std::vector<Triple> out;
    TensorElem mid = h.coproduct(NcPoly::monomial(d, m, Scalar::one(F)));
    for (const auto& [k, c] : mid.terms()) {
      TensorElem left = h.coproduct(
          NcPoly::monomial(d, k.first, Scalar::one(F)));
      for (const auto& [k2, c2] : left.terms())
        out.emplace_back(k2.first, k2.second, k.second, c * c2);
    }
    return out;
  };
  NcPoly acc = NcPoly::zero(d);
  for (const auto& [p1, p2, p3, cp] : expand2(p)) {
    for (const auto& [r1, r2, r3, cr] : expand2(r)) {
      Scalar s1 = sigma.sigma(p1, r1);
      if (s1.is_zero()) continue;
      Scalar si = sigma.sigma_inv(p3, r3);
      if (si.is_zero()) continue;
      NcPoly mid = h.reduce(NcPoly::monomial(d, p2, Scalar::one(F)) *
                            NcPoly::monomial(d, r2, Scalar::one(F)));
      acc += mid * (s1 * si * cp * cr);
    }
  }
  return acc;
}

std::string DimsTable::str() const {
  std::ostringstream os;
  os << "degree  dim_H  dim_H^lambda  equal\n";
  for (const auto& r : rows)
    os << r.degree << "  " << r.dim_h << "  " << r.dim_hlam << "  "
       << (r.equal ? "yes" : "NO") << "\n";
  if (total_dimension)
    os << "total dimension (with group factor): " << *total_dimension << "\n";
  return os.str();
}

DimsTable graded_dims(const DeformedPresentation& dp, int n_max) {
  DimsTable t;
  long sum = 0;
  for (int n = 0; n <= n_max; ++n) {
    long a = static_cast<long>(normal_words(dp.h(), n).size());
    long b = static_cast<long>(normal_words(dp.hlam(), n).size());
    t.rows.push_back({n, a, b, a == b});
    sum += b;
  }
  if (dp.datum->group()->is_finite())
    t.total_dimension = sum * dp.datum->group()->group_order();
  return t;
}

}  // namespace qdeform
