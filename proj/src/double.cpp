#include "qdeform/double.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qdeform {

namespace {

int gen_count(const Monomial& m) {
  int n = static_cast<int>(m.word.size());
  for (int64_t e : m.group.exponents())
    n += static_cast<int>(e < 0 ? -e : e);
  return n;
}

// first generator factor and the remainder: m = u * v exactly
std::pair<Monomial, Monomial> split_first(const Monomial& m,
                                          const GroupSpecPtr& spec) {
  if (!m.word.empty()) {
    Monomial u{Word{m.word.front()}, GroupElement::identity(spec)};
    Monomial v{Word(m.word.begin() + 1, m.word.end()), m.group};
    return {u, v};
  }
  for (int k = 0; k < spec->rank(); ++k) {
    int64_t e = m.group.exponents()[k];
    if (e == 0) continue;
    int64_t s = e > 0 ? 1 : -1;
    Monomial u{Word{}, GroupElement::generator(spec, k, s)};
    Monomial v{Word{}, m.group * GroupElement::generator(spec, k, -s)};
    return {u, v};
  }
  throw error("split_first on the identity monomial");
}

NcPoly remap_letters(const NcPoly& p, DatumPtr target,
                     const std::vector<int>& letter_map) {
  NcPoly out = NcPoly::zero(target);
  for (const auto& [m, c] : p.terms()) {
    if (!m.group.is_identity())
      throw error("remap_letters expects group-free input");
    Word w;
    for (int i : m.word) {
      int t = letter_map.at(i);
      if (t < 0) throw error("relation uses a letter outside its component");
      w.push_back(t);
    }
    out.add_term({w, GroupElement::identity(target->group())}, c);
  }
  return out;
}

// concatenated group spec, coordinates kept in order (no free/torsion sort)
GroupSpecPtr concat_specs(const GroupSpecPtr& a, const GroupSpecPtr& b) {
  auto spec = std::make_shared<GroupSpec>();
  spec->names = a->names;
  spec->names.insert(spec->names.end(), b->names.begin(), b->names.end());
  spec->orders = a->orders;
  spec->orders.insert(spec->orders.end(), b->orders.begin(), b->orders.end());
  std::set<std::string> seen(spec->names.begin(), spec->names.end());
  if (seen.size() != spec->names.size())
    throw error("group generator names collide in the double");
  return spec;
}

}  // namespace

SkewPairing::SkewPairing(DatumPtr datum, const LinkingParams& lambda,
                         const std::vector<NcPoly>& component_relations,
                         int degree, bool reuse_gamma)
    : original_(std::move(datum)),
      lambda_(lambda),
      reuse_gamma_(reuse_gamma),
      degree_(degree),
      minus_datum_(nullptr),
      plus_datum_(nullptr),
      minus_hopf_(Presentation::free_algebra(nullptr)),
      plus_hopf_(Presentation::free_algebra(nullptr)) {
  if (original_->components().size() != 2)
    throw error("the double construction needs exactly two components");
  const Field& F = original_->field();
  for (int i = 0; i < original_->letter_count(); ++i) {
    if (original_->letter(i).component == 0)
      minus_letters_.push_back(i);
    else
      plus_letters_.push_back(i);
  }
  if (minus_letters_.empty() || plus_letters_.empty())
    throw error("the double construction needs letters in both components");

  GroupSpecPtr gamma = original_->group();
  GroupSpecPtr gamma_prime;
  if (reuse_gamma_) {
    // a disjoint copy of Gamma with primed names; every generator must be
    // the degree g_j of exactly one minus letter
    std::vector<std::string> free_names;
    std::vector<std::pair<std::string, long>> torsion;
    for (int k = 0; k < gamma->rank(); ++k) {
      if (gamma->orders[k] == 0)
        free_names.push_back(gamma->names[k] + "p");
      else
        torsion.emplace_back(gamma->names[k] + "p", gamma->orders[k]);
    }
    gamma_prime = GroupSpec::make(free_names, torsion);
    gamma_gen_letter_.assign(gamma->rank(), -1);
    for (int k = 0; k < gamma->rank(); ++k) {
      for (int j : minus_letters_) {
        if (original_->letter(j).g == GroupElement::generator(gamma, k)) {
          gamma_gen_letter_[k] = j;
          break;
        }
      }
      if (gamma_gen_letter_[k] < 0)
        throw error("reuse_gamma needs every generator to be some g_j");
    }
  } else {
    // the free abelian group on the symbols g_j'
    std::vector<std::string> names;
    for (int j : minus_letters_)
      names.push_back("gp_" + original_->letter(j).name);
    gamma_prime = GroupSpec::make(names, {});
    gamma_gen_letter_ = minus_letters_;
  }

  std::vector<Letter> minus_letters_v;
  for (size_t k = 0; k < minus_letters_.size(); ++k) {
    const Letter& l = original_->letter(minus_letters_[k]);
    GroupElement g = reuse_gamma_
                         ? GroupElement(gamma_prime, l.g.exponents())
                         : GroupElement::generator(gamma_prime, int(k));
    // chi_j'(g'_m) = chi_j(g of the letter behind g'_m)
    std::vector<Scalar> values;
    for (int m = 0; m < gamma_prime->rank(); ++m) {
      if (reuse_gamma_) {
        values.push_back(l.chi(GroupElement::generator(gamma, m)));
      } else {
        values.push_back(l.chi(original_->letter(gamma_gen_letter_[m]).g));
      }
    }
    minus_letters_v.push_back(
        {l.name, 0, g, Character(gamma_prime, values, F)});
  }
  minus_datum_ = std::make_shared<YDDatum>(
      gamma_prime, std::vector<std::string>{"minus"},
      std::move(minus_letters_v));

  std::vector<Letter> plus_letters_v;
  for (int i : plus_letters_) {
    const Letter& l = original_->letter(i);
    plus_letters_v.push_back({l.name, 0, l.g, l.chi});
  }
  plus_datum_ = std::make_shared<YDDatum>(
      gamma, std::vector<std::string>{"plus"}, std::move(plus_letters_v));

  // per-component relations remapped onto the halves
  std::vector<int> to_minus(original_->letter_count(), -1),
      to_plus(original_->letter_count(), -1);
  for (size_t k = 0; k < minus_letters_.size(); ++k)
    to_minus[minus_letters_[k]] = int(k);
  for (size_t k = 0; k < plus_letters_.size(); ++k)
    to_plus[plus_letters_[k]] = int(k);
  std::vector<RewriteRule> minus_rules, plus_rules;
  for (const auto& rel : component_relations) {
    int comp = original_->letter(rel.leading().first.word.at(0)).component;
    if (comp == 0)
      minus_rules.push_back(
          orient(remap_letters(rel, minus_datum_, to_minus)));
    else
      plus_rules.push_back(orient(remap_letters(rel, plus_datum_, to_plus)));
  }
  minus_hopf_ = HopfPres(
      complete(Presentation(minus_datum_, std::move(minus_rules), 0), degree));
  plus_hopf_ = HopfPres(
      complete(Presentation(plus_datum_, std::move(plus_rules), 0), degree));
  memo_ = std::map<std::pair<Monomial, Monomial>, Scalar, CrossLess>(
      CrossLess{minus_datum_.get(), plus_datum_.get()});
}

Scalar SkewPairing::table(const Monomial& a, const Monomial& x) const {
  const Field& F = original_->field();
  bool a_letter = !a.word.empty();
  bool x_letter = !x.word.empty();
  if (a_letter && x_letter) {
    // tau(x_j, x_i) = -lambda_ij
    int j = minus_letters_[a.word[0]];
    int i = plus_letters_[x.word[0]];
    return -lambda_.get(*original_, i, j);
  }
  if (a_letter != x_letter) return Scalar::zero(F);
  int k = -1, m = -1;
  int64_t s = 0, t = 0;
  for (int idx = 0; idx < minus_datum_->group()->rank(); ++idx)
    if (a.group.exponents()[idx] != 0) {
      k = idx;
      s = a.group.exponents()[idx];
    }
  for (int idx = 0; idx < plus_datum_->group()->rank(); ++idx)
    if (x.group.exponents()[idx] != 0) {
      m = idx;
      t = x.group.exponents()[idx];
    }
  // tau(g'_k, gamma_m) = chi_{j(k)}(gamma_m)
  const Letter& behind = original_->letter(gamma_gen_letter_[k]);
  return behind.chi(GroupElement::generator(original_->group(), m))
      .pow(s * t);
}

Scalar SkewPairing::eval(const Monomial& a, const Monomial& x) {
  const Field& F = original_->field();
  int ga = gen_count(a), gx = gen_count(x);
  if (ga == 0) return x.word.empty() ? Scalar::one(F) : Scalar::zero(F);
  if (gx == 0) return a.word.empty() ? Scalar::one(F) : Scalar::zero(F);
  auto key = std::make_pair(a, x);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  Scalar r = Scalar::zero(F);
  if (ga > 1) {
    // tau(u v, x) = tau(u, x1) tau(v, x2)
    auto [u, v] = split_first(a, minus_datum_->group());
    TensorElem dx =
        coproduct_in(NcPoly::monomial(plus_datum_, x, Scalar::one(F)),
                     plus_hopf_.pres(), plus_hopf_.pres());
    for (const auto& [k, c] : dx.terms())
      r += eval(u, k.first) * eval(v, k.second) * c;
  } else if (gx > 1) {
    // tau(a, u v) = tau(a1, v) tau(a2, u)
    auto [u, v] = split_first(x, plus_datum_->group());
    TensorElem da =
        coproduct_in(NcPoly::monomial(minus_datum_, a, Scalar::one(F)),
                     minus_hopf_.pres(), minus_hopf_.pres());
    for (const auto& [k, c] : da.terms())
      r += eval(k.first, v) * eval(k.second, u) * c;
  } else {
    r = table(a, x);
  }
  memo_.emplace(key, r);
  return r;
}

Scalar SkewPairing::eval(const NcPoly& a, const NcPoly& x) {
  Scalar r = Scalar::zero(original_->field());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mx, cx] : x.terms()) r += eval(ma, mx) * ca * cx;
  return r;
}

Scalar SkewPairing::eval_inv(const Monomial& a, const Monomial& x) {
  NcPoly sa = minus_hopf_.antipode(
      NcPoly::monomial(minus_datum_, a, Scalar::one(original_->field())));
  Scalar r = Scalar::zero(original_->field());
  for (const auto& [m, c] : sa.terms()) r += eval(m, x) * c;
  return r;
}

DoublePresentation build_double(const SkewPairing& tau, int degree,
                                ExecPolicy policy) {
  const DatumPtr& orig = tau.original();
  const Field& F = orig->field();
  const GroupSpecPtr& gp = tau.minus_datum()->group();
  const GroupSpecPtr& g = tau.plus_datum()->group();
  GroupSpecPtr big = concat_specs(gp, g);
  int prank = gp->rank();

  auto embed_minus = [&](const GroupElement& h) {
    std::vector<int64_t> e(big->rank(), 0);
    for (int k = 0; k < gp->rank(); ++k) e[k] = h.exponents()[k];
    return GroupElement(big, e);
  };
  auto embed_plus = [&](const GroupElement& h) {
    std::vector<int64_t> e(big->rank(), 0);
    for (int k = 0; k < g->rank(); ++k) e[prank + k] = h.exponents()[k];
    return GroupElement(big, e);
  };
  auto combine_chi = [&](const std::vector<Scalar>& on_gp,
                         const std::vector<Scalar>& on_g) {
    std::vector<Scalar> values = on_gp;
    values.insert(values.end(), on_g.begin(), on_g.end());
    return Character(big, values, F);
  };

  std::vector<Letter> letters, tensor_letters;
  std::vector<int> to_original;
  std::vector<Scalar> ones_gp(gp->rank(), Scalar::one(F));
  std::vector<Scalar> ones_g(g->rank(), Scalar::one(F));
  // minus letters first (component 0): x_j keeps its Gamma' degree g_j' and
  // acquires its original character on Gamma (the rule g x_j = chi_j(g) x_j g)
  for (size_t k = 0; k < tau.minus_letters().size(); ++k) {
    const Letter& ml = tau.minus_datum()->letter(int(k));
    const Letter& ol = orig->letter(tau.minus_letters()[k]);
    std::vector<Scalar> on_g;
    for (int m = 0; m < g->rank(); ++m)
      on_g.push_back(ol.chi(GroupElement::generator(g, m)));
    letters.push_back(
        {ol.name, 0, embed_minus(ml.g), combine_chi(ml.chi.values(), on_g)});
    // in the plain tensor product, the halves do not see each other
    tensor_letters.push_back({ol.name, 0, embed_minus(ml.g),
                              combine_chi(ml.chi.values(), ones_g)});
    to_original.push_back(tau.minus_letters()[k]);
  }
  // plus letters: x_i keeps (g_i, chi_i) on the Gamma block and acts on the
  // Gamma' block by q(i, j(m))^-1 (the rule x_i g_j' = chi_j(g_i) g_j' x_i)
  for (size_t k = 0; k < tau.plus_letters().size(); ++k) {
    const Letter& ol = orig->letter(tau.plus_letters()[k]);
    std::vector<Scalar> on_gp;
    for (int m = 0; m < gp->rank(); ++m) {
      int jm = tau.gamma_gen_letter()[m];
      on_gp.push_back(orig->q(tau.plus_letters()[k], jm).inverse());
    }
    letters.push_back(
        {ol.name, 1, embed_plus(ol.g), combine_chi(on_gp, ol.chi.values())});
    tensor_letters.push_back({ol.name, 1, embed_plus(ol.g),
                              combine_chi(ones_gp, ol.chi.values())});
    to_original.push_back(tau.plus_letters()[k]);
  }

  auto dd = std::make_shared<YDDatum>(
      big, std::vector<std::string>{"minus", "plus"}, std::move(letters));
  auto td = std::make_shared<YDDatum>(
      big, std::vector<std::string>{"minus", "plus"},
      std::move(tensor_letters));

  // linking over the double datum: lambda-tilde(i+, j-) = lambda_ij
  LinkingParams lam;
  int nminus = static_cast<int>(tau.minus_letters().size());
  for (size_t a = 0; a < tau.plus_letters().size(); ++a) {
    for (int b = 0; b < nminus; ++b) {
      Scalar v = tau.lambda().get(*orig, tau.plus_letters()[a],
                                  tau.minus_letters()[b]);
      if (!v.is_zero()) lam.set(*dd, nminus + int(a), b, v);
    }
  }

  // component relations carried over from the completed halves
  std::vector<NcPoly> rels;
  std::vector<int> from_minus(tau.minus_letters().size());
  for (size_t k = 0; k < from_minus.size(); ++k) from_minus[k] = int(k);
  std::vector<int> from_plus(tau.plus_letters().size());
  for (size_t k = 0; k < from_plus.size(); ++k)
    from_plus[k] = nminus + int(k);
  std::vector<NcPoly> trels;
  for (const auto& r : tau.minus_hopf().pres().rules()) {
    NcPoly rel = NcPoly::word(tau.minus_datum(), r.lhs) - r.rhs;
    rels.push_back(remap_letters(rel, dd, from_minus));
    trels.push_back(remap_letters(rel, td, from_minus));
  }
  for (const auto& r : tau.plus_hopf().pres().rules()) {
    NcPoly rel = NcPoly::word(tau.plus_datum(), r.lhs) - r.rhs;
    rels.push_back(remap_letters(rel, dd, from_plus));
    trels.push_back(remap_letters(rel, td, from_plus));
  }

  DeformedPresentation dp = build_deformation(dd, lam, rels, degree, policy);
  DeformedPresentation tp =
      build_deformation(td, LinkingParams{}, trels, degree, policy);
  return DoublePresentation{dd,    dp.hopf_hlam, tp.hopf_h,
                            prank, to_original,  degree};
}

Scalar PairingCocycle::sigma(const Monomial& m1, const Monomial& m2) {
  // split (w, (g', g)) into a = (minus word, g') in H_-, x = (plus word, g)
  const DatumPtr& dd = dpres_.double_datum;
  const Field& F = dd->field();
  auto split = [&](const Monomial& m) {
    size_t cut = 0;
    while (cut < m.word.size() && dd->letter(m.word[cut]).component == 0)
      ++cut;
    for (size_t k = cut; k < m.word.size(); ++k)
      if (dd->letter(m.word[k]).component == 0)
        throw error("pairing cocycle needs minus-sorted monomials");
    Word wm(m.word.begin(), m.word.begin() + cut);
    Word wp;
    for (size_t k = cut; k < m.word.size(); ++k)
      wp.push_back(m.word[k] - int(tau_.minus_letters().size()));
    std::vector<int64_t> ep(m.group.exponents().begin(),
                            m.group.exponents().begin() +
                                dpres_.gamma_prime_rank);
    std::vector<int64_t> eg(m.group.exponents().begin() +
                                dpres_.gamma_prime_rank,
                            m.group.exponents().end());
    Monomial a{wm, GroupElement(tau_.minus_datum()->group(), ep)};
    Monomial x{wp, GroupElement(tau_.plus_datum()->group(), eg)};
    return std::make_pair(a, x);
  };
  auto [a1, x1] = split(m1);
  auto [a2, x2] = split(m2);
  // sigma(a (x) x, b (x) y) = eps(a) tau(b, x) eps(y)
  if (!a1.word.empty() || !x2.word.empty()) return Scalar::zero(F);
  return tau_.eval(a2, x1);
}

Scalar PairingCocycle::sigma(const NcPoly& p1, const NcPoly& p2) {
  Scalar r = Scalar::zero(dpres_.double_datum->field());
  for (const auto& [m1, c1] : p1.terms())
    for (const auto& [m2, c2] : p2.terms()) r += sigma(m1, m2) * c1 * c2;
  return r;
}

CocycleTable cocycle_from_pairing(SkewPairing& tau,
                                  const DoublePresentation& dpres, int degree,
                                  int group_window) {
  PairingCocycle sig(tau, dpres);
  CocycleTable table;
  table.source = CocycleTable::Source::pairing;
  table.degree = degree;
  auto basis = basis_monomials(dpres.hopf.pres(), degree, group_window);
  for (const auto& m1 : basis) {
    for (const auto& m2 : basis) {
      if (static_cast<int>(m1.word.size() + m2.word.size()) > degree)
        continue;
      table.entries.emplace_back(m1, m2, sig.sigma(m1, m2));
    }
  }
  return table;
}

HopfPres quotient_central(const SkewPairing& tau,
                          const DoublePresentation& dpres) {
  const DatumPtr& dd = dpres.double_datum;
  const GroupSpecPtr& big = dd->group();
  const GroupSpecPtr& gamma = tau.plus_datum()->group();
  int prank = dpres.gamma_prime_rank;

  // z_m = g'_m (g_{j(m)})^-1 must be central: every letter's character is
  // trivial on it (group-likeness is automatic for group elements)
  for (int m = 0; m < prank; ++m) {
    std::vector<int64_t> e(big->rank(), 0);
    e[m] = 1;
    GroupElement gprime(big, e);
    // image of g'_m in Gamma
    GroupElement gj = [&] {
      if (tau.reuse_gamma())
        return GroupElement::generator(gamma, m);
      return tau.original()->letter(tau.gamma_gen_letter()[m]).g;
    }();
    std::vector<int64_t> e2(big->rank(), 0);
    for (int k = 0; k < gamma->rank(); ++k)
      e2[prank + k] = gj.exponents()[k];
    GroupElement z = gprime * GroupElement(big, e2).inverse();
    for (int i = 0; i < dd->letter_count(); ++i) {
      if (!dd->letter(i).chi(z).is_one())
        throw error("central quotient: " + z.str() +
                    " does not commute with " + dd->letter(i).name);
    }
  }

  // quotient datum over a fresh copy of Gamma; letters keep the double
  // order, groups and characters are projected along g'_m -> g_{j(m)}
  std::vector<std::string> free_names;
  std::vector<std::pair<std::string, long>> torsion;
  for (int k = 0; k < gamma->rank(); ++k) {
    if (gamma->orders[k] == 0)
      free_names.push_back(gamma->names[k]);
    else
      torsion.emplace_back(gamma->names[k], gamma->orders[k]);
  }
  // preserve the coordinate order of gamma
  auto qspec = std::make_shared<GroupSpec>();
  qspec->names = gamma->names;
  qspec->orders = gamma->orders;

  auto project = [&](const GroupElement& h) {
    std::vector<int64_t> e(gamma->rank(), 0);
    for (int k = 0; k < gamma->rank(); ++k) e[k] = h.exponents()[prank + k];
    GroupElement out(qspec, e);
    for (int m = 0; m < prank; ++m) {
      int64_t a = h.exponents()[m];
      if (a == 0) continue;
      GroupElement gj = tau.reuse_gamma()
                            ? GroupElement::generator(gamma, m)
                            : tau.original()->letter(tau.gamma_gen_letter()[m]).g;
      out = out * GroupElement(qspec, gj.exponents()).pow(a);
    }
    return out;
  };

  const Field& F = dd->field();
  std::vector<Letter> letters;
  for (int i = 0; i < dd->letter_count(); ++i) {
    const Letter& l = dd->letter(i);
    std::vector<Scalar> values;
    for (int k = 0; k < gamma->rank(); ++k)
      values.push_back(l.chi.values()[prank + k]);
    letters.push_back({l.name, l.component, project(l.g),
                       Character(qspec, values, F)});
  }
  auto qd = std::make_shared<YDDatum>(qspec, dd->components(),
                                      std::move(letters));

  std::vector<RewriteRule> rules;
  for (const auto& r : dpres.hopf.pres().rules()) {
    NcPoly rel = NcPoly::zero(qd);
    rel.add_term({r.lhs, GroupElement::identity(qspec)}, Scalar::one(F));
    for (const auto& [m, c] : r.rhs.terms())
      rel.add_term({m.word, project(m.group)}, -c);
    rules.push_back(orient(rel));
  }
  return HopfPres(
      complete(Presentation(qd, std::move(rules), 0), dpres.degree));
}

IsoReport verify_double_iso(const HopfPres& quotient,
                            const DeformedPresentation& dp, int max_degree) {
  IsoReport rep;
  const DatumPtr& qd = quotient.datum();
  const DatumPtr& hd = dp.datum;

  // name-based letter and group-generator translation
  auto letter_map = [&](const YDDatum& from, const YDDatum& to) {
    std::vector<int> map(from.letter_count(), -1);
    for (int i = 0; i < from.letter_count(); ++i)
      map[i] = to.letter_index(from.letter(i).name);
    return map;
  };
  std::vector<int> q_to_h = letter_map(*qd, *hd), h_to_q = letter_map(*hd, *qd);
  for (int i : q_to_h)
    if (i < 0) {
      rep.pass = false;
      rep.lines.push_back("LETTERS FAIL [name sets differ]");
      return rep;
    }
  if (qd->group()->names != hd->group()->names) {
    rep.pass = false;
    rep.lines.push_back("GROUP FAIL [generator names differ]");
    return rep;
  }

  auto translate = [&](const NcPoly& p, DatumPtr target,
                       const std::vector<int>& lmap) {
    NcPoly out = NcPoly::zero(target);
    for (const auto& [m, c] : p.terms()) {
      Word w;
      for (int i : m.word) w.push_back(lmap[i]);
      out.add_term({w, GroupElement(target->group(), m.group.exponents())},
                   c);
    }
    return out;
  };

  for (const auto& r : dp.hlam().rules()) {
    NcPoly rel = NcPoly::word(hd, r.lhs) - r.rhs;
    NcPoly image = reduce(translate(rel, qd, h_to_q), quotient.pres());
    std::string label = "RULE-TO-DOUBLE " + rule_str(*hd, r);
    if (image.is_zero()) {
      rep.lines.push_back(label + " PASS");
    } else {
      rep.pass = false;
      rep.lines.push_back(label + " FAIL [" + image.str() + "]");
    }
  }
  for (const auto& r : quotient.pres().rules()) {
    NcPoly rel = NcPoly::word(qd, r.lhs) - r.rhs;
    NcPoly image = reduce(translate(rel, hd, q_to_h), dp.hlam());
    std::string label = "RULE-FROM-DOUBLE " + rule_str(*qd, r);
    if (image.is_zero()) {
      rep.lines.push_back(label + " PASS");
    } else {
      rep.pass = false;
      rep.lines.push_back(label + " FAIL [" + image.str() + "]");
    }
  }

  for (int n = 0; n <= max_degree; ++n) {
    size_t a = normal_words(quotient.pres(), n).size();
    size_t b = normal_words(dp.hlam(), n).size();
    std::string label = "COUNT degree " + std::to_string(n);
    if (a == b) {
      rep.lines.push_back(label + " PASS (" + std::to_string(a) + ")");
    } else {
      rep.pass = false;
      rep.lines.push_back(label + " FAIL (" + std::to_string(a) +
                          " != " + std::to_string(b) + ")");
    }
  }
  return rep;
}

}  // namespace qdeform
