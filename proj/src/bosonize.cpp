#include "qdeform/bosonize.hpp"

#include <sstream>
#include <tuple>

namespace qdeform {

void TensorElem::add_term(const Monomial& a, const Monomial& b,
                          const Scalar& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(a, b);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TensorElem::add(const NcPoly& left, const NcPoly& right) {
  for (const auto& [ml, cl] : left.terms())
    for (const auto& [mr, cr] : right.terms()) add_term(ml, mr, cl * cr);
}

TensorElem TensorElem::operator+(const TensorElem& o) const {
  TensorElem r(*this);
  for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
  return r;
}

TensorElem TensorElem::operator-(const TensorElem& o) const {
  TensorElem r(*this);
  for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, -c);
  return r;
}

TensorElem TensorElem::operator*(const Scalar& c) const {
  TensorElem r(datum_);
  for (const auto& [k, x] : terms_) r.add_term(k.first, k.second, x * c);
  return r;
}

bool TensorElem::operator==(const TensorElem& o) const {
  if (datum_ != o.datum_ || terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (deglex_cmp(*datum_, it->first.first, jt->first.first) != 0)
      return false;
    if (deglex_cmp(*datum_, it->first.second, jt->first.second) != 0)
      return false;
    if (!(it->second == jt->second)) return false;
  }
  return true;
}

std::string TensorElem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << mono_str(*datum_, k.first) << " (x) "
       << mono_str(*datum_, k.second);
  }
  return os.str();
}

TensorElem tensor_mul(const TensorElem& a, const TensorElem& b,
                      const Presentation& left, const Presentation& right) {
  const DatumPtr& d = a.datum();
  TensorElem r(d);
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      auto [ml, cl] = mono_mul(*d, ka.first, kb.first);
      auto [mr, cr] = mono_mul(*d, ka.second, kb.second);
      NcPoly pl = reduce(NcPoly::monomial(d, ml, Scalar::one(d->field())), left);
      NcPoly pr = reduce(NcPoly::monomial(d, mr, Scalar::one(d->field())), right);
      TensorElem tmp(d);
      tmp.add(pl, pr);
      Scalar f = ca * cb * cl * cr;
      for (const auto& [k, c] : tmp.terms())
        r.add_term(k.first, k.second, c * f);
    }
  }
  return r;
}

TensorElem coproduct_in(const NcPoly& p, const Presentation& left,
                        const Presentation& right) {
  const DatumPtr& d = p.datum();
  TensorElem out(d);
  for (const auto& [m, c] : p.terms()) {
    // Delta(w g) = prod_i (x_i (x) 1 + g_i (x) x_i) * (g (x) g)
    TensorElem acc(d);
    GroupElement id = GroupElement::identity(d->group());
    acc.add_term({Word{}, m.group}, {Word{}, m.group}, c);
    for (auto it = m.word.rbegin(); it != m.word.rend(); ++it) {
      int i = *it;
      TensorElem gen(d);
      gen.add_term({Word{i}, id}, {Word{}, id}, Scalar::one(d->field()));
      gen.add_term({Word{}, d->letter(i).g}, {Word{i}, id},
                   Scalar::one(d->field()));
      acc = tensor_mul(gen, acc, left, right);
    }
    out = out + acc;
  }
  return out;
}

Scalar counit(const NcPoly& p) {
  Scalar r = Scalar::zero(p.datum()->field());
  for (const auto& [m, c] : p.terms())
    if (m.word.empty()) r += c;
  return r;
}

NcPoly HopfPres::antipode(const NcPoly& p) const {
  const DatumPtr& d = pres_.datum();
  NcPoly out = NcPoly::zero(d);
  for (const auto& [m, c] : p.terms()) {
    // S is anti-multiplicative: S(w g) = g^-1 S(x_n) ... S(x_1)
    NcPoly acc = NcPoly::group(d, m.group.inverse());
    for (auto it = m.word.rbegin(); it != m.word.rend(); ++it) {
      int i = *it;
      // S(x_i) = -g_i^-1 * x_i, straightened into canonical form
      NcPoly s = NcPoly::group(d, d->letter(i).g.inverse()) *
                 NcPoly::letter(d, i) * (-Scalar::one(d->field()));
      acc = acc * s;
    }
    out += acc * c;
  }
  return qdeform::reduce(out, pres_);
}

std::vector<Monomial> basis_monomials(const Presentation& pres, int max_degree,
                                      int group_window) {
  const DatumPtr& d = pres.datum();
  const auto& spec = d->group();
  // all group elements with exponents in the window
  std::vector<GroupElement> groups;
  std::vector<int64_t> cur(spec->rank(), 0);
  auto rec = [&](auto&& self, int k) -> void {
    if (k == spec->rank()) {
      groups.emplace_back(spec, cur);
      return;
    }
    long o = spec->orders[k];
    int64_t lo = o > 0 ? 0 : -group_window;
    int64_t hi = o > 0 ? o - 1 : group_window;
    for (int64_t v = lo; v <= hi; ++v) {
      cur[k] = v;
      self(self, k + 1);
    }
    cur[k] = 0;
  };
  rec(rec, 0);

  std::vector<Monomial> out;
  for (int n = 0; n <= max_degree; ++n)
    for (const auto& w : normal_words(pres, n))
      for (const auto& g : groups) out.push_back({w, g});
  return out;
}

std::vector<Monomial> generating_basis(const Presentation& pres,
                                       int max_degree) {
  const DatumPtr& d = pres.datum();
  std::vector<GroupElement> groups = {GroupElement::identity(d->group())};
  for (int k = 0; k < d->group()->rank(); ++k)
    groups.push_back(GroupElement::generator(d->group(), k));
  std::vector<Monomial> out;
  for (int n = 0; n <= max_degree; ++n)
    for (const auto& w : normal_words(pres, n))
      for (const auto& g : groups) out.push_back({w, g});
  return out;
}

std::string HopfReport::str() const {
  std::ostringstream os;
  for (const auto& l : lines) os << l << "\n";
  os << (pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

namespace {

struct Mono3Less {
  const YDDatum* d;
  bool operator()(const std::tuple<Monomial, Monomial, Monomial>& a,
                  const std::tuple<Monomial, Monomial, Monomial>& b) const {
    int c = deglex_cmp(*d, std::get<0>(a), std::get<0>(b));
    if (c != 0) return c < 0;
    c = deglex_cmp(*d, std::get<1>(a), std::get<1>(b));
    if (c != 0) return c < 0;
    return deglex_cmp(*d, std::get<2>(a), std::get<2>(b)) < 0;
  }
};

using Tensor3Map =
    std::map<std::tuple<Monomial, Monomial, Monomial>, Scalar, Mono3Less>;

void t3_add(Tensor3Map& t, const Monomial& a, const Monomial& b,
            const Monomial& c, const Scalar& x) {
  if (x.is_zero()) return;
  auto key = std::make_tuple(a, b, c);
  auto it = t.find(key);
  if (it == t.end()) {
    t.emplace(std::move(key), x);
  } else {
    it->second += x;
    if (it->second.is_zero()) t.erase(it);
  }
}

}  // namespace

HopfReport check_hopf_axioms(const HopfPres& hp, int max_degree,
                             ExecPolicy policy) {
  const Presentation& pres = hp.pres();
  const DatumPtr& d = pres.datum();
  const Field& F = d->field();
  auto basis = generating_basis(pres, max_degree);

  struct Item {
    std::string label;
    std::function<std::optional<std::string>()> run;  // residue on failure
  };
  std::vector<Item> items;

  for (const auto& m : basis) {
    NcPoly pm = NcPoly::monomial(d, m, Scalar::one(F));
    std::string name = mono_str(*d, m);
    items.push_back({"COASSOC " + name, [pm, &hp, d]() {
      TensorElem mid = hp.coproduct(pm);
      Tensor3Map lhs{Mono3Less{d.get()}}, rhs{Mono3Less{d.get()}};
      for (const auto& [k, c] : mid.terms()) {
        TensorElem dl =
            hp.coproduct(NcPoly::monomial(d, k.first, Scalar::one(d->field())));
        for (const auto& [k2, c2] : dl.terms())
          t3_add(lhs, k2.first, k2.second, k.second, c * c2);
        TensorElem dr = hp.coproduct(
            NcPoly::monomial(d, k.second, Scalar::one(d->field())));
        for (const auto& [k2, c2] : dr.terms())
          t3_add(rhs, k.first, k2.first, k2.second, c * c2);
      }
      if (lhs == rhs) return std::optional<std::string>{};
      return std::optional<std::string>{"triple coproducts differ"};
    }});
    items.push_back({"COUNIT " + name, [pm, &hp, d]() {
      TensorElem delta = hp.coproduct(pm);
      NcPoly left = NcPoly::zero(d), right = NcPoly::zero(d);
      for (const auto& [k, c] : delta.terms()) {
        left.add_term(k.second,
                      c * counit(NcPoly::monomial(d, k.first,
                                                  Scalar::one(d->field()))));
        right.add_term(k.first,
                       c * counit(NcPoly::monomial(d, k.second,
                                                   Scalar::one(d->field()))));
      }
      if (left == pm && right == pm) return std::optional<std::string>{};
      return std::optional<std::string>{(left - pm).str()};
    }});
    items.push_back({"ANTIPODE " + name, [pm, &hp, d]() {
      TensorElem delta = hp.coproduct(pm);
      NcPoly left = NcPoly::zero(d), right = NcPoly::zero(d);
      for (const auto& [k, c] : delta.terms()) {
        NcPoly a = NcPoly::monomial(d, k.first, Scalar::one(d->field()));
        NcPoly b = NcPoly::monomial(d, k.second, Scalar::one(d->field()));
        left += (hp.antipode(a) * b) * c;
        right += (a * hp.antipode(b)) * c;
      }
      NcPoly want = NcPoly::scalar(d, counit(pm));
      if (hp.reduce(left) == want && hp.reduce(right) == want)
        return std::optional<std::string>{};
      return std::optional<std::string>{(hp.reduce(left) - want).str()};
    }});
  }

  // Delta respects each rule, including its group conjugates: check
  // multiplicativity on pairs (gamma, lhs), (lhs, gamma), and the rule itself
  std::vector<NcPoly> probes;
  for (int k = 0; k < d->group()->rank(); ++k)
    probes.push_back(NcPoly::group(d, GroupElement::generator(d->group(), k)));
  for (int i = 0; i < d->letter_count(); ++i)
    probes.push_back(NcPoly::letter(d, i));
  for (size_t ri = 0; ri < pres.rules().size(); ++ri) {
    const auto& rule = pres.rules()[ri];
    NcPoly lhs_poly = NcPoly::word(d, rule.lhs);
    std::string rname = rule_str(*d, rule);
    items.push_back({"DELTA-RULE " + rname, [lhs_poly, rule, &hp, d]() {
      TensorElem a = hp.coproduct(lhs_poly);
      TensorElem b = hp.coproduct(rule.rhs);
      if (a == b) return std::optional<std::string>{};
      return std::optional<std::string>{(a - b).str()};
    }});
    for (size_t pi = 0; pi < probes.size(); ++pi) {
      const NcPoly& probe = probes[pi];
      items.push_back(
          {"DELTA-MULT (" + probe.str() + ", " + rname + ")",
           [probe, lhs_poly, &hp, d]() {
             NcPoly prod = hp.reduce(probe * lhs_poly);
             TensorElem a = hp.coproduct(prod);
             TensorElem b = tensor_mul(hp.coproduct(probe),
                                       hp.coproduct(lhs_poly), hp.pres(),
                                       hp.pres());
             if (a == b) return std::optional<std::string>{};
             return std::optional<std::string>{(a - b).str()};
           }});
      items.push_back(
          {"DELTA-MULT (" + rname + ", " + probe.str() + ")",
           [probe, lhs_poly, &hp, d]() {
             NcPoly prod = hp.reduce(lhs_poly * probe);
             TensorElem a = hp.coproduct(prod);
             TensorElem b = tensor_mul(hp.coproduct(lhs_poly),
                                       hp.coproduct(probe), hp.pres(),
                                       hp.pres());
             if (a == b) return std::optional<std::string>{};
             return std::optional<std::string>{(a - b).str()};
           }});
    }
  }

  auto results = par_map<std::optional<std::string>>(
      items.size(), policy, [&](size_t k) { return items[k].run(); });

  HopfReport rep;
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

}  // namespace qdeform
