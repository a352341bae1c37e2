#include "qdeform/braided.hpp"

#include <algorithm>
#include <sstream>

namespace qdeform {

BTensor BTensor::unit(DatumPtr datum) {
  BTensor t(datum);
  t.add_term({}, {}, Scalar::one(t.datum_->field()));
  return t;
}

BTensor BTensor::of(DatumPtr datum, const Word& a, const Word& b,
                    const Scalar& c) {
  BTensor t(std::move(datum));
  t.add_term(a, b, c);
  return t;
}

void BTensor::add_term(const Word& a, const Word& b, const Scalar& c) {
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

BTensor BTensor::operator+(const BTensor& o) const {
  BTensor r(*this);
  for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
  return r;
}

BTensor BTensor::operator-(const BTensor& o) const {
  BTensor r(*this);
  for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, -c);
  return r;
}

Scalar braiding_factor(const YDDatum& datum, const Word& u, const Word& v) {
  Scalar r = Scalar::one(datum.field());
  for (int x : u)
    for (int y : v) r = r * datum.q(x, y);
  return r;
}

BTensor BTensor::operator*(const BTensor& o) const {
  if (datum_ != o.datum_) throw error("datum mismatch");
  BTensor r(datum_);
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) {
      // (a (x) b)(a' (x) b') = q(b, a') (a a' (x) b b')
      Scalar c = ca * cb * braiding_factor(*datum_, ka.second, kb.first);
      Word left = ka.first;
      left.insert(left.end(), kb.first.begin(), kb.first.end());
      Word right = ka.second;
      right.insert(right.end(), kb.second.begin(), kb.second.end());
      r.add_term(left, right, c);
    }
  }
  return r;
}

BTensor BTensor::operator*(const Scalar& c) const {
  BTensor r(datum_);
  for (const auto& [k, x] : terms_) r.add_term(k.first, k.second, x * c);
  return r;
}

bool BTensor::operator==(const BTensor& o) const {
  return datum_ == o.datum_ && terms_ == o.terms_;
}

BTensor BTensor::reduced(const Presentation& pres) const {
  BTensor r(datum_);
  for (const auto& [k, c] : terms_) {
    NcPoly left = reduce(c * NcPoly::word(datum_, k.first), pres);
    NcPoly right = reduce(NcPoly::word(datum_, k.second), pres);
    for (const auto& [ml, cl] : left.terms()) {
      for (const auto& [mr, cr] : right.terms()) {
        if (!ml.group.is_identity() || !mr.group.is_identity())
          throw error("braided reduction produced a group part");
        r.add_term(ml.word, mr.word, cl * cr);
      }
    }
  }
  return r;
}

std::string BTensor::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    auto wstr = [&](const Word& w) {
      if (w.empty()) return std::string("1");
      std::string s;
      for (int i : w) {
        if (!s.empty()) s += "*";
        s += datum_->letter(i).name;
      }
      return s;
    };
    os << "(" << c.str() << ")*" << wstr(k.first) << " (x) " << wstr(k.second);
  }
  return os.str();
}

BTensor braided_coproduct(const NcPoly& p) {
  if (!p.is_group_free())
    throw error("braided coproduct needs a group-free argument");
  const DatumPtr& d = p.datum();
  BTensor out(d);
  for (const auto& [m, c] : p.terms()) {
    BTensor t = BTensor::unit(d);
    for (int i : m.word) {
      BTensor gen(d);
      gen.add_term({i}, {}, Scalar::one(d->field()));
      gen.add_term({}, {i}, Scalar::one(d->field()));
      t = t * gen;
    }
    out = out + t * c;
  }
  return out;
}

NcPoly braided_commutator(const NcPoly& v, const NcPoly& w) {
  if (!v.is_group_free() || !w.is_group_free())
    throw error("braided commutator needs group-free arguments");
  if (v.is_zero() || w.is_zero()) return NcPoly::zero(v.datum());
  // both arguments must have a single Gamma-coweight
  auto coweight = [&](const NcPoly& p) {
    std::optional<GroupElement> g;
    for (const auto& [m, c] : p.terms()) {
      GroupElement h = p.coweight_of(m);
      if (!g) {
        g = h;
      } else if (!(*g == h)) {
        throw error("braided commutator needs coweight-homogeneous arguments");
      }
    }
    return *g;
  };
  GroupElement gv = coweight(v);
  coweight(w);
  // q(v, w) = chi_w(g_v), with chi_w read off any monomial of w
  Character chi_w = w.weight_of(w.leading().first);
  for (const auto& [m, c] : w.terms())
    if (!(w.weight_of(m) == chi_w))
      throw error("braided commutator needs weight-homogeneous arguments");
  Scalar qvw = chi_w(gv);
  return v * w - qvw * (w * v);
}

bool is_primitive(const NcPoly& p, const Presentation& pres) {
  NcPoly r = reduce(p, pres);
  BTensor delta = braided_coproduct(r);
  for (const auto& [m, c] : r.terms()) {
    delta.add_term(m.word, {}, -c);
    delta.add_term({}, m.word, -c);
  }
  return delta.reduced(pres).is_zero();
}

std::vector<NcPoly> find_primitives(const Presentation& pres, int n,
                                    const Presentation* ideal) {
  const DatumPtr& d = pres.datum();
  const Field& F = d->field();
  auto words = normal_words(pres, n);

  // split the candidate span into Gamma-coweight blocks: Delta preserves
  // the coweight, so kernels can be computed blockwise
  std::map<std::vector<int64_t>, std::vector<Word>> blocks;
  NcPoly probe = NcPoly::zero(d);
  for (const auto& w : words) {
    GroupElement g = probe.coweight_of({w, GroupElement::identity(d->group())});
    blocks[g.exponents()].push_back(w);
  }

  std::vector<NcPoly> out;
  for (const auto& [key, bw] : blocks) {
    // constraint matrix: one column per candidate word, one row per basis
    // element of the reduced mixed tensor component (and per normal word of
    // the ideal-membership residual, when restricted)
    std::map<std::pair<Word, Word>, int> tensor_rows;
    std::map<Monomial, int, MonoLess> ideal_rows{MonoLess{d.get()}};
    std::vector<std::map<int, Scalar>> cols;  // sparse per candidate

    for (const auto& w : bw) {
      NcPoly p = NcPoly::word(d, w);
      BTensor delta = braided_coproduct(p);
      delta.add_term(w, {}, -Scalar::one(F));
      delta.add_term({}, w, -Scalar::one(F));
      BTensor res = delta.reduced(pres);
      std::map<int, Scalar> col;
      for (const auto& [k, c] : res.terms()) {
        auto [it, fresh] =
            tensor_rows.emplace(k, int(tensor_rows.size()));
        col[it->second] = c;
      }
      cols.push_back(std::move(col));
    }
    int row_base = static_cast<int>(tensor_rows.size());
    if (ideal) {
      for (size_t j = 0; j < bw.size(); ++j) {
        NcPoly r = reduce(NcPoly::word(d, bw[j]), *ideal);
        for (const auto& [m, c] : r.terms()) {
          auto [it, fresh] =
              ideal_rows.emplace(m, row_base + int(ideal_rows.size()));
          cols[j][it->second] = c;
        }
      }
    }
    int rows = row_base + static_cast<int>(ideal_rows.size());
    std::vector<ScalarRow> mat(rows, ScalarRow(bw.size(), Scalar::zero(F)));
    for (size_t j = 0; j < bw.size(); ++j)
      for (const auto& [r, c] : cols[j]) mat[r][j] = c;

    for (const auto& v : kernel_of(F, std::move(mat), int(bw.size()))) {
      NcPoly p = NcPoly::zero(d);
      for (size_t j = 0; j < bw.size(); ++j)
        p.add_term({bw[j], GroupElement::identity(d->group())}, v[j]);
      out.push_back(std::move(p));
    }
  }
  return out;
}

NcPoly serre_element(DatumPtr datum, int i, int j, int a_ij) {
  if (i == j) throw error("serre_element needs distinct letters");
  if (datum->letter(i).component != datum->letter(j).component)
    throw error("serre_element needs letters in one component");
  if (a_ij > 0) throw error("serre_element needs a_ij <= 0");
  NcPoly xi = NcPoly::letter(datum, i);
  NcPoly u = NcPoly::letter(datum, j);
  for (int k = 0; k < 1 - a_ij; ++k) u = braided_commutator(xi, u);
  return u;
}

}  // namespace qdeform
