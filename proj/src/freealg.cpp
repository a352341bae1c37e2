#include "qdeform/freealg.hpp"

#include <sstream>

namespace qdeform {

int word_cmp(const YDDatum& datum, const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t k = 0; k < a.size(); ++k) {
    int ra = datum.rank(a[k]), rb = datum.rank(b[k]);
    if (ra != rb) return ra < rb ? -1 : 1;
  }
  return 0;
}

int deglex_cmp(const YDDatum& datum, const Monomial& a, const Monomial& b) {
  int c = word_cmp(datum, a.word, b.word);
  if (c != 0) return c;
  if (a.group.exponents() != b.group.exponents())
    return a.group.exponents() < b.group.exponents() ? -1 : 1;
  return 0;
}

NcPoly::NcPoly(DatumPtr datum)
    : datum_(std::move(datum)), terms_(MonoLess{datum_.get()}) {}

NcPoly NcPoly::zero(DatumPtr datum) { return NcPoly(std::move(datum)); }

NcPoly NcPoly::one(DatumPtr datum) {
  return scalar(datum, Scalar::one(datum->field()));
}

NcPoly NcPoly::scalar(DatumPtr datum, const Scalar& c) {
  NcPoly p(datum);
  p.add_term({Word{}, GroupElement::identity(datum->group())}, c);
  return p;
}

NcPoly NcPoly::letter(DatumPtr datum, int i) {
  NcPoly p(datum);
  p.add_term({Word{i}, GroupElement::identity(datum->group())},
             Scalar::one(datum->field()));
  return p;
}

NcPoly NcPoly::group(DatumPtr datum, const GroupElement& g) {
  NcPoly p(datum);
  p.add_term({Word{}, g}, Scalar::one(datum->field()));
  return p;
}

NcPoly NcPoly::monomial(DatumPtr datum, const Monomial& m, const Scalar& c) {
  NcPoly p(datum);
  p.add_term(m, c);
  return p;
}

NcPoly NcPoly::word(DatumPtr datum, const Word& w) {
  NcPoly p(datum);
  p.add_term({w, GroupElement::identity(datum->group())},
             Scalar::one(datum->field()));
  return p;
}

void NcPoly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NcPoly NcPoly::operator+(const NcPoly& o) const {
  NcPoly r(*this);
  r += o;
  return r;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  if (datum_ != o.datum_) throw error("datum mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

NcPoly NcPoly::operator-(const NcPoly& o) const { return *this + (-o); }

NcPoly& NcPoly::operator-=(const NcPoly& o) { return *this += -o; }

NcPoly NcPoly::operator-() const {
  NcPoly r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

std::pair<Monomial, Scalar> mono_mul(const YDDatum& datum, const Monomial& a,
                                     const Monomial& b) {
  Scalar c = Scalar::one(datum.field());
  for (int y : b.word) c = c * datum.letter(y).chi(a.group);
  Word w = a.word;
  w.insert(w.end(), b.word.begin(), b.word.end());
  return {{std::move(w), a.group * b.group}, c};
}

NcPoly NcPoly::operator*(const NcPoly& o) const {
  if (datum_ != o.datum_) throw error("datum mismatch");
  NcPoly r(datum_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      auto [m, c] = mono_mul(*datum_, ma, mb);
      r.add_term(m, ca * cb * c);
    }
  }
  return r;
}

NcPoly NcPoly::operator*(const Scalar& c) const {
  NcPoly r(datum_);
  if (c.is_zero()) return r;
  for (const auto& [m, x] : terms_) r.add_term(m, x * c);
  return r;
}

NcPoly operator*(const Scalar& c, const NcPoly& p) { return p * c; }

bool NcPoly::operator==(const NcPoly& o) const {
  if (datum_ != o.datum_) return false;
  if (terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (deglex_cmp(*datum_, it->first, jt->first) != 0) return false;
    if (!(it->second == jt->second)) return false;
  }
  return true;
}

std::pair<Monomial, Scalar> NcPoly::leading() const {
  if (terms_.empty()) throw error("leading term of zero polynomial");
  auto it = std::prev(terms_.end());
  return {it->first, it->second};
}

int NcPoly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(std::prev(terms_.end())->first.word.size());
}

bool NcPoly::is_letter_homogeneous() const {
  if (terms_.empty()) return true;
  size_t d = terms_.begin()->first.word.size();
  for (const auto& [m, c] : terms_)
    if (m.word.size() != d) return false;
  return true;
}

bool NcPoly::is_group_free() const {
  for (const auto& [m, c] : terms_)
    if (!m.group.is_identity()) return false;
  return true;
}

GroupElement NcPoly::coweight_of(const Monomial& m) const {
  GroupElement g = GroupElement::identity(datum_->group());
  for (int i : m.word) g = g * datum_->letter(i).g;
  return g;
}

Character NcPoly::weight_of(const Monomial& m) const {
  Character chi = Character::trivial(datum_->group(), field());
  for (int i : m.word) chi = chi * datum_->letter(i).chi;
  return chi;
}

std::string mono_str(const YDDatum& datum, const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (int i : m.word) {
    if (!first) os << "*";
    os << datum.letter(i).name;
    first = false;
  }
  if (!m.group.is_identity()) {
    if (!first) os << "*";
    os << m.group.str();
    first = false;
  }
  if (first) return "1";
  return os.str();
}

std::string NcPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // descending deglex
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string cs = c.str();
    bool neg = cs.size() > 1 && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    std::string ms = mono_str(*datum_, m);
    bool composite = cs.find(' ') != std::string::npos ||
                     cs.find('/') != std::string::npos ||
                     cs.find('*') != std::string::npos;
    if (composite && ms != "1") cs = "(" + cs + ")";
    std::string body;
    if (ms == "1") {
      body = cs;
    } else if (cs == "1") {
      body = ms;
    } else {
      body = cs + "*" + ms;
    }
    if (first) {
      if (neg) os << "-";
      os << body;
      first = false;
    } else {
      os << (neg ? " - " : " + ") << body;
    }
  }
  return os.str();
}

}  // namespace qdeform
