#include "qdeform/yd.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace qdeform {

YDDatum::YDDatum(GroupSpecPtr group, std::vector<std::string> components,
                 std::vector<Letter> letters)
    : group_(std::move(group)),
      components_(std::move(components)),
      letters_(std::move(letters)) {
  if (letters_.empty()) throw error("datum needs at least one letter");
  std::set<std::string> names;
  for (const auto& l : letters_) {
    if (!names.insert(l.name).second)
      throw error("duplicate letter name: " + l.name);
    if (l.component < 0 || l.component >= static_cast<int>(components_.size()))
      throw error("letter " + l.name + " has an undeclared component");
    if (l.g.spec() != group_ || l.chi.spec() != group_)
      throw error("letter " + l.name + " built over a different group");
  }
  // rank letters by (component position, declaration index)
  std::vector<int> order(letters_.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return letters_[a].component < letters_[b].component;
  });
  rank_.assign(letters_.size(), 0);
  for (size_t pos = 0; pos < order.size(); ++pos) rank_[order[pos]] = int(pos);

  braiding_.reserve(letters_.size() * letters_.size());
  for (const auto& li : letters_)
    for (const auto& lj : letters_) braiding_.push_back(lj.chi(li.g));
}

int YDDatum::letter_index(const std::string& name) const {
  for (size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i].name == name) return static_cast<int>(i);
  return -1;
}

void LinkingParams::set(const YDDatum& datum, int i, int j,
                        const Scalar& value) {
  int ci = datum.letter(i).component, cj = datum.letter(j).component;
  if (ci == cj)
    throw error("linking parameter requires letters in distinct components");
  if (ci > cj) {
    table_[{i, j}] = value;
  } else {
    // supplied lambda_ij with component(i) < component(j): the stored entry
    // is lambda_ji with lambda_ij = -q_ij lambda_ji, so lambda_ji = -q_ij^-1 v
    table_[{j, i}] = -(datum.q(i, j).inverse() * value);
  }
}

Scalar LinkingParams::get(const YDDatum& datum, int i, int j) const {
  auto it = table_.find({i, j});
  if (it != table_.end()) return it->second;
  return Scalar::zero(datum.field());
}

bool LinkingParams::empty() const {
  return std::all_of(table_.begin(), table_.end(),
                     [](const auto& kv) { return kv.second.is_zero(); });
}

std::string ValidationReport::str() const {
  if (pass) return "OK";
  std::ostringstream os;
  for (const auto& f : failures) os << "FAIL " << f << "\n";
  return os.str();
}

std::vector<std::vector<Scalar>> braiding_matrix(const YDDatum& datum) {
  int n = datum.letter_count();
  std::vector<std::vector<Scalar>> m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i].push_back(datum.q(i, j));
  return m;
}

ValidationReport validate(const YDDatum& datum, const LinkingParams& lambda) {
  ValidationReport rep;
  int n = datum.letter_count();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (datum.letter(i).component == datum.letter(j).component) continue;
      Scalar prod = datum.q(i, j) * datum.q(j, i);
      if (!prod.is_one()) {
        rep.pass = false;
        rep.failures.push_back(
            "symmetry letters " + datum.letter(i).name + "," +
            datum.letter(j).name + ": q_ij*q_ji = " + prod.str() +
            " (expected 1)");
      }
    }
  }
  for (const auto& [key, val] : lambda.table()) {
    if (val.is_zero()) continue;
    const Letter& li = datum.letter(key.first);
    const Letter& lj = datum.letter(key.second);
    if (li.component == lj.component) {
      rep.pass = false;
      rep.failures.push_back("linking " + li.name + "," + lj.name +
                             ": letters share a component");
      continue;
    }
    Character prod = li.chi * lj.chi;
    if (!prod.is_trivial()) {
      rep.pass = false;
      rep.failures.push_back("linking " + li.name + "," + lj.name +
                             ": lambda nonzero but chi_i*chi_j is nontrivial");
    }
  }
  return rep;
}

Bicharacter::Bicharacter(GroupSpecPtr spec,
                         std::vector<std::vector<Scalar>> values)
    : spec_(std::move(spec)), values_(std::move(values)) {
  int n = spec_->rank();
  if (static_cast<int>(values_.size()) != n)
    throw error("bicharacter table has wrong shape");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(values_[i].size()) != n)
      throw error("bicharacter table has wrong shape");
    for (int j = 0; j < n; ++j) {
      if (values_[i][j].is_zero())
        throw error("bicharacter values must be invertible");
      // multiplicativity on torsion generators
      long oi = spec_->orders[i], oj = spec_->orders[j];
      if (oi > 0 && !values_[i][j].pow(oi).is_one())
        throw error("bicharacter not compatible with torsion");
      if (oj > 0 && !values_[i][j].pow(oj).is_one())
        throw error("bicharacter not compatible with torsion");
    }
  }
}

Bicharacter Bicharacter::trivial(GroupSpecPtr spec, const Field& f) {
  int n = spec->rank();
  std::vector<std::vector<Scalar>> v(
      n, std::vector<Scalar>(n, Scalar::one(f)));
  return Bicharacter(std::move(spec), std::move(v));
}

Scalar Bicharacter::operator()(const GroupElement& g,
                               const GroupElement& h) const {
  if (g.spec() != spec_ || h.spec() != spec_)
    throw error("group spec mismatch");
  Scalar r = Scalar::one(values_[0][0].field());
  for (int i = 0; i < spec_->rank(); ++i) {
    int64_t a = g.exponents()[i];
    if (a == 0) continue;
    for (int j = 0; j < spec_->rank(); ++j) {
      int64_t b = h.exponents()[j];
      if (b == 0) continue;
      r = r * values_[i][j].pow(a * b);
    }
  }
  return r;
}

YDDatum twist_datum(const YDDatum& datum, const Bicharacter& beta) {
  std::vector<Letter> letters;
  letters.reserve(datum.letter_count());
  for (const auto& l : datum.letters()) {
    std::vector<Scalar> values;
    for (int k = 0; k < datum.group()->rank(); ++k) {
      GroupElement h = GroupElement::generator(datum.group(), k);
      values.push_back(beta(h, l.g) * beta(l.g, h).inverse() *
                       l.chi.values()[k]);
    }
    letters.push_back(
        {l.name, l.component, l.g, Character(datum.group(), values)});
  }
  return YDDatum(datum.group(), datum.components(), std::move(letters));
}

}  // namespace qdeform
