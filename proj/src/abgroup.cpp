#include "qdeform/abgroup.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qdeform {

int GroupSpec::free_rank() const {
  return static_cast<int>(std::count(orders.begin(), orders.end(), 0L));
}

bool GroupSpec::is_finite() const { return free_rank() == 0; }

long GroupSpec::group_order() const {
  if (!is_finite()) throw error("group is infinite");
  long n = 1;
  for (long o : orders) n *= o;
  return n;
}

std::shared_ptr<const GroupSpec> GroupSpec::make(
    std::vector<std::string> free_names,
    std::vector<std::pair<std::string, long>> torsion) {
  auto spec = std::make_shared<GroupSpec>();
  for (auto& n : free_names) {
    spec->names.push_back(std::move(n));
    spec->orders.push_back(0);
  }
  for (auto& [n, o] : torsion) {
    if (o < 2) throw error("torsion order must be >= 2");
    spec->names.push_back(n);
    spec->orders.push_back(o);
  }
  std::set<std::string> seen(spec->names.begin(), spec->names.end());
  if (seen.size() != spec->names.size())
    throw error("group generator names must be unique");
  return spec;
}

GroupElement::GroupElement(GroupSpecPtr spec, std::vector<int64_t> exponents)
    : spec_(std::move(spec)), e_(std::move(exponents)) {
  if (static_cast<int>(e_.size()) != spec_->rank())
    throw error("group element has wrong exponent count");
  reduce();
}

GroupElement GroupElement::identity(GroupSpecPtr spec) {
  std::vector<int64_t> e(spec->rank(), 0);
  return GroupElement(std::move(spec), std::move(e));
}

GroupElement GroupElement::generator(GroupSpecPtr spec, int i, int64_t power) {
  std::vector<int64_t> e(spec->rank(), 0);
  e.at(i) = power;
  return GroupElement(std::move(spec), std::move(e));
}

void GroupElement::reduce() {
  for (int i = 0; i < spec_->rank(); ++i) {
    long o = spec_->orders[i];
    if (o > 0) {
      e_[i] %= o;
      if (e_[i] < 0) e_[i] += o;
    }
  }
}

void GroupElement::check_spec(const GroupElement& o) const {
  if (spec_ != o.spec_) throw error("group spec mismatch");
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  check_spec(o);
  GroupElement r(*this);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  r.reduce();
  return r;
}

GroupElement GroupElement::inverse() const {
  GroupElement r(*this);
  for (auto& x : r.e_) x = -x;
  r.reduce();
  return r;
}

GroupElement GroupElement::pow(int64_t k) const {
  GroupElement r(*this);
  for (auto& x : r.e_) x *= k;
  r.reduce();
  return r;
}

bool GroupElement::is_identity() const {
  return std::all_of(e_.begin(), e_.end(), [](int64_t x) { return x == 0; });
}

bool GroupElement::operator==(const GroupElement& o) const {
  return spec_ == o.spec_ && e_ == o.e_;
}

bool GroupElement::operator<(const GroupElement& o) const {
  check_spec(o);
  return e_ < o.e_;
}

std::string GroupElement::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] == 0) continue;
    if (!first) os << "*";
    os << spec_->names[i];
    if (e_[i] != 1) os << "^" << e_[i];
    first = false;
  }
  if (first) return "1";
  return os.str();
}

Character::Character(GroupSpecPtr spec, std::vector<Scalar> values)
    : Character(std::move(spec), std::move(values), Field::rationals()) {}

Character::Character(GroupSpecPtr spec, std::vector<Scalar> values,
                     const Field& f)
    : spec_(std::move(spec)),
      values_(std::move(values)),
      field_(values_.empty() ? f : values_.at(0).field()) {
  if (static_cast<int>(values_.size()) != spec_->rank())
    throw error("character needs one value per generator");
  for (int i = 0; i < spec_->rank(); ++i) {
    if (values_[i].is_zero())
      throw error("character value must be invertible");
    long o = spec_->orders[i];
    if (o > 0 && !values_[i].pow(o).is_one())
      throw error("character value on torsion generator " + spec_->names[i] +
                  " is not a root of unity of order dividing " +
                  std::to_string(o) + " (is the field large enough?)");
  }
}

Character Character::trivial(GroupSpecPtr spec, const Field& f) {
  std::vector<Scalar> v(spec->rank(), Scalar::one(f));
  return Character(std::move(spec), std::move(v), f);
}

Scalar Character::operator()(const GroupElement& g) const {
  if (g.spec() != spec_) throw error("group spec mismatch");
  Scalar r = Scalar::one(field());
  for (size_t i = 0; i < values_.size(); ++i) {
    int64_t e = g.exponents()[i];
    if (e != 0) r = r * values_[i].pow(e);
  }
  return r;
}

Character Character::operator*(const Character& o) const {
  if (spec_ != o.spec_) throw error("group spec mismatch");
  std::vector<Scalar> v;
  v.reserve(values_.size());
  for (size_t i = 0; i < values_.size(); ++i)
    v.push_back(values_[i] * o.values_[i]);
  return Character(spec_, std::move(v), field_);
}

Character Character::inverse() const {
  std::vector<Scalar> v;
  v.reserve(values_.size());
  for (const auto& x : values_) v.push_back(x.inverse());
  return Character(spec_, std::move(v), field_);
}

bool Character::is_trivial() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const Scalar& s) { return s.is_one(); });
}

bool Character::operator==(const Character& o) const {
  return spec_ == o.spec_ && values_ == o.values_;
}

}  // namespace qdeform
