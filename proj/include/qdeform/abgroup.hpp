// Finitely generated abelian groups, their elements, and characters into
// the coefficient field.  Elements are exponent vectors over the declared
// generators; torsion coordinates are kept reduced into [0, order).

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qdeform/scalar.hpp"

namespace qdeform {

struct GroupSpec {
  // generator i is free when orders[i] == 0, torsion of that order otherwise
  std::vector<std::string> names;
  std::vector<long> orders;

  int rank() const { return static_cast<int>(names.size()); }
  int free_rank() const;
  bool is_finite() const;
  long group_order() const;  // product of torsion orders; throws if infinite

  static std::shared_ptr<const GroupSpec> make(
      std::vector<std::string> free_names,
      std::vector<std::pair<std::string, long>> torsion);
};

using GroupSpecPtr = std::shared_ptr<const GroupSpec>;

class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(GroupSpecPtr spec, std::vector<int64_t> exponents);

  static GroupElement identity(GroupSpecPtr spec);
  static GroupElement generator(GroupSpecPtr spec, int i, int64_t power = 1);

  const GroupSpecPtr& spec() const { return spec_; }
  const std::vector<int64_t>& exponents() const { return e_; }

  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse() const;
  GroupElement pow(int64_t k) const;
  bool is_identity() const;

  bool operator==(const GroupElement& o) const;
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
  // lexicographic on exponent vectors; both elements must share a spec
  bool operator<(const GroupElement& o) const;

  std::string str() const;

 private:
  void reduce();
  void check_spec(const GroupElement& o) const;

  GroupSpecPtr spec_;
  std::vector<int64_t> e_;
};

// A group map Gamma -> k^x, given by one field value per generator.
// Values on torsion generators must be roots of unity of the right order.
class Character {
 public:
  Character() = default;
  Character(GroupSpecPtr spec, std::vector<Scalar> values);
  Character(GroupSpecPtr spec, std::vector<Scalar> values, const Field& f);

  static Character trivial(GroupSpecPtr spec, const Field& f);

  const GroupSpecPtr& spec() const { return spec_; }
  const std::vector<Scalar>& values() const { return values_; }
  const Field& field() const { return field_; }

  Scalar operator()(const GroupElement& g) const;

  Character operator*(const Character& o) const;
  Character inverse() const;
  bool is_trivial() const;
  bool operator==(const Character& o) const;

 private:
  GroupSpecPtr spec_;
  std::vector<Scalar> values_;
  Field field_;
};

}  // namespace qdeform
