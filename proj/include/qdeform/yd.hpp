// Diagonal-type Yetter-Drinfeld data: letters x_i carrying a group element
// g_i and a character chi_i, grouped into totally ordered components.  The
// braiding matrix is q_ij = chi_j(g_i).  Cross-component symmetry
// (q_ij q_ji = 1) and linking admissibility (lambda_ij = 0 unless
// chi_i chi_j = 1) are checked by validate().

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qdeform/abgroup.hpp"

namespace qdeform {

struct Letter {
  std::string name;
  int component = 0;  // index into YDDatum::components
  GroupElement g;
  Character chi;
};

class YDDatum {
 public:
  YDDatum(GroupSpecPtr group, std::vector<std::string> components,
          std::vector<Letter> letters);

  const GroupSpecPtr& group() const { return group_; }
  const std::vector<std::string>& components() const { return components_; }
  const std::vector<Letter>& letters() const { return letters_; }
  const Letter& letter(int i) const { return letters_.at(i); }
  int letter_count() const { return static_cast<int>(letters_.size()); }
  const Field& field() const { return letters_.at(0).chi.field(); }

  int letter_index(const std::string& name) const;  // -1 when absent
  // position of letter i in the monomial order: sorted by
  // (component position, declaration index)
  int rank(int i) const { return rank_.at(i); }

  // braiding entry q_ij = chi_j(g_i) (cached)
  const Scalar& q(int i, int j) const { return braiding_.at(i * letter_count() + j); }

 private:
  GroupSpecPtr group_;
  std::vector<std::string> components_;
  std::vector<Letter> letters_;
  std::vector<int> rank_;
  std::vector<Scalar> braiding_;
};

using DatumPtr = std::shared_ptr<const YDDatum>;

// Linking parameters keyed by letter pairs (i, j) with
// component(i) > component(j); absent pairs mean zero.  The mirrored value
// lambda_ji = -q_ji * lambda_ij is derived on demand, never stored.
class LinkingParams {
 public:
  LinkingParams() = default;

  // Accepts either orientation and normalizes to component(i) > component(j).
  void set(const YDDatum& datum, int i, int j, const Scalar& value);
  // stored value for component(i) > component(j); zero if absent
  Scalar get(const YDDatum& datum, int i, int j) const;
  const std::map<std::pair<int, int>, Scalar>& table() const { return table_; }
  bool empty() const;

 private:
  std::map<std::pair<int, int>, Scalar> table_;
};

struct ValidationReport {
  bool pass = true;
  std::vector<std::string> failures;
  std::string str() const;
};

std::vector<std::vector<Scalar>> braiding_matrix(const YDDatum& datum);

ValidationReport validate(const YDDatum& datum, const LinkingParams& lambda);

// A bicharacter on Gamma x Gamma given by its values on generator pairs.
class Bicharacter {
 public:
  Bicharacter(GroupSpecPtr spec, std::vector<std::vector<Scalar>> values);
  static Bicharacter trivial(GroupSpecPtr spec, const Field& f);

  Scalar operator()(const GroupElement& g, const GroupElement& h) const;

 private:
  GroupSpecPtr spec_;
  std::vector<std::vector<Scalar>> values_;  // values_[i][j] = beta(gen_i, gen_j)
};

// Cocycle twist of the datum along a group bicharacter:
// chi_i^beta(h) = beta(h, g_i) beta(g_i, h)^{-1} chi_i(h).
YDDatum twist_datum(const YDDatum& datum, const Bicharacter& beta);

}  // namespace qdeform
