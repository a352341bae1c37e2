// Small dense exact linear algebra over a Scalar field: rank and null-space
// computation by Gaussian elimination.

#pragma once

#include <vector>

#include "qdeform/scalar.hpp"

namespace qdeform {

using ScalarRow = std::vector<Scalar>;

// Incremental row-echelon basis; rows are absorbed one at a time.
class Echelon {
 public:
  explicit Echelon(const Field& f) : field_(f) {}

  // reduces the row against the basis; returns true when it added a pivot
  bool insert(ScalarRow row);
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  Field field_;
  std::vector<ScalarRow> rows_;  // each with leading 1 at pivot_[k]
  std::vector<int> pivots_;
};

int rank_of(const Field& f, std::vector<ScalarRow> rows);

// Basis of { x : M x = 0 } for the rows-by-cols matrix M.
std::vector<ScalarRow> kernel_of(const Field& f, std::vector<ScalarRow> rows,
                                 int cols);

}  // namespace qdeform
