#include "qdeform/linalg.hpp"

#include <algorithm>

namespace qdeform {

bool Echelon::insert(ScalarRow row) {
  for (size_t k = 0; k < rows_.size(); ++k) {
    int p = pivots_[k];
    if (p >= static_cast<int>(row.size())) continue;
    if (row[p].is_zero()) continue;
    Scalar f = row[p];
    for (size_t j = p; j < row.size(); ++j)
      if (!rows_[k][j].is_zero()) row[j] -= f * rows_[k][j];
  }
  int pivot = -1;
  for (size_t j = 0; j < row.size(); ++j) {
    if (!row[j].is_zero()) {
      pivot = static_cast<int>(j);
      break;
    }
  }
  if (pivot < 0) return false;
  Scalar inv = row[pivot].inverse();
  for (auto& x : row) x *= inv;
  rows_.push_back(std::move(row));
  pivots_.push_back(pivot);
  return true;
}

int rank_of(const Field& f, std::vector<ScalarRow> rows) {
  Echelon e(f);
  for (auto& r : rows) e.insert(std::move(r));
  return e.rank();
}

std::vector<ScalarRow> kernel_of(const Field& f, std::vector<ScalarRow> rows,
                                 int cols) {
  // reduced row echelon form
  int r = 0;
  std::vector<int> pivot_col;
  for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    int sel = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i) {
      if (!rows[i][c].is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(rows[r], rows[sel]);
    Scalar inv = rows[r][c].inverse();
    for (int j = c; j < cols; ++j) rows[r][j] *= inv;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Scalar fac = rows[i][c];
      for (int j = c; j < cols; ++j) rows[i][j] -= fac * rows[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<ScalarRow> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    ScalarRow v(cols, Scalar::zero(f));
    v[c] = Scalar::one(f);
    for (int k = 0; k < r; ++k) v[pivot_col[k]] = -rows[k][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace qdeform
