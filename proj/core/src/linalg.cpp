#include "virw/linalg.hpp"

namespace virw {

void SpanTracker::reduce(Row& row) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = row[pivots_[r]];
    if (c.is_zero()) continue;
    Scalar factor = c;  // pivot entries are normalized to 1
    for (size_t j = 0; j < ncols_; ++j) row[j] -= factor * rows_[r][j];
  }
}

bool SpanTracker::insert(Row row) {
  if (row.size() != ncols_) throw ArithmeticError("span tracker: row width mismatch");
  reduce(row);
  size_t pivot = ncols_;
  for (size_t j = 0; j < ncols_; ++j) {
    if (!row[j].is_zero()) {
      pivot = j;
      break;
    }
  }
  if (pivot == ncols_) return false;
  Scalar inv = row[pivot];
  for (size_t j = pivot; j < ncols_; ++j) row[j] /= inv;
  rows_.push_back(std::move(row));
  pivots_.push_back(pivot);
  return true;
}

bool SpanTracker::contains(Row row) const {
  if (row.size() != ncols_) throw ArithmeticError("span tracker: row width mismatch");
  reduce(row);
  for (const Scalar& c : row)
    if (!c.is_zero()) return false;
  return true;
}

int exact_rank(const std::vector<Row>& rows, size_t ncols) {
  SpanTracker t(ncols);
  for (const Row& r : rows) t.insert(r);
  return t.rank();
}

}  // namespace virw
