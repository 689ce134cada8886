#pragma once
#include <vector>

#include "virw/scalars.hpp"

namespace virw {

using Row = std::vector<Scalar>;

/// Incremental row-echelon span over Q(i).  Rows are reduced against the
/// current basis; independent rows extend it.  All arithmetic is exact.
class SpanTracker {
public:
  explicit SpanTracker(size_t ncols) : ncols_(ncols) {}

  /// Returns true when the row was independent (rank grew).
  bool insert(Row row);
  /// True iff the row lies in the current span (does not modify the tracker).
  bool contains(Row row) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  size_t ncols() const { return ncols_; }

private:
  size_t ncols_;
  std::vector<Row> rows_;     // echelon rows, pivot normalized to 1
  std::vector<size_t> pivots_;  // pivot column of each row
  void reduce(Row& row) const;
};

/// Exact rank of a list of rows.
int exact_rank(const std::vector<Row>& rows, size_t ncols);

}  // namespace virw
