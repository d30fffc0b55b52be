#pragma once

#include "vwb/rational.hpp"

#include <map>
#include <utility>

namespace vwb {

/// Sparse exact matrix over Q; absent entries are zero, stored entries are not.
/// Rank uses fraction-free (Bareiss) elimination with deterministic pivoting,
/// so results are exact and reproducible across runs.
class RationalMatrix {
 public:
  using EntryMap = std::map<std::pair<int, int>, Rational>;

  RationalMatrix(int rows, int cols);
  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const EntryMap& entries() const { return entries_; }

  Rational at(int row, int col) const;
  void set(int row, int col, const Rational& value);  // erases on zero

  int rank() const;
  int kernel_dim() const { return cols_ - rank(); }

 private:
  void check_index(int row, int col) const;

  int rows_;
  int cols_;
  EntryMap entries_;
};

}  // namespace vwb
