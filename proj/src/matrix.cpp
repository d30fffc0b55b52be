#include "vwb/matrix.hpp"

#include <stdexcept>
#include <vector>

namespace vwb {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("RationalMatrix: negative dimension");
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void RationalMatrix::check_index(int row, int col) const {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
    throw std::out_of_range("RationalMatrix: index out of range");
}

Rational RationalMatrix::at(int row, int col) const {
  check_index(row, col);
  auto it = entries_.find({row, col});
  return it == entries_.end() ? Rational(0) : it->second;
}

void RationalMatrix::set(int row, int col, const Rational& value) {
  check_index(row, col);
  if (value == 0)
    entries_.erase({row, col});
  else
    entries_[{row, col}] = value;
}

int RationalMatrix::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;

  // Clear denominators row by row (rank-preserving), then eliminate over Z.
  std::vector<std::vector<Integer>> m(rows_, std::vector<Integer>(cols_, Integer(0)));
  std::vector<Integer> row_scale(rows_, Integer(1));
  for (const auto& [pos, value] : entries_)
    row_scale[pos.first] = boost::multiprecision::lcm(row_scale[pos.first], den(value));
  for (const auto& [pos, value] : entries_)
    m[pos.first][pos.second] = num(value) * (row_scale[pos.first] / den(value));

  Integer prev = 1;
  int rank = 0;
  int pivot_row = 0;
  for (int col = 0; col < cols_ && pivot_row < rows_; ++col) {
    int p = -1;
    for (int r = pivot_row; r < rows_; ++r)
      if (m[r][col] != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[pivot_row]);
    for (int r = pivot_row + 1; r < rows_; ++r) {
      for (int c = col + 1; c < cols_; ++c) {
        Integer t = m[pivot_row][col] * m[r][c] - m[r][col] * m[pivot_row][c];
        if (prev != 1 && t % prev != 0)
          throw std::logic_error("RationalMatrix::rank: fraction-free division not exact");
        m[r][c] = t / prev;
      }
      m[r][col] = 0;
    }
    prev = m[pivot_row][col];
    ++pivot_row;
    ++rank;
  }
  return rank;
}

}  // namespace vwb
