#pragma once

#include "qgauss/ncpoly.hpp"

#include <stdexcept>
#include <vector>

namespace qgauss {

/// Matrix with entries in the free algebra, with row and column parities.
template <class Entry>
class BasicMatrix {
public:
  BasicMatrix() = default;
  BasicMatrix(std::size_t rows, std::size_t cols, Entry fill = Entry())
      : rows_(rows), cols_(cols), data_(rows * cols, fill), row_parity_(rows, 0), col_parity_(cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  // 0-based
  Entry& operator()(std::size_t i, std::size_t j) { return data_.at(i * cols_ + j); }
  const Entry& operator()(std::size_t i, std::size_t j) const { return data_.at(i * cols_ + j); }

  const std::vector<int>& row_parity() const { return row_parity_; }
  const std::vector<int>& col_parity() const { return col_parity_; }
  void set_parity(std::vector<int> rows, std::vector<int> cols) {
    if (rows.size() != rows_ || cols.size() != cols_) throw std::invalid_argument("parity size mismatch");
    row_parity_ = std::move(rows);
    col_parity_ = std::move(cols);
  }
  int parity(std::size_t i, std::size_t j) const { return (row_parity_[i] + col_parity_[j]) % 2; }

  /// Rows and columns kept, in the given order.
  BasicMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    BasicMatrix out(rows.size(), cols.size());
    std::vector<int> rp, cp;
    for (std::size_t r : rows) rp.push_back(row_parity_.at(r));
    for (std::size_t c : cols) cp.push_back(col_parity_.at(c));
    out.set_parity(rp, cp);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
    return out;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Entry> data_;
  std::vector<int> row_parity_;
  std::vector<int> col_parity_;
};

using QMatrix = BasicMatrix<NCPolynomial>;

} // namespace qgauss
