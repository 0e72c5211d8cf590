#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace zerocyc {

using Int = boost::multiprecision::cpp_int;

/// Dense row-major matrix of arbitrary-precision integers. Empty shapes
/// (0xN, Nx0, 0x0) are legal; they behave as rank-0 maps.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Convenience constructor for tests and small literals.
  static IntMatrix from_rows(
      std::initializer_list<std::initializer_list<long long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool operator==(const IntMatrix&) const = default;

  bool is_zero() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row i -= q * row j
  void add_row_multiple(std::size_t i, std::size_t j, const Int& q);
  /// col i -= q * col j
  void add_col_multiple(std::size_t i, std::size_t j, const Int& q);
  void negate_row(std::size_t i);

  /// Columns [first, first+count) as a new matrix.
  IntMatrix column_slice(std::size_t first, std::size_t count) const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// [a | b]; both must have the same number of rows.
IntMatrix hcat(const IntMatrix& a, const IntMatrix& b);

/// Dump format used by the CLI and golden tests: a header line
/// "name rows cols" followed by one line of space-separated entries per row.
std::string dump_matrix(const std::string& name, const IntMatrix& m);

}  // namespace zerocyc
