#include "zerocyc/int_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace zerocyc {

IntMatrix IntMatrix::from_rows(
    std::initializer_list<std::initializer_list<long long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  IntMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("ragged row list");
    std::size_t j = 0;
    for (long long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

bool IntMatrix::is_zero() const {
  for (const Int& v : data_)
    if (v != 0) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k)
    std::swap((*this)(i, k), (*this)(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < rows_; ++k)
    std::swap((*this)(k, i), (*this)(k, j));
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, const Int& q) {
  if (q == 0) return;
  for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) -= q * (*this)(j, k);
}

void IntMatrix::add_col_multiple(std::size_t i, std::size_t j, const Int& q) {
  if (q == 0) return;
  for (std::size_t k = 0; k < rows_; ++k) (*this)(k, i) -= q * (*this)(k, j);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
}

IntMatrix IntMatrix::column_slice(std::size_t first, std::size_t count) const {
  IntMatrix out(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch in *");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

IntMatrix hcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hcat row mismatch");
  IntMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

std::string dump_matrix(const std::string& name, const IntMatrix& m) {
  std::ostringstream os;
  os << name << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m(i, j);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace zerocyc
