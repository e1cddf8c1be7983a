#ifndef NPLAB_MATRIX_HPP
#define NPLAB_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nplab {

/// Row-major dense matrix over any ring-like value type.
template <typename T>
class DenseMatrix {
public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, const T &fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T &operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  T &at(std::size_t i, std::size_t j) {
    check(i, j);
    return (*this)(i, j);
  }
  const T &at(std::size_t i, std::size_t j) const {
    check(i, j);
    return (*this)(i, j);
  }

  bool square() const { return rows_ == cols_; }

  /// Submatrix with the given (0-based) row and column indices.
  DenseMatrix submatrix(const std::vector<std::size_t> &row_idx,
                        const std::vector<std::size_t> &col_idx) const {
    DenseMatrix out(row_idx.size(), col_idx.size());
    for (std::size_t a = 0; a < row_idx.size(); ++a)
      for (std::size_t b = 0; b < col_idx.size(); ++b)
        out(a, b) = at(row_idx[a], col_idx[b]);
    return out;
  }

  friend bool operator==(const DenseMatrix &, const DenseMatrix &) = default;

private:
  void check(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_)
      throw std::out_of_range("DenseMatrix: index out of range");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <typename T>
DenseMatrix<T> matmul(const DenseMatrix<T> &a, const DenseMatrix<T> &b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matmul: inner dimensions differ");
  DenseMatrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T &aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

template <typename T>
DenseMatrix<T> matadd(const DenseMatrix<T> &a, const DenseMatrix<T> &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matadd: shape mismatch");
  DenseMatrix<T> out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

/// Columnwise direct sum: the columns of a followed by those of b.
template <typename T>
DenseMatrix<T> hconcat(const DenseMatrix<T> &a, const DenseMatrix<T> &b) {
  if (a.rows() != b.rows())
    throw std::invalid_argument("hconcat: row counts differ");
  DenseMatrix<T> out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

template <typename T, typename F>
auto map_entries(const DenseMatrix<T> &a, F &&fn)
    -> DenseMatrix<decltype(fn(a(0, 0)))> {
  DenseMatrix<decltype(fn(a(0, 0)))> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = fn(a(i, j));
  return out;
}

} // namespace nplab

#endif // NPLAB_MATRIX_HPP
