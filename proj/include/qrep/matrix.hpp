#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrep {

// Dense row-major matrix over an element type; arithmetic lives with the ring.
template <class E>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const E& fill = E{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  E& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const E& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  E* row(std::size_t r) { return data_.data() + r * cols_; }
  const E* row(std::size_t r) const { return data_.data() + r * cols_; }

  const std::vector<E>& data() const { return data_; }
  std::vector<E>& data() { return data_; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  // Copy of the block [r0, r0+nr) x [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("matrix block");
    Matrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw std::out_of_range("matrix set_block");
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
  }

  std::vector<E> column(std::size_t c) const {
    std::vector<E> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<E> data_;
};

template <class E>
Matrix<E> hconcat(const Matrix<E>& a, const Matrix<E>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row mismatch");
  Matrix<E> m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

template <class E>
Matrix<E> vconcat(const Matrix<E>& a, const Matrix<E>& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vconcat: column mismatch");
  Matrix<E> m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

template <class E>
Matrix<E> column_matrix(const std::vector<E>& v) {
  Matrix<E> m(v.size(), 1);
  for (std::size_t r = 0; r < v.size(); ++r) m(r, 0) = v[r];
  return m;
}

}  // namespace qrep
