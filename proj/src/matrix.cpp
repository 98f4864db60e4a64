#include "gentlekit/matrix.hpp"

#include <stdexcept>

namespace gentlekit {

std::string rat_to_string(const Rat& r) {
  return r.get_str();
}

Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::runtime_error("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

QMatrix QMatrix::identity(size_t n) {
  QMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::jordan(size_t n, const Rat& lambda) {
  QMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) {
    m.at(i, i) = lambda;
    if (i + 1 < n) m.at(i + 1, i) = 1;
  }
  return m;
}

bool QMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
  if (cols_ != other.rows_) throw std::runtime_error("QMatrix: shape mismatch in product");
  QMatrix out(rows_, other.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (size_t j = 0; j < other.cols_; ++j) {
        const Rat& b = other.at(k, j);
        if (b != 0) out.at(i, j) += a * b;
      }
    }
  return out;
}

bool QMatrix::operator==(const QMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

size_t QMatrix::rank() const {
  QMatrix m = *this;
  size_t rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < m.cols_ && row < m.rows_; ++col) {
    size_t pivot = row;
    while (pivot < m.rows_ && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows_) continue;
    if (pivot != row)
      for (size_t j = col; j < m.cols_; ++j) std::swap(m.at(pivot, j), m.at(row, j));
    Rat inv = 1 / m.at(row, col);
    for (size_t j = col; j < m.cols_; ++j) m.at(row, j) *= inv;
    for (size_t i = 0; i < m.rows_; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (size_t j = col; j < m.cols_; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    ++row;
    ++rank;
  }
  return rank;
}

QMatrix QMatrix::vstack(const QMatrix& top, const QMatrix& bottom) {
  if (top.rows_ == 0) return bottom;
  if (bottom.rows_ == 0) return top;
  if (top.cols_ != bottom.cols_) throw std::runtime_error("QMatrix: vstack column mismatch");
  QMatrix out(top.rows_ + bottom.rows_, top.cols_);
  for (size_t i = 0; i < top.rows_; ++i)
    for (size_t j = 0; j < top.cols_; ++j) out.at(i, j) = top.at(i, j);
  for (size_t i = 0; i < bottom.rows_; ++i)
    for (size_t j = 0; j < bottom.cols_; ++j) out.at(top.rows_ + i, j) = bottom.at(i, j);
  return out;
}

}  // namespace gentlekit
