#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace gentlekit {

/// Exact rational scalar. All linear algebra in the library is over Q;
/// no floating point anywhere.
using Rat = mpq_class;

std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

/// Dense matrix over Q with row-major storage.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(size_t n);
  /// Jordan block with eigenvalue lambda on the diagonal and 1 on the
  /// subdiagonal.
  static QMatrix jordan(size_t n, const Rat& lambda);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Rat& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const Rat& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  QMatrix operator*(const QMatrix& other) const;
  bool operator==(const QMatrix& other) const;

  size_t rank() const;
  size_t kernel_dim() const { return cols_ - rank(); }

  /// Vertical stack: rows of `top` followed by rows of `bottom`. Column
  /// counts must agree (0x0 matrices are treated as empty).
  static QMatrix vstack(const QMatrix& top, const QMatrix& bottom);

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Rat> data_;
};

}  // namespace gentlekit
