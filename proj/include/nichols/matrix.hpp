// Dense matrices over a fixed cyclotomic field. Row-major, exact entries.
#pragma once

#include <cstddef>
#include <vector>

#include "nichols/scalar.hpp"

namespace nichols {

class Matrix {
 public:
  Matrix(const Field& f, unsigned rows, unsigned cols)
      : f_(&f), rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows) * cols, Scalar(f)) {}

  static Matrix identity(const Field& f, unsigned n) {
    Matrix m(f, n, n);
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
  }

  const Field& field() const { return *f_; }
  unsigned rows() const { return rows_; }
  unsigned cols() const { return cols_; }

  // No bounds check: indices are produced by the word codecs, never by input.
  Scalar& at(unsigned r, unsigned c) {
    return a_[static_cast<std::size_t>(r) * cols_ + c];
  }
  const Scalar& at(unsigned r, unsigned c) const {
    return a_[static_cast<std::size_t>(r) * cols_ + c];
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && f_ == o.f_ && a_ == o.a_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  const Field* f_;
  unsigned rows_, cols_;
  std::vector<Scalar> a_;
};

// Kronecker product; the left factor owns the high-order index digits.
Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace nichols
