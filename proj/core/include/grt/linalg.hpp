#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "grt/numeric.hpp"

namespace grt {

/// Dense row-major matrix over an exact ring.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  DenseMatrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  void append_row(const std::vector<T>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch in product");
    DenseMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = DenseMatrix<Rational>;
using IntMatrix = DenseMatrix<Integer>;
using IntVector = std::vector<Integer>;
using SmallIntRows = std::vector<std::vector<std::int64_t>>;

/// Each row scaled by the lcm of its denominators.
IntMatrix clear_denominators(const RatMatrix& m);
RatMatrix to_rational(const IntMatrix& m);

std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Basis of the right kernel. Vectors are primitive integral (content 1,
/// first nonzero entry positive), one per non-pivot column, in column order.
std::vector<IntVector> kernel_basis(const RatMatrix& m);
std::vector<IntVector> kernel_basis(const IntMatrix& m);

Integer determinant(const IntMatrix& m);

/// Divides by the content and makes the first nonzero entry positive.
IntVector primitive(IntVector v);
/// Clears denominators, then `primitive`.
IntVector primitive(const std::vector<Rational>& v);

struct SNFResult {
  IntMatrix U, D, V;  // U * A * V == D
  /// Diagonal d_1 | d_2 | ... of D (length min(rows, cols)).
  std::vector<Integer> diagonal() const;
};

SNFResult smith_normal_form(const IntMatrix& m);

struct QuotientInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // elementary divisors > 1
};

/// Invariants of Z^n / (row span of `sublattice_rows`).
QuotientInvariants quotient_invariants(const IntMatrix& sublattice_rows, std::size_t ambient_rank);

/// Basis (as rows) of the saturation Q<rows> ∩ Z^n of the row lattice.
IntMatrix saturation_basis(const IntMatrix& rows);

// --- arithmetic modulo a prime ---------------------------------------------

std::size_t rank_mod(const IntMatrix& m, std::uint64_t prime);
std::size_t rank_mod(const SmallIntRows& rows, std::size_t cols, std::uint64_t prime);

/// Indices of rows forming a basis of the row space mod `prime`, chosen
/// greedily in row order.
std::vector<std::size_t> independent_rows_mod(const SmallIntRows& rows, std::size_t cols,
                                              std::uint64_t prime);

/// Kernel basis mod `prime`, in the same free-column layout as kernel_basis.
std::vector<std::vector<std::uint64_t>> kernel_basis_mod(const IntMatrix& m, std::uint64_t prime);

}  // namespace grt
