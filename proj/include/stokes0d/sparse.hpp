#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace stokes0d {

using Vector = Eigen::VectorXd;

struct Triplet {
  std::size_t row = 0;
  std::size_t col = 0;
  double value = 0.0;
};

/// Coordinate-format builder. Duplicate positions are summed on compression.
class TripletMatrix {
 public:
  TripletMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  /// Throws std::out_of_range for indices outside the matrix.
  void add(std::size_t row, std::size_t col, double value);
  void reserve(std::size_t n) { entries_.reserve(n); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Triplet>& entries() const { return entries_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Triplet> entries_;
};

/// Compressed sparse row storage with sorted, unique column indices per row.
class CompressedMatrix {
 public:
  CompressedMatrix() = default;
  CompressedMatrix(std::size_t rows, std::size_t cols, std::vector<std::size_t> row_offsets,
                   std::vector<std::size_t> columns, std::vector<double> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const { return values_.size(); }

  const std::vector<std::size_t>& row_offsets() const { return row_offsets_; }
  const std::vector<std::size_t>& columns() const { return columns_; }
  const std::vector<double>& values() const { return values_; }

  /// Stored value at (row, col), zero when the position is not stored.
  double at(std::size_t row, std::size_t col) const;

  Vector multiply(const Vector& x) const;
  Vector transpose_multiply(const Vector& x) const;
  /// x^T A y.
  double bilinear(const Vector& x, const Vector& y) const;
  double max_abs() const;
  /// max_ij |A_ij - A_ji|.
  double asymmetry() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> row_offsets_{0};
  std::vector<std::size_t> columns_;
  std::vector<double> values_;
};

/// Sums duplicates; the resulting layout depends only on the set of entries.
CompressedMatrix compress(const TripletMatrix& t);

/// Sparse LU with partial pivoting and a COLAMD fill-reducing ordering.
/// Immutable once built; solve() may be called concurrently.
class LUFactorization {
 public:
  /// Throws std::runtime_error naming the offending column when a pivot vanishes.
  explicit LUFactorization(const CompressedMatrix& a);
  ~LUFactorization();
  LUFactorization(LUFactorization&&) noexcept;
  LUFactorization& operator=(LUFactorization&&) noexcept;

  std::size_t size() const { return n_; }
  Vector solve(const Vector& rhs) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::size_t n_ = 0;
};

LUFactorization factorize(const CompressedMatrix& a);

}  // namespace stokes0d
