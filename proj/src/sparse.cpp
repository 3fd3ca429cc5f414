#include "stokes0d/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

namespace stokes0d {

void TripletMatrix::add(std::size_t row, std::size_t col, double value) {
  if (row >= rows_ || col >= cols_) {
    throw std::out_of_range("TripletMatrix: entry (" + std::to_string(row) + ", " + std::to_string(col) +
                            ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  entries_.push_back({row, col, value});
}

CompressedMatrix::CompressedMatrix(std::size_t rows, std::size_t cols, std::vector<std::size_t> row_offsets,
                                   std::vector<std::size_t> columns, std::vector<double> values)
    : rows_(rows),
      cols_(cols),
      row_offsets_(std::move(row_offsets)),
      columns_(std::move(columns)),
      values_(std::move(values)) {
  if (row_offsets_.size() != rows_ + 1 || columns_.size() != values_.size() ||
      row_offsets_.back() != values_.size()) {
    throw std::invalid_argument("CompressedMatrix: inconsistent storage arrays");
  }
}

double CompressedMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("CompressedMatrix::at: index out of range");
  auto first = columns_.begin() + static_cast<std::ptrdiff_t>(row_offsets_[row]);
  auto last = columns_.begin() + static_cast<std::ptrdiff_t>(row_offsets_[row + 1]);
  auto it = std::lower_bound(first, last, col);
  if (it == last || *it != col) return 0.0;
  return values_[static_cast<std::size_t>(it - columns_.begin())];
}

Vector CompressedMatrix::multiply(const Vector& x) const {
  if (static_cast<std::size_t>(x.size()) != cols_) throw std::invalid_argument("CompressedMatrix::multiply: size mismatch");
  Vector y(static_cast<Eigen::Index>(rows_));
  for (std::size_t i = 0; i < rows_; ++i) {
    double sum = 0.0;
    for (std::size_t k = row_offsets_[i]; k < row_offsets_[i + 1]; ++k) {
      sum += values_[k] * x[static_cast<Eigen::Index>(columns_[k])];
    }
    y[static_cast<Eigen::Index>(i)] = sum;
  }
  return y;
}

Vector CompressedMatrix::transpose_multiply(const Vector& x) const {
  if (static_cast<std::size_t>(x.size()) != rows_) {
    throw std::invalid_argument("CompressedMatrix::transpose_multiply: size mismatch");
  }
  Vector y = Vector::Zero(static_cast<Eigen::Index>(cols_));
  for (std::size_t i = 0; i < rows_; ++i) {
    const double xi = x[static_cast<Eigen::Index>(i)];
    for (std::size_t k = row_offsets_[i]; k < row_offsets_[i + 1]; ++k) {
      y[static_cast<Eigen::Index>(columns_[k])] += values_[k] * xi;
    }
  }
  return y;
}

double CompressedMatrix::bilinear(const Vector& x, const Vector& y) const {
  if (static_cast<std::size_t>(x.size()) != rows_ || static_cast<std::size_t>(y.size()) != cols_) {
    throw std::invalid_argument("CompressedMatrix::bilinear: size mismatch");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    double sum = 0.0;
    for (std::size_t k = row_offsets_[i]; k < row_offsets_[i + 1]; ++k) {
      sum += values_[k] * y[static_cast<Eigen::Index>(columns_[k])];
    }
    total += x[static_cast<Eigen::Index>(i)] * sum;
  }
  return total;
}

double CompressedMatrix::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

double CompressedMatrix::asymmetry() const {
  if (rows_ != cols_) throw std::invalid_argument("CompressedMatrix::asymmetry: matrix is not square");
  double m = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = row_offsets_[i]; k < row_offsets_[i + 1]; ++k) {
      m = std::max(m, std::abs(values_[k] - at(columns_[k], i)));
    }
  }
  return m;
}

CompressedMatrix compress(const TripletMatrix& t) {
  const auto& entries = t.entries();
  std::vector<std::size_t> order(entries.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Stable sort keeps the summation order of duplicates equal to insertion order.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (entries[a].row != entries[b].row) return entries[a].row < entries[b].row;
    return entries[a].col < entries[b].col;
  });

  std::vector<std::size_t> offsets(t.rows() + 1, 0);
  std::vector<std::size_t> columns;
  std::vector<double> values;
  columns.reserve(entries.size());
  values.reserve(entries.size());
  std::size_t last_row = 0, last_col = 0;
  bool have_last = false;
  for (std::size_t idx : order) {
    const Triplet& e = entries[idx];
    if (have_last && e.row == last_row && e.col == last_col) {
      values.back() += e.value;
      continue;
    }
    columns.push_back(e.col);
    values.push_back(e.value);
    ++offsets[e.row + 1];
    last_row = e.row;
    last_col = e.col;
    have_last = true;
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  return CompressedMatrix(t.rows(), t.cols(), std::move(offsets), std::move(columns), std::move(values));
}

struct LUFactorization::Impl {
  Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu;
};

LUFactorization::LUFactorization(const CompressedMatrix& a) : impl_(std::make_unique<Impl>()), n_(a.rows()) {
  if (a.rows() != a.cols()) throw std::invalid_argument("LUFactorization: matrix is not square");
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(a.nonzeros());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = a.row_offsets()[i]; k < a.row_offsets()[i + 1]; ++k) {
      trips.emplace_back(static_cast<int>(i), static_cast<int>(a.columns()[k]), a.values()[k]);
    }
  }
  Eigen::SparseMatrix<double> m(static_cast<Eigen::Index>(a.rows()), static_cast<Eigen::Index>(a.cols()));
  m.setFromTriplets(trips.begin(), trips.end());
  m.makeCompressed();
  impl_->lu.analyzePattern(m);
  impl_->lu.factorize(m);
  if (impl_->lu.info() != Eigen::Success) {
    throw std::runtime_error("LUFactorization: singular pivot (" + impl_->lu.lastErrorMessage() + ")");
  }
}

LUFactorization::~LUFactorization() = default;
LUFactorization::LUFactorization(LUFactorization&&) noexcept = default;
LUFactorization& LUFactorization::operator=(LUFactorization&&) noexcept = default;

Vector LUFactorization::solve(const Vector& rhs) const {
  if (static_cast<std::size_t>(rhs.size()) != n_) throw std::invalid_argument("LUFactorization::solve: size mismatch");
  Vector x = impl_->lu.solve(rhs);
  if (impl_->lu.info() != Eigen::Success) throw std::runtime_error("LUFactorization::solve: back-substitution failed");
  return x;
}

LUFactorization factorize(const CompressedMatrix& a) { return LUFactorization(a); }

}  // namespace stokes0d
