#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "qhmt/exactmath/scalar.hpp"

namespace qhmt {

using Index = std::uint64_t;

// Sparse vector with entries sorted by index and no stored zeros.
class SparseVector {
 public:
  using Entry = std::pair<Index, Scalar>;

  SparseVector() = default;
  static SparseVector unit(Index i, Scalar c = Scalar(1));
  // Sorts, merges duplicates and drops zeros.
  static SparseVector from_entries(std::vector<Entry> entries);
  static SparseVector from_dense(const std::vector<Scalar>& values);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }
  // Largest stored index plus one, 0 when empty.
  Index extent() const noexcept { return entries_.empty() ? 0 : entries_.back().first + 1; }

  Scalar at(Index i) const;
  // First stored entry; requires !empty().
  const Entry& leading() const { return entries_.front(); }

  SparseVector operator-() const;
  SparseVector scaled(const Scalar& c) const;
  friend SparseVector operator+(const SparseVector& a, const SparseVector& b);
  friend SparseVector operator-(const SparseVector& a, const SparseVector& b);
  friend bool operator==(const SparseVector& a, const SparseVector& b) { return a.entries_ == b.entries_; }

  // a + c*b, merging in one pass.
  static SparseVector axpy(const SparseVector& a, const Scalar& c, const SparseVector& b);
  Scalar dot(const SparseVector& o) const;

  std::vector<Scalar> to_dense(std::size_t n) const;

 private:
  explicit SparseVector(std::vector<Entry> sorted) : entries_(std::move(sorted)) {}
  std::vector<Entry> entries_;
};

// Collects unsorted contributions and folds them into a SparseVector.
class SparseAccumulator {
 public:
  void add(Index i, Scalar c) {
    if (!c.is_zero()) pending_.emplace_back(i, std::move(c));
  }
  void add(const SparseVector& v, const Scalar& c);
  void add(const SparseVector& v);
  // Adds c * v with every index shifted by offset.
  void add_shifted(const SparseVector& v, const Scalar& c, Index offset);
  bool empty() const noexcept { return pending_.empty(); }
  SparseVector finish();

 private:
  std::vector<SparseVector::Entry> pending_;
};

// Kronecker product: index (i, j) -> i * right_dim + j.
SparseVector kron(const SparseVector& a, const SparseVector& b, Index right_dim);

// Matrix stored by columns; row-major iteration is available through rows().
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), columns_(cols) {}
  static SparseMatrix identity(std::size_t n);
  static SparseMatrix from_columns(std::size_t rows, std::vector<SparseVector> columns);
  static SparseMatrix from_rows(std::size_t cols, const std::vector<SparseVector>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const SparseVector& column(std::size_t c) const { return columns_[c]; }
  const std::vector<SparseVector>& columns() const noexcept { return columns_; }
  std::vector<SparseVector> row_vectors() const;
  // (row, col, value) triples in row-major order.
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> entries() const;
  std::size_t nonzeros() const;

  Scalar at(std::size_t r, std::size_t c) const { return columns_[c].at(r); }
  bool is_zero() const;
  bool is_identity() const;

  SparseVector apply(const SparseVector& x) const;
  SparseMatrix transpose() const;
  SparseMatrix scaled(const Scalar& c) const;
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);
  // Kronecker product a (x) b.
  friend SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVector> columns_;
};

}  // namespace qhmt
