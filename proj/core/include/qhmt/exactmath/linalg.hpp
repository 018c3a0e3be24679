#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "qhmt/exactmath/sparse.hpp"

namespace qhmt {

// Incremental exact row echelon form over Q(zeta_n).
//
// Rows are reduced only along their leading entries while they are inserted,
// which keeps fill-in low when only the rank is needed. nullspace() finishes
// the back substitution on a copy.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols) : cols_(cols) {}

  // Returns true when v was independent of the rows seen so far.
  bool insert(SparseVector v);
  // Residue of v after eliminating every pivot; empty iff v is in the row span.
  SparseVector reduce(SparseVector v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  std::size_t rank() const noexcept { return pivots_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  std::vector<Index> pivot_columns() const;

  // Fully reduced rows keyed by pivot column.
  std::map<Index, SparseVector> reduced_rows() const;
  // Basis of {x : r.x = 0 for every inserted row r}, one vector per free column in increasing order.
  std::vector<SparseVector> nullspace() const;

 private:
  std::size_t cols_;
  std::map<Index, SparseVector> pivots_;  // leading coefficient is 1
};

std::size_t rank(const SparseMatrix& m);
std::vector<SparseVector> nullspace(const SparseMatrix& m);
// Some x with m x = b, or nothing when the system is inconsistent.
std::optional<SparseVector> solve(const SparseMatrix& m, const SparseVector& b);
std::optional<SparseMatrix> inverse(const SparseMatrix& m);

}  // namespace qhmt
