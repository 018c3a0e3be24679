#include "qhmt/exactmath/linalg.hpp"

#include "qhmt/errors.hpp"

namespace qhmt {

bool RowEchelon::insert(SparseVector v) {
  if (v.extent() > cols_) throw ShapeMismatch("row longer than the echelon width");
  while (!v.empty()) {
    const auto& [col, coeff] = v.leading();
    auto it = pivots_.find(col);
    if (it == pivots_.end()) {
      Scalar inv = coeff.inverse();
      Index c = col;
      pivots_.emplace(c, v.scaled(inv));
      return true;
    }
    v = SparseVector::axpy(v, -coeff, it->second);
  }
  return false;
}

SparseVector RowEchelon::reduce(SparseVector v) const {
  // Pivot rows only reach to the right of their pivot, so entries left of the
  // last cancelled column are final.
  Index from = 0;
  for (;;) {
    const SparseVector::Entry* hit = nullptr;
    for (const auto& e : v) {
      if (e.first >= from && pivots_.count(e.first)) {
        hit = &e;
        break;
      }
    }
    if (!hit) return v;
    from = hit->first;
    Scalar c = hit->second;
    v = SparseVector::axpy(v, -c, pivots_.at(from));
  }
}

std::vector<Index> RowEchelon::pivot_columns() const {
  std::vector<Index> out;
  out.reserve(pivots_.size());
  for (const auto& p : pivots_) out.push_back(p.first);
  return out;
}

std::map<Index, SparseVector> RowEchelon::reduced_rows() const {
  std::map<Index, SparseVector> rows = pivots_;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    SparseVector& row = it->second;
    // Entries of a fully reduced row with larger pivot only live on free columns,
    // so each subtraction removes one pivot entry without creating others.
    for (;;) {
      const SparseVector::Entry* hit = nullptr;
      for (const auto& e : row) {
        if (e.first != it->first && rows.count(e.first)) {
          hit = &e;
          break;
        }
      }
      if (!hit) break;
      Scalar c = hit->second;
      row = SparseVector::axpy(row, -c, rows.at(hit->first));
    }
  }
  return rows;
}

std::vector<SparseVector> RowEchelon::nullspace() const {
  auto rows = reduced_rows();
  std::map<Index, std::vector<SparseVector::Entry>> by_free;
  for (Index c = 0; c < cols_; ++c)
    if (!rows.count(c)) by_free[c].emplace_back(c, Scalar(1));
  for (const auto& [p, row] : rows)
    for (const auto& e : row)
      if (e.first != p) by_free.at(e.first).emplace_back(p, -e.second);
  std::vector<SparseVector> out;
  out.reserve(by_free.size());
  for (auto& [f, entries] : by_free) out.push_back(SparseVector::from_entries(std::move(entries)));
  return out;
}

std::size_t rank(const SparseMatrix& m) {
  RowEchelon e(m.cols());
  for (auto& r : m.row_vectors()) e.insert(std::move(r));
  return e.rank();
}

std::vector<SparseVector> nullspace(const SparseMatrix& m) {
  RowEchelon e(m.cols());
  for (auto& r : m.row_vectors()) e.insert(std::move(r));
  return e.nullspace();
}

std::optional<SparseVector> solve(const SparseMatrix& m, const SparseVector& b) {
  if (b.extent() > m.rows()) throw ShapeMismatch("right-hand side longer than the row count");
  const Index rhs = m.cols();
  RowEchelon e(m.cols() + 1);
  auto rows = m.row_vectors();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Scalar br = b.at(r);
    SparseVector row = br.is_zero() ? rows[r] : rows[r] + SparseVector::unit(rhs, br);
    e.insert(std::move(row));
  }
  auto reduced = e.reduced_rows();
  if (reduced.count(rhs)) return std::nullopt;
  std::vector<SparseVector::Entry> x;
  for (const auto& [p, row] : reduced) {
    Scalar v = row.at(rhs);
    if (!v.is_zero()) x.emplace_back(p, v);
  }
  return SparseVector::from_entries(std::move(x));
}

std::optional<SparseMatrix> inverse(const SparseMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RowEchelon e(2 * n);
  auto rows = m.row_vectors();
  for (std::size_t r = 0; r < n; ++r) e.insert(rows[r] + SparseVector::unit(n + r));
  if (e.rank() != n) return std::nullopt;
  auto reduced = e.reduced_rows();
  std::vector<SparseVector> inv_rows(n);
  for (const auto& [p, row] : reduced) {
    if (p >= n) return std::nullopt;
    std::vector<SparseVector::Entry> entries;
    for (const auto& en : row)
      if (en.first >= n) entries.emplace_back(en.first - n, en.second);
    inv_rows[p] = SparseVector::from_entries(std::move(entries));
  }
  return SparseMatrix::from_rows(n, inv_rows);
}

}  // namespace qhmt
