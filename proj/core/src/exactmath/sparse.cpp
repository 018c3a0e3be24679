#include "qhmt/exactmath/sparse.hpp"

#include <algorithm>
#include <tuple>

#include "qhmt/errors.hpp"

namespace qhmt {

SparseVector SparseVector::unit(Index i, Scalar c) {
  SparseVector v;
  if (!c.is_zero()) v.entries_.emplace_back(i, std::move(c));
  return v;
}

SparseVector SparseVector::from_entries(std::vector<Entry> entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.first < b.first; });
  std::vector<Entry> out;
  out.reserve(entries.size());
  for (auto& e : entries) {
    if (!out.empty() && out.back().first == e.first) {
      out.back().second += e.second;
    } else {
      if (!out.empty() && out.back().second.is_zero()) out.pop_back();
      out.push_back(std::move(e));
    }
  }
  if (!out.empty() && out.back().second.is_zero()) out.pop_back();
  return SparseVector(std::move(out));
}

SparseVector SparseVector::from_dense(const std::vector<Scalar>& values) {
  std::vector<Entry> out;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (!values[i].is_zero()) out.emplace_back(i, values[i]);
  return SparseVector(std::move(out));
}

Scalar SparseVector::at(Index i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, Index k) { return e.first < k; });
  if (it != entries_.end() && it->first == i) return it->second;
  return Scalar();
}

SparseVector SparseVector::operator-() const {
  SparseVector r = *this;
  for (auto& e : r.entries_) e.second = -e.second;
  return r;
}

SparseVector SparseVector::scaled(const Scalar& c) const {
  if (c.is_zero()) return SparseVector();
  if (c.is_one()) return *this;
  SparseVector r;
  r.entries_.reserve(entries_.size());
  for (const auto& e : entries_) {
    Scalar v = e.second * c;
    if (!v.is_zero()) r.entries_.emplace_back(e.first, std::move(v));
  }
  return r;
}

SparseVector SparseVector::axpy(const SparseVector& a, const Scalar& c, const SparseVector& b) {
  if (c.is_zero() || b.empty()) return a;
  std::vector<Entry> out;
  out.reserve(a.size() + b.size());
  auto ia = a.entries_.begin(), ea = a.entries_.end();
  auto ib = b.entries_.begin(), eb = b.entries_.end();
  const bool unit = c.is_one();
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == ea || ib->first < ia->first) {
      out.emplace_back(ib->first, unit ? ib->second : ib->second * c);
      ++ib;
    } else {
      Scalar v = ia->second + (unit ? ib->second : ib->second * c);
      if (!v.is_zero()) out.emplace_back(ia->first, std::move(v));
      ++ia;
      ++ib;
    }
  }
  return SparseVector(std::move(out));
}

SparseVector operator+(const SparseVector& a, const SparseVector& b) { return SparseVector::axpy(a, Scalar(1), b); }
SparseVector operator-(const SparseVector& a, const SparseVector& b) { return SparseVector::axpy(a, Scalar(-1), b); }

Scalar SparseVector::dot(const SparseVector& o) const {
  Scalar acc;
  auto ia = entries_.begin(), ea = entries_.end();
  auto ib = o.entries_.begin(), eb = o.entries_.end();
  while (ia != ea && ib != eb) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      acc += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  return acc;
}

std::vector<Scalar> SparseVector::to_dense(std::size_t n) const {
  std::vector<Scalar> out(n);
  for (const auto& e : entries_) {
    if (e.first >= n) throw ShapeMismatch("sparse index beyond dense length");
    out[e.first] = e.second;
  }
  return out;
}

void SparseAccumulator::add(const SparseVector& v, const Scalar& c) {
  if (c.is_zero()) return;
  if (c.is_one()) return add(v);
  for (const auto& e : v) add(e.first, e.second * c);
}

void SparseAccumulator::add(const SparseVector& v) {
  pending_.insert(pending_.end(), v.begin(), v.end());
}

void SparseAccumulator::add_shifted(const SparseVector& v, const Scalar& c, Index offset) {
  if (c.is_zero()) return;
  const bool unit = c.is_one();
  for (const auto& e : v) add(e.first + offset, unit ? e.second : e.second * c);
}

SparseVector SparseAccumulator::finish() {
  SparseVector v = SparseVector::from_entries(std::move(pending_));
  pending_.clear();
  return v;
}

SparseVector kron(const SparseVector& a, const SparseVector& b, Index right_dim) {
  std::vector<SparseVector::Entry> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) {
      Scalar v = x.second.is_one() ? y.second : (y.second.is_one() ? x.second : x.second * y.second);
      out.emplace_back(x.first * right_dim + y.first, std::move(v));
    }
  return SparseVector::from_entries(std::move(out));
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i] = SparseVector::unit(i);
  return m;
}

SparseMatrix SparseMatrix::from_columns(std::size_t rows, std::vector<SparseVector> columns) {
  SparseMatrix m;
  m.rows_ = rows;
  m.cols_ = columns.size();
  for (const auto& c : columns)
    if (c.extent() > rows) throw ShapeMismatch("column entry beyond the row count");
  m.columns_ = std::move(columns);
  return m;
}

SparseMatrix SparseMatrix::from_rows(std::size_t cols, const std::vector<SparseVector>& rows) {
  std::vector<std::vector<SparseVector::Entry>> cols_acc(cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& e : rows[r]) {
      if (e.first >= cols) throw ShapeMismatch("row entry beyond the column count");
      cols_acc[e.first].emplace_back(r, e.second);
    }
  std::vector<SparseVector> columns;
  columns.reserve(cols);
  for (auto& c : cols_acc) columns.push_back(SparseVector::from_entries(std::move(c)));
  return from_columns(rows.size(), std::move(columns));
}

std::vector<SparseVector> SparseMatrix::row_vectors() const {
  std::vector<std::vector<SparseVector::Entry>> acc(rows_);
  for (std::size_t c = 0; c < cols_; ++c)
    for (const auto& e : columns_[c]) acc[e.first].emplace_back(c, e.second);
  std::vector<SparseVector> out;
  out.reserve(rows_);
  for (auto& r : acc) out.push_back(SparseVector::from_entries(std::move(r)));
  return out;
}

std::vector<std::tuple<std::size_t, std::size_t, Scalar>> SparseMatrix::entries() const {
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> out;
  auto rows = row_vectors();
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& e : rows[r]) out.emplace_back(r, e.first, e.second);
  return out;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

bool SparseMatrix::is_zero() const {
  for (const auto& c : columns_)
    if (!c.empty()) return false;
  return true;
}

bool SparseMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t c = 0; c < cols_; ++c)
    if (columns_[c].size() != 1 || columns_[c].leading().first != c || !columns_[c].leading().second.is_one())
      return false;
  return true;
}

SparseVector SparseMatrix::apply(const SparseVector& x) const {
  if (x.extent() > cols_) throw ShapeMismatch("vector longer than matrix column count");
  SparseAccumulator acc;
  for (const auto& e : x) acc.add(columns_[e.first], e.second);
  return acc.finish();
}

SparseMatrix SparseMatrix::transpose() const {
  return from_columns(cols_, row_vectors());
}

SparseMatrix SparseMatrix::scaled(const Scalar& c) const {
  SparseMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < cols_; ++i) m.columns_[i] = columns_[i].scaled(c);
  return m;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows_) throw ShapeMismatch("matrix product with incompatible shapes");
  SparseMatrix m(a.rows_, b.cols_);
  for (std::size_t c = 0; c < b.cols_; ++c) m.columns_[c] = a.apply(b.columns_[c]);
  return m;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatch("matrix sum with different shapes");
  SparseMatrix m(a.rows_, a.cols_);
  for (std::size_t c = 0; c < a.cols_; ++c) m.columns_[c] = a.columns_[c] + b.columns_[c];
  return m;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return a + b.scaled(Scalar(-1)); }

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.columns_ == b.columns_;
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix m(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (std::size_t i = 0; i < a.cols_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j)
      m.columns_[i * b.cols_ + j] = kron(a.columns_[i], b.columns_[j], b.rows_);
  return m;
}

}  // namespace qhmt
