#include "qhmt/repcat/module_map.hpp"

#include "qhmt/errors.hpp"
#include "qhmt/exactmath/linalg.hpp"

namespace qhmt {

namespace {

std::string fmt_vec(const SparseVector& v, std::size_t limit = 8) {
  std::string out = "[";
  std::size_t n = 0;
  for (const auto& [i, c] : v) {
    if (n) out += ", ";
    if (n++ == limit) {
      out += "...";
      break;
    }
    out += std::to_string(i) + ": " + c.str();
  }
  return out + "]";
}

std::vector<Element> check_elements(const QuasiHopfAlgebra& H, CheckScope scope) {
  const bool exhaustive = scope == CheckScope::Exhaustive || (scope == CheckScope::Auto && H.dim() <= 64);
  if (!exhaustive) return H.algebra().generators();
  std::vector<Element> all;
  for (std::size_t i = 0; i < H.dim(); ++i) all.push_back(SparseVector::unit(i));
  return all;
}

}  // namespace

ModuleMap::ModuleMap(Representation source, Representation target, SparseMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)) {
  if (matrix.rows() != target_.dim() || matrix.cols() != source_.dim())
    throw ShapeMismatch("module map matrix is " + std::to_string(matrix.rows()) + "x" + std::to_string(matrix.cols()) +
                        ", expected " + std::to_string(target_.dim()) + "x" + std::to_string(source_.dim()));
  matrix_ = std::make_shared<const SparseMatrix>(std::move(matrix));
}

ModuleMap ModuleMap::lazy(Representation source, Representation target, VectorMap fn) {
  ModuleMap m(std::move(source), std::move(target));
  m.fn_ = std::make_shared<const VectorMap>(std::move(fn));
  return m;
}

ModuleMap ModuleMap::identity(const Representation& v) { return relabel(v, v); }

ModuleMap ModuleMap::relabel(const Representation& source, const Representation& target) {
  if (source.dim() != target.dim()) throw ShapeMismatch("relabel between spaces of different dimension");
  ModuleMap m(source, target);
  m.identity_ = true;
  return m;
}

SparseVector ModuleMap::apply(const SparseVector& v) const {
  if (identity_) return v;
  if (matrix_) return matrix_->apply(v);
  return (*fn_)(v);
}

SparseMatrix ModuleMap::matrix() const {
  if (matrix_) return *matrix_;
  if (identity_) return SparseMatrix::identity(source_.dim());
  std::vector<SparseVector> cols;
  cols.reserve(source_.dim());
  for (std::size_t j = 0; j < source_.dim(); ++j) cols.push_back(column(j));
  return SparseMatrix::from_columns(target_.dim(), std::move(cols));
}

ModuleMap ModuleMap::materialized() const {
  if (matrix_ || identity_) return *this;
  return ModuleMap(source_, target_, matrix());
}

ModuleMap ModuleMap::scaled(const Scalar& c) const {
  ModuleMap self = *this;
  return lazy(source_, target_, [self, c](const SparseVector& v) { return self.apply(v).scaled(c); });
}

ModuleMap operator+(const ModuleMap& a, const ModuleMap& b) {
  if (a.source().dim() != b.source().dim() || a.target().dim() != b.target().dim())
    throw ShapeMismatch("sum of module maps with different shapes");
  return ModuleMap::lazy(a.source(), a.target(), [a, b](const SparseVector& v) { return a.apply(v) + b.apply(v); });
}

ModuleMap operator-(const ModuleMap& a, const ModuleMap& b) { return a + b.scaled(Scalar(-1)); }

std::optional<std::string> ModuleMap::intertwiner_failure(CheckScope scope) const {
  const QuasiHopfAlgebra& H = source_.algebra();
  if (source_.algebra_ptr() != target_.algebra_ptr()) return "source and target live over different algebras";
  const auto elements = check_elements(H, scope);
  for (std::size_t k = 0; k < source_.dim(); ++k) {
    SparseVector e = SparseVector::unit(k);
    SparseVector fe = apply(e);
    for (const Element& h : elements) {
      SparseVector lhs = apply(source_.act(h, e));
      SparseVector rhs = target_.act(h, fe);
      if (!(lhs == rhs))
        return "f(h.v) != h.f(v) for h = " + H.format(h) + ", v = e" + std::to_string(k) + ": " + fmt_vec(lhs - rhs);
    }
  }
  return std::nullopt;
}

std::optional<std::string> ModuleMap::difference(const ModuleMap& other) const {
  if (source_.dim() != other.source_.dim() || target_.dim() != other.target_.dim())
    return "shapes differ: " + std::to_string(target_.dim()) + "x" + std::to_string(source_.dim()) + " vs " +
           std::to_string(other.target_.dim()) + "x" + std::to_string(other.source_.dim());
  for (std::size_t k = 0; k < source_.dim(); ++k) {
    SparseVector d = column(k) - other.column(k);
    if (!d.empty()) return "column " + std::to_string(k) + " differs by " + fmt_vec(d);
  }
  return std::nullopt;
}

ModuleMap compose(const ModuleMap& outer, const ModuleMap& inner) {
  if (inner.target().dim() != outer.source().dim())
    throw ShapeMismatch("compose: inner target has dimension " + std::to_string(inner.target().dim()) +
                        ", outer source " + std::to_string(outer.source().dim()));
  if (outer.is_identity() && inner.is_identity()) return ModuleMap::relabel(inner.source(), outer.target());
  if (outer.is_identity())
    return ModuleMap::lazy(inner.source(), outer.target(), [inner](const SparseVector& v) { return inner.apply(v); });
  if (inner.is_identity())
    return ModuleMap::lazy(inner.source(), outer.target(), [outer](const SparseVector& v) { return outer.apply(v); });
  return ModuleMap::lazy(inner.source(), outer.target(),
                         [outer, inner](const SparseVector& v) { return outer.apply(inner.apply(v)); });
}

ModuleMap compose(const std::vector<ModuleMap>& chain) {
  if (chain.empty()) throw ShapeMismatch("compose: empty chain");
  ModuleMap out = chain.back();
  for (std::size_t j = chain.size() - 1; j-- > 0;) out = compose(chain[j], out);
  return out;
}

ModuleMap kron(const ModuleMap& a, const ModuleMap& b) {
  Representation src = tensor(a.source(), b.source());
  Representation tgt = tensor(a.target(), b.target());
  if (a.is_identity() && b.is_identity()) return ModuleMap::relabel(src, tgt);
  const std::size_t in_b = b.source().dim();
  const std::size_t out_b = b.target().dim();
  VectorMap fa, fb;
  if (!a.is_identity()) fa = [a](const SparseVector& v) { return a.apply(v); };
  if (!b.is_identity()) fb = [b](const SparseVector& v) { return b.apply(v); };
  return ModuleMap::lazy(src, tgt, [fa, fb, in_b, out_b](const SparseVector& v) {
    return kron_apply(fa, fb, in_b, out_b, v);
  });
}

namespace {

RowEchelon hom_constraints(const Representation& m, const Representation& p) {
  if (m.algebra_ptr() != p.algebra_ptr()) throw AlgebraMismatch("hom space between modules over different algebras");
  const std::size_t dm = m.dim();
  const std::size_t dp = p.dim();
  RowEchelon ech(dp * dm);
  for (const Element& x : m.algebra().algebra().generators()) {
    const SparseMatrix A = m.matrix(x);
    const std::vector<SparseVector> Brows = p.matrix(x).row_vectors();
    for (std::size_t r = 0; r < dp; ++r) {
      for (std::size_t c = 0; c < dm; ++c) {
        SparseAccumulator acc;
        for (const auto& [k, v] : A.column(c)) acc.add(Index(r * dm + k), v);
        for (const auto& [k, v] : Brows[r]) acc.add(Index(k * dm + c), -v);
        SparseVector row = acc.finish();
        if (!row.empty()) ech.insert(std::move(row));
      }
    }
  }
  return ech;
}

}  // namespace

std::vector<SparseMatrix> hom_space(const Representation& m, const Representation& p) {
  const RowEchelon ech = hom_constraints(m, p);
  const std::size_t dm = m.dim();
  std::vector<SparseMatrix> out;
  for (const SparseVector& v : ech.nullspace()) {
    std::vector<std::vector<SparseVector::Entry>> cols(dm);
    for (const auto& [idx, c] : v) cols[idx % dm].emplace_back(idx / dm, c);
    std::vector<SparseVector> columns;
    columns.reserve(dm);
    for (auto& e : cols) columns.push_back(SparseVector::from_entries(std::move(e)));
    out.push_back(SparseMatrix::from_columns(p.dim(), std::move(columns)));
  }
  return out;
}

std::size_t hom_dimension(const Representation& m, const Representation& p) {
  return m.dim() * p.dim() - hom_constraints(m, p).rank();
}

}  // namespace qhmt
