#include "qhmt/repcat/monoidal.hpp"

#include "qhmt/errors.hpp"
#include "qhmt/exactmath/linalg.hpp"

namespace qhmt {

Representation regular_module(QuasiHopfPtr h) {
  std::vector<SparseMatrix> action;
  action.reserve(h->dim());
  for (std::size_t i = 0; i < h->dim(); ++i) action.push_back(h->algebra().left_multiplication(SparseVector::unit(i)));
  return Representation::from_matrices(std::move(h), std::move(action), "H");
}

Representation trivial_module(QuasiHopfPtr h, std::size_t n) {
  std::vector<SparseMatrix> action;
  action.reserve(h->dim());
  for (std::size_t i = 0; i < h->dim(); ++i)
    action.push_back(SparseMatrix::identity(n).scaled(h->counit().coeffs().at(i)));
  return Representation::from_matrices(std::move(h), std::move(action), n == 1 ? "k" : "k^" + std::to_string(n));
}

Submodule submodule(const Representation& v, const std::vector<SparseVector>& span, std::string name) {
  RowEchelon ech(v.dim());
  for (const auto& x : span) ech.insert(x);
  std::vector<SparseVector> basis;
  std::vector<Index> pivots;
  for (auto& [p, row] : ech.reduced_rows()) {
    pivots.push_back(p);
    basis.push_back(row);
  }
  const std::size_t d = basis.size();
  const QuasiHopfAlgebra& H = v.algebra();
  std::vector<SparseMatrix> action;
  action.reserve(H.dim());
  for (std::size_t i = 0; i < H.dim(); ++i) {
    std::vector<SparseVector> cols;
    cols.reserve(d);
    for (const auto& b : basis) {
      SparseVector image = v.act_basis(i, b);
      SparseAccumulator coords;
      SparseAccumulator rebuilt;
      for (std::size_t k = 0; k < d; ++k) {
        Scalar c = image.at(pivots[k]);
        if (c.is_zero()) continue;
        rebuilt.add(basis[k], c);
        coords.add(Index(k), c);
      }
      if (!(rebuilt.finish() == image))
        throw VerificationFailed("submodule: span is not invariant under " + H.labels()[i]);
      cols.push_back(coords.finish());
    }
    action.push_back(SparseMatrix::from_columns(d, std::move(cols)));
  }
  Representation sub = Representation::from_matrices(v.algebra_ptr(), std::move(action), std::move(name));
  return Submodule{sub, ModuleMap(sub, v, SparseMatrix::from_columns(v.dim(), basis))};
}

namespace {

void require_same(const Representation& a, const Representation& b) {
  if (a.algebra_ptr() != b.algebra_ptr()) throw AlgebraMismatch("modules over different algebras");
}

ModuleMap legwise(const Representation& u, const Representation& v, const Representation& w, const TensorElement& t,
                  Representation source, Representation target) {
  return ModuleMap::lazy(std::move(source), std::move(target), [u, v, w, t](const SparseVector& x) {
    return act_legs({&u, &v, &w}, t, x);
  });
}

}  // namespace

ModuleMap associator(const Representation& u, const Representation& v, const Representation& w) {
  require_same(u, v);
  require_same(v, w);
  return legwise(u, v, w, u.algebra().phi(), tensor(u, tensor(v, w)), tensor(tensor(u, v), w));
}

ModuleMap associator_inverse(const Representation& u, const Representation& v, const Representation& w) {
  require_same(u, v);
  require_same(v, w);
  return legwise(u, v, w, u.algebra().psi(), tensor(tensor(u, v), w), tensor(u, tensor(v, w)));
}

ModuleMap action_map(const Representation& v, const Element& h) { return ModuleMap(v, v, v.matrix(h)); }

ModuleMap ev_left(const Representation& v) {
  const std::size_t d = v.dim();
  const SparseMatrix a = v.matrix(v.algebra().alpha());
  std::vector<SparseVector> cols(d * d);
  for (std::size_t j = 0; j < d; ++j)
    for (const auto& [i, c] : a.column(j)) cols[i * d + j] = SparseVector::unit(0, c);
  return ModuleMap(tensor(dual(v), v), unit_module(v.algebra_ptr()), SparseMatrix::from_columns(1, std::move(cols)));
}

ModuleMap coev_left(const Representation& v) {
  const std::size_t d = v.dim();
  const SparseMatrix b = v.matrix(v.algebra().beta());
  SparseAccumulator acc;
  for (std::size_t i = 0; i < d; ++i)
    for (const auto& [k, c] : b.column(i)) acc.add(Index(k * d + i), c);
  return ModuleMap(unit_module(v.algebra_ptr()), tensor(v, dual(v)), SparseMatrix::from_columns(d * d, {acc.finish()}));
}

ModuleMap ev_right(const Representation& v) {
  const QuasiHopfAlgebra& H = v.algebra();
  const std::size_t d = v.dim();
  const SparseMatrix a = v.matrix(H.mul(H.S(H.alpha()), H.pivot()));
  std::vector<SparseVector> cols(d * d);
  for (std::size_t j = 0; j < d; ++j)
    for (const auto& [i, c] : a.column(j)) cols[j * d + i] = SparseVector::unit(0, c);
  return ModuleMap(tensor(v, dual(v)), unit_module(v.algebra_ptr()), SparseMatrix::from_columns(1, std::move(cols)));
}

ModuleMap coev_right(const Representation& v) {
  const QuasiHopfAlgebra& H = v.algebra();
  const std::size_t d = v.dim();
  const std::vector<SparseVector> sb_rows = v.matrix(H.S(H.beta())).row_vectors();
  const SparseMatrix ginv = v.matrix(H.pivot_inverse());
  SparseAccumulator acc;
  for (std::size_t i = 0; i < d; ++i)
    for (const auto& [k, x] : sb_rows[i])
      for (const auto& [l, y] : ginv.column(i)) acc.add(Index(k * d + l), x * y);
  return ModuleMap(unit_module(v.algebra_ptr()), tensor(dual(v), v), SparseMatrix::from_columns(d * d, {acc.finish()}));
}

ModuleMap pivotal_map(const Representation& v) {
  return ModuleMap(v, dual(dual(v)), v.matrix(v.algebra().pivot()));
}

Duality duals_and_pivot(const Representation& v) {
  Duality out{dual(v), ev_left(v), coev_left(v), std::nullopt, std::nullopt, std::nullopt};
  if (v.algebra().is_pivotal()) {
    out.ev_right = ev_right(v);
    out.coev_right = coev_right(v);
    out.delta = pivotal_map(v);
  }
  return out;
}

ModuleMap duality_iso(const Representation& v, const Representation& w) {
  require_same(v, w);
  const std::size_t dv = v.dim();
  const std::size_t dw = w.dim();
  const TensorElement& f = v.algebra().twist();
  std::vector<SparseVector> rows;
  rows.reserve(dv * dw);
  for (std::size_t i = 0; i < dv; ++i) {
    for (std::size_t j = 0; j < dw; ++j) {
      SparseVector image = act_legs({&v, &w}, f, SparseVector::unit(i * dw + j));
      SparseAccumulator row;
      for (const auto& [idx, c] : image) row.add(Index((idx % dw) * dv + idx / dw), c);
      rows.push_back(row.finish());
    }
  }
  return ModuleMap(tensor(dual(w), dual(v)), dual(tensor(v, w)), SparseMatrix::from_rows(dv * dw, rows));
}

ModuleMap partial_trace(const ModuleMap& f, Side side) {
  const Representation& src = f.source();
  const Representation& tgt = f.target();
  if (src.kind() != Representation::Kind::Tensor || tgt.kind() != Representation::Kind::Tensor)
    throw ShapeMismatch("partial trace needs a map between tensor products");
  const QuasiHopfPtr& H = src.algebra_ptr();
  const Representation one = unit_module(H);
  if (side == Side::Right) {
    const Representation& a = src.left();
    const Representation& b = tgt.left();
    const Representation& c = src.right();
    if (!same_module(c, tgt.right())) throw ShapeMismatch("right partial trace: the right factors differ");
    const Representation cd = dual(c);
    return compose({
        ModuleMap::relabel(tensor(b, one), b),
        kron(ModuleMap::identity(b), ev_right(c)),
        associator_inverse(b, c, cd),
        kron(f, ModuleMap::identity(cd)),
        associator(a, c, cd),
        kron(ModuleMap::identity(a), coev_left(c)),
        ModuleMap::relabel(a, tensor(a, one)),
    });
  }
  const Representation& a = src.right();
  const Representation& b = tgt.right();
  const Representation& c = src.left();
  if (!same_module(c, tgt.left())) throw ShapeMismatch("left partial trace: the left factors differ");
  const Representation cd = dual(c);
  return compose({
      ModuleMap::relabel(tensor(one, b), b),
      kron(ev_left(c), ModuleMap::identity(b)),
      associator(cd, c, b),
      kron(ModuleMap::identity(cd), f),
      associator_inverse(cd, c, a),
      kron(coev_right(c), ModuleMap::identity(a)),
      ModuleMap::relabel(a, tensor(one, a)),
  });
}

}  // namespace qhmt
