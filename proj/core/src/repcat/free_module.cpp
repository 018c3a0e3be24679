#include "qhmt/repcat/free_module.hpp"

#include <map>
#include <mutex>

#include "qhmt/errors.hpp"

namespace qhmt {

namespace {

// Per-basis tensors T_h, computed on first use.
class TensorCache {
 public:
  using Builder = std::function<TensorElement(std::size_t)>;
  TensorCache(std::size_t n, Builder build) : slots_(n), build_(std::move(build)) {}

  const TensorElement& get(std::size_t h) {
    std::lock_guard lock(mu_);
    auto& slot = slots_[h];
    if (!slot) slot = build_(h);
    return *slot;
  }

 private:
  std::mutex mu_;
  std::vector<std::optional<TensorElement>> slots_;
  Builder build_;
};

// Right: e_h (x) v -> sum c e_x (x) rho(y) v over T_h = sum c x (x) y.
// Left:  v (x) e_h -> sum c rho(x) v (x) e_y.
VectorMap twisted_action(std::shared_ptr<TensorCache> cache, Representation w, std::size_t dim_h, Side side) {
  return [cache, w, dim_h, side](const SparseVector& v) {
    const std::size_t dw = w.dim();
    std::map<Index, std::vector<SparseVector::Entry>> slices;
    for (const auto& [idx, c] : v) {
      if (side == Side::Right)
        slices[idx / dw].emplace_back(idx % dw, c);
      else
        slices[idx % dim_h].emplace_back(idx / dim_h, c);
    }
    SparseAccumulator acc;
    for (auto& [h, entries] : slices) {
      const SparseVector slice = SparseVector::from_entries(std::move(entries));
      const TensorElement& t = cache->get(h);
      for_each_term(t, [&](std::size_t x, std::size_t y, const Scalar& c) {
        if (side == Side::Right)
          acc.add_shifted(w.act_basis(y, slice), c, Index(x * dw));
        else
          acc.add(kron(w.act_basis(x, slice), SparseVector::unit(y), dim_h), c);
      });
    }
    return acc.finish();
  };
}

}  // namespace

FreeModule phi_psi(const CanonicalElements& c, const Representation& regular, const Representation& w, Side side) {
  if (regular.algebra_ptr() != w.algebra_ptr()) throw AlgebraMismatch("phi_psi: modules over different algebras");
  const QuasiHopfPtr hp = w.algebra_ptr();
  const QuasiHopfAlgebra& H = *hp;
  if (regular.dim() != H.dim()) throw ShapeMismatch("phi_psi: first module must be the regular module");
  Representation w0 = trivial_module(hp, w.dim());
  const bool right = side == Side::Right;
  Representation free = right ? tensor(regular, w0) : tensor(w0, regular);
  Representation twisted = right ? tensor(regular, w) : tensor(w, regular);

  auto delta = [hp](std::size_t h) { return TensorElement(2, hp->dim(), hp->delta_basis(h)); };
  std::shared_ptr<TensorCache> phi_cache, psi_cache;
  if (right) {
    TensorElement pR = c.pR, qR = c.qR;
    phi_cache = std::make_shared<TensorCache>(H.dim(), [hp, delta, pR](std::size_t h) { return hp->mul(delta(h), pR); });
    psi_cache = std::make_shared<TensorCache>(H.dim(), [hp, delta, qR](std::size_t h) {
      return hp->antipode_on_legs(hp->mul(qR, delta(h)), {0, 1});
    });
  } else {
    TensorElement pL = c.pL, qL = c.qL;
    phi_cache = std::make_shared<TensorCache>(H.dim(), [hp, delta, pL](std::size_t h) { return hp->mul(delta(h), pL); });
    psi_cache = std::make_shared<TensorCache>(H.dim(), [hp, delta, qL](std::size_t h) {
      return hp->antipode_on_legs(hp->mul(qL, delta(h)), {-1, 0});
    });
  }
  ModuleMap phi = ModuleMap::lazy(free, twisted, twisted_action(phi_cache, w, H.dim(), side));
  ModuleMap psi = ModuleMap::lazy(twisted, free, twisted_action(psi_cache, w, H.dim(), side));
  return FreeModule{side, regular, w, w0, free, twisted, phi, psi};
}

ModuleMap xi(const FreeModule& fm, const Element& a, const SparseMatrix& m) {
  if (m.rows() != fm.w.dim() || m.cols() != fm.w.dim()) throw ShapeMismatch("xi: m must be an endomorphism of W");
  ModuleMap ra(fm.regular, fm.regular, fm.regular.algebra().algebra().right_multiplication(a));
  ModuleMap mm(fm.trivialized, fm.trivialized, m);
  ModuleMap middle = fm.side == Side::Right ? kron(ra, mm) : kron(mm, ra);
  return compose({fm.phi, middle, fm.psi});
}

}  // namespace qhmt
