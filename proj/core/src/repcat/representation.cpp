#include "qhmt/repcat/representation.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "qhmt/errors.hpp"

namespace qhmt {

struct Representation::Node {
  Kind kind = Kind::Explicit;
  QuasiHopfPtr h;
  std::size_t dim = 0;
  std::string name;
  std::vector<SparseMatrix> action;        // explicit only
  std::vector<Representation> children;    // tensor factors, or the base of a dual
  mutable std::mutex mu;
  mutable std::vector<std::optional<SparseMatrix>> dual_cache;
};

namespace {

std::string fmt_vec(const SparseVector& v) {
  std::string out = "[";
  bool first = true;
  for (const auto& [i, c] : v) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(i) + ": " + c.str();
  }
  return out + "]";
}

SparseVector apply_pure(const std::vector<const Representation*>& reps, const std::vector<std::size_t>& legs,
                        std::size_t j, const std::vector<std::size_t>& tail_dims, const SparseVector& v) {
  if (j + 1 == reps.size()) return reps[j]->act_basis(legs[j], v);
  const std::size_t rest = tail_dims[j + 1];
  return kron_apply([&](const SparseVector& w) { return reps[j]->act_basis(legs[j], w); },
                    [&](const SparseVector& w) { return apply_pure(reps, legs, j + 1, tail_dims, w); }, rest, rest,
                    v);
}

}  // namespace

SparseVector kron_apply(const VectorMap& a, const VectorMap& b, std::size_t in_b, std::size_t out_b,
                        const SparseVector& v) {
  if (v.empty()) return {};
  if (!a && !b) return v;
  std::size_t n_first = 0;
  Index last = ~Index(0);
  std::vector<Index> seconds;
  seconds.reserve(v.size());
  for (const auto& [idx, c] : v) {
    if (idx / in_b != last) ++n_first, last = idx / in_b;
    seconds.push_back(idx % in_b);
  }
  std::sort(seconds.begin(), seconds.end());
  const std::size_t n_second = std::unique(seconds.begin(), seconds.end()) - seconds.begin();

  bool by_first = !a || (b && n_first <= n_second);
  SparseAccumulator acc;
  if (by_first) {
    std::size_t pos = 0;
    const auto& e = v.entries();
    while (pos < e.size()) {
      const Index i = e[pos].first / in_b;
      std::vector<SparseVector::Entry> slice;
      while (pos < e.size() && e[pos].first / in_b == i) {
        slice.emplace_back(e[pos].first % in_b, e[pos].second);
        ++pos;
      }
      SparseVector w = SparseVector::from_entries(std::move(slice));
      SparseVector ai = a ? a(SparseVector::unit(i)) : SparseVector::unit(i);
      SparseVector bw = b ? b(w) : w;
      acc.add(kron(ai, bw, out_b));
    }
  } else {
    std::map<Index, std::vector<SparseVector::Entry>> slices;
    for (const auto& [idx, c] : v) slices[idx % in_b].emplace_back(idx / in_b, c);
    for (auto& [k, entries] : slices) {
      SparseVector u = SparseVector::from_entries(std::move(entries));
      SparseVector au = a ? a(u) : u;
      SparseVector bk = b ? b(SparseVector::unit(k)) : SparseVector::unit(k);
      acc.add(kron(au, bk, out_b));
    }
  }
  return acc.finish();
}

SparseVector act_legs(const std::vector<const Representation*>& reps, const TensorElement& t, const SparseVector& v) {
  if (t.order() != reps.size()) throw OrderMismatch("act_legs: tensor order differs from the number of modules");
  std::vector<std::size_t> tail(reps.size() + 1, 1);
  for (std::size_t j = reps.size(); j-- > 0;) tail[j] = tail[j + 1] * reps[j]->dim();
  SparseAccumulator acc;
  for (const auto& [flat, c] : t.coeffs()) acc.add(apply_pure(reps, t.decode(flat), 0, tail, v), c);
  return acc.finish();
}

Representation Representation::from_matrices(QuasiHopfPtr h, std::vector<SparseMatrix> action, std::string name) {
  if (!h) throw AlgebraMismatch("representation without an algebra");
  if (action.size() != h->dim()) throw ShapeMismatch("one action matrix per basis element is required");
  const std::size_t d = action.empty() ? 0 : action.front().rows();
  for (const auto& m : action)
    if (m.rows() != d || m.cols() != d) throw ShapeMismatch("action matrices must be square of equal size");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Explicit;
  node->h = std::move(h);
  node->dim = d;
  node->name = std::move(name);
  node->action = std::move(action);
  return Representation(std::move(node));
}

const QuasiHopfAlgebra& Representation::algebra() const { return *node_->h; }
const QuasiHopfPtr& Representation::algebra_ptr() const { return node_->h; }
std::size_t Representation::dim() const { return node_->dim; }
Representation::Kind Representation::kind() const { return node_->kind; }
const std::string& Representation::name() const { return node_->name; }

const Representation& Representation::left() const {
  if (node_->children.empty()) throw ShapeMismatch(name() + " is not a tensor product or a dual");
  return node_->children[0];
}

const Representation& Representation::right() const {
  if (node_->kind != Kind::Tensor) throw ShapeMismatch(name() + " is not a tensor product");
  return node_->children[1];
}

SparseVector Representation::act_basis(std::size_t i, const SparseVector& v) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::Explicit:
      return n.action[i].apply(v);
    case Kind::Tensor: {
      const std::vector<const Representation*> reps{&n.children[0], &n.children[1]};
      return act_legs(reps, TensorElement(2, n.h->dim(), n.h->delta_basis(i)), v);
    }
    case Kind::Dual: {
      std::lock_guard lock(n.mu);
      auto& slot = n.dual_cache[i];
      if (!slot) slot = n.children[0].matrix(n.h->antipode().image(i)).transpose();
      return slot->apply(v);
    }
  }
  return {};
}

SparseVector Representation::act(const Element& h, const SparseVector& v) const {
  if (node_->kind == Kind::Tensor) {
    const std::vector<const Representation*> reps{&node_->children[0], &node_->children[1]};
    return act_legs(reps, node_->h->delta(h), v);
  }
  SparseAccumulator acc;
  for (const auto& [i, c] : h) acc.add(act_basis(i, v), c);
  return acc.finish();
}

SparseMatrix Representation::matrix(const Element& h) const {
  std::vector<SparseVector> cols;
  cols.reserve(dim());
  for (std::size_t k = 0; k < dim(); ++k) cols.push_back(act(h, SparseVector::unit(k)));
  return SparseMatrix::from_columns(dim(), std::move(cols));
}

SparseMatrix Representation::basis_matrix(std::size_t i) const {
  if (node_->kind == Kind::Explicit) return node_->action[i];
  return matrix(SparseVector::unit(i));
}

std::optional<std::string> Representation::morphism_failure(CheckScope scope) const {
  const QuasiHopfAlgebra& H = algebra();
  for (std::size_t k = 0; k < dim(); ++k) {
    SparseVector e = SparseVector::unit(k);
    if (!(act(H.one(), e) == e)) return "rho(1) moves basis vector " + std::to_string(k);
  }
  const bool exhaustive =
      scope == CheckScope::Exhaustive || (scope == CheckScope::Auto && H.dim() <= 64);
  std::vector<Element> right;
  if (exhaustive) {
    for (std::size_t j = 0; j < H.dim(); ++j) right.push_back(SparseVector::unit(j));
  } else {
    right = H.algebra().generators();
  }
  for (const Element& b : right) {
    for (std::size_t k = 0; k < dim(); ++k) {
      SparseVector bv = act(b, SparseVector::unit(k));
      for (std::size_t i = 0; i < H.dim(); ++i) {
        SparseVector lhs = act_basis(i, bv);
        SparseVector rhs = act(H.mul(SparseVector::unit(i), b), SparseVector::unit(k));
        if (!(lhs == rhs))
          return "rho(" + H.labels()[i] + ") rho(" + H.format(b) + ") != rho(product) on basis vector " +
                 std::to_string(k) + ": " + fmt_vec(lhs - rhs);
      }
    }
  }
  return std::nullopt;
}

bool same_module(const Representation& a, const Representation& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.h != y.h || x.dim != y.dim) return false;
  switch (x.kind) {
    case Representation::Kind::Explicit:
      return x.action == y.action;
    case Representation::Kind::Tensor:
      return same_module(x.children[0], y.children[0]) && same_module(x.children[1], y.children[1]);
    case Representation::Kind::Dual:
      return same_module(x.children[0], y.children[0]);
  }
  return false;
}

Representation tensor(const Representation& v, const Representation& w) {
  if (v.algebra_ptr() != w.algebra_ptr()) throw AlgebraMismatch("tensor: modules over different algebras");
  auto node = std::make_shared<Representation::Node>();
  node->kind = Representation::Kind::Tensor;
  node->h = v.algebra_ptr();
  node->dim = v.dim() * w.dim();
  node->name = "(" + v.name() + " x " + w.name() + ")";
  node->children = {v, w};
  return Representation(std::move(node));
}

Representation dual(const Representation& v) {
  auto node = std::make_shared<Representation::Node>();
  node->kind = Representation::Kind::Dual;
  node->h = v.algebra_ptr();
  node->dim = v.dim();
  node->name = v.name() + "*";
  node->children = {v};
  node->dual_cache.resize(v.algebra().dim());
  return Representation(std::move(node));
}

}  // namespace qhmt
