#include "qhmt/quasihopf/quasi_hopf.hpp"

#include "qhmt/errors.hpp"
#include "qhmt/exactmath/linalg.hpp"

namespace qhmt {

namespace {

void require_shape(bool ok, const char* what) {
  if (!ok) throw ShapeMismatch(what);
}

}  // namespace

QuasiHopfAlgebra::QuasiHopfAlgebra(QuasiHopfData data) : data_(std::move(data)) {
  if (!data_.algebra) throw ShapeMismatch("quasi-Hopf data without an algebra");
  const std::size_t n = data_.algebra->dim();
  auto op_ok = [n](const LinearOperator& op, std::size_t from, std::size_t to) {
    return op.dim() == n && op.domain_order() == from && op.codomain_order() == to;
  };
  require_shape(op_ok(data_.coproduct, 1, 2), "coproduct must map H to H (x) H");
  require_shape(data_.counit.order() == 1 && data_.counit.dim() == n, "counit must be a form on H");
  require_shape(op_ok(data_.antipode, 1, 1), "antipode must map H to H");
  require_shape(op_ok(data_.antipode_inverse, 1, 1), "antipode inverse must map H to H");
  require_shape(data_.phi.order() == 3 && data_.phi.dim() == n, "coassociator must lie in H^(x)3");
  require_shape(data_.psi.order() == 3 && data_.psi.dim() == n, "inverse coassociator must lie in H^(x)3");
  require_shape(data_.alpha.extent() <= n && data_.beta.extent() <= n, "alpha and beta must lie in H");
  if (data_.pivotal) {
    const auto& p = *data_.pivotal;
    require_shape(p.pivot.extent() <= n, "pivot must lie in H");
    require_shape(p.twist.order() == 2 && p.twist.dim() == n, "twist must lie in H (x) H");
    require_shape(p.twist_inverse.order() == 2 && p.twist_inverse.dim() == n, "twist inverse must lie in H (x) H");
    if (auto inv = invert_element(*data_.algebra, p.pivot)) pivot_inverse_ = std::move(*inv);
  }
  s2_ = data_.antipode.compose(data_.antipode);
  sinv2_ = data_.antipode_inverse.compose(data_.antipode_inverse);
}

const PivotalData& QuasiHopfAlgebra::pivotal() const {
  if (!data_.pivotal) throw MissingPivotalData("no pivot and twist were supplied");
  return *data_.pivotal;
}

const Element& QuasiHopfAlgebra::pivot_inverse() const {
  pivotal();
  if (pivot_inverse_.empty()) throw AxiomViolation("pivot is not invertible");
  return pivot_inverse_;
}

TensorElement QuasiHopfAlgebra::antipode_on_legs(const TensorElement& x, const std::vector<int>& powers) const {
  std::vector<const LinearOperator*> ops(powers.size(), nullptr);
  for (std::size_t k = 0; k < powers.size(); ++k) {
    switch (powers[k]) {
      case 0: break;
      case 1: ops[k] = &data_.antipode; break;
      case -1: ops[k] = &data_.antipode_inverse; break;
      case 2: ops[k] = &s2_; break;
      case -2: ops[k] = &sinv2_; break;
      default: throw ShapeMismatch("antipode power out of range");
    }
  }
  return apply_per_leg(x, ops);
}

std::optional<Element> invert_element(const AlgebraData& alg, const Element& g) {
  auto x = solve(alg.left_multiplication(g), alg.unit());
  if (!x) return std::nullopt;
  if (alg.mul(*x, g) != alg.unit()) return std::nullopt;
  return x;
}

std::optional<TensorElement> invert_tensor(const AlgebraData& alg, const TensorElement& x) {
  const Index n = tensor_extent(alg.dim(), x.order());
  std::vector<SparseVector> cols(n);
  for (Index t = 0; t < n; ++t)
    cols[t] = mul_tensor(alg, x, TensorElement(x.order(), alg.dim(), SparseVector::unit(t))).coeffs();
  TensorElement one = TensorElement::unit(alg, x.order());
  auto y = solve(SparseMatrix::from_columns(n, std::move(cols)), one.coeffs());
  if (!y) return std::nullopt;
  TensorElement inv(x.order(), alg.dim(), std::move(*y));
  if (mul_tensor(alg, inv, x) != one) return std::nullopt;
  return inv;
}

QuasiHopfAlgebra opposite(const QuasiHopfAlgebra& h) {
  const auto& d = h.data();
  QuasiHopfData o;
  o.algebra = std::make_shared<const AlgebraData>(h.algebra().opposite());
  o.coproduct = d.coproduct;
  o.counit = d.counit;
  o.antipode = d.antipode_inverse;
  o.antipode_inverse = d.antipode;
  o.phi = d.psi;
  o.psi = d.phi;
  o.alpha = h.S_inv(d.beta);
  o.beta = h.S_inv(d.alpha);
  if (d.pivotal) {
    const auto& p = *d.pivotal;
    PivotalData q;
    q.pivot = p.pivot;
    q.twist = h.antipode_on_legs(flip(p.twist_inverse, {1, 0}), {-1, -1});
    q.twist_inverse = h.antipode_on_legs(flip(p.twist, {1, 0}), {-1, -1});
    o.pivotal = std::move(q);
  }
  return QuasiHopfAlgebra(std::move(o));
}

QuasiHopfAlgebra coopposite(const QuasiHopfAlgebra& h) {
  const auto& d = h.data();
  const std::size_t n = h.dim();
  QuasiHopfData c;
  c.algebra = h.algebra_ptr();
  std::vector<SparseVector> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = flip(TensorElement(2, n, d.coproduct.image(i)), {1, 0}).coeffs();
  c.coproduct = LinearOperator(n, 1, 2, std::move(images));
  c.counit = d.counit;
  c.antipode = d.antipode_inverse;
  c.antipode_inverse = d.antipode;
  c.phi = flip(d.psi, {2, 1, 0});
  c.psi = flip(d.phi, {2, 1, 0});
  c.alpha = h.S_inv(d.alpha);
  c.beta = h.S_inv(d.beta);
  if (d.pivotal) {
    const auto& p = *d.pivotal;
    PivotalData q;
    q.pivot = h.pivot_inverse();
    q.twist = h.antipode_on_legs(p.twist, {-1, -1});
    q.twist_inverse = h.antipode_on_legs(p.twist_inverse, {-1, -1});
    c.pivotal = std::move(q);
  }
  return QuasiHopfAlgebra(std::move(c));
}

}  // namespace qhmt
