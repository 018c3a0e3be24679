#pragma once

#include <memory>
#include <optional>

#include "qhmt/algcore/tensor.hpp"

namespace qhmt {

struct PivotalData {
  Element pivot;
  TensorElement twist;
  TensorElement twist_inverse;
};

// Raw structure data; QuasiHopfAlgebra validates shapes only, check_axioms does the rest.
struct QuasiHopfData {
  std::shared_ptr<const AlgebraData> algebra;
  LinearOperator coproduct;        // H -> H (x) H
  LinearForm counit;
  LinearOperator antipode;         // H -> H
  LinearOperator antipode_inverse; // H -> H
  TensorElement phi;
  TensorElement psi;
  Element alpha;
  Element beta;
  std::optional<PivotalData> pivotal;
};

class QuasiHopfAlgebra {
 public:
  explicit QuasiHopfAlgebra(QuasiHopfData data);

  const AlgebraData& algebra() const noexcept { return *data_.algebra; }
  const std::shared_ptr<const AlgebraData>& algebra_ptr() const noexcept { return data_.algebra; }
  const QuasiHopfData& data() const noexcept { return data_; }
  std::size_t dim() const noexcept { return data_.algebra->dim(); }
  const std::vector<std::string>& labels() const noexcept { return data_.algebra->labels(); }

  const LinearOperator& coproduct() const noexcept { return data_.coproduct; }
  const LinearForm& counit() const noexcept { return data_.counit; }
  const LinearOperator& antipode() const noexcept { return data_.antipode; }
  const LinearOperator& antipode_inverse() const noexcept { return data_.antipode_inverse; }
  const LinearOperator& antipode_squared() const noexcept { return s2_; }
  const LinearOperator& antipode_inverse_squared() const noexcept { return sinv2_; }
  const TensorElement& phi() const noexcept { return data_.phi; }
  const TensorElement& psi() const noexcept { return data_.psi; }
  const Element& alpha() const noexcept { return data_.alpha; }
  const Element& beta() const noexcept { return data_.beta; }

  bool is_pivotal() const noexcept { return data_.pivotal.has_value(); }
  const PivotalData& pivotal() const;  // MissingPivotalData when absent
  const Element& pivot() const { return pivotal().pivot; }
  const Element& pivot_inverse() const;
  const TensorElement& twist() const { return pivotal().twist; }
  const TensorElement& twist_inverse() const { return pivotal().twist_inverse; }

  // Shorthands over the structure maps.
  Element one() const { return algebra().unit(); }
  Element mul(const Element& a, const Element& b) const { return algebra().mul(a, b); }
  Element mul(const Element& a, const Element& b, const Element& c) const { return algebra().mul(a, b, c); }
  TensorElement mul(const TensorElement& x, const TensorElement& y) const { return mul_tensor(algebra(), x, y); }
  TensorElement mul(const TensorElement& x, const TensorElement& y, const TensorElement& z) const {
    return mul_tensor(algebra(), x, y, z);
  }
  TensorElement delta(const Element& h) const { return TensorElement(2, dim(), data_.coproduct.apply(h)); }
  const SparseVector& delta_basis(std::size_t i) const { return data_.coproduct.image(i); }
  // Delta applied to one leg of x.
  TensorElement delta_on_leg(const TensorElement& x, std::size_t leg) const {
    return apply_on_leg(x, leg, data_.coproduct);
  }
  Scalar eps(const Element& h) const { return data_.counit(h); }
  Element S(const Element& h) const { return data_.antipode.apply(h); }
  Element S_inv(const Element& h) const { return data_.antipode_inverse.apply(h); }
  TensorElement tensor(const Element& a, const Element& b) const { return TensorElement::pure({a, b}, dim()); }
  TensorElement tensor(const Element& a, const Element& b, const Element& c) const {
    return TensorElement::pure({a, b, c}, dim());
  }
  TensorElement unit_tensor(std::size_t order) const { return TensorElement::unit(algebra(), order); }

  // Applies S^{powers[j]} to leg j; powers in {-2, -1, 0, 1, 2}.
  TensorElement antipode_on_legs(const TensorElement& x, const std::vector<int>& powers) const;
  // Counit on one leg.
  TensorElement eps_on_leg(const TensorElement& x, std::size_t leg) const {
    return apply_form(data_.counit, x, {leg});
  }

  std::string format(const Element& x) const { return algebra().format(x); }
  std::string format(const TensorElement& x) const { return x.format(labels()); }

 private:
  QuasiHopfData data_;
  LinearOperator s2_;
  LinearOperator sinv2_;
  Element pivot_inverse_;
};

// Opposite multiplication: S^op = S^-1, Phi^op = Psi, alpha^op = S^-1(beta), beta^op = S^-1(alpha).
QuasiHopfAlgebra opposite(const QuasiHopfAlgebra& h);
// Flipped coproduct: S^cop = S^-1, Phi^cop = Psi_321, alpha^cop = S^-1(alpha), beta^cop = S^-1(beta),
// pivot g^-1 and twist (S^-1 (x) S^-1)(f).
QuasiHopfAlgebra coopposite(const QuasiHopfAlgebra& h);

// Solves g x = 1 inside the algebra; empty when g is not invertible.
std::optional<Element> invert_element(const AlgebraData& alg, const Element& g);
// Solves x y = 1 in H^{(x)k}; empty when x is not invertible.
std::optional<TensorElement> invert_tensor(const AlgebraData& alg, const TensorElement& x);

}  // namespace qhmt
