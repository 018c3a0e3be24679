#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qhmt/algcore/algebra.hpp"

namespace qhmt {

// dim^order, throwing ShapeMismatch if it does not fit into an Index.
Index tensor_extent(std::size_t dim, std::size_t order);

// Sparse element of H^{(x)k}; basis tuples are flattened with leg 0 most significant.
class TensorElement {
 public:
  TensorElement() = default;
  TensorElement(std::size_t order, std::size_t dim);
  TensorElement(std::size_t order, std::size_t dim, SparseVector coeffs);

  static TensorElement scalar(const Scalar& c, std::size_t dim);
  static TensorElement from_element(const Element& x, std::size_t dim);
  // x_0 (x) x_1 (x) ...
  static TensorElement pure(const std::vector<Element>& legs, std::size_t dim);
  // 1 (x) ... (x) 1 (order copies).
  static TensorElement unit(const AlgebraData& alg, std::size_t order);

  std::size_t order() const noexcept { return order_; }
  std::size_t dim() const noexcept { return dim_; }
  const SparseVector& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::size_t terms() const noexcept { return coeffs_.size(); }

  std::vector<std::size_t> decode(Index flat) const;
  Index encode(const std::vector<std::size_t>& legs) const;
  // The order-1 view; requires order() == 1.
  const Element& as_element() const;

  TensorElement scaled(const Scalar& c) const;
  TensorElement operator-() const { return scaled(Scalar(-1)); }
  friend TensorElement operator+(const TensorElement& a, const TensorElement& b);
  friend TensorElement operator-(const TensorElement& a, const TensorElement& b);
  friend bool operator==(const TensorElement& a, const TensorElement& b);

  std::string format(const std::vector<std::string>& labels) const;

 private:
  std::size_t order_ = 0;
  std::size_t dim_ = 0;
  SparseVector coeffs_;
};

// Outer product: order adds up.
TensorElement tensor_product(const TensorElement& a, const TensorElement& b);

// Componentwise product in H^{(x)k}.
TensorElement mul_tensor(const AlgebraData& alg, const TensorElement& x, const TensorElement& y);
TensorElement mul_tensor(const AlgebraData& alg, const TensorElement& x, const TensorElement& y,
                         const TensorElement& z);

// Result leg j carries original leg perm[j] (0-based); flip(x, {1, 0}) is x_21.
TensorElement flip(const TensorElement& x, const std::vector<std::size_t>& perm);

// x_1 x_2 ... x_k multiplied inside H.
Element multiply_legs(const AlgebraData& alg, const TensorElement& x);

// Linear map H^{(x)m} -> H^{(x)n} given by the images of basis tuples.
class LinearOperator {
 public:
  LinearOperator() = default;
  LinearOperator(std::size_t dim, std::size_t domain_order, std::size_t codomain_order,
                 std::vector<SparseVector> images);
  static LinearOperator identity(std::size_t dim, std::size_t order = 1);
  static LinearOperator left_multiplication(const AlgebraData& alg, const Element& h);
  static LinearOperator right_multiplication(const AlgebraData& alg, const Element& h);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t domain_order() const noexcept { return domain_order_; }
  std::size_t codomain_order() const noexcept { return codomain_order_; }
  const SparseVector& image(Index i) const { return images_[i]; }
  const std::vector<SparseVector>& images() const noexcept { return images_; }

  SparseVector apply(const SparseVector& x) const;
  TensorElement apply(const TensorElement& x) const;
  // this o inner
  LinearOperator compose(const LinearOperator& inner) const;
  SparseMatrix matrix() const;
  friend bool operator==(const LinearOperator& a, const LinearOperator& b);

 private:
  std::size_t dim_ = 0;
  std::size_t domain_order_ = 0;
  std::size_t codomain_order_ = 0;
  std::vector<SparseVector> images_;
};

// Applies an operator of domain order 1 to leg `leg`; the leg is replaced by
// op.codomain_order() legs (0 legs for a form-like operator such as the counit).
TensorElement apply_on_leg(const TensorElement& x, std::size_t leg, const LinearOperator& op);
// Applies ops[j] to leg j; null entries mean identity. Each op must be 1 -> 1.
TensorElement apply_per_leg(const TensorElement& x, const std::vector<const LinearOperator*>& ops);

// Element of (H^{(x)k})^*, stored on the dual basis.
class LinearForm {
 public:
  LinearForm() = default;
  LinearForm(std::size_t order, std::size_t dim, SparseVector coeffs);
  static LinearForm from_operator(const LinearOperator& op);  // op: 1 -> 0

  std::size_t order() const noexcept { return order_; }
  std::size_t dim() const noexcept { return dim_; }
  const SparseVector& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  Scalar operator()(const TensorElement& x) const;
  // Order-1 evaluation.
  Scalar operator()(const Element& x) const;

  LinearForm scaled(const Scalar& c) const;
  friend LinearForm operator+(const LinearForm& a, const LinearForm& b);
  friend LinearForm operator-(const LinearForm& a, const LinearForm& b);
  friend bool operator==(const LinearForm& a, const LinearForm& b);

  std::string format(const std::vector<std::string>& labels) const;

 private:
  std::size_t order_ = 0;
  std::size_t dim_ = 0;
  SparseVector coeffs_;
};

// Evaluates f on the listed legs of x (in the listed order); remaining legs keep their order.
TensorElement apply_form(const LinearForm& f, const TensorElement& x, const std::vector<std::size_t>& legs);

}  // namespace qhmt
