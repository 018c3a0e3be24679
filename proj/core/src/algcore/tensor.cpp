#include "qhmt/algcore/tensor.hpp"

#include <limits>

#include "qhmt/errors.hpp"

namespace qhmt {

Index tensor_extent(std::size_t dim, std::size_t order) {
  Index e = 1;
  for (std::size_t k = 0; k < order; ++k) {
    if (dim != 0 && e > std::numeric_limits<Index>::max() / dim)
      throw ShapeMismatch("tensor power too large to index");
    e *= dim;
  }
  return e;
}

TensorElement::TensorElement(std::size_t order, std::size_t dim) : order_(order), dim_(dim) {
  tensor_extent(dim, order);
}

TensorElement::TensorElement(std::size_t order, std::size_t dim, SparseVector coeffs)
    : order_(order), dim_(dim), coeffs_(std::move(coeffs)) {
  if (coeffs_.extent() > tensor_extent(dim, order)) throw ShapeMismatch("tensor index out of range");
}

TensorElement TensorElement::scalar(const Scalar& c, std::size_t dim) {
  return TensorElement(0, dim, SparseVector::unit(0, c));
}

TensorElement TensorElement::from_element(const Element& x, std::size_t dim) { return TensorElement(1, dim, x); }

TensorElement TensorElement::pure(const std::vector<Element>& legs, std::size_t dim) {
  TensorElement t = scalar(Scalar(1), dim);
  for (const auto& l : legs) t = tensor_product(t, from_element(l, dim));
  return t;
}

TensorElement TensorElement::unit(const AlgebraData& alg, std::size_t order) {
  return pure(std::vector<Element>(order, alg.unit()), alg.dim());
}

std::vector<std::size_t> TensorElement::decode(Index flat) const {
  std::vector<std::size_t> legs(order_);
  for (std::size_t k = order_; k-- > 0;) {
    legs[k] = static_cast<std::size_t>(flat % dim_);
    flat /= dim_;
  }
  return legs;
}

Index TensorElement::encode(const std::vector<std::size_t>& legs) const {
  if (legs.size() != order_) throw OrderMismatch("wrong number of legs for encode");
  Index flat = 0;
  for (auto l : legs) flat = flat * dim_ + l;
  return flat;
}

const Element& TensorElement::as_element() const {
  if (order_ != 1) throw OrderMismatch("tensor of order " + std::to_string(order_) + " used as an element");
  return coeffs_;
}

TensorElement TensorElement::scaled(const Scalar& c) const { return TensorElement(order_, dim_, coeffs_.scaled(c)); }

namespace {
void same_shape(const TensorElement& a, const TensorElement& b) {
  if (a.order() != b.order()) throw OrderMismatch("tensor orders differ");
  if (a.dim() != b.dim()) throw ShapeMismatch("tensor dimensions differ");
}
}  // namespace

TensorElement operator+(const TensorElement& a, const TensorElement& b) {
  same_shape(a, b);
  return TensorElement(a.order_, a.dim_, a.coeffs_ + b.coeffs_);
}

TensorElement operator-(const TensorElement& a, const TensorElement& b) {
  same_shape(a, b);
  return TensorElement(a.order_, a.dim_, a.coeffs_ - b.coeffs_);
}

bool operator==(const TensorElement& a, const TensorElement& b) {
  return a.order_ == b.order_ && a.dim_ == b.dim_ && a.coeffs_ == b.coeffs_;
}

std::string TensorElement::format(const std::vector<std::string>& labels) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [flat, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    std::string word;
    auto legs = decode(flat);
    for (std::size_t k = 0; k < legs.size(); ++k) {
      if (k) word += " (x) ";
      word += legs[k] < labels.size() ? labels[legs[k]] : "#" + std::to_string(legs[k]);
    }
    if (order_ == 0) {
      out += c.str();
    } else if (c.is_one()) {
      out += word;
    } else {
      out += "(" + c.str() + ")*" + (order_ > 1 ? "[" + word + "]" : word);
    }
  }
  return out;
}

TensorElement tensor_product(const TensorElement& a, const TensorElement& b) {
  if (a.dim() != b.dim()) throw ShapeMismatch("tensor dimensions differ");
  const Index shift = tensor_extent(a.dim(), b.order());
  std::vector<SparseVector::Entry> out;
  out.reserve(a.terms() * b.terms());
  for (const auto& [ia, ca] : a.coeffs())
    for (const auto& [ib, cb] : b.coeffs()) out.emplace_back(ia * shift + ib, ca * cb);
  return TensorElement(a.order() + b.order(), a.dim(), SparseVector::from_entries(std::move(out)));
}

TensorElement mul_tensor(const AlgebraData& alg, const TensorElement& x, const TensorElement& y) {
  same_shape(x, y);
  if (x.dim() != alg.dim()) throw ShapeMismatch("tensor does not live over this algebra");
  const std::size_t k = x.order();
  const std::size_t dim = x.dim();
  std::vector<std::vector<std::size_t>> ylegs;
  ylegs.reserve(y.terms());
  for (const auto& e : y.coeffs()) ylegs.push_back(y.decode(e.first));

  SparseAccumulator acc;
  std::vector<SparseVector::Entry> partial, next;
  for (const auto& [ix, cx] : x.coeffs()) {
    auto xl = x.decode(ix);
    std::size_t t = 0;
    for (const auto& [iy, cy] : y.coeffs()) {
      const auto& yl = ylegs[t++];
      partial.clear();
      partial.emplace_back(0, cx * cy);
      for (std::size_t leg = 0; leg < k && !partial.empty(); ++leg) {
        const Element& p = alg.product(xl[leg], yl[leg]);
        next.clear();
        for (const auto& [idx, c] : partial)
          for (const auto& [j, d] : p) next.emplace_back(idx * dim + j, d.is_one() ? c : c * d);
        partial.swap(next);
      }
      for (auto& e : partial) acc.add(e.first, std::move(e.second));
    }
  }
  return TensorElement(k, dim, acc.finish());
}

TensorElement mul_tensor(const AlgebraData& alg, const TensorElement& x, const TensorElement& y,
                         const TensorElement& z) {
  return mul_tensor(alg, mul_tensor(alg, x, y), z);
}

TensorElement flip(const TensorElement& x, const std::vector<std::size_t>& perm) {
  const std::size_t k = x.order();
  if (perm.size() != k) throw BadPermutation("permutation length differs from the tensor order");
  std::vector<bool> seen(k, false);
  for (auto p : perm) {
    if (p >= k || seen[p]) throw BadPermutation("not a permutation of the legs");
    seen[p] = true;
  }
  std::vector<SparseVector::Entry> out;
  out.reserve(x.terms());
  std::vector<std::size_t> moved(k);
  for (const auto& [flat, c] : x.coeffs()) {
    auto legs = x.decode(flat);
    for (std::size_t j = 0; j < k; ++j) moved[j] = legs[perm[j]];
    out.emplace_back(x.encode(moved), c);
  }
  return TensorElement(k, x.dim(), SparseVector::from_entries(std::move(out)));
}

Element multiply_legs(const AlgebraData& alg, const TensorElement& x) {
  SparseAccumulator acc;
  for (const auto& [flat, c] : x.coeffs()) {
    auto legs = x.decode(flat);
    Element p = alg.unit();
    for (auto l : legs) p = alg.mul(p, alg.basis(l));
    acc.add(p, c);
  }
  return acc.finish();
}

LinearOperator::LinearOperator(std::size_t dim, std::size_t domain_order, std::size_t codomain_order,
                               std::vector<SparseVector> images)
    : dim_(dim), domain_order_(domain_order), codomain_order_(codomain_order), images_(std::move(images)) {
  if (images_.size() != tensor_extent(dim, domain_order)) throw ShapeMismatch("operator needs one image per basis tuple");
  const Index ext = tensor_extent(dim, codomain_order);
  for (const auto& im : images_)
    if (im.extent() > ext) throw ShapeMismatch("operator image out of range");
}

LinearOperator LinearOperator::identity(std::size_t dim, std::size_t order) {
  const Index n = tensor_extent(dim, order);
  std::vector<SparseVector> images(n);
  for (Index i = 0; i < n; ++i) images[i] = SparseVector::unit(i);
  return LinearOperator(dim, order, order, std::move(images));
}

LinearOperator LinearOperator::left_multiplication(const AlgebraData& alg, const Element& h) {
  std::vector<SparseVector> images(alg.dim());
  for (std::size_t a = 0; a < alg.dim(); ++a) images[a] = alg.mul(h, alg.basis(a));
  return LinearOperator(alg.dim(), 1, 1, std::move(images));
}

LinearOperator LinearOperator::right_multiplication(const AlgebraData& alg, const Element& h) {
  std::vector<SparseVector> images(alg.dim());
  for (std::size_t a = 0; a < alg.dim(); ++a) images[a] = alg.mul(alg.basis(a), h);
  return LinearOperator(alg.dim(), 1, 1, std::move(images));
}

SparseVector LinearOperator::apply(const SparseVector& x) const {
  if (x.extent() > images_.size()) throw ShapeMismatch("vector outside the operator domain");
  if (x.size() == 1) return images_[x.leading().first].scaled(x.leading().second);
  SparseAccumulator acc;
  for (const auto& [i, c] : x) acc.add(images_[i], c);
  return acc.finish();
}

TensorElement LinearOperator::apply(const TensorElement& x) const {
  if (x.order() != domain_order_) throw OrderMismatch("operator applied to a tensor of the wrong order");
  if (x.dim() != dim_) throw ShapeMismatch("operator applied over a different algebra");
  return TensorElement(codomain_order_, dim_, apply(x.coeffs()));
}

LinearOperator LinearOperator::compose(const LinearOperator& inner) const {
  if (inner.codomain_order_ != domain_order_ || inner.dim_ != dim_)
    throw OrderMismatch("operator composition with mismatched orders");
  std::vector<SparseVector> images(inner.images_.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = apply(inner.images_[i]);
  return LinearOperator(dim_, inner.domain_order_, codomain_order_, std::move(images));
}

SparseMatrix LinearOperator::matrix() const {
  return SparseMatrix::from_columns(tensor_extent(dim_, codomain_order_), images_);
}

bool operator==(const LinearOperator& a, const LinearOperator& b) {
  return a.dim_ == b.dim_ && a.domain_order_ == b.domain_order_ && a.codomain_order_ == b.codomain_order_ &&
         a.images_ == b.images_;
}

TensorElement apply_on_leg(const TensorElement& x, std::size_t leg, const LinearOperator& op) {
  if (op.domain_order() != 1) throw OrderMismatch("leg operator must take a single leg");
  if (leg >= x.order()) throw LegMismatch("leg index beyond the tensor order");
  if (op.dim() != x.dim()) throw ShapeMismatch("leg operator over a different algebra");
  const std::size_t dim = x.dim();
  const std::size_t n = op.codomain_order();
  const Index below = tensor_extent(dim, x.order() - leg - 1);
  const Index mid = tensor_extent(dim, n);
  SparseAccumulator acc;
  for (const auto& [flat, c] : x.coeffs()) {
    Index suffix = flat % below;
    Index rest = flat / below;
    std::size_t l = static_cast<std::size_t>(rest % dim);
    Index prefix = rest / dim;
    for (const auto& [j, d] : op.image(l)) acc.add((prefix * mid + j) * below + suffix, c * d);
  }
  return TensorElement(x.order() - 1 + n, dim, acc.finish());
}

TensorElement apply_per_leg(const TensorElement& x, const std::vector<const LinearOperator*>& ops) {
  if (ops.size() != x.order()) throw OrderMismatch("one operator per leg expected");
  TensorElement r = x;
  for (std::size_t k = 0; k < ops.size(); ++k) {
    if (!ops[k]) continue;
    if (ops[k]->codomain_order() != 1) throw OrderMismatch("per-leg operators must map one leg to one leg");
    r = apply_on_leg(r, k, *ops[k]);
  }
  return r;
}

LinearForm::LinearForm(std::size_t order, std::size_t dim, SparseVector coeffs)
    : order_(order), dim_(dim), coeffs_(std::move(coeffs)) {
  if (coeffs_.extent() > tensor_extent(dim, order)) throw ShapeMismatch("form coefficient out of range");
}

LinearForm LinearForm::from_operator(const LinearOperator& op) {
  if (op.domain_order() != 1 || op.codomain_order() != 0) throw OrderMismatch("only H -> k operators are forms");
  std::vector<SparseVector::Entry> coeffs;
  for (std::size_t i = 0; i < op.images().size(); ++i) {
    Scalar v = op.image(i).at(0);
    if (!v.is_zero()) coeffs.emplace_back(i, v);
  }
  return LinearForm(1, op.dim(), SparseVector::from_entries(std::move(coeffs)));
}

Scalar LinearForm::operator()(const TensorElement& x) const {
  if (x.order() != order_) throw OrderMismatch("form evaluated on a tensor of a different order");
  return coeffs_.dot(x.coeffs());
}

Scalar LinearForm::operator()(const Element& x) const {
  if (order_ != 1) throw OrderMismatch("element evaluation needs an order-1 form");
  return coeffs_.dot(x);
}

LinearForm LinearForm::scaled(const Scalar& c) const { return LinearForm(order_, dim_, coeffs_.scaled(c)); }

LinearForm operator+(const LinearForm& a, const LinearForm& b) {
  if (a.order_ != b.order_) throw OrderMismatch("forms of different order");
  return LinearForm(a.order_, a.dim_, a.coeffs_ + b.coeffs_);
}

LinearForm operator-(const LinearForm& a, const LinearForm& b) {
  if (a.order_ != b.order_) throw OrderMismatch("forms of different order");
  return LinearForm(a.order_, a.dim_, a.coeffs_ - b.coeffs_);
}

bool operator==(const LinearForm& a, const LinearForm& b) {
  return a.order_ == b.order_ && a.dim_ == b.dim_ && a.coeffs_ == b.coeffs_;
}

std::string LinearForm::format(const std::vector<std::string>& labels) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  TensorElement shape(order_, dim_);
  for (const auto& [flat, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    std::string word;
    auto legs = shape.decode(flat);
    for (std::size_t k = 0; k < legs.size(); ++k) {
      if (k) word += " (x) ";
      word += legs[k] < labels.size() ? labels[legs[k]] : "#" + std::to_string(legs[k]);
    }
    word += "*";
    out += c.is_one() ? word : "(" + c.str() + ")*" + word;
  }
  return out;
}

TensorElement apply_form(const LinearForm& f, const TensorElement& x, const std::vector<std::size_t>& legs) {
  if (legs.size() != f.order()) throw LegMismatch("number of legs differs from the form order");
  if (f.dim() != x.dim()) throw ShapeMismatch("form and tensor live over different algebras");
  std::vector<bool> used(x.order(), false);
  for (auto l : legs) {
    if (l >= x.order() || used[l]) throw LegMismatch("legs must be distinct and within the tensor order");
    used[l] = true;
  }
  const std::size_t dim = x.dim();
  SparseAccumulator acc;
  for (const auto& [flat, c] : x.coeffs()) {
    auto all = x.decode(flat);
    Index key = 0;
    for (auto l : legs) key = key * dim + all[l];
    Scalar v = f.coeffs().at(key);
    if (v.is_zero()) continue;
    Index rest = 0;
    for (std::size_t k = 0; k < all.size(); ++k)
      if (!used[k]) rest = rest * dim + all[k];
    acc.add(rest, c * v);
  }
  return TensorElement(x.order() - legs.size(), dim, acc.finish());
}

}  // namespace qhmt
