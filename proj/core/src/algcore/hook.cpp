#include "qhmt/algcore/hook.hpp"

#include "qhmt/errors.hpp"

namespace qhmt {
namespace {

const LinearOperator& need(const LinearOperator* coproduct) {
  if (!coproduct) throw MissingCoproduct("this hook action needs a coproduct");
  if (coproduct->domain_order() != 1 || coproduct->codomain_order() != 2)
    throw OrderMismatch("coproduct must map H to H (x) H");
  return *coproduct;
}

void order_one(const LinearForm& f) {
  if (f.order() != 1) throw OrderMismatch("hook actions take a form on H");
}

}  // namespace

LinearForm hook_element_on_form(const AlgebraData& alg, const Element& h, const LinearForm& f) {
  order_one(f);
  std::vector<SparseVector::Entry> out;
  for (std::size_t a = 0; a < alg.dim(); ++a) {
    Scalar v = f(alg.mul(alg.basis(a), h));
    if (!v.is_zero()) out.emplace_back(a, v);
  }
  return LinearForm(1, alg.dim(), SparseVector::from_entries(std::move(out)));
}

LinearForm hook_form_by_element(const AlgebraData& alg, const LinearForm& f, const Element& h) {
  order_one(f);
  std::vector<SparseVector::Entry> out;
  for (std::size_t a = 0; a < alg.dim(); ++a) {
    Scalar v = f(alg.mul(h, alg.basis(a)));
    if (!v.is_zero()) out.emplace_back(a, v);
  }
  return LinearForm(1, alg.dim(), SparseVector::from_entries(std::move(out)));
}

Element hook_form_on_element(const LinearOperator* coproduct, const LinearForm& f, const Element& h) {
  const auto& delta = need(coproduct);
  order_one(f);
  TensorElement dh = delta.apply(TensorElement::from_element(h, delta.dim()));
  return apply_form(f, dh, {1}).as_element();
}

Element hook_element_by_form(const LinearOperator* coproduct, const Element& h, const LinearForm& f) {
  const auto& delta = need(coproduct);
  order_one(f);
  TensorElement dh = delta.apply(TensorElement::from_element(h, delta.dim()));
  return apply_form(f, dh, {0}).as_element();
}

std::variant<LinearForm, Element> hook(const AlgebraData& alg, const LinearOperator* coproduct, const Element& h,
                                       const LinearForm& f, HookVariant variant) {
  switch (variant) {
    case HookVariant::ElementOnForm:
      return hook_element_on_form(alg, h, f);
    case HookVariant::FormByElement:
      return hook_form_by_element(alg, f, h);
    case HookVariant::FormOnElement:
      return hook_form_on_element(coproduct, f, h);
    case HookVariant::ElementByForm:
      return hook_element_by_form(coproduct, h, f);
  }
  throw Error("unknown hook variant");
}

}  // namespace qhmt
