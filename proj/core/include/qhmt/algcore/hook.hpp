#pragma once

#include <variant>

#include "qhmt/algcore/tensor.hpp"

namespace qhmt {

enum class HookVariant {
  ElementOnForm,   // (h -> f)(a) = f(a h)
  FormOnElement,   // f -> h = h_(1) f(h_(2))
  FormByElement,   // (f <- h)(a) = f(h a)
  ElementByForm,   // h <- f = f(h_(1)) h_(2)
};

// (h -> f)(a) = f(a h)
LinearForm hook_element_on_form(const AlgebraData& alg, const Element& h, const LinearForm& f);
// (f <- h)(a) = f(h a)
LinearForm hook_form_by_element(const AlgebraData& alg, const LinearForm& f, const Element& h);
// f -> h = h_(1) f(h_(2)); coproduct may be null, which raises MissingCoproduct.
Element hook_form_on_element(const LinearOperator* coproduct, const LinearForm& f, const Element& h);
// h <- f = f(h_(1)) h_(2)
Element hook_element_by_form(const LinearOperator* coproduct, const Element& h, const LinearForm& f);

std::variant<LinearForm, Element> hook(const AlgebraData& alg, const LinearOperator* coproduct, const Element& h,
                                       const LinearForm& f, HookVariant variant);

}  // namespace qhmt
