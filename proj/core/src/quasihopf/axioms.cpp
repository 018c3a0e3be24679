#include "qhmt/quasihopf/axioms.hpp"

#include <functional>
#include <optional>

#include "qhmt/errors.hpp"

namespace qhmt {

namespace {

constexpr std::size_t kMaxDiscrepancy = 512;

std::string truncate(std::string s) {
  if (s.size() > kMaxDiscrepancy) {
    s.resize(kMaxDiscrepancy);
    s += "...";
  }
  return s;
}

struct Failure {
  std::string witness;
  std::string discrepancy;
};

using Outcome = std::optional<Failure>;

class Checker {
 public:
  Checker(const QuasiHopfAlgebra& h, const AxiomOptions& opt) : h_(h) {
    exhaustive_ = opt.scope == CheckScope::Exhaustive ||
                  (opt.scope == CheckScope::Auto && h.dim() <= opt.exhaustive_limit);
    const auto& alg = h.algebra();
    for (std::size_t i = 0; i < h.dim(); ++i) basis_.push_back(alg.basis(i));
    if (exhaustive_) {
      right_ = basis_;
      linear_ = basis_;
    } else {
      right_ = alg.generators();
      // A property closed under products that holds on 1 and the generators holds everywhere.
      linear_.push_back(alg.unit());
      for (const auto& g : alg.generators()) linear_.push_back(g);
    }
  }

  bool exhaustive() const { return exhaustive_; }

  Outcome elements(const std::vector<Element>& hs, const std::function<Outcome(const Element&)>& f) const {
    for (const auto& x : hs)
      if (auto r = f(x)) return r;
    return std::nullopt;
  }
  Outcome over_basis(const std::function<Outcome(const Element&)>& f) const { return elements(basis_, f); }
  Outcome over_linear(const std::function<Outcome(const Element&)>& f) const { return elements(linear_, f); }
  Outcome over_pairs(const std::function<Outcome(const Element&, const Element&)>& f) const {
    for (const auto& x : basis_)
      for (const auto& y : right_)
        if (auto r = f(x, y)) return r;
    return std::nullopt;
  }

  Outcome compare(const std::string& witness, const Element& lhs, const Element& rhs) const {
    if (lhs == rhs) return std::nullopt;
    return Failure{witness, truncate(h_.format(lhs - rhs))};
  }
  Outcome compare(const std::string& witness, const TensorElement& lhs, const TensorElement& rhs) const {
    if (lhs == rhs) return std::nullopt;
    return Failure{witness, truncate(h_.format(lhs - rhs))};
  }
  Outcome compare(const std::string& witness, const Scalar& lhs, const Scalar& rhs) const {
    if (lhs == rhs) return std::nullopt;
    return Failure{witness, (lhs - rhs).str()};
  }

  std::string name(const Element& x) const { return h_.format(x); }

 private:
  const QuasiHopfAlgebra& h_;
  bool exhaustive_ = true;
  std::vector<Element> basis_;
  std::vector<Element> right_;
  std::vector<Element> linear_;
};

// Sum over the terms x_1 (x) x_2 of a two-leg tensor.
template <class F>
void for_terms2(const TensorElement& t, F&& f) {
  const std::size_t n = t.dim();
  for (const auto& [flat, c] : t.coeffs())
    f(Element::unit(flat / n), Element::unit(flat % n), c);
}

template <class F>
void for_terms3(const TensorElement& t, F&& f) {
  const std::size_t n = t.dim();
  for (const auto& [flat, c] : t.coeffs())
    f(Element::unit(flat / (n * n)), Element::unit((flat / n) % n), Element::unit(flat % n), c);
}

}  // namespace

const std::vector<std::string>& axiom_names() {
  static const std::vector<std::string> names = {
      "algebra.associativity",
      "algebra.unit",
      "coproduct.multiplicative",
      "counit.multiplicative",
      "counit.coproduct",
      "coassociator.inverse",
      "coassociator.quasi_coassociativity",
      "coassociator.pentagon",
      "coassociator.counit",
      "counit.alpha_beta",
      "antipode.inverse",
      "antipode.anti_multiplicative",
      "antipode.alpha",
      "antipode.beta",
      "antipode.coassociator_phi",
      "antipode.coassociator_psi",
      "twist.inverse",
      "twist.counit",
      "twist.antipode_coproduct",
      "pivot.inverse",
      "pivot.counit",
      "pivot.antipode",
      "pivot.square_antipode",
      "pivot.coproduct",
  };
  return names;
}

bool AxiomReport::all_passed() const { return first_failure() == nullptr; }

const AxiomResult* AxiomReport::first_failure() const {
  for (const auto& r : results)
    if (r.enabled && !r.passed) return &r;
  return nullptr;
}

const AxiomResult* AxiomReport::find(const std::string& name) const {
  for (const auto& r : results)
    if (r.name == name) return &r;
  return nullptr;
}

AxiomReport check_axioms(const QuasiHopfAlgebra& H, const AxiomOptions& options) {
  Checker ck(H, options);
  const auto& alg = H.algebra();
  const std::size_t n = H.dim();
  const Element one = H.one();
  const TensorElement one2 = H.unit_tensor(2);
  const TensorElement one3 = H.unit_tensor(3);
  const bool pivotal = H.is_pivotal();

  std::vector<std::pair<std::string, std::function<Outcome()>>> checks;
  auto add = [&](std::string name, std::function<Outcome()> f) { checks.emplace_back(std::move(name), std::move(f)); };

  add("algebra.associativity", [&]() -> Outcome {
    if (auto w = alg.associativity_failure(ck.exhaustive())) return Failure{*w, ""};
    return std::nullopt;
  });
  add("algebra.unit", [&]() -> Outcome {
    if (auto w = alg.unit_failure()) return Failure{*w, ""};
    return std::nullopt;
  });
  add("coproduct.multiplicative", [&] {
    return ck.over_pairs([&](const Element& x, const Element& y) {
      return ck.compare("(" + ck.name(x) + ", " + ck.name(y) + ")", H.delta(H.mul(x, y)),
                        H.mul(H.delta(x), H.delta(y)));
    });
  });
  add("counit.multiplicative", [&] {
    return ck.over_pairs([&](const Element& x, const Element& y) {
      return ck.compare("(" + ck.name(x) + ", " + ck.name(y) + ")", H.eps(H.mul(x, y)), H.eps(x) * H.eps(y));
    });
  });
  add("counit.coproduct", [&] {
    return ck.over_linear([&](const Element& x) -> Outcome {
      TensorElement d = H.delta(x);
      if (auto r = ck.compare("(eps (x) id) at " + ck.name(x), H.eps_on_leg(d, 0).coeffs(), x)) return r;
      return ck.compare("(id (x) eps) at " + ck.name(x), H.eps_on_leg(d, 1).coeffs(), x);
    });
  });
  add("coassociator.inverse", [&]() -> Outcome {
    if (auto r = ck.compare("phi psi", H.mul(H.phi(), H.psi()), one3)) return r;
    return ck.compare("psi phi", H.mul(H.psi(), H.phi()), one3);
  });
  add("coassociator.quasi_coassociativity", [&] {
    return ck.over_linear([&](const Element& x) {
      TensorElement d = H.delta(x);
      return ck.compare(ck.name(x), H.mul(H.phi(), H.delta_on_leg(d, 1)), H.mul(H.delta_on_leg(d, 0), H.phi()));
    });
  });
  add("coassociator.pentagon", [&] {
    const TensorElement& phi = H.phi();
    TensorElement lhs = H.mul(H.delta_on_leg(phi, 0), H.delta_on_leg(phi, 2));
    TensorElement left = tensor_product(phi, TensorElement::from_element(one, n));
    TensorElement right = tensor_product(TensorElement::from_element(one, n), phi);
    TensorElement rhs = H.mul(left, H.delta_on_leg(phi, 1), right);
    return ck.compare("phi", lhs, rhs);
  });
  add("coassociator.counit", [&]() -> Outcome {
    for (std::size_t leg = 0; leg < 3; ++leg)
      if (auto r = ck.compare("counit on leg " + std::to_string(leg + 1), H.eps_on_leg(H.phi(), leg), one2))
        return r;
    return std::nullopt;
  });
  add("counit.alpha_beta", [&]() -> Outcome {
    if (auto r = ck.compare("eps(alpha)", H.eps(H.alpha()), Scalar(1))) return r;
    return ck.compare("eps(beta)", H.eps(H.beta()), Scalar(1));
  });
  add("antipode.inverse", [&] {
    return ck.over_basis([&](const Element& x) -> Outcome {
      if (auto r = ck.compare("S(S^-1(" + ck.name(x) + "))", H.S(H.S_inv(x)), x)) return r;
      return ck.compare("S^-1(S(" + ck.name(x) + "))", H.S_inv(H.S(x)), x);
    });
  });
  add("antipode.anti_multiplicative", [&] {
    return ck.over_pairs([&](const Element& x, const Element& y) {
      return ck.compare("(" + ck.name(x) + ", " + ck.name(y) + ")", H.S(H.mul(x, y)), H.mul(H.S(y), H.S(x)));
    });
  });
  add("antipode.alpha", [&] {
    return ck.over_linear([&](const Element& x) {
      SparseAccumulator acc;
      for_terms2(H.delta(x), [&](const Element& a, const Element& b, const Scalar& c) {
        acc.add(H.mul(H.S(a), H.alpha(), b), c);
      });
      return ck.compare(ck.name(x), acc.finish(), H.alpha().scaled(H.eps(x)));
    });
  });
  add("antipode.beta", [&] {
    return ck.over_linear([&](const Element& x) {
      SparseAccumulator acc;
      for_terms2(H.delta(x), [&](const Element& a, const Element& b, const Scalar& c) {
        acc.add(H.mul(a, H.beta(), H.S(b)), c);
      });
      return ck.compare(ck.name(x), acc.finish(), H.beta().scaled(H.eps(x)));
    });
  });
  add("antipode.coassociator_phi", [&] {
    SparseAccumulator acc;
    for_terms3(H.phi(), [&](const Element& a, const Element& b, const Element& c, const Scalar& s) {
      acc.add(H.mul(H.mul(H.S(a), H.alpha(), b), H.beta(), H.S(c)), s);
    });
    return ck.compare("phi", acc.finish(), one);
  });
  add("antipode.coassociator_psi", [&] {
    SparseAccumulator acc;
    for_terms3(H.psi(), [&](const Element& a, const Element& b, const Element& c, const Scalar& s) {
      acc.add(H.mul(H.mul(a, H.beta(), H.S(b)), H.alpha(), c), s);
    });
    return ck.compare("psi", acc.finish(), one);
  });
  if (pivotal) {
    add("twist.inverse", [&]() -> Outcome {
      if (auto r = ck.compare("f f^-1", H.mul(H.twist(), H.twist_inverse()), one2)) return r;
      return ck.compare("f^-1 f", H.mul(H.twist_inverse(), H.twist()), one2);
    });
    add("twist.counit", [&]() -> Outcome {
      if (auto r = ck.compare("(eps (x) id)(f)", H.eps_on_leg(H.twist(), 0).coeffs(), one)) return r;
      return ck.compare("(id (x) eps)(f)", H.eps_on_leg(H.twist(), 1).coeffs(), one);
    });
    add("twist.antipode_coproduct", [&] {
      return ck.over_linear([&](const Element& x) {
        TensorElement lhs = H.mul(H.twist(), H.delta(H.S(x)), H.twist_inverse());
        TensorElement rhs = H.antipode_on_legs(flip(H.delta(x), {1, 0}), {1, 1});
        return ck.compare(ck.name(x), lhs, rhs);
      });
    });
    add("pivot.inverse", [&]() -> Outcome {
      if (!invert_element(alg, H.pivot())) return Failure{"g", "pivot is not invertible"};
      return std::nullopt;
    });
    add("pivot.counit", [&] { return ck.compare("eps(g)", H.eps(H.pivot()), Scalar(1)); });
    add("pivot.antipode", [&] { return ck.compare("S(g)", H.S(H.pivot()), H.pivot_inverse()); });
    add("pivot.square_antipode", [&] {
      return ck.over_linear([&](const Element& x) {
        return ck.compare(ck.name(x), H.antipode_squared().apply(x), H.mul(H.pivot(), x, H.pivot_inverse()));
      });
    });
    add("pivot.coproduct", [&] {
      TensorElement f21 = H.antipode_on_legs(flip(H.twist(), {1, 0}), {1, 1});
      TensorElement rhs = H.mul(H.twist_inverse(), f21, H.tensor(H.pivot(), H.pivot()));
      return ck.compare("Delta(g)", H.delta(H.pivot()), rhs);
    });
  }

  AxiomReport report;
  report.exhaustive = ck.exhaustive();
  for (auto& [name, fn] : checks) {
    AxiomResult r;
    r.name = name;
    if (options.disabled.count(name)) {
      r.enabled = false;
      report.results.push_back(std::move(r));
      continue;
    }
    try {
      if (auto fail = fn()) {
        r.passed = false;
        r.witness = std::move(fail->witness);
        r.discrepancy = std::move(fail->discrepancy);
      }
    } catch (const AxiomViolation& e) {
      r.passed = false;
      r.witness = e.what();
    }
    report.results.push_back(std::move(r));
  }
  return report;
}

void require_axioms(const QuasiHopfAlgebra& h, const AxiomOptions& options) {
  AxiomReport report = check_axioms(h, options);
  if (const auto* f = report.first_failure())
    throw AxiomViolation(f->name + " fails at " + f->witness + (f->discrepancy.empty() ? "" : ": " + f->discrepancy));
}

}  // namespace qhmt
