#include "qhmt/quasihopf/canonical.hpp"

#include "qhmt/errors.hpp"

namespace qhmt {

namespace {

Element e(const QuasiHopfAlgebra& h, std::size_t i) { return h.algebra().basis(i); }

// Sum of c * (a (x) b) over the terms of a three-leg tensor, with a, b built per term.
template <class F>
TensorElement build2(const QuasiHopfAlgebra& h, const TensorElement& t3, F&& legs) {
  const std::size_t n = h.dim();
  SparseAccumulator acc;
  for (const auto& [flat, c] : t3.coeffs()) {
    std::size_t i = flat / (n * n), j = (flat / n) % n, k = flat % n;
    auto [a, b] = legs(i, j, k);
    acc.add(h.tensor(a, b).coeffs(), c);
  }
  return TensorElement(2, n, acc.finish());
}

IdentityCheck identity(const QuasiHopfAlgebra& h, std::string name, const TensorElement& lhs,
                       const TensorElement& rhs) {
  IdentityCheck r{std::move(name), lhs == rhs, ""};
  if (!r.passed) {
    r.discrepancy = h.format(lhs - rhs);
    if (r.discrepancy.size() > 512) r.discrepancy = r.discrepancy.substr(0, 512) + "...";
  }
  return r;
}

}  // namespace

bool CanonicalElements::identities_hold() const {
  for (const auto& c : identities)
    if (!c.passed) return false;
  return true;
}

CanonicalElements compute_qp(const QuasiHopfAlgebra& h) {
  CanonicalElements c;
  const Element& al = h.alpha();
  const Element& be = h.beta();
  c.qR = build2(h, h.psi(), [&](std::size_t i, std::size_t j, std::size_t k) {
    return std::pair{e(h, i), h.mul(h.S_inv(h.mul(al, e(h, k))), e(h, j))};
  });
  c.pR = build2(h, h.phi(), [&](std::size_t i, std::size_t j, std::size_t k) {
    return std::pair{e(h, i), h.mul(e(h, j), be, h.S(e(h, k)))};
  });
  c.qL = build2(h, h.phi(), [&](std::size_t i, std::size_t j, std::size_t k) {
    return std::pair{h.mul(h.S(e(h, i)), al, e(h, j)), e(h, k)};
  });
  c.pL = build2(h, h.psi(), [&](std::size_t i, std::size_t j, std::size_t k) {
    return std::pair{h.mul(e(h, j), h.S_inv(h.mul(e(h, i), be))), e(h, k)};
  });
  return c;
}

std::vector<IdentityCheck> check_qp_identities(const QuasiHopfAlgebra& h, const CanonicalElements& c) {
  const std::size_t n = h.dim();
  const Element one = h.one();
  const TensorElement one2 = h.unit_tensor(2);
  std::vector<IdentityCheck> out;

  auto sum2 = [&](const TensorElement& t, auto&& term) {
    TensorElement acc(2, n);
    for_each_term(t, [&](std::size_t a, std::size_t b, const Scalar& s) { acc = acc + term(a, b).scaled(s); });
    return acc;
  };

  out.push_back(identity(h, "Delta(qR1) pR (1 (x) S(qR2)) = 1",
                         sum2(c.qR, [&](std::size_t a, std::size_t b) {
                           return h.mul(h.delta(e(h, a)), c.pR, h.tensor(one, h.S(e(h, b))));
                         }),
                         one2));
  out.push_back(identity(h, "(1 (x) S^-1(pR2)) qR Delta(pR1) = 1",
                         sum2(c.pR, [&](std::size_t a, std::size_t b) {
                           return h.mul(h.tensor(one, h.S_inv(e(h, b))), c.qR, h.delta(e(h, a)));
                         }),
                         one2));
  out.push_back(identity(h, "Delta(qL2) pL (S^-1(qL1) (x) 1) = 1",
                         sum2(c.qL, [&](std::size_t a, std::size_t b) {
                           return h.mul(h.delta(e(h, b)), c.pL, h.tensor(h.S_inv(e(h, a)), one));
                         }),
                         one2));
  out.push_back(identity(h, "(S(pL1) (x) 1) qL Delta(pL2) = 1",
                         sum2(c.pL, [&](std::size_t a, std::size_t b) {
                           return h.mul(h.tensor(h.S(e(h, a)), one), c.qL, h.delta(e(h, b)));
                         }),
                         one2));

  IdentityCheck r5{"(1 (x) S^-1(h2)) qR Delta(h1) = (h (x) 1) qR", true, ""};
  IdentityCheck r6{"Delta(h1) pR (1 (x) S(h2)) = pR (h (x) 1)", true, ""};
  for (std::size_t x = 0; x < n; ++x) {
    TensorElement dh = h.delta(e(h, x));
    if (r5.passed) {
      auto lhs = sum2(dh, [&](std::size_t a, std::size_t b) {
        return h.mul(h.tensor(one, h.S_inv(e(h, b))), c.qR, h.delta(e(h, a)));
      });
      auto chk = identity(h, r5.name, lhs, h.mul(h.tensor(e(h, x), one), c.qR));
      if (!chk.passed) r5 = IdentityCheck{r5.name, false, "at " + h.labels()[x] + ": " + chk.discrepancy};
    }
    if (r6.passed) {
      auto lhs = sum2(dh, [&](std::size_t a, std::size_t b) {
        return h.mul(h.delta(e(h, a)), c.pR, h.tensor(one, h.S(e(h, b))));
      });
      auto chk = identity(h, r6.name, lhs, h.mul(c.pR, h.tensor(e(h, x), one)));
      if (!chk.passed) r6 = IdentityCheck{r6.name, false, "at " + h.labels()[x] + ": " + chk.discrepancy};
    }
  }
  out.push_back(std::move(r5));
  out.push_back(std::move(r6));
  return out;
}

CanonicalElements derive_qp(const QuasiHopfAlgebra& h) {
  CanonicalElements c = compute_qp(h);
  c.identities = check_qp_identities(h, c);
  for (const auto& id : c.identities)
    if (!id.passed) throw AxiomViolation("q/p identity fails: " + id.name + ": " + id.discrepancy);
  return c;
}

void derive_UVu(const QuasiHopfAlgebra& h, const LinearForm& gamma, CanonicalElements& c) {
  const TensorElement& f = h.twist();
  const TensorElement& finv = h.twist_inverse();
  TensorElement f21 = flip(f, {1, 0});
  c.U = h.mul(finv, h.antipode_on_legs(flip(c.qR, {1, 0}), {1, 1}));
  c.V = h.antipode_on_legs(h.mul(f21, flip(c.pR, {1, 0})), {-1, -1});
  c.V_cop = h.mul(h.antipode_on_legs(c.pL, {1, 1}), f21);
  c.U_cop = h.antipode_on_legs(h.mul(c.qL, finv), {-1, -1});
  c.u = apply_form(gamma, h.antipode_on_legs(c.V, {0, 2}), {0}).coeffs();
  c.u_cop = apply_form(gamma, h.antipode_on_legs(c.V_cop, {0, -2}), {0}).coeffs();
  c.has_uv = true;
}

}  // namespace qhmt
