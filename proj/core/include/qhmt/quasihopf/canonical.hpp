#pragma once

#include <string>
#include <vector>

#include "qhmt/quasihopf/quasi_hopf.hpp"

namespace qhmt {

struct IdentityCheck {
  std::string name;
  bool passed = true;
  std::string discrepancy;
};

struct CanonicalElements {
  TensorElement qR, pR, qL, pL;
  std::vector<IdentityCheck> identities;

  // Filled by derive_UVu.
  bool has_uv = false;
  TensorElement U, V;
  TensorElement U_cop, V_cop;
  Element u, u_cop;

  bool identities_hold() const;
};

// qR = Psi1 (x) S^-1(alpha Psi3) Psi2, pR = Phi1 (x) Phi2 beta S(Phi3),
// qL = S(Phi1) alpha Phi2 (x) Phi3,   pL = Psi2 S^-1(Psi1 beta) (x) Psi3,
// together with the six defining identities. Throws AxiomViolation when any identity fails.
CanonicalElements derive_qp(const QuasiHopfAlgebra& h);

// Same elements without verification or throwing.
CanonicalElements compute_qp(const QuasiHopfAlgebra& h);

// Runs the identity checks on c (used by derive_qp, exposed for tests).
std::vector<IdentityCheck> check_qp_identities(const QuasiHopfAlgebra& h, const CanonicalElements& c);

// U = f^-1 (S (x) S)(qR_21), V = (S^-1 (x) S^-1)(f_21 pR_21), u = (gamma (x) S^2)(V),
// V_cop = (S (x) S)(pL) f_21, U_cop = (S^-1 (x) S^-1)(qL f^-1), u_cop = (gamma (x) S^-2)(V_cop).
// Throws MissingPivotalData without a twist.
void derive_UVu(const QuasiHopfAlgebra& h, const LinearForm& gamma, CanonicalElements& c);

// Calls f(i, j, c) for every term c e_i (x) e_j of a two-leg tensor.
template <class F>
void for_each_term(const TensorElement& t, F&& f) {
  const std::size_t n = t.dim();
  for (const auto& [flat, c] : t.coeffs()) f(std::size_t(flat / n), std::size_t(flat % n), c);
}

}  // namespace qhmt
