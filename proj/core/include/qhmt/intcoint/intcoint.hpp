#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qhmt/quasihopf/canonical.hpp"
#include "qhmt/side.hpp"

namespace qhmt {

struct IntegralSpace {
  Side side = Side::Left;
  std::vector<Element> basis;
};

// Nullspace of the stacked l_h - eps(h) id (left) or r_h - eps(h) id (right).
// Throws DimensionZero when nothing survives.
IntegralSpace integrals(const QuasiHopfAlgebra& h, Side side);

struct Modulus {
  LinearForm gamma;
  bool unimodular = true;
};

// gamma with Lambda h = gamma(h) Lambda for the left integral; throws InconsistentModulus.
Modulus modulus(const QuasiHopfAlgebra& h);
Modulus modulus(const QuasiHopfAlgebra& h, const IntegralSpace& left);
// Convolution inverse gamma o S; h Lambda' = (gamma o S)(h) Lambda' for a right integral.
LinearForm modulus_inverse(const QuasiHopfAlgebra& h, const LinearForm& gamma);

// Everything the cointegral equations refer to, computed once.
struct CointegralData {
  std::shared_ptr<const QuasiHopfAlgebra> H;
  Modulus mod;
  CanonicalElements canon;  // with U, V, u and their coopposite versions
};

// Throws MissingPivotalData when H has no twist.
CointegralData prepare(std::shared_ptr<const QuasiHopfAlgebra> h);

enum class Normalization { FirstCoefficient, Reference };

struct CointegralResult {
  Side side = Side::Left;
  LinearForm lambda;
  LinearForm symmetrised;
  std::size_t gram_rank = 0;
  Normalization normalization = Normalization::FirstCoefficient;
};

// Solution of the left (or right) cointegral equation with first nonzero coefficient 1.
// Throws WrongSolutionDim unless the solution space is one-dimensional.
LinearForm solve_cointegral(const CointegralData& d, Side side);

// Solves, normalizes (to reference when given) and symmetrises.
CointegralResult cointegrals(const CointegralData& d, Side side, const LinearForm* reference = nullptr);

// Rescales lambda so its first nonzero coefficient agrees with reference; false when
// reference vanishes there, in which case lambda is left unchanged.
bool normalize_to(LinearForm& lambda, const LinearForm& reference);

// Right: lambda <- u g, left: lambda <- u_cop g^-1; checked against the characterisation
// of symmetrised cointegrals for every basis element (VerificationFailed otherwise).
LinearForm symmetrise(const CointegralData& d, Side side, const LinearForm& lambda);

// First basis element where the symmetrised-cointegral characterisation fails.
std::optional<std::string> symmetrised_failure(const CointegralData& d, Side side, const LinearForm& hat);
// Unimodular form: hat(h) 1 = (hat (x) g)(qR Delta(h) pR), resp. (g^-1 (x) hat)(qL Delta(h) pL).
std::optional<std::string> unimodular_symmetrised_failure(const CointegralData& d, Side side, const LinearForm& hat);

// (lambda_r <- u) o S, a left cointegral.
LinearForm left_from_right(const CointegralData& d, const LinearForm& right);
// (lambda_l <- u_cop) o S^-1, a right cointegral.
LinearForm right_from_left(const CointegralData& d, const LinearForm& left);

// s with a = s b, if any.
std::optional<Scalar> proportionality(const LinearForm& a, const LinearForm& b);

// Matrix form(e_i e_j).
SparseMatrix gram_matrix(const AlgebraData& alg, const LinearForm& form);
std::size_t gram_rank(const AlgebraData& alg, const LinearForm& form);

enum class FormKind { Generic, LeftCointegral, RightCointegral, LeftSymmetrised, RightSymmetrised };

struct PropertyReport {
  std::size_t gram_rank = 0;
  bool symmetric = true;
  std::size_t asymmetric_pairs = 0;  // basis pairs (a, b) with form(ab) != form(ba)
  std::string symmetry_defect;       // the first such pair
  bool twisted_checked = false;  // symmetrised kinds
  bool twisted_symmetric = true;
  std::string twisted_defect;
  bool nakayama_checked = false;  // cointegral kinds
  bool nakayama = true;
  std::string nakayama_defect;
};

// Exhaustive over basis pairs.
PropertyReport check_form_properties(const QuasiHopfAlgebra& h, const LinearForm& form, const LinearForm& gamma,
                                     FormKind kind);

}  // namespace qhmt
