#pragma once

#include <cstdint>
#include <optional>

#include "qhmt/intcoint/intcoint.hpp"
#include "qhmt/repcat/free_module.hpp"
#include "qhmt/report.hpp"

namespace qhmt {

enum class TraceSide { Left, Right, TwoSided };
std::string to_string(TraceSide side);

// Symmetric form t on H together with the symmetrised cointegral it came from; t_H(r_x) = t(x).
class ModifiedTrace {
 public:
  // No checks; see from_symmetrised_cointegral.
  ModifiedTrace(QuasiHopfPtr h, LinearForm t, TraceSide side);

  const QuasiHopfPtr& algebra_ptr() const noexcept { return h_; }
  const QuasiHopfAlgebra& algebra() const noexcept { return *h_; }
  const LinearForm& form() const noexcept { return t_; }
  const LinearForm& lambda_hat() const noexcept { return t_; }
  TraceSide side() const noexcept { return side_; }
  bool covers(Side s) const;

  Scalar operator()(const Element& x) const { return t_(x); }
  // t_H(f) = t(f(1)) for f in End_H(H).
  Scalar on_regular(const ModuleMap& f) const;

 private:
  QuasiHopfPtr h_;
  LinearForm t_;
  TraceSide side_;
};

// NotUnimodular unless gamma = eps; NotSymmetrisedCointegral unless hat passes the closed-form
// condition for `side` and is symmetric. Two-sided when the other side's condition holds too.
ModifiedTrace from_symmetrised_cointegral(const CointegralData& d, const LinearForm& hat, Side side);

// Maps a_i : H -> P and b_i : P -> H with sum a_i b_i = id_P.
struct ProjectivePresentation {
  Representation regular;
  Representation P;
  std::vector<ModuleMap> a;
  std::vector<ModuleMap> b;
};

// Validates shapes and sum a_i b_i = id_P on every basis vector; BadPresentation otherwise.
ProjectivePresentation make_presentation(Representation regular, Representation P, std::vector<ModuleMap> a,
                                         std::vector<ModuleMap> b);
// First basis vector of P where sum a_i b_i differs from the identity.
std::optional<std::string> presentation_failure(const ProjectivePresentation& pres);

// P = H with a = b = id.
ProjectivePresentation regular_presentation(const Representation& regular);
// P = H e for an idempotent e: a = (x -> x e), b = inclusion; with copies > 1 the pair is
// repeated with b scaled by 1/copies.
ProjectivePresentation idempotent_presentation(const Representation& regular, const Element& e, std::size_t copies = 1);
// P = H (x) W (or W (x) H): a_i = phi o (h -> h (x) w_i), b_i = (coefficient of w_i) o psi.
// Validity follows from psi being inverse to phi, which is checked instead of the sum.
ProjectivePresentation free_presentation(const FreeModule& fm);

// sum_i t((b_i o f o a_i)(1)).
Scalar evaluate(const ModifiedTrace& tr, const ProjectivePresentation& pres, const ModuleMap& f);

// Trace over the whole object, as the partial trace of id_1 (x) f.
Scalar categorical_trace(const ModuleMap& f, Side side = Side::Right);

struct ReductionOptions {
  std::size_t budget = 200;
  std::uint64_t seed = 1;
  std::size_t exhaustive_limit = 16;  // dim H at or below which every (a, E_jk) is tried
  std::optional<Side> only;           // restrict to one side; default: every side the trace covers
};

// t_{HH}(Xi(a (x) m)) = t_H(tr_H(Xi(a (x) m))) over basis pairs (or seeded samples with small
// integer coefficients), plus the closed-form condition for every basis a.
Report verify_reduction(const CointegralData& d, const ModifiedTrace& tr, const ReductionOptions& opt = {});

// Rank of (f, g) -> t_P(f o g) on Hom(M, P) x Hom(P, M), both as intertwiner nullspaces.
struct PairingResult {
  std::size_t hom_mp = 0;
  std::size_t hom_pm = 0;
  std::size_t rank = 0;
  bool nondegenerate() const { return rank == hom_mp && rank == hom_pm; }
};
PairingResult pairing(const ModifiedTrace& tr, const Representation& m, const ProjectivePresentation& pres);
Report pairing_nondegeneracy(const ModifiedTrace& tr, const Representation& m, const ProjectivePresentation& pres);

// t_{HH}(f o g) = t_H(g o f) for seeded intertwiners f : H -> H (x) H and g : H (x) H -> H.
Report verify_cyclicity(const CointegralData& d, const ModifiedTrace& tr, std::size_t samples, std::uint64_t seed);

}  // namespace qhmt
