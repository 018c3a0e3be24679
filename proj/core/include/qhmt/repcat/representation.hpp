#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qhmt/quasihopf/axioms.hpp"
#include "qhmt/quasihopf/quasi_hopf.hpp"

namespace qhmt {

using QuasiHopfPtr = std::shared_ptr<const QuasiHopfAlgebra>;

// A finite-dimensional left H-module.
//
// Explicit modules store one matrix per basis element. Tensor products and
// duals are kept as a tree and act through the coproduct and the antipode on
// demand, so H (x) H (x) H^* never has to be written out as matrices.
class Representation {
 public:
  enum class Kind { Explicit, Tensor, Dual };

  // action[i] = rho(e_i); only shapes are checked, see morphism_failure.
  static Representation from_matrices(QuasiHopfPtr h, std::vector<SparseMatrix> action, std::string name = "V");

  const QuasiHopfAlgebra& algebra() const;
  const QuasiHopfPtr& algebra_ptr() const;
  std::size_t dim() const;
  Kind kind() const;
  const std::string& name() const;
  // Factors of a tensor product; left() is also the base of a dual.
  const Representation& left() const;
  const Representation& right() const;

  SparseVector act(const Element& h, const SparseVector& v) const;
  SparseVector act_basis(std::size_t i, const SparseVector& v) const;
  SparseMatrix matrix(const Element& h) const;
  SparseMatrix basis_matrix(std::size_t i) const;

  // rho(1) = id and rho(ab) = rho(a) rho(b); b runs over the generators unless exhaustive.
  std::optional<std::string> morphism_failure(CheckScope scope = CheckScope::Auto) const;

  // Same node, or structurally equal trees with equal explicit actions.
  friend bool same_module(const Representation& a, const Representation& b);

  struct Node;

 private:
  explicit Representation(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  friend Representation tensor(const Representation& v, const Representation& w);
  friend Representation dual(const Representation& v);

  std::shared_ptr<const Node> node_;
};

// V (x) W acting through Delta; AlgebraMismatch unless both live over the same H object.
Representation tensor(const Representation& v, const Representation& w);
// V^* with <h.v^*, w> = <v^*, S(h) w>.
Representation dual(const Representation& v);

// Applies the legwise action of t (order k) to a vector of V_1 (x) ... (x) V_k.
SparseVector act_legs(const std::vector<const Representation*>& reps, const TensorElement& t, const SparseVector& v);

using VectorMap = std::function<SparseVector(const SparseVector&)>;

// (a (x) b) v for v in A (x) B with dim B = in_b; out_b is the output size of b. Groups v
// along whichever leg has fewer distinct indices; identity legs may be passed as null.
SparseVector kron_apply(const VectorMap& a, const VectorMap& b, std::size_t in_b, std::size_t out_b,
                        const SparseVector& v);

}  // namespace qhmt
