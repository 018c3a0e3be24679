#pragma once

#include <optional>

#include "qhmt/repcat/module_map.hpp"
#include "qhmt/side.hpp"

namespace qhmt {

// Left regular action l_h.
Representation regular_module(QuasiHopfPtr h);
// h.v = eps(h) v on k^n.
Representation trivial_module(QuasiHopfPtr h, std::size_t n);
// The tensor unit k.
inline Representation unit_module(QuasiHopfPtr h) { return trivial_module(std::move(h), 1); }

struct Submodule {
  Representation module;
  ModuleMap inclusion;
};

// Submodule spanned by the given vectors, in the reduced echelon basis of the span; the
// coordinates of x in the span are its entries at the pivot columns. VerificationFailed
// when the span is not invariant.
Submodule submodule(const Representation& v, const std::vector<SparseVector>& span, std::string name = "U");

// u (x) v (x) w -> Phi_1 u (x) Phi_2 v (x) Phi_3 w, from U (VW) to (UV) W.
ModuleMap associator(const Representation& u, const Representation& v, const Representation& w);
// Psi on (UV) W -> U (VW).
ModuleMap associator_inverse(const Representation& u, const Representation& v, const Representation& w);

// v -> h.v as a map V -> V (an intertwiner only for central h).
ModuleMap action_map(const Representation& v, const Element& h);

// evL(v^i (x) v_j) = <v^i, alpha v_j> : V* (x) V -> k.
ModuleMap ev_left(const Representation& v);
// 1 -> sum_i beta v_i (x) v^i : k -> V (x) V*.
ModuleMap coev_left(const Representation& v);
// evR(v (x) w^*) = <w^*, S(alpha) g v> : V (x) V* -> k.
ModuleMap ev_right(const Representation& v);
// 1 -> sum_i beta.v^i (x) g^-1 v_i : k -> V* (x) V.
ModuleMap coev_right(const Representation& v);
// delta_V = (canonical V -> V**) o l_g.
ModuleMap pivotal_map(const Representation& v);

struct Duality {
  Representation dual;
  ModuleMap ev_left, coev_left;
  std::optional<ModuleMap> ev_right, coev_right, delta;
};

// The right-handed maps are left empty without pivotal data.
Duality duals_and_pivot(const Representation& v);

// <lambda(w^* (x) v^*), v (x) w> = <v^*, f_1 v> <w^*, f_2 w> : W* (x) V* -> (V (x) W)*.
ModuleMap duality_iso(const Representation& v, const Representation& w);

// Right trace of f : A (x) C -> B (x) C over C, or left trace of f : C (x) A -> C (x) B.
// The composite inserts the associators explicitly:
//   right: A -> A(CC*) -> (AC)C* -> (BC)C* -> B(CC*) -> B  (coevL, Phi, f, Psi, evR),
//   left:  A -> (C*C)A -> C*(CA) -> C*(CB) -> (C*C)B -> B  (coevR, Psi, f, Phi, evL).
// ShapeMismatch unless source and target are tensor products sharing the factor C.
ModuleMap partial_trace(const ModuleMap& f, Side side);

}  // namespace qhmt
