#pragma once

#include "qhmt/quasihopf/canonical.hpp"
#include "qhmt/repcat/monoidal.hpp"

namespace qhmt {

// H (x) W versus the free module H (x) W0 (W0 = W with trivial action), or the mirrored
// W (x) H versus W0 (x) H on the left side.
struct FreeModule {
  Side side = Side::Right;
  Representation regular;
  Representation w;
  Representation trivialized;
  Representation free;     // H (x) W0, resp. W0 (x) H
  Representation twisted;  // H (x) W, resp. W (x) H
  ModuleMap phi;           // free -> twisted
  ModuleMap psi;           // twisted -> free
};

// Right: phi(h (x) v) = (Delta(h) pR).(1 (x) v), psi(h (x) v) = [(id (x) S)(qR Delta(h))].(1 (x) v).
// Left:  phi(v (x) h) = (Delta(h) pL).(v (x) 1), psi(v (x) h) = [(S^-1 (x) id)(qL Delta(h))].(v (x) 1).
FreeModule phi_psi(const CanonicalElements& c, const Representation& regular, const Representation& w, Side side);

// Right: phi o (r_a (x) m) o psi on H (x) W; left: phi o (m (x) r_a) o psi on W (x) H.
ModuleMap xi(const FreeModule& fm, const Element& a, const SparseMatrix& m);

}  // namespace qhmt
