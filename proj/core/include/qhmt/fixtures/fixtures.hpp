#pragma once

#include <memory>

#include "qhmt/quasihopf/quasi_hopf.hpp"

namespace qhmt::fixtures {

// Group algebra k[Z_n] with trivial coassociator, pivot 1 and trivial twist.
std::shared_ptr<const QuasiHopfAlgebra> cyclic_group(unsigned n);

// Sweedler's four-dimensional Hopf algebra: g^2 = 1, x^2 = 0, xg = -gx,
// Delta(x) = x (x) 1 + g (x) x, pivot g. Not unimodular.
std::shared_ptr<const QuasiHopfAlgebra> sweedler();

}  // namespace qhmt::fixtures
