#pragma once

#include "zlocal/finite_ring.hpp"
#include "zlocal/presentation.hpp"

namespace zlocal {

/// Builds the concrete ring of a validated presentation.
///
/// Basis order is 1 < x < x^2 < ... < y1 < x*y1 < ... < y2 < ... (F1 uses t for the generator of
/// K; F0 uses the squarefree monomials x1, x2, x1*x2, x3, ... in bitmask order). Products of basis
/// monomials are rewritten to normal form per family; the resulting table is then checked for
/// commutativity, associativity and unit laws, and any failure raises InternalError.
///
/// The as_printed variants are compiled as the honest quotient by the printed ideal. Because
/// p*x lies in that ideal, so does p*g(0); when g(0) is a unit mod p this forces p = 0 and the
/// result is the characteristic-p ring of the matching F1/F2 shape.
FiniteRing compile(const RingPresentation& pres);

}  // namespace zlocal
