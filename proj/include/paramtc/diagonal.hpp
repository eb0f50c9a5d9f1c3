#pragma once

#include <vector>

#include "paramtc/ring.hpp"

namespace paramtc {

/* The ring homomorphism induced by restricting both robot copies of the
 * fibre product to the same configuration: every primed class becomes its
 * unprimed twin and the result is renormalized in the total-space ring
 * (where the merged squares vanish). */
Element diagonal_apply(const Element& a);

/* All differences w(i,j) - w'(i,j) with j > m, the generating zero-divisors
 * of the diagonal kernel.  Pairs with j <= m vanish identically and are
 * omitted.  Every returned element is checked to map to zero. */
std::vector<Element> kernel_generators(const SpaceSpec& spec);

}  // namespace paramtc
