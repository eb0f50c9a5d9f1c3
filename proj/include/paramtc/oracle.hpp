#pragma once

#include <cstdint>
#include <vector>

#include "paramtc/ring.hpp"

namespace paramtc::oracle {

/* Independent cross-checks for the deterministic normalizer.  The rewrite
 * rules are restated here on purpose; nothing in this module calls the
 * ring's own reduction path. */

/* Normalizes a generator product by repeatedly rewriting a uniformly
 * random violating pair (same family, same top index) instead of the
 * leftmost one.  Any seed must produce the same Element the deterministic
 * normalizer does. */
Element randomized_normalize(const SpaceSpec& spec, const std::vector<Generator>& product,
                             std::uint64_t seed);

/* The canonical zero-divisor product with every squared difference
 * replaced by the plain pair w(1,j)*w'(1,j); equals the bounds module's
 * zero_divisor_product up to the scalar (-2)^n.  Built by expanding the
 * difference factors into 2^(m-1) generator lists, normalizing each
 * independently, and summing. */
Element naive_zero_divisor_product(const SpaceSpec& spec);

/* The basis monomial
 *   w(1,2) * w(2,3)...w(2,m) * w(1,m+1) * w'(2,m+1)
 *   * w(1,m+2)...w(1,m+n) * w'(1,m+2)...w'(1,m+n)
 * which occurs in naive_zero_divisor_product with coefficient +-1: the
 * expansion produces it exactly once, so it can never cancel. */
Monomial witness_monomial(const SpaceSpec& spec);

}  // namespace paramtc::oracle
