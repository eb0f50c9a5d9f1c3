#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "paramtc/ring.hpp"

namespace paramtc {

/* Rank bookkeeping for the canonical free basis.  coefficients[p] is the
 * number of basis monomials of grade p (cohomological degree p*(k-1));
 * coefficients[0] == 1 and trailing zeros are trimmed. */
struct PoincarePolynomial {
    std::vector<std::int64_t> coefficients;

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    std::int64_t coefficient(int grade) const
    {
        if (grade < 0 || grade > degree())
            return 0;
        return coefficients[static_cast<std::size_t>(grade)];
    }

    friend bool operator==(const PoincarePolynomial&, const PoincarePolynomial&) = default;
};

/* Closed-form ranks:
 *   base:          prod_{i=1}^{m-1} (1 + i t)
 *   total space:   prod_{i=1}^{m+n-1} (1 + i t)
 *   fibre:         prod_{i=0}^{n-1} (1 + (m+i) t)
 *   fibre product: base * fibre^2
 */
PoincarePolynomial poincare_polynomial(const SpaceSpec& spec);

/* Top grade 2n+m-1 of the fibre-product ring. */
int top_grade(const SpaceSpec& spec);

/* All canonical monomials of the given grade, each exactly once, sorted in
 * the canonical monomial order.  The base block is empty for FibreX, the
 * primed block for TotalE and FibreX, and both non-base blocks for BaseB. */
std::vector<Monomial> enumerate_basis(const SpaceSpec& spec, int grade);

/* Streaming variant for counting at scales where materializing the list
 * would be wasteful.  Visits the same monomials as enumerate_basis but in
 * unspecified order; the reference passed to fn is reused between calls. */
void for_each_basis_monomial(const SpaceSpec& spec, int grade,
                             const std::function<void(const Monomial&)>& fn);

std::int64_t count_basis(const SpaceSpec& spec, int grade);

}  // namespace paramtc
