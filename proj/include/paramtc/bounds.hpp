#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "paramtc/ring.hpp"

namespace paramtc {

enum class BoundKind { Lower, Upper };

struct BoundRecord {
    int value = 0;
    BoundKind kind = BoundKind::Lower;
    std::string provenance;

    friend bool operator==(const BoundRecord&, const BoundRecord&) = default;
};

/* Upper bound from dimension and connectivity: with r = k-2 the fibre
 * connectivity and hdim = (k-1)(2n+m-1), tc is strictly below
 * (hdim+1)/(r+1); the returned value is the largest integer satisfying
 * that, computed in exact integer arithmetic.  For this family it equals
 * 2n+m-1. */
BoundRecord upper_bound_dimension(const SpaceSpec& spec);

struct CupLengthResult {
    BoundRecord bound;
    Monomial witness;
    std::int64_t witness_coefficient = 0;
    Element product;
};

/* Multiplies the given diagonal zero-divisors.  Each factor is verified to
 * map to zero under diagonal_apply (NotAZeroDivisor otherwise).  Nonzero
 * product: a Lower bound of length(factors) plus a witness term.  Zero
 * product: nullopt.  An empty factor list yields Lower 0 (empty product is
 * the unit). */
std::optional<CupLengthResult> cup_length_lower_bound(const SpaceSpec& spec,
                                                      const std::vector<Element>& factors);

/* The canonical 2n+m-1 zero-divisor factors:
 *   (w(i,m+1) - w'(i,m+1))          for i = 2..m, then
 *   (w(1,j) - w'(1,j)) twice        for j = m+1..m+n.
 */
std::vector<Element> zero_divisor_factors(const SpaceSpec& spec);

/* Fully normalized product of zero_divisor_factors; nonzero for every
 * valid spec with m >= 2, which is what verify_tc certifies. */
Element zero_divisor_product(const SpaceSpec& spec);

struct TcCertificate {
    int robots = 0;
    int obstacles = 0;
    int dimension = 0;
    int lower_bound = 0;
    int upper_bound = 0;
    std::optional<int> tc_exact;
    std::vector<Element> factors;
    Monomial witness_monomial;
    std::int64_t witness_coefficient = 0;

    friend bool operator==(const TcCertificate&, const TcCertificate&) = default;
};

/* Certifies tc = 2n+m-1 for the fibre-product spec: builds the canonical
 * product, checks it is nonzero, extracts the first term as witness and
 * matches the lower bound against the dimension upper bound.  A zero
 * product would signal an implementation bug (TheoremCheckFailed). */
TcCertificate verify_tc(const SpaceSpec& spec);

struct SearchResult {
    BoundRecord bound;
    std::vector<int> witness;  // indices into kernel_generators(spec)
    Element witness_product;
};

/* Breadth-first search over multisets of kernel generators, longest
 * nonzero product wins.  Partial products are reused and zero products
 * prune their subtree.  Every product evaluation counts against
 * max_candidates; exhausting the budget throws BudgetExceeded carrying the
 * best length confirmed so far.  threads > 1 splits each level across
 * workers without changing any result. */
SearchResult exhaustive_zero_divisor_search(const SpaceSpec& spec, int max_length,
                                            std::int64_t max_candidates, int threads = 1);

/* Sum of two upper bounds (the product fibration combinator). */
BoundRecord product_inequality_combine(const BoundRecord& a, const BoundRecord& b);

/* For a nonempty set T of obstacle indices and a robot index p, the product
 * prod_{i in T} w(i,p) (primed or not) equals the closed form
 *
 *   (-1)^{|T|-1} * sum_{i in T} (prod_{j in T-{i}} w(i,j)) * w(i,p)
 *
 * with w(i,j) = -w(j,i) for i > j.  Returns {direct, closed_form}, both
 * normalized, for the caller to compare. */
std::pair<Element, Element> shared_top_expansion(const SpaceSpec& spec,
                                                 const std::vector<int>& obstacle_set, int p,
                                                 bool primed);

}  // namespace paramtc
