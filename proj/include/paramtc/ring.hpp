#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "paramtc/checked_int.hpp"
#include "paramtc/spaces.hpp"

namespace paramtc {

/* Exact arithmetic in the integral cohomology rings of SpaceSpec.
 *
 * Every generator has even degree (dimension - 1), so the rings are
 * commutative.  Defining relations, for each family (unprimed/primed)
 * separately:
 *
 *     w(i,j)^2 = 0
 *     w(i,r) * w(j,r) = w(i,j) * (w(j,r) - w(i,r))     for i < j < r
 *
 * together with w'(i,j) = w(i,j) whenever j <= m and the sign convention
 * w(j,i) = -w(i,j).  Products are normalized onto the free basis of
 * canonical monomials (see Monomial below), so Element equality is plain
 * term-map equality. */

enum class Side { Unprimed, Primed };

/* An index pair i < j.  Ordered by (high, low); within a canonical
 * monomial part the highs are strictly increasing, so this is also the
 * storage order. */
struct IndexPair {
    int low = 0;
    int high = 0;

    friend constexpr std::strong_ordering operator<=>(const IndexPair& a, const IndexPair& b)
    {
        if (auto c = a.high <=> b.high; c != 0)
            return c;
        return a.low <=> b.low;
    }
    friend constexpr bool operator==(const IndexPair&, const IndexPair&) = default;
};

/* A single ring generator in canonical form: low < high, and the primed
 * marker already folded away when high <= m. */
struct Generator {
    int low = 0;
    int high = 0;
    Side side = Side::Unprimed;

    friend constexpr bool operator==(const Generator&, const Generator&) = default;
};

struct SignedGenerator {
    Generator gen;
    int sign;  // +1 or -1, from the w(j,i) = -w(i,j) convention
};

/* Validates indices against the spec, applies the sign convention and the
 * primed/unprimed identification.  Throws EqualIndices, IndexOutOfRange or
 * SpaceMismatch. */
SignedGenerator canonical_generator(const SpaceSpec& spec, int i, int j, Side side);

/* A canonical basis monomial: a product of generators split into the three
 * blocks of the free basis.  Within each block the top indices are strictly
 * increasing.  All three blocks empty = the unit class. */
struct Monomial {
    std::vector<IndexPair> base;    // unprimed, high <= m
    std::vector<IndexPair> fibre;   // unprimed, high > m
    std::vector<IndexPair> primed;  // primed, high > m

    bool is_unit() const { return base.empty() && fibre.empty() && primed.empty(); }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
};

/* Number of generator factors; the cohomological degree is this times
 * (dimension - 1). */
int grade_of(const Monomial& mono);

bool is_valid_monomial(const SpaceSpec& spec, const Monomial& mono);

/* A sparse integer combination of canonical monomials.  The zero element
 * stores no terms; no stored coefficient is zero. */
class Element {
public:
    explicit Element(const SpaceSpec& spec) : spec_(spec) {}

    static Element zero(const SpaceSpec& spec) { return Element(spec); }
    static Element unit(const SpaceSpec& spec);
    /* Throws SpaceMismatch if the monomial is not valid for the spec. */
    static Element from_monomial(const SpaceSpec& spec, Monomial mono, std::int64_t coeff);

    const SpaceSpec& spec() const { return spec_; }
    const std::map<Monomial, std::int64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::int64_t coefficient(const Monomial& mono) const;

    /* Adds c * mono, dropping the term if the sum cancels. */
    void accumulate(const Monomial& mono, std::int64_t c);

    friend bool operator==(const Element&, const Element&) = default;

private:
    SpaceSpec spec_;
    std::map<Monomial, std::int64_t> terms_;
};

/* Ring operations. */
Element make_generator(const SpaceSpec& spec, int i, int j, Side side = Side::Unprimed);
Element add(const Element& a, const Element& b);
Element multiply(const Element& a, const Element& b);
Element scalar_multiply(std::int64_t c, const Element& a);

/* Convenience operators used throughout the bounds code and the tests. */
inline Element operator+(const Element& a, const Element& b) { return add(a, b); }
inline Element operator-(const Element& a, const Element& b)
{
    return add(a, scalar_multiply(-1, b));
}
inline Element operator*(const Element& a, const Element& b) { return multiply(a, b); }
inline Element operator*(std::int64_t c, const Element& a) { return scalar_multiply(c, a); }

}  // namespace paramtc
