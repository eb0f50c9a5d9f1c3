#include "paramtc/ring.hpp"

#include <algorithm>
#include <string>

namespace paramtc {

namespace {

std::string gen_text(int i, int j, Side side)
{
    return std::string("w") + (side == Side::Primed ? "'" : "") + "(" + std::to_string(i) + "," +
           std::to_string(j) + ")";
}

/* Positional comparison of one monomial block; an exhausted block sorts
 * after all of its extensions, so e.g. w(1,2)*w(1,3) precedes w(1,2) and
 * products with a base block precede products without one.  This is the
 * order the basis listings come out in. */
std::strong_ordering compare_part(const std::vector<IndexPair>& a, const std::vector<IndexPair>& b)
{
    const std::size_t common = std::min(a.size(), b.size());
    for (std::size_t t = 0; t < common; ++t)
        if (auto c = a[t] <=> b[t]; c != 0)
            return c;
    if (a.size() == b.size())
        return std::strong_ordering::equal;
    return a.size() > b.size() ? std::strong_ordering::less : std::strong_ordering::greater;
}

bool valid_part(const std::vector<IndexPair>& part, int high_min, int high_max)
{
    int prev_high = 0;
    for (const IndexPair& p : part) {
        if (p.low < 1 || p.low >= p.high)
            return false;
        if (p.high < high_min || p.high > high_max)
            return false;
        if (p.high <= prev_high)  // strictly increasing tops
            return false;
        prev_high = p.high;
    }
    return true;
}

}  // namespace

std::string space_name(Space space)
{
    switch (space) {
    case Space::BaseB: return "base";
    case Space::TotalE: return "total";
    case Space::FibreProduct: return "ebe";
    case Space::FibreX: return "fibre";
    }
    return "?";
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b)
{
    if (auto c = compare_part(a.base, b.base); c != 0)
        return c;
    if (auto c = compare_part(a.fibre, b.fibre); c != 0)
        return c;
    return compare_part(a.primed, b.primed);
}

int grade_of(const Monomial& mono)
{
    return static_cast<int>(mono.base.size() + mono.fibre.size() + mono.primed.size());
}

bool is_valid_monomial(const SpaceSpec& spec, const Monomial& mono)
{
    const int m = spec.obstacles;
    const int top = spec.point_count();
    if (!valid_part(mono.base, 2, m))
        return false;
    if (!valid_part(mono.fibre, m + 1, top))
        return false;
    if (!valid_part(mono.primed, m + 1, top))
        return false;
    switch (spec.space) {
    case Space::BaseB:
        return mono.fibre.empty() && mono.primed.empty();
    case Space::TotalE:
    case Space::FibreX:
        return mono.primed.empty();
    case Space::FibreProduct:
        return true;
    }
    return false;
}

SignedGenerator canonical_generator(const SpaceSpec& spec, int i, int j, Side side)
{
    if (i == j)
        throw EqualIndices("generator indices coincide: " + gen_text(i, j, side));
    int sign = 1;
    if (i > j) {
        std::swap(i, j);
        sign = -1;
    }
    if (i < 1 || j > spec.point_count())
        throw IndexOutOfRange("generator " + gen_text(i, j, side) + " outside 1.." +
                              std::to_string(spec.point_count()));

    if (side == Side::Primed && j <= spec.obstacles)
        side = Side::Unprimed;  // w'(i,j) = w(i,j) on obstacle pairs

    switch (spec.space) {
    case Space::BaseB:
        if (j > spec.obstacles)
            throw SpaceMismatch("generator " + gen_text(i, j, side) +
                                " mentions a robot index; the base ring allows 1.." +
                                std::to_string(spec.obstacles));
        break;
    case Space::TotalE:
        if (side == Side::Primed)
            throw SpaceMismatch("the total-space ring has no primed classes");
        break;
    case Space::FibreX:
        if (side == Side::Primed)
            throw SpaceMismatch("the fibre ring has no primed classes");
        if (j <= spec.obstacles)
            throw SpaceMismatch("generator " + gen_text(i, j, side) +
                                " is an obstacle class, not a fibre generator");
        break;
    case Space::FibreProduct:
        break;
    }
    return SignedGenerator{Generator{i, j, side}, sign};
}

Element Element::unit(const SpaceSpec& spec)
{
    Element e(spec);
    e.terms_.emplace(Monomial{}, 1);
    return e;
}

Element Element::from_monomial(const SpaceSpec& spec, Monomial mono, std::int64_t coeff)
{
    if (!is_valid_monomial(spec, mono))
        throw SpaceMismatch("monomial is not a canonical basis element of this ring");
    Element e(spec);
    if (coeff != 0)
        e.terms_.emplace(std::move(mono), coeff);
    return e;
}

std::int64_t Element::coefficient(const Monomial& mono) const
{
    auto it = terms_.find(mono);
    return it == terms_.end() ? 0 : it->second;
}

void Element::accumulate(const Monomial& mono, std::int64_t c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(mono, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0)
            terms_.erase(it);
    }
}

namespace {

/* Multiply the canonical monomial `mono` by one generator and accumulate
 * coeff times the normalized result into `out`.
 *
 * A fresh top index just inserts; a repeated generator kills the term; two
 * distinct generators sharing a top index h rewrite through
 *     w(a,h)*w(b,h) = w(a,b)*w(b,h) - w(a,b)*w(a,h),   a < b < h,
 * which strictly lowers the multiset of top indices, so the recursion
 * terminates.  The first violation found scanning the block is always the
 * unique one, because `mono` itself is canonical. */
void mul_mono_gen(const SpaceSpec& spec, const Monomial& mono, int low, int high, Side side,
                  std::int64_t coeff, Element& out)
{
    const bool primed = side == Side::Primed && high > spec.obstacles;
    const std::vector<IndexPair>& part =
        primed ? mono.primed : (high <= spec.obstacles ? mono.base : mono.fibre);

    std::size_t pos = 0;
    while (pos < part.size() && part[pos].high < high)
        ++pos;

    if (pos == part.size() || part[pos].high != high) {
        Monomial next = mono;
        std::vector<IndexPair>& target =
            primed ? next.primed : (high <= spec.obstacles ? next.base : next.fibre);
        target.insert(target.begin() + static_cast<std::ptrdiff_t>(pos), IndexPair{low, high});
        out.accumulate(next, coeff);
        return;
    }

    const int other = part[pos].low;
    if (other == low)
        return;  // square-zero

    Monomial rest = mono;
    std::vector<IndexPair>& source =
        primed ? rest.primed : (high <= spec.obstacles ? rest.base : rest.fibre);
    source.erase(source.begin() + static_cast<std::ptrdiff_t>(pos));

    const int a = std::min(low, other);
    const int b = std::max(low, other);
    const Side mid_side = (primed && b > spec.obstacles) ? Side::Primed : Side::Unprimed;
    const Side top_side = primed ? Side::Primed : Side::Unprimed;

    Element mid(spec);
    mul_mono_gen(spec, rest, a, b, mid_side, coeff, mid);
    for (const auto& [mm, cc] : mid.terms()) {
        mul_mono_gen(spec, mm, b, high, top_side, cc, out);
        mul_mono_gen(spec, mm, a, high, top_side, checked_neg(cc), out);
    }
}

void mul_mono_part(const SpaceSpec& spec, Element& acc, const std::vector<IndexPair>& part,
                   Side side)
{
    for (const IndexPair& p : part) {
        Element next(spec);
        for (const auto& [mono, c] : acc.terms())
            mul_mono_gen(spec, mono, p.low, p.high, side, c, next);
        acc = std::move(next);
    }
}

}  // namespace

Element make_generator(const SpaceSpec& spec, int i, int j, Side side)
{
    const SignedGenerator g = canonical_generator(spec, i, j, side);
    Monomial mono;
    if (g.gen.side == Side::Primed)
        mono.primed.push_back(IndexPair{g.gen.low, g.gen.high});
    else if (g.gen.high <= spec.obstacles)
        mono.base.push_back(IndexPair{g.gen.low, g.gen.high});
    else
        mono.fibre.push_back(IndexPair{g.gen.low, g.gen.high});
    Element e(spec);
    e.accumulate(mono, g.sign);
    return e;
}

Element add(const Element& a, const Element& b)
{
    require_same_spec(a.spec(), b.spec());
    Element r = a;
    for (const auto& [mono, c] : b.terms())
        r.accumulate(mono, c);
    return r;
}

Element multiply(const Element& a, const Element& b)
{
    require_same_spec(a.spec(), b.spec());
    Element r(a.spec());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            Element acc = Element::from_monomial(a.spec(), ma, checked_mul(ca, cb));
            mul_mono_part(a.spec(), acc, mb.base, Side::Unprimed);
            mul_mono_part(a.spec(), acc, mb.fibre, Side::Unprimed);
            mul_mono_part(a.spec(), acc, mb.primed, Side::Primed);
            for (const auto& [mono, c] : acc.terms())
                r.accumulate(mono, c);
        }
    }
    return r;
}

Element scalar_multiply(std::int64_t c, const Element& a)
{
    Element r(a.spec());
    if (c == 0)
        return r;
    for (const auto& [mono, coeff] : a.terms())
        r.accumulate(mono, checked_mul(c, coeff));
    return r;
}

}  // namespace paramtc
