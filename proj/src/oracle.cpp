#include "paramtc/oracle.hpp"

#include <algorithm>
#include <random>
#include <utility>

namespace paramtc::oracle {

namespace {

struct RawTerm {
    std::int64_t coeff;
    std::vector<Generator> gens;
};

/* Indices of all unordered generator pairs sharing a family and a top
 * index.  Equal pairs (a repeated generator) count as violations too. */
std::vector<std::pair<std::size_t, std::size_t>> violations(const std::vector<Generator>& gens)
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a + 1; b < gens.size(); ++b)
            if (gens[a].side == gens[b].side && gens[a].high == gens[b].high)
                out.emplace_back(a, b);
    return out;
}

Monomial to_monomial(const SpaceSpec& spec, std::vector<Generator> gens)
{
    Monomial mono;
    for (const Generator& g : gens) {
        IndexPair p{g.low, g.high};
        if (g.side == Side::Primed)
            mono.primed.push_back(p);
        else if (g.high <= spec.obstacles)
            mono.base.push_back(p);
        else
            mono.fibre.push_back(p);
    }
    auto by_high = [](const IndexPair& a, const IndexPair& b) { return a.high < b.high; };
    std::sort(mono.base.begin(), mono.base.end(), by_high);
    std::sort(mono.fibre.begin(), mono.fibre.end(), by_high);
    std::sort(mono.primed.begin(), mono.primed.end(), by_high);
    return mono;
}

Generator folded(const SpaceSpec& spec, int low, int high, Side side)
{
    if (side == Side::Primed && high <= spec.obstacles)
        side = Side::Unprimed;
    return Generator{low, high, side};
}

}  // namespace

Element randomized_normalize(const SpaceSpec& spec, const std::vector<Generator>& product,
                             std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    Element result(spec);
    std::vector<RawTerm> work;
    work.push_back(RawTerm{1, product});

    while (!work.empty()) {
        RawTerm term = std::move(work.back());
        work.pop_back();

        const auto pairs = violations(term.gens);
        if (pairs.empty()) {
            result.accumulate(to_monomial(spec, term.gens), term.coeff);
            continue;
        }
        std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
        const auto [ia, ib] = pairs[pick(rng)];
        const Generator ga = term.gens[ia];
        const Generator gb = term.gens[ib];

        std::vector<Generator> rest;
        rest.reserve(term.gens.size() - 2);
        for (std::size_t t = 0; t < term.gens.size(); ++t)
            if (t != ia && t != ib)
                rest.push_back(term.gens[t]);

        if (ga.low == gb.low)
            continue;  // a square, the term dies

        // w(a,h)*w(b,h) = w(a,b)*w(b,h) - w(a,b)*w(a,h) with a < b < h
        const int a = std::min(ga.low, gb.low);
        const int b = std::max(ga.low, gb.low);
        const int h = ga.high;
        const Side side = ga.side;

        RawTerm left{term.coeff, rest};
        left.gens.push_back(folded(spec, a, b, side));
        left.gens.push_back(Generator{b, h, side});
        RawTerm right{checked_neg(term.coeff), std::move(rest)};
        right.gens.push_back(folded(spec, a, b, side));
        right.gens.push_back(Generator{a, h, side});
        work.push_back(std::move(left));
        work.push_back(std::move(right));
    }
    return result;
}

Element naive_zero_divisor_product(const SpaceSpec& spec)
{
    if (spec.space != Space::FibreProduct)
        throw SpaceMismatch("the naive product lives in the fibre-product ring");
    if (spec.obstacles < 2)
        throw ObstacleCountTooSmall("at least 2 obstacles are required, got " +
                                    std::to_string(spec.obstacles));
    const int m = spec.obstacles;
    const int difference_count = m - 1;  // factors (w(i,m+1) - w'(i,m+1)), i = 2..m

    Element total(spec);
    for (std::uint32_t mask = 0; mask < (1u << difference_count); ++mask) {
        std::vector<Generator> gens;
        int sign = 1;
        for (int t = 0; t < difference_count; ++t) {
            const int i = 2 + t;
            const bool primed = (mask >> t) & 1u;
            if (primed)
                sign = -sign;
            gens.push_back(Generator{i, m + 1, primed ? Side::Primed : Side::Unprimed});
        }
        for (int j = m + 1; j <= spec.point_count(); ++j) {
            gens.push_back(Generator{1, j, Side::Unprimed});
            gens.push_back(Generator{1, j, Side::Primed});
        }
        const Element expanded =
            randomized_normalize(spec, gens, 0x9e3779b97f4a7c15ULL + mask);
        total = add(total, scalar_multiply(sign, expanded));
    }
    return total;
}

Monomial witness_monomial(const SpaceSpec& spec)
{
    if (spec.obstacles < 2)
        throw ObstacleCountTooSmall("the witness monomial needs m >= 2");
    const int m = spec.obstacles;
    Monomial mono;
    mono.base.push_back(IndexPair{1, 2});
    for (int j = 3; j <= m; ++j)
        mono.base.push_back(IndexPair{2, j});
    mono.fibre.push_back(IndexPair{1, m + 1});
    mono.primed.push_back(IndexPair{2, m + 1});
    for (int j = m + 2; j <= spec.point_count(); ++j) {
        mono.fibre.push_back(IndexPair{1, j});
        mono.primed.push_back(IndexPair{1, j});
    }
    return mono;
}

}  // namespace paramtc::oracle
