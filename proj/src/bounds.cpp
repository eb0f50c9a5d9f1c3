#include "paramtc/bounds.hpp"

#include <algorithm>
#include <future>
#include <set>

#include "paramtc/diagonal.hpp"

namespace paramtc {

BoundRecord upper_bound_dimension(const SpaceSpec& spec)
{
    if (spec.space != Space::FibreProduct)
        throw SpaceMismatch("the dimension bound applies to the fibre-product ring");
    const long long degree_step = spec.dimension - 1;
    const long long hdim = degree_step * (2LL * spec.robots + spec.obstacles - 1);
    const long long numer = hdim + 1;
    const long long denom = (spec.dimension - 2) + 1;  // fibre is (k-2)-connected
    // largest integer strictly below numer/denom
    long long value = numer / denom;
    if (numer % denom == 0)
        --value;
    return BoundRecord{static_cast<int>(value), BoundKind::Upper, "dimension/connectivity"};
}

std::optional<CupLengthResult> cup_length_lower_bound(const SpaceSpec& spec,
                                                      const std::vector<Element>& factors)
{
    if (spec.space != Space::FibreProduct)
        throw SpaceMismatch("cup-length bounds live in the fibre-product ring");
    Element product = Element::unit(spec);
    for (const Element& f : factors) {
        require_same_spec(spec, f.spec());
        if (!diagonal_apply(f).is_zero())
            throw NotAZeroDivisor("factor does not vanish under the diagonal map");
    }
    for (const Element& f : factors)
        product = multiply(product, f);
    if (product.is_zero())
        return std::nullopt;
    const auto& [mono, coeff] = *product.terms().begin();
    return CupLengthResult{
        BoundRecord{static_cast<int>(factors.size()), BoundKind::Lower, "cup-length"}, mono,
        coeff, product};
}

std::vector<Element> zero_divisor_factors(const SpaceSpec& spec)
{
    if (spec.space != Space::FibreProduct)
        throw SpaceMismatch("zero-divisor factors live in the fibre-product ring");
    if (spec.obstacles < 2)
        throw ObstacleCountTooSmall("at least 2 obstacles are required, got " +
                                    std::to_string(spec.obstacles));
    const int m = spec.obstacles;
    std::vector<Element> factors;
    for (int i = 2; i <= m; ++i)
        factors.push_back(make_generator(spec, i, m + 1) -
                          make_generator(spec, i, m + 1, Side::Primed));
    for (int j = m + 1; j <= spec.point_count(); ++j) {
        const Element f =
            make_generator(spec, 1, j) - make_generator(spec, 1, j, Side::Primed);
        factors.push_back(f);
        factors.push_back(f);
    }
    return factors;
}

Element zero_divisor_product(const SpaceSpec& spec)
{
    Element product = Element::unit(spec);
    for (const Element& f : zero_divisor_factors(spec))
        product = multiply(product, f);
    return product;
}

TcCertificate verify_tc(const SpaceSpec& spec)
{
    const auto factors = zero_divisor_factors(spec);
    const auto result = cup_length_lower_bound(spec, factors);
    if (!result)
        throw TheoremCheckFailed("canonical zero-divisor product normalized to zero");
    const BoundRecord upper = upper_bound_dimension(spec);
    if (result->bound.value != upper.value)
        throw TheoremCheckFailed("lower and upper bounds disagree");

    TcCertificate cert;
    cert.robots = spec.robots;
    cert.obstacles = spec.obstacles;
    cert.dimension = spec.dimension;
    cert.lower_bound = result->bound.value;
    cert.upper_bound = upper.value;
    cert.tc_exact = result->bound.value;
    cert.factors = factors;
    cert.witness_monomial = result->witness;
    cert.witness_coefficient = result->witness_coefficient;
    return cert;
}

namespace {

struct SearchNode {
    Element product;
    std::size_t next_gen;      // extensions use generators >= this index
    std::vector<int> indices;  // multiset so far

    SearchNode(Element product, std::size_t next_gen, std::vector<int> indices)
        : product(std::move(product)), next_gen(next_gen), indices(std::move(indices))
    {
    }
};

}  // namespace

SearchResult exhaustive_zero_divisor_search(const SpaceSpec& spec, int max_length,
                                            std::int64_t max_candidates, int threads)
{
    const std::vector<Element> gens = kernel_generators(spec);
    if (max_length < 0)
        max_length = 0;
    if (threads < 1)
        threads = 1;

    SearchResult best{BoundRecord{0, BoundKind::Lower, "cup-length-search"},
                      {},
                      Element::unit(spec)};

    std::vector<SearchNode> frontier;
    frontier.emplace_back(Element::unit(spec), 0, std::vector<int>{});
    std::int64_t used = 0;

    for (int length = 1; length <= max_length && !frontier.empty(); ++length) {
        // extensions in a fixed global order so the budget cutoff is
        // deterministic regardless of thread count
        std::int64_t total_extensions = 0;
        for (const SearchNode& node : frontier)
            total_extensions += static_cast<std::int64_t>(gens.size() - node.next_gen);
        const std::int64_t budget_left = max_candidates - used;
        const std::int64_t cutoff = std::min(total_extensions, std::max<std::int64_t>(budget_left, 0));

        auto process_range = [&](std::int64_t first, std::int64_t last) {
            std::vector<SearchNode> found;
            std::int64_t ordinal = 0;
            for (const SearchNode& node : frontier) {
                const std::int64_t count =
                    static_cast<std::int64_t>(gens.size() - node.next_gen);
                if (ordinal + count <= first) {
                    ordinal += count;
                    continue;
                }
                for (std::size_t g = node.next_gen; g < gens.size(); ++g, ++ordinal) {
                    if (ordinal < first)
                        continue;
                    if (ordinal >= last)
                        return found;
                    Element product = multiply(node.product, gens[g]);
                    if (!product.is_zero()) {
                        std::vector<int> indices = node.indices;
                        indices.push_back(static_cast<int>(g));
                        found.emplace_back(std::move(product), g, std::move(indices));
                    }
                }
                if (ordinal >= last)
                    break;
            }
            return found;
        };

        std::vector<SearchNode> next;
        if (threads == 1 || cutoff < 2 * threads) {
            next = process_range(0, cutoff);
        } else {
            const std::int64_t slice = (cutoff + threads - 1) / threads;
            std::vector<std::future<std::vector<SearchNode>>> futures;
            for (int t = 0; t < threads; ++t) {
                const std::int64_t first = t * slice;
                const std::int64_t last = std::min(cutoff, first + slice);
                if (first >= last)
                    break;
                futures.push_back(
                    std::async(std::launch::async, process_range, first, last));
            }
            for (auto& f : futures) {
                auto part = f.get();
                next.insert(next.end(), std::make_move_iterator(part.begin()),
                            std::make_move_iterator(part.end()));
            }
        }
        used += cutoff;

        if (!next.empty()) {
            best.bound.value = length;
            best.witness = next.front().indices;
            best.witness_product = next.front().product;
        }
        if (cutoff < total_extensions)
            throw BudgetExceeded("candidate budget of " + std::to_string(max_candidates) +
                                     " exhausted at product length " + std::to_string(length) +
                                     "; best nonzero length so far: " +
                                     std::to_string(best.bound.value),
                                 best.bound.value, used);
        frontier = std::move(next);
    }
    return best;
}

BoundRecord product_inequality_combine(const BoundRecord& a, const BoundRecord& b)
{
    if (a.kind != BoundKind::Upper || b.kind != BoundKind::Upper)
        throw KindMismatch("the product combinator takes two upper bounds");
    return BoundRecord{a.value + b.value, BoundKind::Upper, "product-combinator"};
}

std::pair<Element, Element> shared_top_expansion(const SpaceSpec& spec,
                                                 const std::vector<int>& obstacle_set, int p,
                                                 bool primed)
{
    if (obstacle_set.empty())
        throw std::invalid_argument("the obstacle index set must be nonempty");
    std::set<int> unique(obstacle_set.begin(), obstacle_set.end());
    if (unique.size() != obstacle_set.size())
        throw std::invalid_argument("the obstacle index set has repeated entries");
    for (int i : unique)
        if (i < 1 || i > spec.obstacles)
            throw IndexOutOfRange("obstacle index " + std::to_string(i) + " outside 1.." +
                                  std::to_string(spec.obstacles));
    if (p <= spec.obstacles || p > spec.point_count())
        throw IndexOutOfRange("robot index " + std::to_string(p) + " outside " +
                              std::to_string(spec.obstacles + 1) + ".." +
                              std::to_string(spec.point_count()));
    const Side side = primed ? Side::Primed : Side::Unprimed;

    Element direct = Element::unit(spec);
    for (int i : unique)
        direct = multiply(direct, make_generator(spec, i, p, side));

    Element closed = Element::zero(spec);
    for (int i : unique) {
        Element summand = Element::unit(spec);
        for (int j : unique)
            if (j != i)
                summand = multiply(summand, make_generator(spec, i, j));
        summand = multiply(summand, make_generator(spec, i, p, side));
        closed = add(closed, summand);
    }
    const int sign = unique.size() % 2 == 1 ? 1 : -1;  // (-1)^{|T|-1}
    closed = scalar_multiply(sign, closed);
    return {std::move(direct), std::move(closed)};
}

}  // namespace paramtc
