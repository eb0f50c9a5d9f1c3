#include "paramtc/basis.hpp"

#include <algorithm>

namespace paramtc {

namespace {

PoincarePolynomial one()
{
    return PoincarePolynomial{{1}};
}

/* p *= (1 + factor*t) */
void multiply_linear(PoincarePolynomial& p, std::int64_t factor)
{
    std::vector<std::int64_t> next(p.coefficients.size() + 1, 0);
    for (std::size_t d = 0; d < p.coefficients.size(); ++d) {
        next[d] = checked_add(next[d], p.coefficients[d]);
        next[d + 1] = checked_add(next[d + 1], checked_mul(p.coefficients[d], factor));
    }
    while (next.size() > 1 && next.back() == 0)
        next.pop_back();
    p.coefficients = std::move(next);
}

PoincarePolynomial base_polynomial(const SpaceSpec& spec)
{
    PoincarePolynomial p = one();
    for (int i = 1; i <= spec.obstacles - 1; ++i)
        multiply_linear(p, i);
    return p;
}

PoincarePolynomial fibre_polynomial(const SpaceSpec& spec)
{
    PoincarePolynomial p = one();
    for (int i = 0; i <= spec.robots - 1; ++i)
        multiply_linear(p, spec.obstacles + i);
    return p;
}

/* All pair sequences with strictly increasing tops drawn from
 * [high_min, high_max], grouped by length.  Tops below 2 admit no partner
 * and are skipped implicitly (low ranges over 1..high-1). */
std::vector<std::vector<std::vector<IndexPair>>> part_sequences(int high_min, int high_max)
{
    const int max_len = std::max(0, high_max - std::max(high_min, 2) + 1);
    std::vector<std::vector<std::vector<IndexPair>>> groups(
        static_cast<std::size_t>(max_len) + 1);
    std::vector<IndexPair> current;

    auto emit = [&]() { groups[current.size()].push_back(current); };

    std::function<void(int)> extend = [&](int next_high) {
        emit();
        for (int high = std::max(next_high, 2); high <= high_max; ++high) {
            for (int low = 1; low < high; ++low) {
                current.push_back(IndexPair{low, high});
                extend(high + 1);
                current.pop_back();
            }
        }
    };
    extend(high_min);
    return groups;
}

struct PartRanges {
    bool use_base = false;
    bool use_fibre = false;
    bool use_primed = false;
};

PartRanges ranges_for(Space space)
{
    switch (space) {
    case Space::BaseB: return {true, false, false};
    case Space::TotalE: return {true, true, false};
    case Space::FibreX: return {false, true, false};
    case Space::FibreProduct: return {true, true, true};
    }
    return {};
}

}  // namespace

PoincarePolynomial poincare_polynomial(const SpaceSpec& spec)
{
    switch (spec.space) {
    case Space::BaseB: return base_polynomial(spec);
    case Space::TotalE: {
        PoincarePolynomial p = one();
        for (int i = 1; i <= spec.point_count() - 1; ++i)
            multiply_linear(p, i);
        return p;
    }
    case Space::FibreX: return fibre_polynomial(spec);
    case Space::FibreProduct: {
        const PoincarePolynomial p = base_polynomial(spec);
        const PoincarePolynomial f = fibre_polynomial(spec);
        auto convolve = [](const PoincarePolynomial& a, const PoincarePolynomial& b) {
            PoincarePolynomial out;
            out.coefficients.assign(a.coefficients.size() + b.coefficients.size() - 1, 0);
            for (std::size_t i = 0; i < a.coefficients.size(); ++i)
                for (std::size_t j = 0; j < b.coefficients.size(); ++j)
                    out.coefficients[i + j] = checked_add(
                        out.coefficients[i + j],
                        checked_mul(a.coefficients[i], b.coefficients[j]));
            while (out.coefficients.size() > 1 && out.coefficients.back() == 0)
                out.coefficients.pop_back();
            return out;
        };
        return convolve(convolve(p, f), f);
    }
    }
    throw SpaceMismatch("unknown space");
}

int top_grade(const SpaceSpec& spec)
{
    if (spec.space != Space::FibreProduct)
        throw SpaceMismatch("top_grade is defined for the fibre-product ring");
    return 2 * spec.robots + spec.obstacles - 1;
}

void for_each_basis_monomial(const SpaceSpec& spec, int grade,
                             const std::function<void(const Monomial&)>& fn)
{
    if (grade < 0)
        return;
    const PartRanges use = ranges_for(spec.space);
    const auto empty_group = std::vector<std::vector<std::vector<IndexPair>>>{{{}}};

    const auto base_groups =
        use.use_base ? part_sequences(2, spec.obstacles) : empty_group;
    const auto fibre_groups =
        use.use_fibre ? part_sequences(spec.obstacles + 1, spec.point_count()) : empty_group;
    const auto primed_groups =
        use.use_primed ? part_sequences(spec.obstacles + 1, spec.point_count()) : empty_group;

    Monomial scratch;
    const int g = grade;
    for (std::size_t p1 = 0; p1 < base_groups.size(); ++p1) {
        if (static_cast<int>(p1) > g)
            break;
        for (std::size_t p2 = 0; p2 < fibre_groups.size(); ++p2) {
            const int p3 = g - static_cast<int>(p1) - static_cast<int>(p2);
            if (p3 < 0)
                break;
            if (static_cast<std::size_t>(p3) >= primed_groups.size())
                continue;
            for (const auto& bp : base_groups[p1]) {
                for (const auto& fp : fibre_groups[p2]) {
                    for (const auto& pp : primed_groups[static_cast<std::size_t>(p3)]) {
                        scratch.base = bp;
                        scratch.fibre = fp;
                        scratch.primed = pp;
                        fn(scratch);
                    }
                }
            }
        }
    }
}

std::vector<Monomial> enumerate_basis(const SpaceSpec& spec, int grade)
{
    std::vector<Monomial> out;
    for_each_basis_monomial(spec, grade, [&](const Monomial& mono) { out.push_back(mono); });
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t count_basis(const SpaceSpec& spec, int grade)
{
    std::int64_t count = 0;
    for_each_basis_monomial(spec, grade, [&](const Monomial&) { ++count; });
    return count;
}

}  // namespace paramtc
