#include "paramtc/diagonal.hpp"

namespace paramtc {

Element diagonal_apply(const Element& a)
{
    if (a.spec().space != Space::FibreProduct)
        throw SpaceMismatch("diagonal_apply expects an element of the fibre-product ring");
    const SpaceSpec target(a.spec().robots, a.spec().obstacles, a.spec().dimension,
                           Space::TotalE);
    Element result(target);
    for (const auto& [mono, coeff] : a.terms()) {
        Element term = scalar_multiply(coeff, Element::unit(target));
        for (const IndexPair& p : mono.base)
            term = multiply(term, make_generator(target, p.low, p.high));
        for (const IndexPair& p : mono.fibre)
            term = multiply(term, make_generator(target, p.low, p.high));
        for (const IndexPair& p : mono.primed)
            term = multiply(term, make_generator(target, p.low, p.high));
        result = add(result, term);
    }
    return result;
}

std::vector<Element> kernel_generators(const SpaceSpec& spec)
{
    if (spec.space != Space::FibreProduct)
        throw SpaceMismatch("kernel generators live in the fibre-product ring");
    std::vector<Element> gens;
    for (int j = spec.obstacles + 1; j <= spec.point_count(); ++j) {
        for (int i = 1; i < j; ++i) {
            Element g = make_generator(spec, i, j, Side::Unprimed) -
                        make_generator(spec, i, j, Side::Primed);
            if (!diagonal_apply(g).is_zero())
                throw TheoremCheckFailed("kernel generator fails to map to zero");
            gens.push_back(std::move(g));
        }
    }
    return gens;
}

}  // namespace paramtc
