#include <doctest.h>

#include <set>

#include "paramtc/basis.hpp"
#include "paramtc/expr.hpp"
#include "test_helpers.hpp"

using namespace tc_test;

TEST_CASE("grade counts of the two-obstacle fibre product are 1, 5, 8, 4")
{
    const SpaceSpec spec = ebe(1, 2);
    CHECK(enumerate_basis(spec, 0).size() == 1);
    CHECK(enumerate_basis(spec, 1).size() == 5);
    CHECK(enumerate_basis(spec, 2).size() == 8);
    CHECK(enumerate_basis(spec, 3).size() == 4);
    CHECK(enumerate_basis(spec, 4).empty());
    CHECK(enumerate_basis(spec, 9).empty());
}

TEST_CASE("grade-1 basis comes out in canonical order")
{
    const SpaceSpec spec = ebe(1, 2);
    const std::vector<Monomial> expected = {
        mono({{1, 2}}), mono({}, {{1, 3}}), mono({}, {{2, 3}}),
        mono({}, {}, {{1, 3}}), mono({}, {}, {{2, 3}}),
    };
    CHECK(enumerate_basis(spec, 1) == expected);
}

TEST_CASE("grade-3 basis of the two-obstacle fibre product")
{
    const SpaceSpec spec = ebe(1, 2);
    const std::vector<Monomial> expected = {
        mono({{1, 2}}, {{1, 3}}, {{1, 3}}),
        mono({{1, 2}}, {{1, 3}}, {{2, 3}}),
        mono({{1, 2}}, {{2, 3}}, {{1, 3}}),
        mono({{1, 2}}, {{2, 3}}, {{2, 3}}),
    };
    CHECK(enumerate_basis(spec, 3) == expected);
}

TEST_CASE("grade zero is the unit class for every space")
{
    for (Space space : {Space::BaseB, Space::TotalE, Space::FibreProduct, Space::FibreX}) {
        const SpaceSpec spec(2, 2, 3, space);
        const auto monos = enumerate_basis(spec, 0);
        REQUIRE(monos.size() == 1);
        CHECK(monos[0].is_unit());
    }
}

TEST_CASE("rank polynomials match the frozen examples")
{
    CHECK(poincare_polynomial(ebe(1, 2)).coefficients ==
          std::vector<std::int64_t>{1, 5, 8, 4});
    CHECK(poincare_polynomial(SpaceSpec(1, 3, 3, Space::BaseB)).coefficients ==
          std::vector<std::int64_t>{1, 3, 2});
    // (1 + 2t)(1 + 3t) expanded by hand
    CHECK(poincare_polynomial(SpaceSpec(2, 2, 3, Space::FibreX)).coefficients ==
          std::vector<std::int64_t>{1, 5, 6});
    CHECK(poincare_polynomial(SpaceSpec(1, 1, 3, Space::BaseB)).coefficients ==
          std::vector<std::int64_t>{1});
}

TEST_CASE("basis counts equal the rank-polynomial coefficients")
{
    for (int n : {1, 2}) {
        for (int m : {1, 2, 3, 4}) {
            for (Space space :
                 {Space::BaseB, Space::TotalE, Space::FibreProduct, Space::FibreX}) {
                const SpaceSpec spec(n, m, 3, space);
                const PoincarePolynomial poly = poincare_polynomial(spec);
                for (int grade = 0; grade <= poly.degree() + 1; ++grade)
                    CHECK(count_basis(spec, grade) == poly.coefficient(grade));
            }
        }
    }
}

TEST_CASE("total ranks match the closed-form counts of ordered configurations")
{
    // the base and total-space rings have total rank m! and (m+n)!, and the
    // fibre product m! * ((m+n)!/m!)^2; summing enumerated grades must agree
    auto factorial = [](int v) {
        std::int64_t f = 1;
        for (int t = 2; t <= v; ++t)
            f *= t;
        return f;
    };
    for (int n : {1, 2}) {
        for (int m : {2, 3, 4}) {
            auto total_rank = [](const SpaceSpec& spec) {
                std::int64_t sum = 0;
                for (int grade = 0; grade <= poincare_polynomial(spec).degree(); ++grade)
                    sum += count_basis(spec, grade);
                return sum;
            };
            CHECK(total_rank(SpaceSpec(n, m, 3, Space::BaseB)) == factorial(m));
            CHECK(total_rank(total(n, m)) == factorial(m + n));
            const std::int64_t fibre_rank = factorial(m + n) / factorial(m);
            CHECK(total_rank(SpaceSpec(n, m, 3, Space::FibreX)) == fibre_rank);
            CHECK(total_rank(ebe(n, m)) == factorial(m) * fibre_rank * fibre_rank);
        }
    }
}

TEST_CASE("top grade of the fibre product is 2n+m-1")
{
    CHECK(top_grade(ebe(1, 2)) == 3);
    CHECK(top_grade(ebe(3, 2)) == 7);
    CHECK(top_grade(ebe(1, 5)) == 6);
    CHECK_THROWS_AS(top_grade(total(1, 2)), SpaceMismatch);

    const SpaceSpec spec = ebe(2, 3);
    CHECK(poincare_polynomial(spec).degree() == top_grade(spec));
    CHECK(enumerate_basis(spec, top_grade(spec) + 1).empty());
}

TEST_CASE("enumerated monomials are canonical, distinct and reproduce themselves")
{
    for (int m : {2, 3}) {
        const SpaceSpec spec = ebe(2, m);
        for (int grade = 0; grade <= top_grade(spec); ++grade) {
            const auto monos = enumerate_basis(spec, grade);
            const std::set<Monomial> unique(monos.begin(), monos.end());
            CHECK(unique.size() == monos.size());
            for (const Monomial& mo : monos) {
                CHECK(grade_of(mo) == grade);
                CHECK(is_valid_monomial(spec, mo));
                // multiplying the factors back together must land on the
                // same monomial with coefficient +1
                Element rebuilt = Element::unit(spec);
                for (const IndexPair& p : mo.base)
                    rebuilt = multiply(rebuilt, make_generator(spec, p.low, p.high));
                for (const IndexPair& p : mo.fibre)
                    rebuilt = multiply(rebuilt, make_generator(spec, p.low, p.high));
                for (const IndexPair& p : mo.primed)
                    rebuilt =
                        multiply(rebuilt, make_generator(spec, p.low, p.high, Side::Primed));
                CHECK(rebuilt == term(spec, mo, 1));
            }
        }
    }
}

TEST_CASE("space restrictions shape the basis blocks")
{
    const SpaceSpec tot = total(2, 2);
    for (const Monomial& mo : enumerate_basis(tot, 2))
        CHECK(mo.primed.empty());

    const SpaceSpec base(2, 3, 3, Space::BaseB);
    for (const Monomial& mo : enumerate_basis(base, 2)) {
        CHECK(mo.fibre.empty());
        CHECK(mo.primed.empty());
    }

    const SpaceSpec fib(2, 2, 3, Space::FibreX);
    for (const Monomial& mo : enumerate_basis(fib, 2)) {
        CHECK(mo.base.empty());
        CHECK(mo.primed.empty());
    }
}
