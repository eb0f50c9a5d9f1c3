// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Usage: acceptance --cli /path/to/paramtc

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "paramtc/basis.hpp"
#include "paramtc/bounds.hpp"
#include "paramtc/diagonal.hpp"
#include "paramtc/expr.hpp"
#include "paramtc/oracle.hpp"

using namespace paramtc;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail)
{
    std::cout << (pass ? "PASS" : "FAIL") << "  " << index << ". " << name;
    if (!detail.empty())
        std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!pass)
        ++g_failures;
}

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string run_cli(const std::string& cli, const std::string& args, int& exit_code)
{
    const std::string command = cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return {};
    }
    std::string output;
    std::array<char, 4096> buffer;
    while (std::size_t got = fread(buffer.data(), 1, buffer.size(), pipe))
        output.append(buffer.data(), got);
    const int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return output;
}

SpaceSpec ebe(int n, int m, int k = 3)
{
    return SpaceSpec(n, m, k, Space::FibreProduct);
}

/* 1. The smallest interesting case through the real CLI: tc = 3, under a second. */
void criterion_1(const std::string& cli)
{
    const auto start = Clock::now();
    int exit_code = -1;
    const std::string output = run_cli(cli, "verify --n 1 --m 2 --k 3", exit_code);
    const double elapsed = seconds_since(start);

    const bool line_ok = output.rfind("tc = 3 (lower 3, upper 3)", 0) == 0;
    const bool pass = exit_code == 0 && line_ok && elapsed < 1.0;
    std::ostringstream detail;
    detail << "exit " << exit_code << ", " << elapsed << " s";
    report(1, "verify --n 1 --m 2 --k 3 reports tc = 3 (lower 3, upper 3) in < 1 s", pass,
           detail.str());
}

/* 2. tc_exact = 2n+m-1 across the whole grid, with the stated time limits. */
void criterion_2()
{
    const auto grid_start = Clock::now();
    bool pass = true;
    std::ostringstream detail;
    double largest = 0.0;
    for (int n : {1, 2, 3}) {
        for (int m : {2, 3, 4, 5}) {
            for (int k : {3, 5}) {
                const auto start = Clock::now();
                const TcCertificate cert = verify_tc(ebe(n, m, k));
                const double elapsed = seconds_since(start);
                if (n == 3 && m == 5)
                    largest = std::max(largest, elapsed);
                if (!cert.tc_exact || *cert.tc_exact != 2 * n + m - 1 ||
                    cert.lower_bound != cert.upper_bound) {
                    pass = false;
                    detail << "(n=" << n << ",m=" << m << ",k=" << k << ") wrong ";
                }
            }
        }
    }
    const double total = seconds_since(grid_start);
    if (total >= 30.0 || largest >= 10.0)
        pass = false;
    detail << "grid " << total << " s, largest instance " << largest << " s";
    report(2, "tc_exact = 2n+m-1 for n in {1,2,3}, m in {2..5}, k in {3,5}", pass,
           detail.str());
}

/* 3. Basis counts: the (1,2) pins and rank-polynomial agreement on the grid. */
void criterion_3()
{
    bool pass = true;
    std::ostringstream detail;

    const SpaceSpec small = ebe(1, 2);
    const std::array<std::int64_t, 4> pinned{1, 5, 8, 4};
    for (int grade = 0; grade < 4; ++grade)
        if (count_basis(small, grade) != pinned[static_cast<std::size_t>(grade)])
            pass = false;

    for (int n : {1, 2, 3}) {
        for (int m : {2, 3, 4, 5}) {
            for (int k : {3, 5}) {
                const SpaceSpec spec = ebe(n, m, k);
                const PoincarePolynomial poly = poincare_polynomial(spec);
                for (int grade = 0; grade <= poly.degree() + 1; ++grade) {
                    if (count_basis(spec, grade) != poly.coefficient(grade)) {
                        pass = false;
                        detail << "(n=" << n << ",m=" << m << ",grade=" << grade << ") ";
                    }
                }
            }
        }
    }
    report(3, "basis counts: (1,5,8,4) for n=1,m=2 and rank-polynomial agreement on the grid",
           pass, detail.str());
}

/* 4. Squares and both three-term relation families normalize to zero. */
void criterion_4()
{
    bool pass = true;
    for (int n : {1, 2, 3}) {
        for (int m : {2, 3, 4, 5}) {
            const SpaceSpec spec = ebe(n, m);
            for (Side side : {Side::Unprimed, Side::Primed}) {
                for (int j = 2; j <= spec.point_count(); ++j)
                    for (int i = 1; i < j; ++i) {
                        const Element g = make_generator(spec, i, j, side);
                        if (!multiply(g, g).is_zero())
                            pass = false;
                    }
                for (int r = 3; r <= spec.point_count(); ++r)
                    for (int j = 2; j < r; ++j)
                        for (int i = 1; i < j; ++i) {
                            const Element wir = make_generator(spec, i, r, side);
                            const Element wjr = make_generator(spec, j, r, side);
                            const Element wij = make_generator(spec, i, j, side);
                            if (!(multiply(wir, wjr) - multiply(wij, wjr) +
                                  multiply(wij, wir))
                                     .is_zero())
                                pass = false;
                        }
            }
        }
    }
    report(4, "all squares and three-term relations normalize to zero (n <= 3, m <= 5)", pass,
           "");
}

/* 5. Shared-top closed forms agree for every subset, both families. */
void criterion_5()
{
    bool pass = true;
    long checked = 0;
    for (int m : {2, 3, 4, 5}) {
        const SpaceSpec spec = ebe(3, m);
        for (unsigned mask = 1; mask < (1u << m); ++mask) {
            std::vector<int> obstacle_set;
            for (int i = 1; i <= m; ++i)
                if ((mask >> (i - 1)) & 1u)
                    obstacle_set.push_back(i);
            for (int p = m + 1; p <= spec.point_count(); ++p) {
                for (bool primed : {false, true}) {
                    const auto [direct, closed] =
                        shared_top_expansion(spec, obstacle_set, p, primed);
                    ++checked;
                    if (!(direct == closed))
                        pass = false;
                }
            }
        }
    }
    report(5, "direct and closed-form shared-top expansions agree (all T, m <= 5, both families)",
           pass, std::to_string(checked) + " identities");
}

/* 6. Kernel generators vanish and the diagonal map is a homomorphism. */
void criterion_6()
{
    bool pass = true;
    std::mt19937_64 rng(60 * 60);
    auto random_element = [&rng](const SpaceSpec& spec) {
        Element out = Element::zero(spec);
        const int terms = std::uniform_int_distribution<int>(0, 3)(rng);
        for (int t = 0; t < terms; ++t) {
            Element product = Element::unit(spec);
            const int factors = std::uniform_int_distribution<int>(0, 3)(rng);
            for (int f = 0; f < factors; ++f) {
                const int j = std::uniform_int_distribution<int>(2, spec.point_count())(rng);
                const int i = std::uniform_int_distribution<int>(1, j - 1)(rng);
                const Side side = std::uniform_int_distribution<int>(0, 1)(rng) == 0
                                      ? Side::Unprimed
                                      : Side::Primed;
                product = multiply(product, make_generator(spec, i, j, side));
            }
            std::int64_t coeff = std::uniform_int_distribution<std::int64_t>(-3, 3)(rng);
            if (coeff == 0)
                coeff = 1;
            out = add(out, scalar_multiply(coeff, product));
        }
        return out;
    };

    for (int n : {1, 2, 3}) {
        for (int m : {2, 3, 4, 5}) {
            const SpaceSpec spec = ebe(n, m);
            for (const Element& g : kernel_generators(spec))
                if (!diagonal_apply(g).is_zero())
                    pass = false;
            for (int trial = 0; trial < 100; ++trial) {
                const Element a = random_element(spec);
                const Element b = random_element(spec);
                if (!(diagonal_apply(multiply(a, b)) ==
                      multiply(diagonal_apply(a), diagonal_apply(b))))
                    pass = false;
                if (!(diagonal_apply(add(a, b)) == add(diagonal_apply(a), diagonal_apply(b))))
                    pass = false;
            }
        }
    }
    report(6, "kernel generators vanish under the diagonal; homomorphism on 100 random pairs/spec",
           pass, "");
}

/* 7. Confluence: randomized-order rewriting equals the deterministic normalizer. */
void criterion_7()
{
    const auto start = Clock::now();
    bool pass = true;
    std::mt19937_64 rng(7777);
    for (int n : {1, 2, 3}) {
        for (int m : {2, 3, 4}) {
            const SpaceSpec spec = ebe(n, m);
            for (int trial = 0; trial < 200; ++trial) {
                std::vector<Generator> gens;
                const int count = std::uniform_int_distribution<int>(0, 6)(rng);
                for (int g = 0; g < count; ++g) {
                    const int j =
                        std::uniform_int_distribution<int>(2, spec.point_count())(rng);
                    const int i = std::uniform_int_distribution<int>(1, j - 1)(rng);
                    const Side side = std::uniform_int_distribution<int>(0, 1)(rng) == 0
                                          ? Side::Unprimed
                                          : Side::Primed;
                    gens.push_back(canonical_generator(spec, i, j, side).gen);
                }
                Element reference = Element::unit(spec);
                for (const Generator& g : gens)
                    reference = multiply(reference, make_generator(spec, g.low, g.high, g.side));
                for (std::uint64_t seed = 0; seed < 10; ++seed)
                    if (!(oracle::randomized_normalize(spec, gens, seed) == reference))
                        pass = false;
            }
        }
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 60.0)
        pass = false;
    std::ostringstream detail;
    detail << "200 products x 10 seeds x 9 specs, " << elapsed << " s";
    report(7, "randomized-order normalization agrees with the deterministic one", pass,
           detail.str());
}

/* 8. The distinguished witness monomial survives with coefficient +-1. */
void criterion_8()
{
    bool pass = true;
    std::ostringstream detail;
    for (int n : {1, 2}) {
        for (int m : {2, 3, 4}) {
            const SpaceSpec spec = ebe(n, m);
            const std::int64_t coeff =
                oracle::naive_zero_divisor_product(spec).coefficient(
                    oracle::witness_monomial(spec));
            if (coeff != 1 && coeff != -1) {
                pass = false;
                detail << "(n=" << n << ",m=" << m << ") coeff " << coeff << " ";
            }
        }
    }
    report(8, "the witness monomial appears in the naive product with coefficient +-1 (n <= 2, m <= 4)",
           pass, detail.str());
}

/* 9. Search ceiling: no 4-fold product of the two kernel generators survives. */
void criterion_9()
{
    const auto start = Clock::now();
    const SearchResult result = exhaustive_zero_divisor_search(ebe(1, 2), 4, 1'000'000);
    const double elapsed = seconds_since(start);
    const bool pass = result.bound.value == 3 && elapsed < 1.0;
    std::ostringstream detail;
    detail << "best length " << result.bound.value << ", " << elapsed << " s";
    report(9, "exhaustive search for n=1, m=2 tops out at length 3 even when allowed 4", pass,
           detail.str());
}

}  // namespace

int main(int argc, char** argv)
{
    std::string cli;
    for (int a = 1; a + 1 < argc; ++a)
        if (std::string(argv[a]) == "--cli")
            cli = argv[a + 1];
    if (cli.empty()) {
        std::cerr << "usage: acceptance --cli /path/to/paramtc\n";
        return 2;
    }

    criterion_1(cli);
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();

    if (g_failures == 0)
        std::cout << "all 9 criteria passed" << std::endl;
    else
        std::cout << g_failures << " criteria FAILED" << std::endl;
    return g_failures == 0 ? 0 : 1;
}
