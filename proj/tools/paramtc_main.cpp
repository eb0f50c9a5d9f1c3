#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "paramtc/basis.hpp"
#include "paramtc/bounds.hpp"
#include "paramtc/certificate.hpp"
#include "paramtc/diagonal.hpp"
#include "paramtc/expr.hpp"
#include "paramtc/oracle.hpp"

namespace {

using namespace paramtc;

/* exit codes: 0 success, 1 computational failure, 2 usage/validation */
constexpr int kExitOk = 0;
constexpr int kExitComputation = 1;
constexpr int kExitUsage = 2;

struct CommonFlags {
    int robots = 1;
    int obstacles = 2;
    int dimension = 3;
    std::string space = "ebe";
};

Space parse_space(const std::string& name)
{
    if (name == "ebe")
        return Space::FibreProduct;
    if (name == "total")
        return Space::TotalE;
    if (name == "base")
        return Space::BaseB;
    if (name == "fibre")
        return Space::FibreX;
    throw std::invalid_argument("unknown space '" + name + "'");
}

int check_dimension(int k)
{
    if (k % 2 == 0) {
        std::cerr << "error: even k unsupported (the ring model needs odd k >= 3)\n";
        return kExitUsage;
    }
    if (k < 3) {
        std::cerr << "error: k must be >= 3\n";
        return kExitUsage;
    }
    return kExitOk;
}

double elapsed_ms_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

int cmd_verify(const CommonFlags& flags, const std::string& json_path)
{
    if (int rc = check_dimension(flags.dimension))
        return rc;
    const auto start = std::chrono::steady_clock::now();
    const SpaceSpec spec(flags.robots, flags.obstacles, flags.dimension, Space::FibreProduct);
    const TcCertificate cert = verify_tc(spec);
    const double ms = elapsed_ms_since(start);

    std::cout << "tc = " << *cert.tc_exact << " (lower " << cert.lower_bound << ", upper "
              << cert.upper_bound << ")\n";
    std::cout << "witness: " << to_expr_string(cert.witness_monomial) << " (coefficient "
              << cert.witness_coefficient << ")\n";
    std::cout << "elapsed: " << ms << " ms\n";

    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out)
            throw Error("cannot write certificate to " + json_path);
        out << certificate_to_json(cert, static_cast<std::int64_t>(ms));
    }
    return kExitOk;
}

int cmd_basis(const CommonFlags& flags, int grade)
{
    if (int rc = check_dimension(flags.dimension))
        return rc;
    const SpaceSpec spec(flags.robots, flags.obstacles, flags.dimension,
                         parse_space(flags.space));
    const std::vector<Monomial> monos = enumerate_basis(spec, grade);
    std::cout << monos.size() << "\n";
    for (const Monomial& mono : monos)
        std::cout << to_expr_string(mono) << "\n";
    return kExitOk;
}

int cmd_eval(const CommonFlags& flags, const std::string& text)
{
    if (int rc = check_dimension(flags.dimension))
        return rc;
    const SpaceSpec spec(flags.robots, flags.obstacles, flags.dimension,
                         parse_space(flags.space));
    try {
        std::cout << to_expr_string(evaluate(text, spec)) << "\n";
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << "  " << text << "\n";
        std::cerr << "  " << std::string(e.offset, ' ') << "^\n";
        return kExitUsage;
    }
    return kExitOk;
}

int cmd_search(const CommonFlags& flags, int max_length, std::int64_t max_candidates,
               int threads)
{
    if (int rc = check_dimension(flags.dimension))
        return rc;
    const SpaceSpec spec(flags.robots, flags.obstacles, flags.dimension, Space::FibreProduct);
    if (max_length < 0)
        max_length = upper_bound_dimension(spec).value + 1;
    const std::vector<Element> gens = kernel_generators(spec);
    try {
        const SearchResult result =
            exhaustive_zero_divisor_search(spec, max_length, max_candidates, threads);
        std::cout << "best nonzero length: " << result.bound.value << "\n";
        if (!result.witness.empty()) {
            std::cout << "witness product:\n";
            for (int idx : result.witness)
                std::cout << "  (" << to_expr_string(gens[static_cast<std::size_t>(idx)])
                          << ")\n";
            std::cout << "= " << to_expr_string(result.witness_product) << "\n";
        }
    } catch (const BudgetExceeded& e) {
        std::cout << "budget exceeded: " << e.what() << "\n";
        std::cout << "partial best nonzero length: " << e.partial_best << "\n";
        return kExitComputation;
    }
    return kExitOk;
}

int cmd_poincare(const CommonFlags& flags)
{
    if (int rc = check_dimension(flags.dimension))
        return rc;
    const SpaceSpec spec(flags.robots, flags.obstacles, flags.dimension,
                         parse_space(flags.space));
    const PoincarePolynomial poly = poincare_polynomial(spec);
    bool first = true;
    for (std::size_t p = 0; p < poly.coefficients.size(); ++p) {
        if (poly.coefficients[p] == 0)
            continue;
        if (!first)
            std::cout << " + ";
        first = false;
        if (p == 0)
            std::cout << poly.coefficients[p];
        else if (poly.coefficients[p] == 1)
            std::cout << "t";
        else
            std::cout << poly.coefficients[p] << "*t";
        if (p > 1)
            std::cout << "^" << p;
    }
    std::cout << "\n";
    return kExitOk;
}

int cmd_lemma95(const CommonFlags& flags)
{
    if (int rc = check_dimension(flags.dimension))
        return rc;
    const SpaceSpec spec(flags.robots, flags.obstacles, flags.dimension, Space::FibreProduct);
    const int m = spec.obstacles;
    long checked = 0, failed = 0;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> obstacle_set;
        for (int i = 1; i <= m; ++i)
            if ((mask >> (i - 1)) & 1u)
                obstacle_set.push_back(i);
        for (int p = m + 1; p <= spec.point_count(); ++p) {
            for (bool primed : {false, true}) {
                const auto [direct, closed] = shared_top_expansion(spec, obstacle_set, p, primed);
                ++checked;
                if (!(direct == closed)) {
                    ++failed;
                    std::cout << "MISMATCH T={";
                    for (std::size_t t = 0; t < obstacle_set.size(); ++t)
                        std::cout << (t ? "," : "") << obstacle_set[t];
                    std::cout << "} p=" << p << (primed ? " primed" : "") << "\n";
                }
            }
        }
    }
    std::cout << "checked " << checked << " shared-top expansions: "
              << (failed == 0 ? "all equal" : std::to_string(failed) + " mismatches") << "\n";
    return failed == 0 ? kExitOk : kExitComputation;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"paramtc: exact cohomological bounds for parametrised motion planning"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string json_path;
    std::string expr_text;
    int grade = 0;
    int max_length = -1;
    std::int64_t max_candidates = 10'000'000;
    int threads = 1;

    auto add_common = [&](CLI::App* cmd, bool with_space) {
        cmd->add_option("--n", flags.robots, "number of robots")->capture_default_str();
        cmd->add_option("--m", flags.obstacles, "number of obstacles")->capture_default_str();
        cmd->add_option("--k", flags.dimension, "ambient dimension (odd, >= 3)")
            ->capture_default_str();
        if (with_space)
            cmd->add_option("--space", flags.space, "ring: ebe | total | base | fibre")
                ->capture_default_str();
    };

    CLI::App* verify = app.add_subcommand(
        "verify", "certify tc = 2n+m-1 via a nonvanishing zero-divisor product");
    add_common(verify, false);
    verify->add_option("--json", json_path, "write the certificate to this file");

    CLI::App* basis = app.add_subcommand("basis", "list the canonical basis of one grade");
    add_common(basis, true);
    basis->add_option("--grade", grade, "grade p (degree p*(k-1))")->required();

    CLI::App* eval = app.add_subcommand("eval", "normalize an expression");
    add_common(eval, true);
    eval->add_option("expr", expr_text, "expression, e.g. \"w(1,3)*w(2,3)\"")->required();

    CLI::App* search =
        app.add_subcommand("search", "exhaustive search over kernel-generator products");
    add_common(search, false);
    search->add_option("--max-length", max_length, "longest product to try (default: bound+1)");
    search->add_option("--max-candidates", max_candidates, "candidate budget")
        ->capture_default_str();
    search->add_option("--threads", threads, "worker threads")->capture_default_str();

    CLI::App* poincare = app.add_subcommand("poincare", "print the rank polynomial of a ring");
    add_common(poincare, true);

    CLI::App* lemma95 = app.add_subcommand(
        "lemma95", "check the closed-form expansion of shared-top products");
    add_common(lemma95, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (verify->parsed())
            return cmd_verify(flags, json_path);
        if (basis->parsed())
            return cmd_basis(flags, grade);
        if (eval->parsed())
            return cmd_eval(flags, expr_text);
        if (search->parsed())
            return cmd_search(flags, max_length, max_candidates, threads);
        if (poincare->parsed())
            return cmd_poincare(flags);
        if (lemma95->parsed())
            return cmd_lemma95(flags);
    } catch (const TheoremCheckFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    } catch (const IntegerOverflow& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    } catch (const UnsupportedDimension& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ObstacleCountTooSmall& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
