#include "paramtc/certificate.hpp"

#include <json.hpp>

#include "paramtc/basis.hpp"
#include "paramtc/expr.hpp"

namespace paramtc {

std::string certificate_to_json(const TcCertificate& cert, std::int64_t elapsed_ms)
{
    const SpaceSpec spec(cert.robots, cert.obstacles, cert.dimension, Space::FibreProduct);
    nlohmann::json j;
    j["schema"] = 1;
    j["n"] = cert.robots;
    j["m"] = cert.obstacles;
    j["k"] = cert.dimension;
    j["lower_bound"] = cert.lower_bound;
    j["upper_bound"] = cert.upper_bound;
    if (cert.tc_exact)
        j["tc_exact"] = *cert.tc_exact;
    else
        j["tc_exact"] = nullptr;
    j["factors"] = nlohmann::json::array();
    for (const Element& f : cert.factors)
        j["factors"].push_back(to_expr_string(f));
    j["witness"] = {{"monomial", to_expr_string(cert.witness_monomial)},
                    {"coefficient", cert.witness_coefficient}};
    j["basis_dims"] = poincare_polynomial(spec).coefficients;
    j["elapsed_ms"] = elapsed_ms;
    return j.dump(2) + "\n";
}

TcCertificate certificate_from_json(const std::string& text)
{
    const nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("schema") || j["schema"].get<int>() != 1)
        throw Error("unsupported certificate schema");

    TcCertificate cert;
    cert.robots = j.at("n").get<int>();
    cert.obstacles = j.at("m").get<int>();
    cert.dimension = j.at("k").get<int>();
    cert.lower_bound = j.at("lower_bound").get<int>();
    cert.upper_bound = j.at("upper_bound").get<int>();
    if (!j.at("tc_exact").is_null())
        cert.tc_exact = j.at("tc_exact").get<int>();

    const SpaceSpec spec(cert.robots, cert.obstacles, cert.dimension, Space::FibreProduct);
    for (const auto& f : j.at("factors"))
        cert.factors.push_back(evaluate(f.get<std::string>(), spec));

    const Element witness =
        evaluate(j.at("witness").at("monomial").get<std::string>(), spec);
    if (witness.terms().size() != 1 || witness.terms().begin()->second != 1)
        throw Error("certificate witness is not a single canonical monomial");
    cert.witness_monomial = witness.terms().begin()->first;
    cert.witness_coefficient = j.at("witness").at("coefficient").get<std::int64_t>();
    return cert;
}

}  // namespace paramtc
