#include <doctest.h>

#include <json.hpp>

#include "paramtc/bounds.hpp"
#include "paramtc/certificate.hpp"
#include "test_helpers.hpp"

using namespace tc_test;

TEST_CASE("certificates round-trip through JSON")
{
    for (int n : {1, 2}) {
        for (int m : {2, 3}) {
            const TcCertificate cert = verify_tc(ebe(n, m));
            const std::string text = certificate_to_json(cert, 17);
            const TcCertificate back = certificate_from_json(text);
            CHECK(back == cert);
        }
    }
}

TEST_CASE("the JSON document carries the documented fields")
{
    const TcCertificate cert = verify_tc(ebe(1, 2));
    const auto j = nlohmann::json::parse(certificate_to_json(cert, 5));
    CHECK(j.at("schema") == 1);
    CHECK(j.at("n") == 1);
    CHECK(j.at("m") == 2);
    CHECK(j.at("k") == 3);
    CHECK(j.at("lower_bound") == 3);
    CHECK(j.at("upper_bound") == 3);
    CHECK(j.at("tc_exact") == 3);
    CHECK(j.at("factors").size() == 3);
    CHECK(j.at("factors")[0] == "w(2,3) - w'(2,3)");
    CHECK(j.at("witness").at("coefficient") == 2);
    CHECK(j.at("witness").at("monomial") == "w(1,2)*w(1,3)*w'(2,3)");
    CHECK(j.at("basis_dims") == nlohmann::json::array({1, 5, 8, 4}));
    CHECK(j.at("elapsed_ms") == 5);
}

TEST_CASE("unsupported schemas are rejected")
{
    const TcCertificate cert = verify_tc(ebe(1, 2));
    auto j = nlohmann::json::parse(certificate_to_json(cert, 0));
    j["schema"] = 2;
    CHECK_THROWS_AS(certificate_from_json(j.dump()), Error);
}
