#include <doctest.h>

#include <sstream>

#include "kbal/cli.hpp"
#include "kbal/equality.hpp"
#include "kbal/report.hpp"

using namespace kbal;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
    args.push_back("--json");
    Run r = run(args);
    REQUIRE(r.code == 0);
    return Json::parse(r.out);
}

}  // namespace

TEST_CASE("worked example command") {
    Run r = run({"verify-main", "--r", "1", "--n", "2", "--dmax", "3"});
    CHECK(r.code == kExitPass);
    CHECK(r.out.find("summary: 8/8 passed") != std::string::npos);
}

TEST_CASE("enumerate command") {
    Json j = run_json({"enumerate", "--r", "2", "--n", "4", "--d", "2", "--zero-supported"});
    CHECK(j["schema"] == kReportSchema);
    CHECK(j["data"].size() == 18);
    CHECK(j["data"][0]["delta"] == Json::array({1, 2}));
    CHECK(j["data"][0]["dimension"] == 4 * 2 + 2 * 2);
}

TEST_CASE("operator command at degree zero") {
    Json j = run_json({"verify-ops", "--n", "2", "--trunc", "0"});
    CHECK(j["summary"]["failed"] == 0);
    CHECK(j["cases"][0]["id"] == "DI d=0");
    CHECK(j["notes"]["operator"]["terms"].size() > 0);
}

TEST_CASE("coefficient commands") {
    Json i = run_json({"icoeff", "--r", "2", "--n", "3", "--point", "1,3", "--dvec", "1,0"});
    REQUIRE(i["data"].size() == 1);
    CHECK(i["params"]["point"] == "{1,3}");
    Json v = run_json({"vertex", "--r", "1", "--n", "2", "--dmax", "2"});
    CHECK(v["data"].size() == 6);
    CHECK(v["summary"]["failed"] == 0);
    Json b = run_json({"balance", "--r", "2", "--n", "3", "--dmax", "1"});
    CHECK(b["summary"]["failed"] == 0);
    CHECK(run_json({"verify-bethe", "--r", "2", "--n", "3"})["summary"]["failed"] == 0);
    CHECK(run_json({"verify-appendix-b", "--r", "1", "--n", "2", "--trunc", "2"})["summary"]["failed"] == 0);
}

TEST_CASE("usage errors are distinct from failures") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"nonsense"}).code == kExitUsage);
    CHECK(run({"verify-main", "--r", "1"}).code == kExitUsage);
    CHECK(run({"verify-main", "--r", "3", "--n", "2", "--dmax", "1"}).code == kExitUsage);
    CHECK(run({"verify-main", "--r", "1", "--n", "2", "--dmax", "-1"}).code == kExitUsage);
    CHECK(run({"icoeff", "--r", "2", "--n", "3", "--point", "1,x"}).code == kExitUsage);
    CHECK(run({"icoeff", "--r", "2", "--n", "3", "--point", "3,1"}).code == kExitUsage);
    CHECK(run({"icoeff", "--r", "2", "--n", "3", "--dvec", "1"}).code == kExitUsage);
    CHECK(run({"verify-ops", "--n", "2"}).code == kExitUsage);
    Run r = run({"verify-ops", "--n", "2", "--trunc", "1", "--bogus"});
    CHECK(r.code == kExitUsage);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("failure records carry both sides") {
    FactoredRational a = FactoredRational::one_minus(Monomial::variable(var::q));
    CaseRecord c = compare_case("x", a, a * a, {});
    CHECK_FALSE(c.pass);
    CHECK(c.detail.contains("lhs_expanded"));
    CHECK(c.detail.contains("rhs_expanded"));
    Report rep;
    rep.cases.push_back(c);
    CHECK(rep.to_json(false)["cases"][0]["status"] == "fail");
    CHECK(rep.failed() == 1);
}

TEST_CASE("output is reproducible and seed independent") {
    std::vector<std::string> args{"verify-cross", "--r", "2", "--n", "3", "--dmax", "2", "--json"};
    Json a = Json::parse(run(args).out);
    auto with_seed = args;
    with_seed.insert(with_seed.end(), {"--seed", "12345", "--jobs", "3"});
    Json b = Json::parse(run(with_seed).out);
    a.erase("wall_ms");
    b.erase("wall_ms");
    CHECK(a.dump() == b.dump());
}

TEST_CASE("manifest records conventions") {
    Run r = run({"manifest"});
    CHECK(r.code == 0);
    Json m = Json::parse(r.out);
    CHECK(m["conventions"]["commutation"] == "Q^a S^b = q^(-a*b) S^b Q^a, S = q^(Q d/dQ)");
    CHECK(m["conventions"]["bethe"]["k"] == "hbar");
    CHECK(m["conventions"].contains("right_operator"));
}
