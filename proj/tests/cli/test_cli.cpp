#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string output;

    json parse() const { return json::parse(output); }
};

// Runs the CLI through the shell with stderr folded into stdout (the CLI
// writes nothing to stderr on success).
RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd;
    if (!env.empty()) cmd += env + " ";
    cmd += "\"";
    cmd += DEFINETTI_CLI_PATH;
    cmd += "\" ";
    cmd += args;
    cmd += " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    std::size_t n;
    while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
        output.append(buffer, n);
    }
    int status = pclose(pipe);
    int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return RunResult{exit_code, std::move(output)};
}

}  // namespace

TEST_CASE("cone-verify accepts an exchangeable urn") {
    auto r = run("cone-verify --coalgebra polya --black 2 --white 3 --horizon 6");
    REQUIRE(r.exit_code == 0);
    auto j = r.parse();
    CHECK(j["verdict"] == "ok");
    CHECK(j["horizon"] == 6);
    CHECK(j["source"]["kind"] == "polya");
}

TEST_CASE("cone-verify witnesses the alternating counterexample") {
    auto r = run("cone-verify --coalgebra alternating --state 0 --horizon 3");
    REQUIRE(r.exit_code == 1);
    auto j = r.parse();
    CHECK(j["verdict"] == "fail");
    CHECK(j["witness"]["level"] == 1);
    CHECK(j["witness"]["atom"] == "0*0+1*1");
    CHECK(j["witness"]["lhs"] == "0");
    CHECK(j["witness"]["rhs"] == "1/2");
}

TEST_CASE("cone-verify accepts candidate-induced cones") {
    auto r = run("cone-verify --candidate lebesgue --horizon 10");
    REQUIRE(r.exit_code == 0);
    CHECK(r.parse()["verdict"] == "ok");
}

TEST_CASE("definetti matches the urn with its beta limit") {
    auto r = run(
        "definetti --coalgebra polya --black 2 --white 3 "
        "--vs beta --vs-alpha 2 --vs-beta 3 --horizon 8");
    REQUIRE(r.exit_code == 0);
    auto j = r.parse();
    CHECK(j["cone_verdict"] == "ok");
    CHECK(j["completely_monotone"] == true);
    CHECK(j["reconstruction_roundtrip"] == true);
    CHECK(j["match_verdict"] == "match");
    CHECK(j["moments"][8] == "1/55");
}

TEST_CASE("definetti witnesses a wrong candidate") {
    auto r = run("definetti --coalgebra polya --black 2 --white 3 --vs lebesgue");
    REQUIRE(r.exit_code == 1);
    auto j = r.parse();
    CHECK(j["match_verdict"] == "mismatch");
    CHECK(j["witness"]["level"] == 1);
    CHECK(j["witness"]["ones"] == 0);
    CHECK(j["witness"]["lhs"] == "3/5");
    CHECK(j["witness"]["rhs"] == "1/2");
}

TEST_CASE("definetti matches a coin with its point mass") {
    auto r = run(
        "definetti --coalgebra bernoulli --bias 2/5 "
        "--vs point-mass --vs-r 2/5 --horizon 6");
    REQUIRE(r.exit_code == 0);
    CHECK(r.parse()["match_verdict"] == "match");
}

TEST_CASE("table emits CSV grids") {
    auto r = run("table --candidate lebesgue --Ks 2,4 --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.rfind("K,grid_point,weight,grid_point_approx,weight_approx\n", 0) ==
          0);
    CHECK(r.output.find("\n2,0,1/3,") != std::string::npos);
    CHECK(r.output.find("\n4,1/2,1/5,") != std::string::npos);
}

TEST_CASE("table emits JSON grids with frozen exact cells") {
    auto r = run("table --candidate point-mass --r 1/2 --Ks 5 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = r.parse();
    REQUIRE(j["rows"].size() == 6);
    CHECK(j["rows"][1]["grid_point"] == "1/5");
    CHECK(j["rows"][1]["weight"] == "5/32");
}

TEST_CASE("table CSV rows carry double renderings of the exact cells") {
    auto r = run("table --candidate point-mass --r 1/2 --Ks 5 --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("\n5,1/5,5/32,0.2,0.15625\n") != std::string::npos);
}

TEST_CASE("csv format is only for tables") {
    auto r = run("cone-verify --candidate lebesgue --format csv");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("error:") != std::string::npos);
    auto c = run("conjugacy --black 1 --white 1 --format csv");
    CHECK(c.exit_code == 2);
}

TEST_CASE("source selection must be unambiguous") {
    CHECK(run("cone-verify --coalgebra polya --candidate lebesgue").exit_code == 2);
    CHECK(run("cone-verify --horizon 3").exit_code == 2);
    CHECK(run("definetti --coalgebra polya").exit_code == 2);          // missing --vs
    CHECK(run("table --candidate lebesgue").exit_code == 2);          // missing --Ks
    CHECK(run("definetti --coalgebra bernoulli --vs lebesgue").exit_code == 2);
    CHECK(run("definetti --candidate point-mass --vs lebesgue").exit_code == 2);
}

TEST_CASE("bad rationals are usage errors") {
    auto r = run("cone-verify --coalgebra bernoulli --bias abc");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("error:") != std::string::npos);
    CHECK(run("cone-verify --coalgebra bernoulli --bias 5/3").exit_code == 2);
    CHECK(run("cone-verify --candidate point-mass --r 1/0").exit_code == 2);
}

TEST_CASE("exchangeable verdicts") {
    auto yes = run("exchangeable --coalgebra polya --black 1 --white 1");
    REQUIRE(yes.exit_code == 0);
    CHECK(yes.parse()["exchangeable"] == true);

    auto no = run("exchangeable --coalgebra alternating --state 0");
    REQUIRE(no.exit_code == 1);
    auto j = no.parse();
    CHECK(j["exchangeable"] == false);
    CHECK(j["witness"]["outcome"] == json::array({0, 1}));
    CHECK(j["witness"]["state"] == "0");

    CHECK(run("exchangeable --candidate lebesgue").exit_code == 2);
}

TEST_CASE("conjugacy verdicts") {
    auto good = run("conjugacy --black 2 --white 3 --orders 6");
    REQUIRE(good.exit_code == 0);
    CHECK(good.parse()["verdict"] == "commutes");

    auto bad = run("conjugacy --black 2 --white 3 --orders 6 "
                   "--inject-fault posterior-shift");
    REQUIRE(bad.exit_code == 1);
    auto j = bad.parse();
    CHECK(j["verdict"] == "mismatch");
    CHECK(j["witness"]["lhs"] == "1/5");
    CHECK(j["witness"]["rhs"] == "8/35");

    CHECK(run("conjugacy --black 0 --white 1").exit_code == 2);
    CHECK(run("conjugacy --black 1 --white 1 --inject-fault frobnicate").exit_code ==
          2);
}

TEST_CASE("horizon cap from the environment") {
    auto over = run("cone-verify --candidate lebesgue --horizon 12",
                    "DEFINETTI_MAX_HORIZON=10");
    CHECK(over.exit_code == 2);
    CHECK(over.output.find("DEFINETTI_MAX_HORIZON") != std::string::npos);
    CHECK(run("cone-verify --candidate lebesgue --horizon 10",
              "DEFINETTI_MAX_HORIZON=10")
              .exit_code == 0);
    CHECK(run("table --candidate lebesgue --Ks 3,12", "DEFINETTI_MAX_HORIZON=10")
              .exit_code == 2);
    CHECK(run("conjugacy --black 1 --white 1 --orders 100").exit_code == 2);
    CHECK(run("cone-verify --candidate lebesgue", "DEFINETTI_MAX_HORIZON=abc")
              .exit_code == 2);
}

TEST_CASE("help and usage errors") {
    CHECK(run("--help").exit_code == 0);
    CHECK(run("cone-verify --help").exit_code == 0);
    CHECK(run("").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("cone-verify --no-such-flag").exit_code == 2);
}

TEST_CASE("candidate errors surface as usage errors with context") {
    auto r = run("table --candidate beta --alpha 1/2 --beta 1/2 --Ks 4");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("inexact_candidate") != std::string::npos);
}
