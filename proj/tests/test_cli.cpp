#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "psum/cli.hpp"

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int status = psum::run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

std::string golden(const std::string& name)
{
    std::ifstream in(std::string(PSUM_GOLDEN_DIR) + "/" + name);
    REQUIRE_MESSAGE(in.good(), "missing golden file " << name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("bern")
{
    CHECK(run({"bern", "4"}).out == "-1/30\n");
    CHECK(run({"bern", "3"}).out == "0\n");
    CHECK(run({"bern", "0"}).out == "1\n");
    CHECK(run({"bern", "abc"}).status == psum::kExitUsage);
    CHECK(run({"bern", "-1"}).status == psum::kExitUsage);
    CHECK(run({"bern"}).status == psum::kExitUsage);
}

TEST_CASE("golden renderings")
{
    for (const char* fmt : {"plain", "json", "latex"}) {
        CAPTURE(fmt);
        CHECK(run({"bern", "4", "--format", fmt}).out == golden(std::string("bern_4.") + fmt));
        CHECK(run({"faulhaber", "3", "--format", fmt}).out == golden(std::string("faulhaber_3.") + fmt));
        CHECK(run({"faulhaber", "4", "--format", fmt}).out == golden(std::string("faulhaber_4.") + fmt));
        CHECK(run({"poly", "bernoulli", "4", "--basis", "u", "--format", fmt}).out ==
              golden(std::string("poly_bernoulli_4_u.") + fmt));
    }
    CHECK(run({"poly", "bernoulli", "3", "--basis", "u"}).out == golden("poly_bernoulli_3_u.plain"));
    // format may also precede the subcommand
    CHECK(run({"--format", "json", "bern", "4"}).out == golden("bern_4.json"));
}

TEST_CASE("poly")
{
    CHECK(run({"poly", "bernoulli", "0", "--basis", "x"}).out == "1\n");
    CHECK(run({"poly", "bernoulli", "2"}).out == "1/6 - x + x^2\n");
    CHECK(run({"poly", "bernoulli", "2", "--basis", "centered"}).out == "-1/12 + (x - 1/2)^2\n");
    CHECK(run({"poly", "bernoulli", "1", "--basis", "u"}).out == "(x - 1/2)*(1)\n");
    CHECK(run({"poly", "bernoulli", "4", "--basis", "z"}).status == psum::kExitUsage);
    CHECK(run({"poly", "euler", "4"}).status == psum::kExitUsage);
}

TEST_CASE("faulhaber")
{
    CHECK(run({"faulhaber", "3"}).out == "S_3 = S_1^2*(1)\n");
    CHECK(run({"faulhaber", "4"}).out == "S_4 = S_2*(-1/5 + 6/5*S_1)\n");
    const Run bad = run({"faulhaber", "1"});
    CHECK(bad.status == psum::kExitUsage);
    CHECK(bad.out.empty());
    CHECK(bad.err.find("no Faulhaber form") != std::string::npos);
}

TEST_CASE("eval")
{
    CHECK(run({"eval", "2", "4", "--method", "brute"}).out == "30\n");
    const Run brute = run({"eval", "7", "10", "--method", "brute"});
    CHECK(run({"eval", "7", "10", "--method", "bernoulli"}).out == brute.out);
    CHECK(run({"eval", "7", "10", "--method", "faulhaber"}).out == brute.out);
    CHECK(run({"eval", "7", "10"}).out == brute.out);
    CHECK(run({"eval", "0", "9"}).out == "9\n");

    CHECK(run({"eval", "1", "5", "--method", "faulhaber"}).status == psum::kExitUsage);
    CHECK(run({"eval", "0", "5", "--method", "bernoulli"}).status == psum::kExitUsage);
    CHECK(run({"eval", "3", "0"}).status == psum::kExitUsage);
    CHECK(run({"eval", "3", "1e6"}).status == psum::kExitUsage);
    CHECK(run({"eval", "3", "5", "--method", "magic"}).status == psum::kExitUsage);

    const auto doc = nlohmann::json::parse(run({"eval", "3", "100000000000000000000", "--format", "json"}).out);
    CHECK(doc["n"] == "100000000000000000000");
    CHECK(doc["value"].is_string());
}

TEST_CASE("verify")
{
    const Run plain = run({"verify", "--max-m", "5"});
    CHECK(plain.status == psum::kExitOk);
    CHECK(plain.out.find("all pass: 19 reports, verified for m <= 5") != std::string::npos);

    const Run json = run({"verify", "--max-m", "3", "--only", "T2-even,T3", "--format", "json"});
    CHECK(json.status == psum::kExitOk);
    const auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["all_pass"] == true);
    CHECK(doc["report_count"] == 2 + 3 + 3);
    CHECK(doc["theorems"] == nlohmann::json({"T2-even", "T3-even", "T3-odd"}));

    CHECK(run({"verify", "--max-m", "0"}).status == psum::kExitUsage);
    CHECK(run({"verify", "--only", "T9"}).status == psum::kExitUsage);
    CHECK(run({"verify", "--max-m", "3", "--format", "latex"}).out.rfind("\\[ \\begin{array}", 0) == 0);
}

TEST_CASE("usage errors and help")
{
    CHECK(run({}).status == psum::kExitUsage);
    CHECK(run({"frobnicate"}).status == psum::kExitUsage);
    CHECK(run({"bern", "4", "--format", "xml"}).status == psum::kExitUsage);
    const Run help = run({"--help"});
    CHECK(help.status == psum::kExitOk);
    CHECK(help.out.find("faulhaber") != std::string::npos);
}

TEST_CASE("determinism and json round trip")
{
    const std::vector<std::vector<std::string>> commands = {
        {"bern", "30", "--format", "json"},
        {"poly", "bernoulli", "9", "--basis", "u", "--format", "json"},
        {"faulhaber", "11", "--format", "json"},
        {"eval", "25", "999", "--format", "json"},
        {"verify", "--max-m", "4", "--format", "json"},
    };
    for (const auto& argv : commands) {
        const Run a = run(argv);
        const Run b = run(argv);
        REQUIRE(a.status == psum::kExitOk);
        CHECK(a.out == b.out);
        CHECK(nlohmann::json::parse(a.out).dump(2) + "\n" == a.out);
    }
}

TEST_CASE("sweep_exit_status")
{
    using namespace psum;
    const TheoremReport ok = verify(TheoremId::T3Odd, 1);
    const TheoremReport bad{TheoremId::T3Odd, 2, {{"forced", false, "x"}}, false};
    CHECK(sweep_exit_status({}) == kExitOk);
    CHECK(sweep_exit_status({ok}) == kExitOk);
    CHECK(sweep_exit_status({ok, bad}) == kExitVerificationFailed);
}
