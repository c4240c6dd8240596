#include <doctest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "lr/cli.hpp"

using namespace lr;

namespace {
struct CliRun {
    int status;
    std::string out, err;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}
}  // namespace

TEST_CASE("coef command") {
    auto run = cli({"coef", "--lam", "6,5,4,3,3,1", "--mu", "5,3,2,1", "--nu", "5,3,2,1"});
    CHECK(run.status == 0);
    CHECK(run.out == "12\n");
    // Exponent sugar in partition arguments.
    auto sugar = cli({"coef", "--lam", "9^3,7,3^4,2,1", "--mu", "7^2,3,2^3,1^2", "--nu",
                      "8,5,3^2,2^2,1"});
    CHECK(sugar.status == 0);
    CHECK(sugar.out == "39\n");
}

TEST_CASE("skew command") {
    auto run = cli({"skew", "--lam", "3,2,1", "--mu", "2,1"});
    CHECK(run.status == 0);
    CHECK(run.out == "1,1,1,1\n2,1,2\n3,1\n");
    auto js = cli({"skew", "--lam", "3,2,1", "--mu", "2,1", "--format", "json"});
    CHECK(js.status == 0);
    auto parsed = nlohmann::json::parse(js.out);
    REQUIRE(parsed.size() == 3);
    CHECK(parsed[1]["nu"] == "2,1");
    CHECK(parsed[1]["mult"] == "2");
}

TEST_CASE("tabs command") {
    auto run = cli({"tabs", "--lam", "2,1", "--mu", "1", "--format", "json"});
    CHECK(run.status == 0);
    std::istringstream lines(run.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        auto t = nlohmann::json::parse(line);
        CHECK(t["shape"] == "2,1/1");
        ++count;
    }
    CHECK(count == 2);
}

TEST_CASE("qseq command") {
    auto run = cli({"qseq", "--lam", "6,5,3,2,1", "--mu", "6,1^4", "--lamp", "8^2,5,3^2,2,1",
                    "--mup", "4,3,2,1^2", "--nmax", "0"});
    CHECK(run.status == 0);
    CHECK(run.out == "0,910\n");
    auto csv = cli({"qseq", "--lam", "2,1", "--mu", "1", "--nmax", "2", "--format", "csv"});
    CHECK(csv.out == "n,value\n0,1\n1,2\n2,3\n");
}

TEST_CASE("bound command") {
    auto run = cli({"bound", "--lam", "1^5", "--mu", "1^2", "--lamp", "7^2,5,4^3,3,2^2", "--mup",
                    "4,3^3,2", "--window", "2", "--format", "json"});
    CHECK(run.status == 0);
    auto parsed = nlohmann::json::parse(run.out);
    CHECK(parsed["m_formula"] == 7);
    CHECK(parsed["m_empirical"] == 7);
    CHECK(parsed["q"][0][1] == "2184");
    // Unbounded shapes are a domain error.
    auto unbounded = cli({"bound", "--lam", "2,1", "--mu", "1"});
    CHECK(unbounded.status == 1);
    // An exceeded search budget has its own exit code.
    auto starved = cli({"bound", "--lam", "1^5", "--mu", "1^2", "--lamp", "7^2,5,4^3,3,2^2",
                        "--mup", "4,3^3,2", "--budget", "2"});
    CHECK(starved.status == 3);
}

TEST_CASE("fit and gen commands") {
    auto run = cli({"fit", "--lam", "2,1", "--mu", "1", "--nu", "1,1", "--nmax", "5"});
    CHECK(run.status == 0);
    CHECK(run.out == "1\n");
    auto gen = cli({"gen", "--lam", "2,1", "--mu", "1", "--nu", "1,1", "--nmax", "5", "--format",
                    "json"});
    CHECK(gen.status == 0);
    auto parsed = nlohmann::json::parse(gen.out);
    CHECK(parsed["denom_power"] == 1);
    CHECK(parsed["numerator"][0] == "1");
}

TEST_CASE("usage errors") {
    CHECK(cli({"coef", "--lam", "2,x"}).status == 2);
    CHECK(cli({"nonsense"}).status == 2);
    CHECK(cli({"qseq", "--lam", "2,1", "--mu", "1"}).status == 2);  // missing --nmax
}

TEST_CASE("deterministic output") {
    auto a = cli({"skew", "--lam", "4,3,2", "--mu", "2,1", "--format", "json"});
    auto b = cli({"skew", "--lam", "4,3,2", "--mu", "2,1", "--format", "json"});
    CHECK(a.out == b.out);
}
