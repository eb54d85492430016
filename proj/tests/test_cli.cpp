#include "doctest.h"

#include "cli_commands.hpp"

#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace sphvar;

namespace {

struct Result {
    int code = 0;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    Result r;
    r.code = cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string temp_file(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / ("sphvar_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

} // namespace

TEST_CASE("variation prints the four-sample value") {
    auto csv = temp_file("path.csv", "t,re\n0,0\n1,1\n2,0\n3,1\n");
    auto r = run({"variation", "--csv", csv, "--r", "2", "--format", "plain"});
    CHECK(r.code == cli::kPass);
    CHECK(r.out == "1.7320508\n");
    auto brute = run({"variation", "--csv", csv, "--r", "2", "--bruteforce"});
    CHECK(nlohmann::json::parse(brute.out)["value"].get<double>() == doctest::Approx(std::sqrt(3.0)));
    auto bad = temp_file("bad.csv", "0,0\n1,x\n");
    CHECK(run({"variation", "--csv", bad, "--r", "2"}).code == cli::kUsage);
}

TEST_CASE("classify reports strong type at an interior point") {
    auto r = run({"classify", "--d", "3", "--r", "3", "--p", "2", "--q", "4"});
    REQUIRE(r.code == cli::kPass);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["d"] == 3);
    CHECK(j["inv_p"].get<double>() == 0.5);
    CHECK(j.contains("status"));
    CHECK(j.contains("regime"));
}

TEST_CASE("region: JSON output, empty regime and bad input") {
    auto r = run({"region", "--d", "4", "--r", "3"});
    REQUIRE(r.code == cli::kPass);
    CHECK(nlohmann::json::parse(r.out)["vertices"].size() == 5);
    auto empty = run({"region", "--d", "2", "--r", "1"});
    CHECK(empty.code == cli::kUsage);
    CHECK(empty.err.find("no bounded region") != std::string::npos);
    CHECK(run({"region", "--d", "3", "--r", "1.2"}).code == cli::kUsage);
    CHECK(run({"region", "--d", "3"}).code == cli::kUsage);
    CHECK(run({"nonsense"}).code == cli::kUsage);
}

TEST_CASE("counterexample rejects coarse time sampling") {
    auto r = run({"counterexample", "--kind", "Disks", "--d", "2", "--jmin", "3", "--jmax", "6", "--M", "10"});
    CHECK(r.code == cli::kUsage);
    CHECK(r.err.find("Unresolvable") != std::string::npos);
}

TEST_CASE("operator configs: unknown keys are rejected, runs are deterministic") {
    auto bad = temp_file("bad.json", R"({"task": "local_variation", "grid": {"d": 2, "n": 64}, "bumps": [], "colour": 1})");
    auto r = run({"operator", "--config", bad});
    CHECK(r.code == cli::kUsage);
    CHECK(r.err.find("colour") != std::string::npos);
    auto cfg = temp_file("local.json", R"({"task": "local_variation", "grid": {"d": 2, "n": 64},
        "random_bumps": {"count": 2, "seed": 4}, "r": 2, "M": 9})");
    auto a = run({"operator", "--config", cfg});
    auto b = run({"--threads", "2", "operator", "--config", cfg});
    CHECK(a.code == cli::kPass);
    CHECK(a.out == b.out);
    auto global = temp_file("global.json", R"({"task": "global_variation", "grid": {"d": 2, "n": 64},
        "bumps": [{"center": [0.2, 0], "radius": 0.8}], "r": 2, "kmin": -1, "kmax": 1, "M": 9})");
    auto g = run({"operator", "--config", global});
    CHECK(g.code == cli::kPass);
    CHECK(nlohmann::json::parse(g.out)["bound_holds"] == true);
}

TEST_CASE("sparse-check on a few small pairs") {
    auto r = run({"sparse-check", "--d", "2", "--n", "64", "--pairs", "3", "--seed", "5"});
    CHECK(r.code == cli::kPass);
    auto again = run({"sparse-check", "--d", "2", "--n", "64", "--pairs", "3", "--seed", "5"});
    CHECK(r.out == again.out);
    CHECK(run({"sparse-check", "--d", "2", "--n", "64", "--pairs", "1", "--p", "1", "--q", "1.05"}).code ==
          cli::kUsage);
}
