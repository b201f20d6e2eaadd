#include "susyqm/cli/commands.hpp"
#include "susyqm/cli/config.hpp"
#include "susyqm/cli/serialize.hpp"
#include "susyqm/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace susyqm;
using namespace susyqm::cli;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "susyqm");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string error_code(const Run& r) { return Json::parse(r.err)["error"]["code"].get<std::string>(); }

} // namespace

TEST_CASE("rep pair prints the matrix") {
    const auto r = run({"rep", "--n", "3", "--m", "1", "--pair", "1", "2"});
    REQUIRE(r.code == kExitOk);
    const auto j = Json::parse(r.out);
    CHECK(j["matrix"][0][0].get<double>() == -1.0);
    CHECK(j["matrix"][0][1].get<double>() == 0.0);
    CHECK(j["matrix"][1][1].get<double>() == 1.0);
    CHECK(r.out.find("-1.000000000000e+00") != std::string::npos);
}

TEST_CASE("rep verify reports hook tableaux") {
    const auto r = run({"rep", "verify", "--n", "5"});
    REQUIRE(r.code == kExitOk);
    const auto j = Json::parse(r.out);
    CHECK(j["pass"].get<bool>());
    REQUIRE(j["sectors"].size() == 5);
    for (int m = 0; m < 5; ++m) {
        std::vector<int> expect = {5 - m};
        for (int k = 0; k < m; ++k) expect.push_back(1);
        CHECK(j["sectors"][static_cast<std::size_t>(m)]["tableau"].get<std::vector<int>>() == expect);
    }
}

TEST_CASE("validation failures exit 2 with an error object") {
    auto r = run({"rep", "--n", "3", "--m", "7"});
    CHECK(r.code == kExitValidation);
    CHECK(error_code(r) == "invalid-sector");
    r = run({"model", "check", "--name", "weierstrass"});
    CHECK(r.code == kExitValidation);
    CHECK(error_code(r) == "unknown-model");
    r = run({"susy", "verify", "--model", "example3", "--a", "1", "--k", "6"});
    CHECK(r.code == kExitValidation);
    CHECK(error_code(r) == "invalid-argument");
    r = run({"spectrum", "--model", "example3", "--grid", "abc"});
    CHECK(r.code == kExitValidation);
    r = run({"rep", "--bogus"});
    CHECK(r.code == kExitValidation);
    r = run({"rep", "--n", "3", "--m", "1", "--pair", "1", "1"});
    CHECK(r.code == kExitValidation);
    CHECK(error_code(r) == "invalid-indices");
}

TEST_CASE("model check passes for the supported models") {
    auto r = run({"model", "check", "--name", "sutherland", "--a", "1"});
    REQUIRE(r.code == kExitOk);
    auto j = Json::parse(r.out);
    CHECK(j["max_residual"].get<double>() < 1e-12);
    r = run({"model", "check", "--name", "calogero", "--a", "1", "--b", "2"});
    REQUIRE(r.code == kExitOk);
    j = Json::parse(r.out);
    CHECK(j["pass"].get<bool>());
    CHECK(j["model_table"]["rows"][0]["v0"].get<double>() == doctest::Approx(-0.5 * 0.09 - 2.0));
}

TEST_CASE("config file values yield to flags") {
    const auto dir = std::filesystem::temp_directory_path() / "susyqm_cli_test";
    std::filesystem::create_directories(dir);
    const auto cfg = dir / "rep.cfg";
    std::ofstream(cfg) << "# comment\nn = 3\nm = 1\npair = 2,3\n";
    auto r = run({"rep", "--config", cfg.string()});
    REQUIRE(r.code == kExitOk);
    CHECK(Json::parse(r.out)["pair"].get<std::vector<int>>() == std::vector<int>{2, 3});
    r = run({"rep", "--config", cfg.string(), "--pair", "1", "2"});
    REQUIRE(r.code == kExitOk);
    CHECK(Json::parse(r.out)["matrix"][0][0].get<double>() == -1.0);
    std::ofstream(cfg) << "n = 3\nwhat = 1\n";
    CHECK(run({"rep", "--config", cfg.string()}).code == kExitValidation);
}

TEST_CASE("output directory from the environment") {
    const auto dir = std::filesystem::temp_directory_path() / "susyqm_cli_out";
    std::filesystem::remove_all(dir);
    ::setenv(kOutDirEnv, dir.string().c_str(), 1);
    const auto r = run({"rep", "--n", "3", "--m", "1", "--pair", "1", "3", "--format", "csv"});
    ::unsetenv(kOutDirEnv);
    REQUIRE(r.code == kExitOk);
    CHECK(r.out.empty());
    std::ifstream f(dir / "rep.csv");
    std::string line;
    std::getline(f, line);
    CHECK(line == "5.000000000000e-01,-8.660254037844e-01");
}

TEST_CASE("spectrum and operator outputs") {
    auto r = run({"spectrum", "--model", "example3", "--grid", "24", "--k", "3", "--lo", "-6", "--hi", "6"});
    REQUIRE(r.code == kExitOk);
    CHECK(r.out.rfind("index,eigenvalue\n1,", 0) == 0);
    r = run({"operator", "--model", "example3", "--grid", "16", "--kind", "plus", "--lo", "-4", "--hi", "4"});
    REQUIRE(r.code == kExitOk);
    std::istringstream in(r.out);
    long rows = 0, cols = 0, nnz = 0;
    in >> rows >> cols >> nnz;
    CHECK(rows == 2 * 16 * 17);
    CHECK(cols == 16 * 16);
    long i = 0, j = 0;
    std::string v;
    long min_index = 1 << 30;
    for (long k = 0; k < nnz; ++k) {
        in >> i >> j >> v;
        min_index = std::min({min_index, i, j});
    }
    CHECK(min_index == 1);
    r = run({"block", "--model", "example3", "--sector", "1", "--at", "0.1,0.2,-0.3"});
    REQUIRE(r.code == kExitOk);
    CHECK(Json::parse(r.out)["potential"].size() == 2);
}

TEST_CASE("canonical JSON is stable") {
    Json j = {{"b", 1.5}, {"a", {1, 2}}, {"c", -0.0}};
    CHECK(canonical_json(j) == "{\n  \"a\": [1, 2],\n  \"b\": 1.500000000000e+00,\n  \"c\": 0.000000000000e+00\n}\n");
    const auto a = run({"model", "check", "--name", "hyperbolic", "--a", "0.5", "--count", "50"});
    const auto b = run({"model", "check", "--name", "hyperbolic", "--a", "0.5", "--count", "50"});
    CHECK(a.out == b.out);
}
