#include "commands.hpp"
#include "projsys/constructions.hpp"
#include "projsys/projsystem.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "projsys");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    const int code = projsys::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string tmp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("projsys_test_" + name)).string();
}

}  // namespace

TEST_CASE("construct then params round trip") {
    const std::string path = tmp_path("eq4.gm");
    const Run c = run({"construct", "elliptic_quadric", "--q", "4", "--out", path});
    REQUIRE(c.code == 0);
    const Run p = run({"params", "--in", path});
    REQUIRE(p.code == 0);
    const json j = json::parse(p.out);
    CHECK(j["schema_version"] == 1);
    CHECK(j["command"] == "params");
    CHECK(j["result"]["n"] == 17);
    CHECK(j["result"]["k"] == 4);
    CHECK(j["result"]["d"] == 12);
    CHECK(j["result"]["s"] == 2);
    CHECK(j["result"]["t"] == 1);
    // Same CodeParams as in-memory evaluation.
    const auto mem = projsys::params(projsys::elliptic_quadric(4));
    const json built = json::parse(c.out)["result"]["params"];
    for (const auto& key : {"n", "k", "d", "d_perp", "s", "t", "k_perp", "projective", "degenerate", "griesmer_met"})
        CHECK(built[key] == j["result"][key]);
    CHECK(j["result"]["d_perp"] == mem.d_perp);
    CHECK(projsys::params(projsys::read_gm_file(path)) == mem);
    std::remove(path.c_str());
}

TEST_CASE("integrality command") {
    const Run r = run({"integrality", "--n", "29", "--k", "4", "--q", "8", "--s", "2"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["result"]["quantities"][0]["raw"] == "3654/10");
    CHECK(j["result"]["quantities"][0]["integer"] == false);
    CHECK(j["result"]["first_failure"] == "full_length.gamma_0");
    const Run tsv = run({"integrality", "--n", "29", "--k", "4", "--q", "8", "--s", "2", "--format", "tsv"});
    CHECK(tsv.out.rfind("j\tname\traw\treduced\tinteger\n0\tgamma\t3654/10\t1827/5\tfalse\n", 0) == 0);
}

TEST_CASE("rank-deficient file exits 2") {
    const std::string path = tmp_path("bad.gm");
    std::ofstream(path) << "q 2 poly 0\nk 2 n 2\n1 1\n1 1\n";
    const Run r = run({"params", "--in", path});
    CHECK(r.code == 2);
    CHECK(r.err.find("RankDeficient") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"bounds", "--k", "x"}).code == 2);
    CHECK(run({"bounds", "--k", "3", "--q", "6"}).code == 2);
    CHECK(run({"construct", "nope", "--q", "4"}).code == 2);
    CHECK(run({"construct", "hyperoval", "--q", "3"}).code == 2);
    CHECK(run({"params", "--in", "/nonexistent/file.gm"}).code == 2);
    CHECK(run({"params", "--in", "x", "--format", "xml"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("bounds command") {
    const Run r = run({"bounds", "--k", "4", "--q", "8", "--s", "2"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["result"]["upper_value"] == 27);
    CHECK_FALSE(j["citations"].empty());
    bool binding = false;
    for (const auto& b : j["result"]["upper"]) binding = binding || b["binding"].get<bool>();
    CHECK(binding);
    const Run tsv = run({"bounds", "--k", "3", "--q", "4", "--s", "1", "--format", "tsv"});
    CHECK(tsv.out.rfind("direction\ttarget\trule_id\tvalue\tbinding\twitness\tconditions\tcitation\n", 0) == 0);
    const Run t4 = run({"bounds", "--k", "4", "--q", "4", "--s", "2", "--t", "1"});
    CHECK(t4.code == 0);
}

TEST_CASE("bounds tables") {
    const Run r = run({"bounds", "--table", "3", "--range", "k=3..4", "q=2,4", "s=0..1", "--format", "tsv"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    int n = 0;
    while (std::getline(lines, line)) ++n;
    CHECK(n == 1 + 2 * 2 * 2);
    const Run j4 = run({"bounds", "--table", "4", "--range", "k=3", "q=4", "s=1", "t=1"});
    REQUIRE(j4.code == 0);
    CHECK(json::parse(j4.out)["result"]["rows"].size() == 1);
    CHECK(run({"bounds", "--table", "5"}).code == 2);
    CHECK(run({"bounds", "--table", "3", "--range", "z=1"}).code == 2);
}

TEST_CASE("kappa command") {
    const Run r = run({"kappa", "--q", "8", "--s", "2"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["result"]["lower"] == 3);
    CHECK(j["result"]["upper"] == 3);
    CHECK(j["result"]["status"] == "exact");
    const Run s = run({"kappa", "--q", "4", "--s", "2", "--search", "--budget", "100000"});
    CHECK(json::parse(s.out)["result"]["searched"] == true);
}

TEST_CASE("search command writes its witness") {
    const std::string path = tmp_path("w.gm");
    const Run r = run({"search", "--k", "4", "--q", "2", "--s", "1", "--threads", "1", "--out", path});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["result"]["n_max"] == 8);
    CHECK(j["result"]["exhaustive"] == true);
    CHECK(j["result"]["witness_file"] == path);
    CHECK(projsys::read_gm_file(path).n() == 8);
    std::remove(path.c_str());
}

TEST_CASE("verify command") {
    const Run r = run({"verify", "--suite", "paper-tables", "--only", "1"});
    CHECK(r.code == 0);
    CHECK(r.err.find("PASS [1]") != std::string::npos);
    const std::string path = tmp_path("cap.gm");
    projsys::write_gm_file(path, projsys::cap8_pg32());
    const Run a = run({"verify", "--suite", "audit", "--in", path});
    CHECK(a.code == 0);
    CHECK(json::parse(a.out)["result"]["passed"] == true);
    std::remove(path.c_str());
    CHECK(run({"verify", "--suite", "other"}).code == 2);
}

TEST_CASE("seed is echoed") {
    const Run r = run({"bounds", "--k", "3", "--q", "2", "--s", "0", "--seed", "42"});
    CHECK(json::parse(r.out)["seed"] == 42);
}
