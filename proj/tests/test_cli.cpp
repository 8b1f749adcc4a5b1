#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "pwpi/cli.hpp"

using namespace pwpi;

namespace {

struct CommandResult {
    int exit_code;
    std::string out;
    std::string err;
};

CommandResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_command(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

/// Writes a space file into the test temp directory and returns its path.
std::string space_file(const std::string& name, const std::string& content) {
    const auto dir = std::filesystem::temp_directory_path() / "pwpi_cli_tests";
    std::filesystem::create_directories(dir);
    const auto path = dir / name;
    std::ofstream(path) << content;
    return path.string();
}

const std::string kChain121 = space_file("chain121.json",
                                         R"({"q":2,"n":3,"cover_relations":[[1,2],[2,3]],"labels":[1,2,1],
                                             "weight":{"0":0,"1":1}})");
const std::string kChain12 = space_file("chain12.json",
                                        R"({"q":2,"n":2,"cover_relations":[[1,2]],"labels":[1,2],
                                            "weight":{"0":0,"1":1}})");
const std::string kChain11 = space_file("chain11.json",
                                        R"({"q":2,"n":2,"cover_relations":[[1,2]],"labels":[1,1],
                                            "weight":{"0":0,"1":1}})");
const std::string kAnti2 = space_file("anti2.json",
                                      R"({"q":2,"n":2,"cover_relations":[],"labels":[1,1],
                                          "weight":{"0":0,"1":1}})");
const std::string kAnti3Label = space_file("anti3label.json",
                                           R"({"q":2,"n":3,"cover_relations":[],"labels":[1,2,1],
                                               "weight":{"0":0,"1":1}})");

}  // namespace

TEST_CASE("weight of a block vector from the command line") {
    const auto r = run({"--space", kChain121, "weight", "[[0],[1,0],[0]]"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2\n");

    const auto rj = run({"--space", kChain121, "--json", "weight", "[[0],[1,0],[0]]"});
    CHECK(rj.exit_code == 0);
    CHECK(nlohmann::json::parse(rj.out)["weight"] == 2);
}

TEST_CASE("distance between two vectors") {
    const auto r = run({"--space", kChain11, "distance", "[[1],[0]]", "[[0],[1]]"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2\n");
    const auto rj = run({"--space", kChain11, "--json", "distance", "[[1],[0]]", "[[0],[1]]"});
    CHECK(nlohmann::json::parse(rj.out)["distance"] == 2);
}

TEST_CASE("validate echoes a reparseable document") {
    const auto r = run({"--space", kChain121, "validate"});
    REQUIRE(r.exit_code == 0);
    const auto space = parse_space_file(r.out);
    CHECK(space.total_dim() == 4);
    // echoed form is already normalized: echoing again is a fixed point
    const auto echo_path = space_file("echo.json", r.out);
    const auto r2 = run({"--space", echo_path, "validate"});
    CHECK(r2.out == r.out);
}

TEST_CASE("aut lists automorphisms line by line") {
    const auto r = run({"--space", kAnti3Label, "aut"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1 2 3\n1 3 2\n2 1 3\n2 3 1\n3 1 2\n3 2 1\n");

    const auto rl = run({"--space", kAnti3Label, "aut", "--labels"});
    CHECK(rl.exit_code == 0);
    CHECK(rl.out == "1 2 3\n3 2 1\n");

    const auto rj = run({"--space", kAnti3Label, "--json", "aut", "--labels"});
    const auto doc = nlohmann::json::parse(rj.out);
    CHECK(doc["count"] == 2);
    CHECK(doc["automorphisms"][1] == nlohmann::json::parse("[3,2,1]"));
}

TEST_CASE("check reports isometry and triangular membership") {
    const auto good = run({"--space", kChain11, "check", "[[1,0],[1,1]]"});
    CHECK(good.exit_code == 0);
    CHECK(good.out == "isometry true\ntriangular true\n");

    const auto bad = run({"--space", kChain11, "check", "[[0,1],[1,0]]"});
    CHECK(bad.exit_code == 1);
    CHECK(bad.out == "isometry false\ntriangular false\n");

    const auto singular = run({"--space", kChain11, "check", "[[1,1],[1,1]]"});
    CHECK(singular.exit_code == 2);
    CHECK(singular.err.find("NotInvertible") != std::string::npos);

    const auto rj = run({"--space", kChain11, "--json", "check", "[[1,0],[1,1]]"});
    const auto doc = nlohmann::json::parse(rj.out);
    CHECK(doc["isometry"] == true);
    CHECK(doc["triangular"] == true);
}

TEST_CASE("phi prints the induced permutation") {
    const auto r = run({"--space", kAnti2, "phi", "[[0,1],[1,0]]"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2 1\n");

    const auto bad = run({"--space", kAnti2, "phi", "[[1,1],[0,1]]"});
    CHECK(bad.exit_code == 2);
    CHECK(bad.err.find("NotPrime") != std::string::npos);

    const auto rj = run({"--space", kAnti2, "--json", "phi", "[[0,1],[1,0]]"});
    CHECK(nlohmann::json::parse(rj.out)["phi"] == nlohmann::json::parse("[2,1]"));
}

TEST_CASE("decompose prints both factors") {
    const auto r = run({"--space", kAnti2, "decompose", "[[0,1],[1,0]]"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "psi 2 1\ntriangular [[1,0],[0,1]]\n");

    const auto rj = run({"--space", kAnti2, "--json", "decompose", "[[0,1],[1,0]]"});
    const auto doc = nlohmann::json::parse(rj.out);
    CHECK(doc["psi"] == nlohmann::json::parse("[2,1]"));
    CHECK(doc["triangular"] == nlohmann::json::parse("[[1,0],[0,1]]"));
}

TEST_CASE("order prints the exact group order") {
    const auto r = run({"--space", kChain12, "order"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "24\n");
    const auto rj = run({"--space", kChain12, "--json", "order"});
    CHECK(nlohmann::json::parse(rj.out)["order"] == "24");
}

TEST_CASE("enumerate streams maps with an optional limit") {
    const auto r = run({"--space", kChain11, "enumerate"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "[[1,0],[0,1]]\n[[1,0],[1,1]]\n");

    const auto limited = run({"--space", kChain12, "enumerate", "--limit", "3"});
    CHECK(limited.exit_code == 0);
    CHECK(std::count(limited.out.begin(), limited.out.end(), '\n') == 3);

    const auto rj = run({"--space", kChain11, "--json", "enumerate"});
    const auto doc = nlohmann::json::parse(rj.out);
    CHECK(doc["order"] == "2");
    CHECK(doc["maps"].size() == 2);
}

TEST_CASE("verify matches the oracle and reports the order") {
    const auto r = run({"--space", kChain12, "verify"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "order 24\nequal true\n");

    const auto rj = run({"--space", kChain11, "--json", "verify"});
    const auto doc = nlohmann::json::parse(rj.out);
    CHECK(doc["equal"] == true);
    CHECK(doc["oracle_size"] == 2);
}

TEST_CASE("mindist evaluates generator matrices") {
    const auto chain3 = space_file("chain3.json",
                                   R"({"q":2,"n":3,"cover_relations":[[1,2],[2,3]],"labels":[1,1,1],
                                       "weight":{"0":0,"1":1}})");
    const auto r = run({"--space", chain3, "mindist", "[[1,1,1]]"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "3\n");

    const auto deficient = run({"--space", chain3, "mindist", "[[1,1,1],[1,1,1]]"});
    CHECK(deficient.exit_code == 2);
    CHECK(deficient.err.find("RankDeficient") != std::string::npos);

    const auto rj = run({"--space", chain3, "--json", "mindist", "[[1,1,1]]"});
    CHECK(nlohmann::json::parse(rj.out)["min_distance"] == 3);
}

TEST_CASE("equivalent finds witnesses or reports none") {
    const auto found = run({"--space", kAnti2, "equivalent", "[[1,0]]", "[[0,1]]"});
    CHECK(found.exit_code == 0);
    CHECK(found.out == "map [[0,1],[1,0]]\npsi 2 1\n");

    const auto none = run({"--space", kChain11, "equivalent", "[[1,0]]", "[[0,1]]"});
    CHECK(none.exit_code == 1);
    CHECK(none.out == "none\n");

    const auto rj = run({"--space", kAnti2, "--json", "equivalent", "[[1,0]]", "[[0,1]]"});
    const auto doc = nlohmann::json::parse(rj.out);
    CHECK(doc["equivalent"] == true);
    CHECK(doc["psi"] == nlohmann::json::parse("[2,1]"));
}

TEST_CASE("budget flags override the space file") {
    const auto r = run({"--space", kChain12, "--budget-group", "5", "enumerate"});
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("BudgetExceeded") != std::string::npos);

    const auto v = run({"--space", kChain11, "--budget-vectors", "2", "check", "[[1,0],[1,1]]"});
    CHECK(v.exit_code == 2);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run({"weight", "[[1]]"}).exit_code == 2);               // missing --space
    CHECK(run({"--space", kChain11}).exit_code == 2);             // missing subcommand
    CHECK(run({"--space", kChain11, "frobnicate"}).exit_code == 2);
    CHECK(run({"--space", "/nonexistent.json", "order"}).exit_code == 2);
    const auto bad_vec = run({"--space", kChain11, "weight", "[[1],[1,0]]"});
    CHECK(bad_vec.exit_code == 2);
    CHECK(!bad_vec.err.empty());
}

TEST_CASE("help is printed on request") {
    const auto r = run({"--help"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("weight") != std::string::npos);
}
