#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"

using q5::cli::run_cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string state(const char* name) { return std::string(Q5_DATA_DIR) + "/states/" + name + ".json"; }

}  // namespace

TEST_CASE("hilbert") {
    CHECK(run({"hilbert", "dim", "--degree", "4", "--method", "character"}).out == "5\n");
    CHECK(run({"hilbert", "dim", "--degree", "6", "--method", "table"}).out == "1\n");
    CHECK(run({"hilbert", "series", "--max-degree", "10", "--method", "table"}).out == "1,0,0,0,5,0,1,0,36,0,15\n");
    CHECK(run({"hilbert", "series", "--qubits", "3", "--method", "residue", "--max-degree", "8"}).out ==
          "1,0,0,0,1,0,0,0,1\n");

    const Run all = run({"hilbert", "series", "--max-degree", "12", "--method", "all"});
    CHECK(all.code == 0);
    CHECK(all.out.find("degree 12  character=228  table=228  agree") != std::string::npos);
    CHECK(all.out.find("all methods agree") != std::string::npos);
}

TEST_CASE("hilbert json") {
    const Run r = run({"hilbert", "series", "--max-degree", "8", "--qubits", "3", "--method", "residue", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["residue_rational_function"] == "(1) / (1 - t^4)");
    CHECK(j["series"].size() == 9);
    CHECK(j["series"][4] == "1");
    const auto d = nlohmann::json::parse(run({"hilbert", "dim", "--degree", "8", "--format", "json"}).out);
    CHECK(d["dimension"] == "36");
}

TEST_CASE("invariant values") {
    CHECK(run({"invariant", "eval", "--name", "F", "--state", state("phi1")}).out == "0\n");
    CHECK(run({"invariant", "eval", "--name", "Dx", "--state", state("phi1")}).out == "4\n");
    CHECK(run({"invariant", "eval", "--name", "Dz", "--state", state("phi2")}).out == "0\n");
    const auto j = nlohmann::json::parse(run({"invariant", "eval", "--name", "Dx", "--state", state("phi2"), "--format", "json"}).out);
    CHECK(j["value"] == "16");
}

TEST_CASE("fingerprint") {
    const Run r = run({"fingerprint", "--state", state("phi3")});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "Dx      0\nDy      0\nDz      0\nDt      0\nDu      0\nF       0\nBx      x\nC31111  x\nE11111  0\n");
}

TEST_CASE("checks") {
    const Run inv = run({"check", "invariance", "--seed", "7", "--trials", "25"});
    CHECK(inv.code == 0);
    for (const char* name : {"Dx", "Dy", "Dz", "Dt", "Du", "F"})
        CHECK(inv.out.find(std::string(name) + ": 25/25 exact") != std::string::npos);

    const Run ind = run({"check", "independence", "--seed", "2", "--trials", "5"});
    CHECK(ind.code == 0);
    CHECK(ind.out.find("rank(Dx..Du) = 5, rank(Dx..Du,F) = 6") != std::string::npos);
}

TEST_CASE("validate") {
    const Run r = run({"validate", "table1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("a_42 = 14849 vs a_62 = 146849") != std::string::npos);
    CHECK(r.out.find("verbatim P(1) = 2882400, corrected P(1) = 3014400") != std::string::npos);
    CHECK(r.out.find("accepted reading: corrected") != std::string::npos);
}

TEST_CASE("repeated runs are byte-identical") {
    const std::vector<std::string> args{"check", "invariance", "--seed", "11", "--trials", "3"};
    CHECK(run(args).out == run(args).out);
    const std::vector<std::string> json{"hilbert", "series", "--max-degree", "16", "--method", "all", "--format", "json"};
    CHECK(run(json).out == run(json).out);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"hilbert", "dim"}).code == 2);
    CHECK(run({"hilbert", "dim", "--degree", "-1"}).code == 2);
    CHECK(run({"hilbert", "dim", "--degree", "4", "--method", "table", "--qubits", "4"}).code == 2);
    CHECK(run({"hilbert", "dim", "--degree", "4", "--method", "residue", "--qubits", "5"}).code == 2);
    CHECK(run({"hilbert", "dim", "--degree", "4", "--format", "xml"}).code == 2);
    CHECK(run({"invariant", "eval", "--name", "Q", "--state", state("phi1")}).code == 2);
    CHECK(run({"invariant", "eval", "--name", "F", "--state", "/nonexistent.json"}).code == 2);
    CHECK(run({"fingerprint"}).code == 2);
    CHECK(run({"--help"}).code == 0);

    // Swapping the files reproduces the verbatim a_42, which the character
    // sums reject at degree 42.
    const Run bad = run({"hilbert", "series", "--max-degree", "42", "--method", "all", "--correction",
                         std::string(Q5_DATA_DIR) + "/table1.txt", "--table", std::string(Q5_DATA_DIR) + "/table1_correction.txt"});
    CHECK(bad.code == 1);
}
