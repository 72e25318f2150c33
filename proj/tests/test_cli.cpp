// End-to-end tests of the awspec command line tool: golden table output,
// format and error contracts, and exit codes.  The binary location and
// the data directory are injected by the build.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string out;
};

CommandResult run_cli(const std::string& args) {
    const std::string command = std::string(AWSPEC_CLI_EXE) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CommandResult result;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        result.out.append(buffer, got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

TEST_CASE("table --first 78 reproduces the golden file byte for byte") {
    const CommandResult result = run_cli("table --first 78");
    CHECK(result.exit_code == 0);
    CHECK(result.out == read_file(std::string(AWSPEC_DATA_DIR) + "/table3_golden.csv"));
}

TEST_CASE("table --zmax lists complete prefixes") {
    const CommandResult result = run_cli("table --zmax 2");
    CHECK(result.exit_code == 0);
    CHECK(result.out == "z1,z2,z3,h,v,mult\n0,0,0,0,0,1\n2,1,0,12,0,8\n2,1,1,4,8,24\n");
}

TEST_CASE("table requires exactly one of --zmax and --first") {
    CHECK(run_cli("table").exit_code == 2);
    CHECK(run_cli("table --zmax 2 --first 5").exit_code == 2);
    CHECK(run_cli("table --first 0").exit_code == 2);
}

TEST_CASE("spectrum with an eigenvalue bound") {
    const CommandResult result = run_cli("spectrum --t0 1/2 --t1 1 --bound 24");
    CHECK(result.exit_code == 0);
    CHECK(result.out ==
          "eigenvalue,mult,triples\n"
          "0,1,0:0:0\n"
          "16,24,2:1:1\n"
          "24,8,2:1:0\n");
}

TEST_CASE("spectrum --bound 0 keeps only the constants") {
    const CommandResult result = run_cli("spectrum --t0 1 --t1 1 --bound 0");
    CHECK(result.exit_code == 0);
    CHECK(result.out == "eigenvalue,mult,triples\n0,1,0:0:0\n");
}

TEST_CASE("spectrum usage errors") {
    CHECK(run_cli("spectrum --t0 1 --t1 1").exit_code == 2);                 // neither
    CHECK(run_cli("spectrum --t0 1 --t1 1 --bound 5 --first 2").exit_code == 2);
    CHECK(run_cli("spectrum --t0 1..2 --t1 1 --bound 5").exit_code == 2);    // malformed rational
    CHECK(run_cli("spectrum --t0 1/0 --t1 1 --bound 5").exit_code == 2);     // zero denominator
}

TEST_CASE("spectrum domain errors") {
    CHECK(run_cli("spectrum --t0 0 --t1 1 --bound 5").exit_code == 1);
    CHECK(run_cli("spectrum --t0 1 --t1 1 --bound -3").exit_code == 1);
}

TEST_CASE("first eigenvalue from each parameterization") {
    const CommandResult normal = run_cli("first --r0 12 --r1 8");
    CHECK(normal.exit_code == 0);
    CHECK(normal.out == "eta1,triples,regime\n1,2:1:0,positive_normal\n");

    const CommandResult contact = run_cli("first --alpha 1 --delta 1");
    CHECK(contact.exit_code == 0);
    CHECK(contact.out == "eta1,triples,regime\n16,2:1:1,naturally_reductive_only\n");

    const CommandResult parallel = run_cli("first --t0 1/2 --t1 1/2");
    CHECK(parallel.exit_code == 0);
    CHECK(parallel.out == "eta1,triples,regime\n24,2:1:0 2:1:1,parallel\n");
}

TEST_CASE("first requires exactly one complete parameter pair") {
    CHECK(run_cli("first --t0 1 --t1 1 --r0 1 --r1 1").exit_code == 2);
    CHECK(run_cli("first --t0 1").exit_code == 2);
    CHECK(run_cli("first").exit_code == 2);
    CHECK(run_cli("first --alpha 1 --r1 2").exit_code == 2);
}

TEST_CASE("convert between parameterizations") {
    CHECK(run_cli("convert --from r --to t 12 8").out == "t0,t1\n12,24/5\n");
    CHECK(run_cli("convert --from sasaki --to t 1 1").out == "t0,t1\n1/2,1\n");
    CHECK(run_cli("convert --from t --to sasaki 1/2 1").out == "alpha,delta\n1,1\n");
    CHECK(run_cli("convert --from t --to t 3/6 2").out == "t0,t1\n1/2,2\n");
    CHECK(run_cli("convert --from r --to sasaki 1/2 1/2").out == "alpha,delta\n1/2,2\n");
}

TEST_CASE("convert refuses the parallel point toward r") {
    const CommandResult result = run_cli("convert --from t --to r 1 1");
    CHECK(result.exit_code == 1);
    CHECK(result.out.empty());
}

TEST_CASE("convert to contact parameters: irrational cases") {
    // Exact output impossible: 1/t1 == 2 is not a rational square.
    CHECK(run_cli("convert --from t --to sasaki 1/2 1/2").exit_code == 1);
    // Opting into decimals makes it printable.
    const CommandResult fixed = run_cli("--decimals 4 convert --from t --to sasaki 1/2 1/2");
    CHECK(fixed.exit_code == 0);
    CHECK(fixed.out == "alpha,delta\n0.7071,1.4142\n");
}

TEST_CASE("convert usage errors") {
    CHECK(run_cli("convert --from q --to t 1 1").exit_code == 2);
    CHECK(run_cli("convert --from t --to r 1").exit_code == 2);    // missing value
    CHECK(run_cli("convert --from t --to r 1 x").exit_code == 2);  // malformed value
}

TEST_CASE("check suites pass and report rows") {
    const CommandResult urakawa = run_cli("check --suite urakawa");
    CHECK(urakawa.exit_code == 0);
    CHECK(urakawa.out == "suite,status,counterexample\nurakawa,pass,\n");

    const CommandResult sp2 = run_cli("check --suite sp2 --depth 6");
    CHECK(sp2.exit_code == 0);

    const CommandResult oracle = run_cli("check --suite oracle --depth 6");
    CHECK(oracle.exit_code == 0);

    const CommandResult estimates = run_cli("check --suite estimates");
    CHECK(estimates.exit_code == 0);

    CHECK(run_cli("check --suite nonsense").exit_code == 2);
}

TEST_CASE("curves over a t1 range") {
    const CommandResult result = run_cli("curves --t0 1 --t1-range 1:2 --samples 3");
    CHECK(result.exit_code == 0);
    std::istringstream lines(result.out);
    std::string header;
    REQUIRE(std::getline(lines, header));
    CHECK(header.substr(0, 22) == "t1,e_0_0_0,e_2_1_0,e_2");
    std::string row;
    REQUIRE(std::getline(lines, row));
    // t1 = 1: the flat branch is 0, (2,1,0) gives 12, (2,1,1) gives 12.
    CHECK(row.substr(0, 10) == "1,0,12,12,");
    int rows = 1;
    while (std::getline(lines, row)) ++rows;
    CHECK(rows == 3);
}

TEST_CASE("curves usage errors") {
    CHECK(run_cli("curves --t0 1 --t1-range 2:1").exit_code == 2);      // empty range
    CHECK(run_cli("curves --t1-range 1:2").exit_code == 2);             // missing t0
    CHECK(run_cli("curves --t0 1 --t1-range 1:2 --samples 0").exit_code == 2);
    CHECK(run_cli("curves --t0 1 --t1-range 1-2").exit_code == 2);      // bad separator
}

TEST_CASE("curves constant-volume mode emits the curve parameters") {
    const CommandResult result =
        run_cli("curves --t1-range 1:1 --samples 1 --mode constant_volume");
    CHECK(result.exit_code == 0);
    std::istringstream lines(result.out);
    std::string header, row;
    REQUIRE(std::getline(lines, header));
    CHECK(header.substr(0, 11) == "s,t1,t0,e_0");
    REQUIRE(std::getline(lines, row));
    CHECK(row.substr(0, 8) == "1,1,1,0,");
}

TEST_CASE("json output carries the schema tag and exact rationals") {
    const CommandResult result = run_cli("--format json spectrum --t0 1/2 --t1 1 --bound 24");
    CHECK(result.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(result.out);
    CHECK(doc.at("schema") == "awspec/1");
    CHECK(doc.at("command") == "spectrum");
    CHECK(doc.at("params").at("t0").at("num") == "1");
    CHECK(doc.at("params").at("t0").at("den") == "2");
    REQUIRE(doc.at("entries").size() == 3);
    CHECK(doc.at("entries")[1].at("eigenvalue").at("num") == "16");
    CHECK(doc.at("entries")[1].at("eigenvalue").at("den") == "1");
    CHECK(doc.at("entries")[1].at("mult") == 24);
    CHECK(doc.at("entries")[1].at("triples")[0] == nlohmann::json::array({2, 1, 1}));
}

TEST_CASE("json table output") {
    const CommandResult result = run_cli("table --first 3 --format json");
    CHECK(result.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(result.out);
    REQUIRE(doc.at("rows").size() == 3);
    CHECK(doc.at("rows")[2].at("z3") == 1);
    CHECK(doc.at("rows")[2].at("h").at("num") == "4");
    CHECK(doc.at("rows")[2].at("mult") == 24);
}

TEST_CASE("decimal rendering is opt-in") {
    CHECK(run_cli("--decimals 3 convert --from r --to t 12 8").out == "t0,t1\n12.000,4.800\n");
    const CommandResult first = run_cli("--decimals 2 first --t0 1/2 --t1 1/3");
    CHECK(first.out.substr(0, 17) == "eta1,triples,regi");
    CHECK(first.out.find("24.00") != std::string::npos);
}

TEST_CASE("usage exit codes for the top level") {
    CHECK(run_cli("").exit_code == 2);            // missing subcommand
    CHECK(run_cli("frobnicate").exit_code == 2);  // unknown subcommand
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("--format yaml table --first 1").exit_code == 2);
}
