#include <doctest.h>

#include <sstream>

#include "wreathlab/cli.hpp"

using wreathlab::run_cli;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("info renders invariants") {
    CliRun r = run({"info", "S3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("order: 6") != std::string::npos);
    CHECK(r.out.find("dg: 1") != std::string::npos);
    CHECK(r.out.find("derived length: 2") != std::string::npos);
    CHECK(r.out.find("semiabelian: yes") != std::string::npos);

    CliRun w = run({"info", "wr(C2,C2;desc)"});
    CHECK(w.code == 0);
    CHECK(w.out.find("order: 8") != std::string::npos);
    CHECK(w.out.find("dg: 2") != std::string::npos);
}

TEST_CASE("info json carries the schema fields") {
    CliRun r = run({"info", "C6", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"order\": 6") != std::string::npos);
    CHECK(r.out.find("\"dg_p\"") != std::string::npos);
    CHECK(r.out.find("\"seed\"") != std::string::npos);
}

TEST_CASE("trivial input is rejected with a pointer to the E atom") {
    CliRun r = run({"info", "C1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("E") != std::string::npos);
    CHECK(run({"info", "E"}).code == 0);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"info"}).code == 2);
    CHECK(run({"verify", "bogus-suite"}).code == 2);
    CHECK(run({"realize", "1"}).code == 2);
}

TEST_CASE("caps exit with 3") {
    CliRun r = run({"info", "wr(C2,C2,C2;desc)", "--element-cap", "100"});
    CHECK(r.code == 3);
    CHECK(r.err.find("cap") != std::string::npos);
}

TEST_CASE("wl command renders certificates") {
    CliRun r = run({"wl", "D4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("wl: 2 (exact") != std::string::npos);
    CHECK(r.out.find("wl = dg: yes") != std::string::npos);

    CliRun s = run({"wl", "S3", "--format", "json"});
    CHECK(s.code == 0);
    CHECK(s.out.find("\"exact\": 2") != std::string::npos);
    CHECK(s.out.find("\"wl_equals_dg\": false") != std::string::npos);
}

TEST_CASE("realize prints the conductor record") {
    CliRun r = run({"realize", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("p = 5") != std::string::npos);
    CHECK(r.out.find("1 ramified prime") != std::string::npos);
}

TEST_CASE("survey output is deterministic in-process") {
    CliRun a = run({"survey", "--max-order", "8", "--format", "json"});
    CliRun b = run({"survey", "--max-order", "8", "--format", "json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"label\": \"Q8\"") != std::string::npos);
    // the wreath row records its isomorphism with the earlier dihedral row
    CHECK(a.out.find("\"iso_to\": \"D4\"") != std::string::npos);
}

TEST_CASE("survey tsv has one row per catalog group") {
    CliRun r = run({"survey", "--max-order", "6", "--format", "tsv"});
    CHECK(r.code == 0);
    int lines = 0;
    for (char c : r.out)
        if (c == '\n') ++lines;
    CHECK(lines == 10);  // header + E, C2, C3, C2*C2, C4, C5, C6, D3, S3
    CHECK(r.out.find("S3\t6") != std::string::npos);
}

TEST_CASE("verify command reports per-check results and honors exit codes") {
    CliRun r = run({"verify", "functorial", "--tuple-budget", "100000"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[pass]") != std::string::npos);
    CHECK(r.out.find("0 failed") != std::string::npos);
}

TEST_CASE("empty survey selection exits cleanly") {
    CliRun r = run({"survey", "--max-order", "0"});
    CHECK(r.code == 0);
}
