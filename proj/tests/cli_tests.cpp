#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include "support.hpp"

namespace {

struct RunResult {
    int code = -1;
    std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(RACKINV_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, n);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) res.code = WEXITSTATUS(status);
    return res;
}

std::string fx(const std::string& name) { return "'" + testsup::fixture_path(name) + "'"; }

// Scratch input living next to the test binary's working directory.
std::string scratch_file(const std::string& name, const std::string& content) {
    const std::string path = "cli_scratch_" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("rack-check reports profiles") {
    const RunResult ex = run_cli("rack-check " + fx("racks/t_ex6.rack"));
    CHECK(ex.code == 0);
    CHECK(ex.output ==
          "valid rack, n=7, quandle=no, N=2\n"
          "diagonal: (4 6)(5 7)\n"
          "operator classes: {1} {2} {3} {4 6} {5 7}\n");

    const RunResult t3 = run_cli("rack-check " + fx("racks/t3.rack"));
    CHECK(t3.code == 0);
    CHECK(t3.output ==
          "valid rack, n=3, quandle=yes, N=1\n"
          "diagonal: id\n"
          "operator classes: {1 2 3}\n");

    for (const char* name : {"t1.rack", "m12.rack", "m123.rack", "m_t.rack", "z8_t3_s2.rack"}) {
        CAPTURE(name);
        CHECK(run_cli("rack-check " + fx(std::string("racks/") + name)).code == 0);
    }
}

TEST_CASE("rack-check distinguishes syntax trouble from axiom trouble") {
    const RunResult corrupt = run_cli("rack-check " + scratch_file("corrupt.rack", "x\n"));
    CHECK(corrupt.code == 2);
    CHECK(contains(corrupt.output, "line 1, column 1: expected an integer table size, got 'x'"));

    const RunResult invalid = run_cli("rack-check " + scratch_file("invalid.rack", "2\n1 1\n1 2\n"));
    CHECK(invalid.code == 1);
    CHECK(contains(invalid.output, "invalid rack"));
    CHECK(contains(invalid.output, "axiom (i): column 1 is not a permutation (value 1 repeats)"));

    const RunResult missing = run_cli("rack-check '/no/such/file.rack'");
    CHECK(missing.code == 2);
    CHECK(contains(missing.output, "cannot open"));
}

TEST_CASE("rack-cocycles lists the solution module") {
    const RunResult m12 = run_cli("rack-cocycles " + fx("racks/m12.rack") + " --mod 2");
    CHECK(m12.code == 0);
    CHECK(contains(m12.output, "solutions: 2\ngenerators: 1\n# generator 1 (order 2)\n"));

    const RunResult trivial = run_cli("rack-cocycles " + fx("racks/t1.rack") + " --mod 5");
    CHECK(trivial.code == 0);
    CHECK(contains(trivial.output, "solutions: 1\ngenerators: 0\n"));

    const RunResult mt =
        run_cli("rack-cocycles " + fx("racks/m_t.rack") + " --mod 13 --all-up-to 30000");
    CHECK(mt.code == 0);
    CHECK(contains(mt.output, "solutions: 28561\n"));
    CHECK(contains(mt.output, "generators: 4\n"));
    // The shipped cochain must appear among the materialized solutions.
    CHECK(contains(mt.output, "0 1 0 1\n0 0 0 0\n0 1 0 1\n0 0 0 0\n"));

    CHECK(run_cli("rack-cocycles " + fx("racks/m12.rack") + " --mod 1").code == 2);
    CHECK(run_cli("rack-cocycles " + fx("racks/m12.rack")).code == 2);
}

TEST_CASE("link-info summarizes diagrams") {
    const RunResult trefoil = run_cli("link-info " + fx("links/trefoil.gauss"));
    CHECK(trefoil.code == 0);
    CHECK(trefoil.output == "components=1, sw=(3), arcs=3\n");

    CHECK(run_cli("link-info " + fx("links/unknot.gauss")).output ==
          "components=1, sw=(0), arcs=1\n");
    CHECK(run_cli("link-info " + fx("links/hopf.gauss")).output ==
          "components=2, sw=(0,0), lk(1,2)=1, arcs=2\n");
    CHECK(run_cli("link-info " + fx("links/t42.gauss")).output ==
          "components=2, sw=(0,0), lk(1,2)=2, arcs=4\n");
    CHECK(run_cli("link-info " + fx("links/virtual_pair_a.gauss")).output ==
          "components=2, sw=(0,0), lk(1,2)=n/a, arcs=2\n");

    const RunResult bad = run_cli("link-info " + scratch_file("bad.gauss", "X1+\n"));
    CHECK(bad.code == 2);
    CHECK(contains(bad.output, "malformed visit"));
}

TEST_CASE("invariant computes the three state sums") {
    const RunResult ir = run_cli("invariant ir " + fx("racks/t_ex6.rack") + " " +
                                 fx("links/trefoil.gauss"));
    CHECK(ir.code == 0);
    CHECK(ir.output == "22\n");

    const RunResult pr =
        run_cli("invariant pr " + fx("racks/m12.rack") + " " + fx("links/hopf.gauss"));
    CHECK(pr.code == 0);
    CHECK(pr.output == "4q1q2\n(1,1) 0 4\n");

    const RunResult quiet = run_cli("invariant pr " + fx("racks/m12.rack") + " " +
                                    fx("links/hopf.gauss") + " --quiet");
    CHECK(quiet.code == 0);
    CHECK(quiet.output == "4q1q2\n");

    const RunResult phi =
        run_cli("invariant phi " + fx("racks/m_t.rack") + " " + fx("links/t42.gauss") +
                " --cocycle " + fx("cochains/mt_z13.cochain"));
    CHECK(phi.code == 0);
    CHECK(phi.output == "8 + 8z^2\n(0,0) 0 8\n(0,0) 2 8\n");

    const RunResult unlink =
        run_cli("invariant phi " + fx("racks/m_t.rack") + " " + fx("links/unlink2.gauss") +
                " --cocycle " + fx("cochains/mt_z13.cochain") + " --quiet");
    CHECK(unlink.code == 0);
    CHECK(unlink.output == "16\n");
}

TEST_CASE("invariant refuses bad inputs with the right exit codes") {
    const RunResult no_cocycle =
        run_cli("invariant phi " + fx("racks/m_t.rack") + " " + fx("links/t42.gauss"));
    CHECK(no_cocycle.code == 2);
    CHECK(contains(no_cocycle.output, "needs --cocycle"));

    const std::string ones = scratch_file("ones.cochain", "4 13\n1 1 1 1\n1 1 1 1\n1 1 1 1\n1 1 1 1\n");
    const RunResult inadmissible = run_cli("invariant phi " + fx("racks/m_t.rack") + " " +
                                           fx("links/t42.gauss") + " --cocycle " + ones);
    CHECK(inadmissible.code == 1);
    CHECK(contains(inadmissible.output, "not reduced"));

    const std::string badrack = scratch_file("badrack.rack", "2\n1 1\n1 2\n");
    const RunResult invalid =
        run_cli("invariant ir " + badrack + " " + fx("links/trefoil.gauss"));
    CHECK(invalid.code == 1);
    CHECK(contains(invalid.output, "invalid rack"));

    CHECK(run_cli("invariant xx " + fx("racks/m12.rack") + " " + fx("links/hopf.gauss")).code ==
          2);
}

TEST_CASE("usage errors and help") {
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("no-such-command").code == 2);

    const RunResult help = run_cli("--help");
    CHECK(help.code == 0);
    CHECK(contains(help.output, "rack-check"));
    CHECK(contains(help.output, "invariant"));
}

TEST_CASE("identical invocations produce identical bytes") {
    const std::string args = "invariant phi " + fx("racks/m_t.rack") + " " +
                             fx("links/virtual_pair_b.gauss") + " --cocycle " +
                             fx("cochains/mt_z13.cochain");
    const RunResult first = run_cli(args);
    const RunResult second = run_cli(args);
    CHECK(first.code == 0);
    CHECK(first.output == second.output);
    CHECK(first.output == "4 + 4z^12 + 8q1\n(0,0) 0 4\n(0,0) 12 4\n(1,0) 0 8\n");

    const std::string search = "rack-cocycles " + fx("racks/m_t.rack") + " --mod 13";
    CHECK(run_cli(search).output == run_cli(search).output);
}
