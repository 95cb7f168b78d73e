#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "quiverkit/cli.hpp"
#include "quiverkit/report.hpp"

using namespace quiverkit;

namespace {

struct CliResult {
    int rc;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int rc = run_cli(args, out, err);
    return {rc, out.str(), err.str()};
}

/// Drops a fixture next to the test binary and returns its path.
std::string write_file(const std::string& name, const std::string& content) {
    std::string path = "cli_fixture_" + name;
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f << content;
    return path;
}

const std::string kCycle3 =
    "vertex v0\nvertex v1\nvertex v2\n"
    "edge f0 v0 v1\nedge f1 v1 v2\nedge f2 v2 v0\n";

const std::string kLine3 =
    "vertex v1\nvertex v2\nvertex v3\n"
    "edge f1 v1 v2\nedge f2 v2 v3\n";

const std::string kCycle2WithExit =
    "vertex v0\nvertex v1\nvertex w\n"
    "edge f0 v0 v1\nedge f1 v1 v0\nedge g0 v0 w\n";

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("classify text output") {
    std::string c3 = write_file("c3.graph", kCycle3);
    CliResult r = run({"classify", c3});
    CHECK(r.rc == 0);
    CHECK(r.err.empty());
    CHECK(contains(r.out, "prime: true\n"));
    CHECK(contains(r.out, "primitive: false\n"));
    CHECK(contains(r.out, "noetherian_left: true\n"));
    CHECK(contains(r.out, "noetherian_right: true\n"));
    CHECK(contains(r.out, "witness primitive: exitless-cycle [f0 f1 f2]\n"));
    CHECK(contains(r.out, "decomposition: Cycle(3) {v0 v1 v2}\n"));
    CHECK(contains(r.out, "noether invariant (left): n0=0, cycles={3}\n"));
    CHECK(contains(r.out, "noether invariant (right): n0=0, cycles={3}\n"));

    std::string line = write_file("line3.graph", kLine3);
    CliResult l = run({"classify", line});
    CHECK(l.rc == 0);
    CHECK(contains(l.out, "artinian: true\n"));
    CHECK(contains(l.out, "semiprime: false\n"));
    CHECK(contains(l.out, "witness semiprime: no-return-edge [f1]\n"));
    CHECK(contains(l.out, "noether invariant (left): n0=3, cycles={}\n"));
}

TEST_CASE("classify json round trips through the report parser") {
    std::string c3 = write_file("c3.graph", kCycle3);
    CliResult r = run({"--format", "json", "classify", c3});
    CHECK(r.rc == 0);
    ClassificationReport parsed = report_from_json(r.out);
    ClassificationReport direct = classification_report(parse_graph(kCycle3));
    CHECK(parsed == direct);
    CHECK(contains(r.out, "\"decomposition\""));
    CHECK(contains(r.out, "\"noether_invariant_left\""));
    CHECK(contains(r.out, "\"cycle_length\": 3"));
}

TEST_CASE("repeat runs are byte identical") {
    std::string ce = write_file("ce.graph", kCycle2WithExit);
    CliResult a = run({"classify", ce});
    CliResult b = run({"classify", ce});
    CHECK(a.out == b.out);
    CliResult ja = run({"--format", "json", "classify", ce});
    CliResult jb = run({"--format", "json", "classify", ce});
    CHECK(ja.out == jb.out);
}

TEST_CASE("eval operations") {
    std::string c3 = write_file("c3.graph", kCycle3);
    CliResult mul = run({"eval", c3, "mul", "f0.f1.f2", "f0"});
    CHECK(mul.rc == 0);
    CHECK(mul.out == "f0.f1.f2.f0\n");

    CliResult add = run({"eval", c3, "add", "v0", "- v0"});
    CHECK(add.rc == 0);
    CHECK(add.out == "0\n");

    std::string line = write_file("line3.graph", kLine3);
    CliResult rad = run({"eval", line, "radical-test", "f1"});
    CHECK(rad.rc == 0);
    CHECK(rad.out == "true\n");
    CliResult radv = run({"eval", line, "radical-test", "v1 + f1"});
    CHECK(radv.rc == 0);
    CHECK(radv.out == "false\n");

    CliResult pe = run({"eval", line, "peirce", "f1 + f2 + v1", "v1", "v2"});
    CHECK(pe.rc == 0);
    CHECK(pe.out == "f1\n");
}

TEST_CASE("eval over a prime field") {
    std::string c3 = write_file("c3.graph", kCycle3);
    CliResult r = run({"--field", "fp:101", "eval", c3, "mul", "1/2*v0", "v0"});
    CHECK(r.rc == 0);
    CHECK(r.out == "51*v0\n");
}

TEST_CASE("cycle embed prints the polynomial matrix") {
    CliResult v1 = run({"cycle", "3", "embed", "v1"});
    CHECK(v1.rc == 0);
    CHECK(v1.out == "0 0 0\n0 1 0\n0 0 0\n");

    CliResult loop = run({"cycle", "1", "embed", "f0"});
    CHECK(loop.rc == 0);
    CHECK(loop.out == "x\n");

    CliResult arc = run({"cycle", "2", "embed", "f1"});
    CHECK(arc.rc == 0);
    CHECK(arc.out == "0 0\nx 0\n");
}

TEST_CASE("cycle closure decomposes a rational matrix") {
    std::string m =
        write_file("m2.txt", "(1)/(x) (1)/(x)\n(1)/(x) (1)/(x)\n");
    CliResult r = run({"cycle", "2", "closure", m});
    CHECK(r.rc == 0);
    CHECK(contains(r.out, "element: f1 + f0.f1 + f1.f0 + f0.f1.f0\n"));
    CHECK(contains(r.out, "q: x^2\n"));
    CHECK(contains(r.out, "round trip: ok\n"));

    CliResult j = run({"--format", "json", "cycle", "2", "closure", m});
    CHECK(j.rc == 0);
    CHECK(contains(j.out, "\"q\": \"x^2\""));
    CHECK(contains(j.out, "\"round_trip\": true"));
}

TEST_CASE("export-dot matches the frozen rendering") {
    std::string ce = write_file("ce.graph", kCycle2WithExit);
    CliResult r = run({"export-dot", ce});
    CHECK(r.rc == 0);
    CHECK(r.out ==
          "digraph G {\n"
          "  subgraph cluster_0 {\n"
          "    \"v0\";\n"
          "    \"v1\";\n"
          "  }\n"
          "  \"w\";\n"
          "  \"v0\" -> \"v1\" [label=\"f0\"];\n"
          "  \"v1\" -> \"v0\" [label=\"f1\"];\n"
          "  \"v0\" -> \"w\" [label=\"g0\", style=dashed];\n"
          "}\n");
}

TEST_CASE("audit passes on small graphs") {
    for (const std::string& text : {kCycle3, kLine3, kCycle2WithExit}) {
        std::string f = write_file("audit.graph", text);
        CliResult r = run({"audit", f});
        CHECK(r.rc == 0);
        CHECK(contains(r.out, "audit: all checks passed\n"));
        CHECK(!contains(r.out, "MISMATCH"));
    }
    // The acyclic case exercises the trace-form radical cross-check.
    std::string line = write_file("line3.graph", kLine3);
    CliResult tq = run({"audit", line});
    CHECK(contains(tq.out, "audit radical (trace form): ok, dimension 3\n"));
    CliResult tf = run({"--field", "fp:7", "audit", line});
    CHECK(tf.rc == 0);
    CHECK(contains(tf.out, "audit radical (nilpotency): ok\n"));
}

TEST_CASE("exit code 2 covers usage and parse errors") {
    CliResult none = run({});
    CHECK(none.rc == 2);

    CliResult bogus = run({"bogus"});
    CHECK(bogus.rc == 2);

    std::string bad = write_file("bad.graph", "vertex a\nedge broken a\n");
    CliResult parse = run({"classify", bad});
    CHECK(parse.rc == 2);
    CHECK(contains(parse.err, "line 2"));
    CHECK(contains(parse.err, "column 1"));

    CliResult missing = run({"classify", "no_such_file.graph"});
    CHECK(missing.rc == 2);
    CHECK(contains(missing.err, "cannot read file"));

    CliResult field = run({"--field", "fp:4", "classify", bad});
    CHECK(field.rc == 2);
    CHECK(contains(field.err, "prime"));
    CliResult fieldtxt = run({"--field", "gf9", "classify", bad});
    CHECK(fieldtxt.rc == 2);

    std::string c3 = write_file("c3.graph", kCycle3);
    CliResult expr = run({"eval", c3, "mul", "v0", "1/0*v1"});
    CHECK(expr.rc == 2);
    CHECK(contains(expr.err, "division by zero"));

    CliResult help = run({"--help"});
    CHECK(help.rc == 0);
    CHECK(contains(help.out, "classify"));
}

TEST_CASE("exit code 3 signals an exceeded cap") {
    std::string rose = write_file("rose.graph", "vertex r\nedge a r r\nedge b r r\n");
    CliResult r = run({"--cycle-cap", "1", "classify", rose});
    CHECK(r.rc == 3);
    CHECK(contains(r.err, "cap"));
}

TEST_CASE("exit code 4 signals a failed precondition") {
    std::string c3 = write_file("c3.graph", kCycle3);
    CliResult r = run({"eval", c3, "peirce", "v0", "v0", "nosuch"});
    CHECK(r.rc == 4);
    CHECK(contains(r.err, "unknown vertex 'nosuch'"));
}
