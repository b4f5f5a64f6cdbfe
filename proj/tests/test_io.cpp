#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "ulc/io.hpp"

using namespace ulc;

namespace {

const char* kSample =
    "# a comment\n"
    "ulc 1\n"
    "n 3 m 2 sigma 2 k 1\n"
    "v 2 tau 2\n"
    "undeletable 3\n"
    "e 1 2 2 1\n"
    "e 2 3 1 2\n";

Instance sample() {
    std::istringstream in(kSample);
    return parse_instance(in);
}

}  // namespace

TEST_CASE("parse_instance reads header, tau, undeletable and edges") {
    Instance inst = sample();
    CHECK(inst.n() == 3);
    CHECK(inst.m() == 2);
    CHECK(inst.s() == 2);
    CHECK(inst.k == 1);
    CHECK(inst.tau[1] == tau_full(2));
    CHECK(inst.tau[2] == tau_single(2));
    CHECK(inst.undeletable[3]);
    CHECK(!inst.undeletable[1]);
    CHECK(inst.topo->edges[0].perm == Permutation::swap12(2));
    CHECK(inst.topo->edges[1].perm == Permutation::identity(2));
}

TEST_CASE("serialize then parse is the identity") {
    Instance inst = sample();
    std::ostringstream out;
    serialize_instance(out, inst, {"roundtrip check"});
    CHECK(out.str().find("# roundtrip check") != std::string::npos);
    std::istringstream in(out.str());
    Instance back = parse_instance(in);
    CHECK(back == inst);
    CHECK(back.undeletable == inst.undeletable);
}

TEST_CASE("parse errors carry the offending line number") {
    auto parse = [](const char* text) {
        std::istringstream in(text);
        return parse_instance(in);
    };
    try {
        parse("nonsense\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
    }
    try {
        parse("ulc 1\nn 2 m 1 sigma 2 k 0\ne 1 2 1 1\n");
        FAIL("expected a parse error");  // not a permutation
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
    try {
        parse("ulc 1\nn 2 m 1 sigma 2 k 0\nv 5 tau 1\ne 1 2 1 2\n");
        FAIL("expected a parse error");  // vertex id out of range
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
    try {
        parse("ulc 1\nn 2 m 2 sigma 2 k 0\ne 1 2 1 2\n");
        FAIL("expected a parse error");  // fewer edges than promised
    } catch (const ParseError& e) {
        CHECK(e.line >= 3);
    }
}

TEST_CASE("solution round trip, YES and NO") {
    Solution sol;
    sol.yes = true;
    sol.deletions = {2};
    sol.labels = {0, 1, 0, 2};
    std::ostringstream out;
    serialize_solution(out, sol);
    std::istringstream in(out.str());
    Solution back = parse_solution(in);
    CHECK(back.yes);
    CHECK(back.deletions == sol.deletions);
    CHECK(back.labels == sol.labels);

    Solution no;
    std::ostringstream out2;
    serialize_solution(out2, no);
    std::istringstream in2(out2.str());
    CHECK(!parse_solution(in2).yes);
}

TEST_CASE("aux graph export has n*s vertices and m*s edges") {
    Instance inst = sample();
    std::ostringstream out;
    write_aux_graph(out, inst);
    std::istringstream in(out.str());
    std::string word;
    int nv, ne;
    in >> word >> nv >> ne;
    CHECK(word == "aux");
    CHECK(nv == 3 * 2);
    CHECK(ne == 2 * 2);
    int lines = 0, a, b;
    while (in >> a >> b) {
        CHECK(a < b);
        ++lines;
    }
    CHECK(lines == ne);
}
