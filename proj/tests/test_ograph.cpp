#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "homcount.hpp"
#include "ograph.hpp"

using namespace hd;

TEST_CASE("parse and serialize round trip") {
    std::string text = "ograph demo\nn 2\nsign 1 +\nsign 2 -\ncircuit 1o 2u 1u 2o\n";
    OGraph g = parse_ograph(text);
    CHECK(g.name == "demo");
    CHECK(g.n == 2);
    CHECK(g.sign_of(1) == 1);
    CHECK(g.sign_of(2) == -1);
    REQUIRE(g.circuit.size() == 4);
    CHECK(g.circuit[0] == Pass{1, 'o'});
    CHECK(g.circuit[1] == Pass{2, 'u'});
    CHECK(parse_ograph(serialize(g)).circuit == g.circuit);
    // comments and loose whitespace are fine
    OGraph g2 = parse_ograph("# a comment\nograph demo\nn 2\nsign 1 +\nsign 2 -\n"
                             "circuit 1o 2u\n  1u 2o  # trailing\n");
    CHECK(g2.circuit == g.circuit);
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_ograph(""), ParseError);
    CHECK_THROWS_AS(parse_ograph("ograph x\nn 1\nsign 1 +\ncircuit 1o\n"), ParseError);
    CHECK_THROWS_AS(parse_ograph("ograph x\nn 1\nsign 1 +\ncircuit 1o 1o\n"), ParseError);
    CHECK_THROWS_AS(parse_ograph("ograph x\nn 1\nsign 1 *\ncircuit 1o 1u\n"), ParseError);
    CHECK_THROWS_AS(parse_ograph("ograph x\nn 1\nsign 2 +\ncircuit 1o 1u\n"), ParseError);
    CHECK_THROWS_AS(parse_ograph("ograph x\nn 1\nsign 1 +\nsign 1 +\ncircuit 1o 1u\n"),
                    ParseError);
}

TEST_CASE("lens graphs validate") {
    for (int p = 1; p <= 6; ++p) {
        OGraph g = lens(p);
        CHECK(g.n == p);
        ValidationReport r = validate(g);
        INFO("lens " << p);
        CHECK(r.all());
        CHECK(r.c3_count == p + 1);
    }
}

TEST_CASE("every 1-vertex code passes, a 2-vertex witness fails C2/C3") {
    for (int s : {+1, -1})
        for (bool over_first : {true, false}) {
            OGraph g;
            g.n = 1;
            g.sign = {0, s};
            g.circuit = over_first ? std::vector<Pass>{{1, 'o'}, {1, 'u'}}
                                   : std::vector<Pass>{{1, 'u'}, {1, 'o'}};
            INFO("sign " << s << " over_first " << over_first);
            CHECK(validate(g).all());
        }
    OGraph w;
    w.n = 2;
    w.sign = {0, +1, -1};
    w.circuit = {{1, 'o'}, {1, 'u'}, {2, 'o'}, {2, 'u'}};
    ValidationReport r = validate(w);
    CHECK(r.n1);
    CHECK(r.n2);
    CHECK(r.c1);
    CHECK_FALSE(r.c2);
    CHECK_FALSE(r.c3);
}

TEST_CASE("germ-to-face tables match the shipped data file") {
    std::ifstream in(HD_DATA_DIR "/triangulation_tables.txt", std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == triangulation_tables_text());
}

TEST_CASE("pi1 of lens spaces") {
    for (int p = 1; p <= 6; ++p) {
        Pi1Presentation P = pi1(lens(p));
        CHECK(P.ngens == 2 * p);
        CHECK(P.rels.size() == size_t(2 * p));
        auto [rank, tors] = abelianization(P);
        INFO("lens " << p);
        CHECK(rank == 0);
        if (p == 1) {
            CHECK(tors.empty());
        } else {
            REQUIRE(tors.size() == 1);
            CHECK(tors[0] == p);
        }
    }
}

TEST_CASE("splice concatenates the codes crosswise") {
    OGraph g = splice(lens(2), 1, lens(3), 0);
    CHECK(g.n == 5);
    CHECK(g.circuit.size() == 10);
    // vertices of the second summand are shifted past those of the first
    int seen_high = 0;
    for (const auto& p : g.circuit)
        if (p.v > 2) ++seen_high;
    CHECK(seen_high == 6);
    ValidationReport r = validate(g);
    CHECK(r.n1);
    CHECK(r.n2);
    CHECK(r.c1);
}
