#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "moves.hpp"

using namespace hd;

namespace {
std::string slurp(const char* path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
} // namespace

TEST_CASE("table shape: 0-2 pair, 16 moves both ways, chirality flip both ways") {
    const auto& tab = move_table();
    CHECK(tab.size() == 2 + 32 + 2);
    std::set<std::string> names;
    for (const auto& m : tab) names.insert(m.name);
    CHECK(names.size() == tab.size());
    CHECK(move_by_name("ZeroTwo-insert").is_insert());
    CHECK(move_by_name("ZeroTwo-insert").delta_vertices() == 2);
    CHECK(move_by_name("ZeroTwo-delete").delta_vertices() == -2);
    CHECK(move_by_name("MP1.1-forward").delta_vertices() == 1);
    CHECK(move_by_name("MP1.1-backward").delta_vertices() == -1);
    CHECK(move_by_name("CP-forward").delta_vertices() == 0);
    CHECK_THROWS(move_by_name("no-such-move"));
}

TEST_CASE("shipped pattern file matches the builtin table") {
    std::string text = slurp(HD_DATA_DIR "/move_patterns.txt");
    CHECK(text == move_table_text());
    auto parsed = parse_move_table(text);
    const auto& tab = move_table();
    REQUIRE(parsed.size() == tab.size());
    for (size_t i = 0; i < tab.size(); ++i) {
        CHECK(parsed[i].name == tab[i].name);
        CHECK(parsed[i].lhs == tab[i].lhs);
        CHECK(parsed[i].rhs == tab[i].rhs);
    }
}

TEST_CASE("0-2 insert then delete restores the graph") {
    OGraph g = lens(2);
    const auto& ins = move_by_name("ZeroTwo-insert");
    const auto& del = move_by_name("ZeroTwo-delete");
    auto sites = find_sites(g, ins);
    CHECK(sites.size() == g.circuit.size()); // one anchor per arc
    for (const auto& site : sites) {
        OGraph big = apply_move(g, ins, site);
        CHECK(big.n == 4);
        CHECK(validate(big).all());
        auto back = find_sites(big, del);
        REQUIRE(!back.empty());
        OGraph small = apply_move(big, del, back[0]);
        CHECK(small.n == 2);
        CHECK(small.circuit == g.circuit);
        CHECK(small.sign == g.sign);
    }
}

TEST_CASE("stale sites are rejected") {
    OGraph g = lens(3);
    const auto& del = move_by_name("ZeroTwo-delete");
    const auto& ins = move_by_name("ZeroTwo-insert");
    OGraph big = apply_move(g, ins, find_sites(g, ins)[0]);
    auto sites = find_sites(big, del);
    REQUIRE(!sites.empty());
    OGraph other = apply_move(big, ins, find_sites(big, ins)[3]);
    CHECK_THROWS_AS(apply_move(other, del, sites[0]), StaleSite);
}

TEST_CASE("every move preserves validity") {
    // exhaustive over all sites of all patterns on two seed graphs
    for (int p : {2, 3}) {
        OGraph g = lens(p);
        for (const auto& m : move_table())
            for (const auto& site : find_sites(g, m)) {
                OGraph h = apply_move(g, m, site);
                INFO(m.name << " on lens " << p);
                CHECK(validate(h).all());
                CHECK(h.n == g.n + m.delta_vertices());
            }
    }
}

TEST_CASE("fuzz walk is seeded and in-budget") {
    OGraph g = lens(2);
    auto a = fuzz(g, 7, 25);
    auto b = fuzz(g, 7, 25);
    REQUIRE(a.size() == b.size());
    CHECK(a.size() == 26);
    CHECK(a[0].kind == "start");
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].kind == b[i].kind);
        CHECK(a[i].graph.circuit == b[i].graph.circuit);
        CHECK(a[i].graph.n <= 12);
        CHECK(validate(a[i].graph).all());
    }
    auto c = fuzz(g, 8, 25);
    bool differs = c.size() != a.size();
    for (size_t i = 0; !differs && i < a.size(); ++i)
        differs = !(a[i].graph.circuit == c[i].graph.circuit);
    CHECK(differs);
}
