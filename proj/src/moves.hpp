#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ograph.hpp"

namespace hd {

// One pass of a rewrite pattern: a pattern-local vertex name with the sign of
// that crossing and the slot of this pass.
struct PatternPass {
    std::string vert;
    int sign = 1;
    char slot = 'o';
    bool operator==(const PatternPass& o) const {
        return vert == o.vert && sign == o.sign && slot == o.slot;
    }
};

// A move is a set of contiguous circuit runs on the left replaced by parallel
// runs on the right. Pattern vertices must have both their passes inside the
// matched runs; replacement vertices are created fresh. A left side that is a
// single empty run matches any arc (pure insertion).
struct MovePattern {
    std::string name;
    std::vector<std::vector<PatternPass>> lhs, rhs;

    bool is_insert() const { return lhs.size() == 1 && lhs[0].empty(); }
    int delta_vertices() const;
};

// The full calculus: 0-2 insert/delete, the sixteen pentagon-family moves in
// both directions, and the chirality flip in both directions. Reidemeister-
// type detour moves act trivially on Gauss codes and have no entry here.
const std::vector<MovePattern>& move_table();
const MovePattern& move_by_name(const std::string& name);

// Text form of the table; data/move_patterns.txt holds exactly this.
std::string move_table_text();
std::vector<MovePattern> parse_move_table(const std::string& text);

struct MoveSite {
    int pattern = -1;                   // index into move_table()
    std::vector<int> run_starts;        // per left run; the anchor arc for inserts
    std::vector<int> positions;         // all matched circuit positions
    std::vector<std::pair<std::string, int>> binding; // pattern vertex -> graph vertex
};

// All occurrences of the pattern's left side, in deterministic order
// (ascending run start positions).
std::vector<MoveSite> find_sites(const OGraph& g, const MovePattern& p);

// Throws StaleSite if the site no longer matches, and reports a hard error if
// the rewritten graph fails validation (that would mean a bad pattern table).
OGraph apply_move(const OGraph& g, const MovePattern& p, const MoveSite& site);

struct FuzzStep {
    std::string kind; // "start" for the initial entry
    OGraph graph;
};

// Seeded random walk over applicable moves; every intermediate graph is
// recorded and validated. Moves that would push the vertex count past the
// budget are skipped.
std::vector<FuzzStep> fuzz(const OGraph& g, std::uint64_t seed, int steps,
                           int vertex_budget = 12);

} // namespace hd
