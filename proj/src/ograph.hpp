#pragma once

#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace hd {

struct Pass {
    int v = 0;       // vertex id, 1..n
    char slot = 'o'; // 'o' = over, 'u' = under
    bool operator==(const Pass& o) const { return v == o.v && slot == o.slot; }
};

// Signed Gauss code of a closed normal o-graph: vertex signs plus the single
// oriented circuit of passes. Virtual crossings are implicit in this
// representation (detour moves act trivially on the code).
struct OGraph {
    std::string name;
    int n = 0;
    std::vector<int> sign; // size n+1, sign[v] for v in 1..n
    std::vector<Pass> circuit; // 2n passes

    int sign_of(int v) const { return sign[size_t(v)]; }
};

OGraph parse_ograph(const std::string& text);
std::string serialize(const OGraph& g);

struct ValidationReport {
    bool n1 = false; // every vertex carries a sign +/-
    bool n2 = false; // each vertex has exactly one over and one under pass
    bool c1 = false; // the passes form one circuit covering every vertex twice
    bool c2 = false; // the triangulation dual graph is connected
    bool c3 = false; // edge classes of the triangulation number n + 1
    int c3_count = -1;
    bool all() const { return n1 && n2 && c1 && c2 && c3; }
};

// C2/C3 are decided on the branched-tetrahedron model: each vertex becomes an
// ordered tetrahedron, each arc glues a face of its tail tetrahedron to a face
// of its head tetrahedron by the order-preserving vertex match. The germ-to-
// face tables are shipped in data/triangulation_tables.txt and mirrored here.
ValidationReport validate(const OGraph& g);

// face index assigned to each germ (in-over, out-over, in-under, out-under),
// keyed by crossing sign
extern const int kFaceOfGermPos[4];
extern const int kFaceOfGermNeg[4];
std::string triangulation_tables_text();

// The p-vertex positive chain presenting the lens space L(p,1);
// p = 1 gives the 3-sphere, p = 2 the real projective space.
OGraph lens(int p);

// Splice circuits at arc a of g1 and arc b of g2 (arc t = the gap after
// circuit position t), cross-joining the two codes without adding vertices.
OGraph splice(const OGraph& g1, int a, const OGraph& g2, int b);

// Connected sum. The splice site is chosen by search: first (a, b) in
// lexicographic order whose splice passes full validation and is
// Z-multiplicative for a fixed set of small selection algebras.
// (Defined in connectsum.cpp; needs the evaluator.)
OGraph connected_sum(const OGraph& g1, const OGraph& g2);

struct Pi1Presentation {
    int ngens = 0; // generators = arcs, 0..2n-1
    std::vector<std::vector<std::pair<int, int>>> rels; // words of (generator, +1/-1)
};

// Generators: arcs. Per vertex the two relations g = l and hg = k, where the
// roles (g, h, l, k) are taken from the incident germs by sign:
//   positive: (in-over, out-under, out-over, in-under)
//   negative: (in-under, in-over, out-under, out-over)
Pi1Presentation pi1(const OGraph& g);

} // namespace hd
