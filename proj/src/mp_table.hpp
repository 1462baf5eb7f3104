#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hd {

// The sixteen pentagon-family identities in the Heisenberg double, written as
// leg words: each side is a set of named crossings (barred = uses the inverse
// canonical element) plus, per tensor leg, the ordered list of (crossing,
// role) tokens whose product is that leg. Role 1 is the functional component
// (eps (x) e_i, or eps (x) S(e_i) when barred), role 2 is e^i (x) 1. Each
// crossing name carries one summation index shared across legs.
struct MPSide {
    std::vector<std::pair<std::string, bool>> crossings;          // (name, barred)
    std::vector<std::vector<std::pair<std::string, int>>> legs;   // 3 legs of (name, role)
};

struct MPIdentity {
    std::string name; // "MP1.1" .. "MP4.4"
    MPSide lhs, rhs;
};

const std::vector<MPIdentity>& mp_identities();

} // namespace hd
