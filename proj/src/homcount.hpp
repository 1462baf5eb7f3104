#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hopf.hpp"
#include "ograph.hpp"

namespace hd {

// Number of group homomorphisms pi_1 -> G by backtracking over generator
// images. Two-term relations are folded into a union-find first; the
// remaining relations are all of the shape c(h) c(g) = c(k) and are
// propagated eagerly, so the search only branches on genuinely free
// generators. node_budget caps the number of tentative assignments.
std::uint64_t count_homs(const Pi1Presentation& P, const GroupTable& G,
                         std::uint64_t node_budget = 50'000'000);

// H_1 as (free rank, invariant factors > 1), via Smith normal form of the
// abelianized relation matrix.
std::pair<int, std::vector<long>> abelianization(const Pi1Presentation& P);

} // namespace hd
