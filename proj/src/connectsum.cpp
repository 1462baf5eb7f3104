#include "evaluator.hpp"
#include "ograph.hpp"

namespace hd {

namespace {

// Splicing two codes does not always yield a code of the connected sum: most
// sites break the branched-triangulation conditions or change the manifold.
// We select the site by search, gating on full validation plus exact
// multiplicativity of Z over a fixed family of small algebras (the cyclic
// group algebras of orders 2 and 3 and their duals separate every bad site
// seen in testing).
const std::vector<HContext>& selection_contexts() {
    static const std::vector<HContext> ctxs = [] {
        std::vector<HContext> v;
        v.emplace_back(group_algebra(cyclic_group(2), 0, "QZ2"));
        v.emplace_back(group_algebra(cyclic_group(3), 0, "QZ3"));
        v.emplace_back(dual(group_algebra(cyclic_group(2), 0, "QZ2")));
        v.emplace_back(dual(group_algebra(cyclic_group(3), 0, "QZ3")));
        return v;
    }();
    return ctxs;
}

} // namespace

OGraph connected_sum(const OGraph& g1, const OGraph& g2) {
    if (!validate(g1).all())
        throw ShapeError("connected sum: first operand fails validation");
    if (!validate(g2).all())
        throw ShapeError("connected sum: second operand fails validation");
    const auto& ctxs = selection_contexts();
    std::vector<Scalar> want;
    for (const auto& ctx : ctxs)
        want.push_back(evaluate_network(ctx, rotate_for_width(g1)) *
                       evaluate_network(ctx, rotate_for_width(g2)));
    for (int a = 0; a < 2 * g1.n; ++a) {
        for (int b = 0; b < 2 * g2.n; ++b) {
            OGraph cand = splice(g1, a, g2, b);
            if (!validate(cand).all()) continue;
            bool ok = true;
            OGraph rot = rotate_for_width(cand);
            for (size_t t = 0; t < ctxs.size() && ok; ++t)
                ok = evaluate_network(ctxs[t], rot) == want[t];
            if (ok) {
                cand.name = (g1.name.empty() ? "g1" : g1.name) + "#" +
                            (g2.name.empty() ? "g2" : g2.name);
                return cand;
            }
        }
    }
    throw ShapeError("connected sum: no admissible splice site found");
}

} // namespace hd
