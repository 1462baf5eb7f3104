#include "mp_table.hpp"

namespace hd {

namespace {

struct Factor {
    bool barred;
    int a, b; // legs carrying role 1 and role 2
};

// Product of two-leg factors, e.g. {T(2,3), T(1,3)} = T_{23} T_{13}:
// factor n contributes (c<n>, role 1) to leg a and (c<n>, role 2) to leg b,
// appended in product order.
MPSide expand(std::vector<Factor> factors) {
    MPSide s;
    s.legs.resize(3);
    int n = 0;
    for (const auto& f : factors) {
        std::string nm = "c" + std::to_string(n++);
        s.crossings.emplace_back(nm, f.barred);
        s.legs[f.a - 1].emplace_back(nm, 1);
        s.legs[f.b - 1].emplace_back(nm, 2);
    }
    return s;
}

Factor T(int a, int b) { return {false, a, b}; }
Factor B(int a, int b) { return {true, a, b}; }

MPSide explicit_side(std::vector<std::pair<std::string, bool>> crossings,
                     std::vector<std::vector<std::pair<std::string, int>>> legs) {
    return MPSide{std::move(crossings), std::move(legs)};
}

std::vector<MPIdentity> build() {
    std::vector<MPIdentity> v;
    auto add = [&](const char* nm, MPSide l, MPSide r) {
        v.push_back({nm, std::move(l), std::move(r)});
    };
    add("MP1.1", expand({T(2, 3), T(1, 3)}), expand({B(2, 1), T(1, 3), T(2, 1)}));
    add("MP1.2", expand({B(1, 3), B(2, 3)}), expand({B(2, 1), B(1, 3), T(2, 1)}));
    add("MP1.3", expand({B(2, 3), T(1, 3)}),
        explicit_side({{"t", false}, {"p", false}, {"b", true}},
                      {{{"p", 2}, {"t", 1}, {"b", 2}}, {{"b", 1}, {"p", 1}}, {{"t", 2}}}));
    add("MP1.4", expand({B(1, 3), T(2, 3)}),
        explicit_side({{"t", false}, {"bp", true}, {"b", true}},
                      {{{"t", 2}, {"bp", 1}, {"b", 2}}, {{"b", 1}, {"t", 1}}, {{"bp", 2}}}));
    add("MP2.1", expand({B(3, 2), B(3, 1)}), expand({T(1, 2), B(3, 1), B(1, 2)}));
    add("MP2.2", expand({T(3, 1), T(3, 2)}), expand({T(1, 2), T(3, 1), B(1, 2)}));
    add("MP2.3", expand({T(3, 2), B(3, 1)}),
        explicit_side({{"t", false}, {"b", true}, {"bp", true}},
                      {{{"bp", 1}, {"b", 2}, {"t", 1}}, {{"t", 2}, {"bp", 2}}, {{"b", 1}}}));
    add("MP2.4", expand({T(3, 1), B(3, 2)}),
        explicit_side({{"t", false}, {"tp", false}, {"b", true}},
                      {{{"b", 1}, {"tp", 2}, {"t", 1}}, {{"t", 2}, {"b", 2}}, {{"tp", 1}}}));
    add("MP3.1", expand({T(2, 3), B(3, 1)}), expand({B(3, 1), T(2, 3), T(2, 1)}));
    add("MP3.2", expand({B(2, 3), B(3, 1)}), expand({B(3, 1), B(2, 1), B(2, 3)}));
    add("MP3.3", expand({T(2, 3), T(3, 1)}),
        explicit_side({{"t", false}, {"tp", false}, {"b", true}},
                      {{{"b", 2}, {"tp", 2}}, {{"t", 1}, {"b", 1}}, {{"tp", 1}, {"t", 2}}}));
    add("MP3.4", expand({B(2, 3), T(3, 1)}), expand({T(2, 1), T(3, 1), B(2, 3)}));
    add("MP4.1", expand({T(3, 1), B(2, 3)}), expand({B(2, 1), B(2, 3), T(3, 1)}));
    add("MP4.2", expand({T(3, 1), T(2, 3)}), expand({T(2, 3), T(2, 1), T(3, 1)}));
    add("MP4.3", expand({B(3, 1), B(2, 3)}),
        explicit_side({{"t", false}, {"b", true}, {"bp", true}},
                      {{{"b", 2}, {"t", 2}}, {{"t", 1}, {"bp", 1}}, {{"bp", 2}, {"b", 1}}}));
    add("MP4.4", expand({B(3, 1), T(2, 3)}), expand({T(2, 3), B(3, 1), B(2, 1)}));
    return v;
}

} // namespace

const std::vector<MPIdentity>& mp_identities() {
    static const std::vector<MPIdentity> table = build();
    return table;
}

} // namespace hd
