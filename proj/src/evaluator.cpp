#include "evaluator.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hd {

Role bead_role(int sign, char slot, int conv) {
    if (sign > 0) {
        bool swap = conv & 1;
        return (slot == 'o') != swap ? Role::T1 : Role::T2;
    }
    bool swap = conv & 2;
    return (slot == 'o') != swap ? Role::B2 : Role::B1;
}

std::vector<BeadToken> bead_word(const OGraph& g) {
    std::vector<BeadToken> w;
    for (const auto& p : g.circuit) w.push_back({p.v, bead_role(g.sign_of(p.v), p.slot)});
    return w;
}

namespace {

Scalar bead_impl(const HContext& ctx, const OGraph& g, int cap, int conv, bool reversed,
                 bool parallel) {
    int n = g.n, d = ctx.d;
    if (n > cap)
        throw BudgetExceeded("bead backend: " + std::to_string(n) + " crossings exceed cap " +
                             std::to_string(cap));
    ctx.integrals(); // fail early when normalization is unavailable
    const IntegralData& I = *ctx.ints;
    std::vector<Pass> circ = g.circuit;
    if (reversed) std::reverse(circ.begin(), circ.end());
    long long count = 1;
    for (int k = 0; k < n; ++k) count *= d;
    HTensor one = h_unit(ctx, 1);
    // per-role simple elements, indexed [role][i]
    std::vector<std::vector<std::vector<Scalar>>> simples(4);
    for (int rr = 0; rr < 4; ++rr) {
        simples[rr].resize(d);
        for (int i = 0; i < d; ++i) simples[rr][i] = h_simple(ctx, Role(rr), i).c;
    }
    Scalar total(0, ctx.H.mod);
#pragma omp parallel if (parallel)
    {
        Scalar local(0, ctx.H.mod);
        std::vector<int> idx(size_t(n) + 1, 0);
#pragma omp for schedule(dynamic, 16) nowait
        for (long long flat = 0; flat < count; ++flat) {
            long long rem = flat;
            for (int v = n; v >= 1; --v) {
                idx[v] = int(rem % d);
                rem /= d;
            }
            std::vector<Scalar> w = one.c;
            bool dead = false;
            for (const auto& p : circ) {
                elem_mul(ctx, w, simples[int(bead_role(g.sign_of(p.v), p.slot, conv))][idx[p.v]]);
                dead = true;
                for (const auto& c : w)
                    if (!c.is_zero()) { dead = false; break; }
                if (dead) break;
            }
            if (dead) continue;
            for (int i = 0; i < d; ++i) {
                if (I.e_L[i].is_zero()) continue;
                for (int a = 0; a < d; ++a) {
                    const Scalar& c = w[size_t(i) * d + a];
                    if (!c.is_zero()) local += c * I.e_L[i] * I.mu_R[a];
                }
            }
        }
#pragma omp critical
        total += local;
    }
    return total;
}

} // namespace

Scalar evaluate_bead(const HContext& ctx, const OGraph& g, int cap, int conv, bool reversed) {
    return bead_impl(ctx, g, cap, conv, reversed, true);
}

Scalar evaluate_bead_serial(const HContext& ctx, const OGraph& g, int cap, int conv,
                            bool reversed) {
    return bead_impl(ctx, g, cap, conv, reversed, false);
}

std::vector<std::vector<std::pair<int, Scalar>>> op_rows(const HContext& ctx, Role r, int i) {
    int d = ctx.d;
    std::vector<std::vector<std::pair<int, Scalar>>> rows(d);
    switch (r) {
        case Role::T1: // left multiplication by e_i pulled through the pairing
            for (int k = 0; k < d; ++k)
                for (int n = 0; n < d; ++n) {
                    Scalar c = ctx.H.m(k, i, n);
                    if (!c.is_zero()) rows[k].emplace_back(n, c);
                }
            break;
        case Role::T2:
        case Role::B2: // multiplication by e^i in the dual
            for (int k = 0; k < d; ++k)
                for (int n = 0; n < d; ++n) {
                    Scalar c = ctx.H.cm(k, i, n);
                    if (!c.is_zero()) rows[k].emplace_back(n, c);
                }
            break;
        case Role::B1: // as T1 with S(e_i)
            for (int k = 0; k < d; ++k)
                for (int n = 0; n < d; ++n) {
                    Scalar c(0, ctx.H.mod);
                    for (const auto& [a, sc] : ctx.s_row[i]) c += sc * ctx.H.m(k, a, n);
                    if (!c.is_zero()) rows[k].emplace_back(n, c);
                }
            break;
    }
    return rows;
}

Matrix crossing_kernel(const HContext& ctx, int sign) {
    int d = ctx.d;
    int dd = d * d;
    Matrix K(dd, dd);
    for (auto& e : K.a) e = Scalar(0, ctx.H.mod);
    for (int i = 0; i < d; ++i) {
        auto over = op_rows(ctx, sign > 0 ? Role::T1 : Role::B2, i);
        auto under = op_rows(ctx, sign > 0 ? Role::T2 : Role::B1, i);
        for (int ko = 0; ko < d; ++ko)
            for (const auto& [no, co] : over[ko])
                for (int ku = 0; ku < d; ++ku)
                    for (const auto& [nu, cu] : under[ku])
                        K.at(ko * d + ku, no * d + nu) += co * cu;
    }
    return K;
}

int width(const OGraph& g) {
    std::set<int> open;
    int w = 0;
    for (const auto& p : g.circuit) {
        if (open.count(p.v)) open.erase(p.v);
        else open.insert(p.v);
        w = std::max(w, int(open.size()));
    }
    return w;
}

OGraph rotate_for_width(const OGraph& g) {
    int N = int(g.circuit.size());
    int best = -1, bestw = 0;
    OGraph rot = g;
    for (int s = 0; s < N; ++s) {
        rot.circuit.clear();
        for (int t = 0; t < N; ++t) rot.circuit.push_back(g.circuit[(s + t) % N]);
        int w = width(rot);
        if (best < 0 || w < bestw) { best = s; bestw = w; }
    }
    OGraph r = g;
    r.circuit.clear();
    for (int t = 0; t < N; ++t) r.circuit.push_back(g.circuit[(best + t) % N]);
    return r;
}

Scalar evaluate_network(const HContext& ctx, const OGraph& g, int width_budget) {
    int w = width(g);
    if (w > width_budget)
        throw BudgetExceeded("network contraction needs width " + std::to_string(w) +
                             ", budget is " + std::to_string(width_budget));
    ctx.integrals();
    int d = ctx.d;
    std::map<std::pair<Role, int>, std::vector<std::vector<std::pair<int, Scalar>>>> cache;
    auto rows = [&](Role r, int i) -> const std::vector<std::vector<std::pair<int, Scalar>>>& {
        auto key = std::make_pair(r, i);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, op_rows(ctx, r, i)).first;
        return it->second;
    };
    // state: (trace row a, current column m, open legs (v, i)...) -> coeff
    using Key = std::vector<int>;
    std::map<Key, Scalar> state;
    for (int a = 0; a < d; ++a) state[{a, a}] = Scalar(1, ctx.H.mod);
    std::set<int> open;
    for (const auto& p : g.circuit) {
        Role role = bead_role(g.sign_of(p.v), p.slot);
        bool first = !open.count(p.v);
        std::map<Key, Scalar> next;
        for (const auto& [key, coef] : state) {
            int a = key[0], m = key[1];
            if (first) {
                for (int i = 0; i < d; ++i)
                    for (const auto& [n, c] : rows(role, i)[m]) {
                        Key nk = key;
                        nk[1] = n;
                        nk.push_back(p.v);
                        nk.push_back(i);
                        next[nk] += coef * c;
                    }
            } else {
                size_t li = 2;
                while (li < key.size() && key[li] != p.v) li += 2;
                int i = key[li + 1];
                Key nk;
                nk.reserve(key.size() - 2);
                nk.push_back(a);
                nk.push_back(0);
                for (size_t t = 2; t < key.size(); t += 2)
                    if (t != li) { nk.push_back(key[t]); nk.push_back(key[t + 1]); }
                for (const auto& [n, c] : rows(role, i)[m]) {
                    nk[1] = n;
                    next[nk] += coef * c;
                }
            }
        }
        for (auto it = next.begin(); it != next.end();)
            it = it->second.is_zero() ? next.erase(it) : std::next(it);
        state = std::move(next);
        if (first) open.insert(p.v);
        else open.erase(p.v);
    }
    Scalar z(0, ctx.H.mod);
    for (const auto& [key, coef] : state)
        if (key.size() == 2 && key[0] == key[1]) z += coef;
    return z;
}

InvariantResult invariant(const HContext& ctx, const OGraph& g, const InvariantOptions& opts) {
    ctx.require_admissible();
    ValidationReport rep = validate(g);
    if (!(rep.n1 && rep.n2 && rep.c1))
        throw ShapeError("graph fails the circuit conditions; cannot evaluate");
    InvariantResult res;
    res.closed_checks = rep.c2 && rep.c3;
    OGraph rot = rotate_for_width(g);
    res.width = width(rot);
    res.z = evaluate_network(ctx, rot, opts.width_budget);
    res.backends = {"network"};
    if (g.n <= opts.bead_cap) {
        Scalar zb = evaluate_bead(ctx, g, opts.bead_cap);
        if (zb != res.z)
            throw std::logic_error("backend disagreement on " + g.name + " over " + ctx.H.name +
                                   ": network " + res.z.str() + " vs bead " + zb.str());
        res.backends.push_back("bead");
    }
    return res;
}

} // namespace hd
