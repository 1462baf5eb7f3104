#include "homcount.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <numeric>

namespace hd {

namespace {

struct UF {
    std::vector<int> p;
    explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

} // namespace

std::uint64_t count_homs(const Pi1Presentation& P, const GroupTable& G,
                         std::uint64_t node_budget) {
    UF uf(P.ngens);
    std::vector<std::array<int, 3>> raw_triples;
    for (const auto& rel : P.rels) {
        if (rel.size() == 2 && rel[0].second == 1 && rel[1].second == -1) {
            uf.unite(rel[0].first, rel[1].first);
        } else if (rel.size() == 3 && rel[0].second == 1 && rel[1].second == 1 &&
                   rel[2].second == -1) {
            raw_triples.push_back({rel[0].first, rel[1].first, rel[2].first});
        } else {
            throw ShapeError("count_homs: unexpected relation shape");
        }
    }
    // compact the union-find classes, in representative order
    std::vector<int> var(P.ngens, -1);
    int nvars = 0;
    for (int g = 0; g < P.ngens; ++g) {
        int r = uf.find(g);
        if (var[r] < 0) var[r] = nvars++;
        var[g] = var[r];
    }
    std::vector<std::array<int, 3>> triples;
    for (const auto& t : raw_triples)
        triples.push_back({var[t[0]], var[t[1]], var[t[2]]});
    std::vector<std::vector<int>> touching(nvars);
    for (size_t t = 0; t < triples.size(); ++t)
        for (int s = 0; s < 3; ++s) touching[triples[t][s]].push_back(int(t));
    for (auto& lst : touching) {
        std::sort(lst.begin(), lst.end());
        lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
    }

    int n = G.n;
    std::vector<int> val(nvars, -1);
    std::vector<int> trail;
    std::uint64_t nodes = 0, found = 0;

    // assign v := x and eagerly close the triples; returns false on conflict
    auto propagate = [&](int v0, int x0) -> bool {
        std::vector<std::pair<int, int>> queue{{v0, x0}};
        while (!queue.empty()) {
            auto [v, x] = queue.back();
            queue.pop_back();
            if (val[v] >= 0) {
                if (val[v] != x) return false;
                continue;
            }
            if (++nodes > node_budget)
                throw BudgetExceeded("count_homs exceeded the node budget");
            val[v] = x;
            trail.push_back(v);
            for (int ti : touching[v]) {
                auto [h, g, k] = triples[size_t(ti)];
                int ch = val[h], cg = val[g], ck = val[k];
                int known = (ch >= 0) + (cg >= 0) + (ck >= 0);
                if (known < 2) continue;
                if (ch >= 0 && cg >= 0) {
                    int need = G.mul(ch, cg);
                    if (ck >= 0) {
                        if (ck != need) return false;
                    } else {
                        queue.push_back({k, need});
                    }
                } else if (ch >= 0) { // ch, ck known
                    queue.push_back({g, G.mul(G.inv[size_t(ch)], ck)});
                } else { // cg, ck known
                    queue.push_back({h, G.mul(ck, G.inv[size_t(cg)])});
                }
            }
        }
        return true;
    };

    auto search = [&](auto&& self, int from) -> void {
        int v = from;
        while (v < nvars && val[v] >= 0) ++v;
        if (v == nvars) {
            ++found;
            return;
        }
        for (int x = 0; x < n; ++x) {
            size_t mark = trail.size();
            if (propagate(v, x)) self(self, v + 1);
            while (trail.size() > mark) {
                val[trail.back()] = -1;
                trail.pop_back();
            }
        }
    };
    search(search, 0);
    return found;
}

std::pair<int, std::vector<long>> abelianization(const Pi1Presentation& P) {
    int rows = int(P.rels.size()), cols = P.ngens;
    std::vector<std::vector<mpz_class>> A(size_t(rows), std::vector<mpz_class>(size_t(cols), 0));
    for (int r = 0; r < rows; ++r)
        for (const auto& [g, e] : P.rels[size_t(r)]) A[size_t(r)][size_t(g)] += e;

    int t = 0;
    while (t < rows && t < cols) {
        // pick the smallest nonzero entry in the remaining block as pivot
        int pr = -1, pc = -1;
        for (int r = t; r < rows; ++r)
            for (int c = t; c < cols; ++c)
                if (A[size_t(r)][size_t(c)] != 0 &&
                    (pr < 0 || abs(A[size_t(r)][size_t(c)]) < abs(A[size_t(pr)][size_t(pc)]))) {
                    pr = r;
                    pc = c;
                }
        if (pr < 0) break;
        std::swap(A[size_t(t)], A[size_t(pr)]);
        for (int r = 0; r < rows; ++r) std::swap(A[size_t(r)][size_t(t)], A[size_t(r)][size_t(pc)]);
        bool clean = false;
        while (!clean) {
            clean = true;
            mpz_class p = A[size_t(t)][size_t(t)];
            for (int r = t + 1; r < rows; ++r) {
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), A[size_t(r)][size_t(t)].get_mpz_t(), p.get_mpz_t());
                if (q != 0)
                    for (int c = t; c < cols; ++c) A[size_t(r)][size_t(c)] -= q * A[size_t(t)][size_t(c)];
                if (A[size_t(r)][size_t(t)] != 0) {
                    std::swap(A[size_t(t)], A[size_t(r)]);
                    clean = false;
                    p = A[size_t(t)][size_t(t)];
                }
            }
            for (int c = t + 1; c < cols; ++c) {
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), A[size_t(t)][size_t(c)].get_mpz_t(), p.get_mpz_t());
                if (q != 0)
                    for (int r = t; r < rows; ++r) A[size_t(r)][size_t(c)] -= q * A[size_t(r)][size_t(t)];
                if (A[size_t(t)][size_t(c)] != 0) {
                    for (int r = 0; r < rows; ++r) std::swap(A[size_t(r)][size_t(t)], A[size_t(r)][size_t(c)]);
                    clean = false;
                    p = A[size_t(t)][size_t(t)];
                }
            }
        }
        ++t;
    }
    std::vector<mpz_class> diag;
    for (int k = 0; k < t; ++k) diag.push_back(abs(A[size_t(k)][size_t(k)]));
    // enforce the divisibility chain
    for (size_t i = 0; i < diag.size(); ++i)
        for (size_t j = i + 1; j < diag.size(); ++j)
            if (diag[j] % diag[i] != 0) {
                mpz_class g = gcd(diag[i], diag[j]);
                diag[j] = diag[i] / g * diag[j];
                diag[i] = g;
            }
    int rank = cols - t;
    std::vector<long> tors;
    for (const auto& d : diag)
        if (d > 1) tors.push_back(d.get_si());
    return {rank, tors};
}

} // namespace hd
