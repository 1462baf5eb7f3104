#include "heisenberg.hpp"

#include <cassert>

namespace hd {

const char* role_name(Role r) {
    switch (r) {
        case Role::T1: return "T1";
        case Role::T2: return "T2";
        case Role::B1: return "B1";
        case Role::B2: return "B2";
    }
    return "?";
}

HContext::HContext(const HopfAlgebra& algebra, int dim_cap) : H(algebra), d(algebra.d) {
    H.check_shapes();
    if (d > dim_cap)
        throw BudgetExceeded("algebra dimension " + std::to_string(d) + " exceeds cap " +
                             std::to_string(dim_cap));
    size_t dd = size_t(d) * d;
    mul_out.resize(dd);
    mul_byright.resize(dd);
    mul_mid.resize(d);
    comul_out.resize(d);
    comul_pair.resize(dd);
    s_row.resize(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                Scalar mc = H.m(i, j, k);
                if (!mc.is_zero()) {
                    mul_out[size_t(i) * d + j].emplace_back(k, mc);
                    mul_byright[size_t(j) * d + k].emplace_back(i, mc); // M[i][j][k], fixed (j,k)
                    mul_mid[j].emplace_back(i, k, mc);                  // M[s][a][n] with a=j
                }
                Scalar dc = H.cm(i, j, k); // D[k'][i'][m] with k'=i, i'=j, m=k
                if (!dc.is_zero()) {
                    comul_out[i].emplace_back(j, k, dc);
                    comul_pair[size_t(j) * d + k].emplace_back(i, dc);
                }
            }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (!H.s(i, j).is_zero()) s_row[i].emplace_back(j, H.s(i, j));

    // full table of Heisenberg-double basis products
    pairtab.resize(dd * dd);
    std::vector<Scalar> acc(dd);
    for (int i = 0; i < d; ++i)
        for (int a = 0; a < d; ++a)
            for (int j = 0; j < d; ++j)
                for (int b = 0; b < d; ++b) {
                    for (auto& x : acc) x = Scalar(0, H.mod);
                    // (e^i (x) e_a)(e^j (x) e_b)
                    //   = sum D[a][p][q] M[m][p][j] D[k][i][m] M[q][b][r] e^k (x) e_r
                    for (const auto& [p, q, c1] : comul_out[a])
                        for (const auto& [m, c2] : mul_byright[size_t(p) * d + j]) {
                            Scalar c12 = c1 * c2;
                            for (const auto& [k, c3] : comul_pair[size_t(i) * d + m])
                                for (const auto& [r, c4] : mul_out[size_t(q) * d + b])
                                    acc[size_t(k) * d + r] += c12 * c3 * c4;
                        }
                    auto& slot = pairtab[((size_t(i) * d + a) * d + j) * d + b];
                    for (size_t kr = 0; kr < dd; ++kr)
                        if (!acc[kr].is_zero()) slot.emplace_back(int(kr), acc[kr]);
                }

    involutory = is_involutory(H);
    try {
        unimodular = is_unimodular(H);
        counimodular = is_counimodular(H);
        ints = normalize_integrals(H);
    } catch (const std::exception& e) {
        ints.reset();
        ints_error = e.what();
    }
}

const IntegralData& HContext::integrals() const {
    if (!ints) throw DegeneratePairing("no normalized integrals for " + H.name + ": " + ints_error);
    return *ints;
}

void HContext::require_admissible() const {
    if (!involutory) throw UnsupportedAlgebra(H.name + ": antipode is not involutory");
    if (!unimodular) throw UnsupportedAlgebra(H.name + ": not unimodular");
    if (!counimodular) throw UnsupportedAlgebra(H.name + ": not counimodular");
    if (!ints) throw UnsupportedAlgebra(H.name + ": " + ints_error);
}

HTensor h_unit(const HContext& ctx, int deg) {
    int d = ctx.d;
    HTensor one(d, 1, ctx.H.mod);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Scalar c = ctx.H.eps[i] * ctx.H.u[j];
            if (!c.is_zero()) one.c[size_t(i) * d + j] = c;
        }
    if (deg == 1) return one;
    HTensor r(d, deg, ctx.H.mod);
    size_t dd = size_t(d) * d;
    // tensor power of the degree-1 unit
    std::vector<size_t> idx(deg, 0);
    std::vector<int> nz;
    for (size_t t = 0; t < dd; ++t)
        if (!one.c[t].is_zero()) nz.push_back(int(t));
    std::vector<int> pick(deg, 0);
    while (true) {
        size_t flat = 0;
        Scalar coef(1, ctx.H.mod);
        for (int f = 0; f < deg; ++f) {
            flat = flat * dd + nz[pick[f]];
            coef *= one.c[nz[pick[f]]];
        }
        r.c[flat] = coef;
        int f = deg - 1;
        while (f >= 0 && ++pick[f] == int(nz.size())) pick[f--] = 0;
        if (f < 0) break;
    }
    return r;
}

HTensor h_simple(const HContext& ctx, Role r, int idx) {
    int d = ctx.d;
    HTensor x(d, 1, ctx.H.mod);
    switch (r) {
        case Role::T1: // eps (x) e_idx
            for (int i = 0; i < d; ++i)
                if (!ctx.H.eps[i].is_zero()) x.c[size_t(i) * d + idx] = ctx.H.eps[i];
            break;
        case Role::T2: // e^idx (x) 1
        case Role::B2:
            for (int j = 0; j < d; ++j)
                if (!ctx.H.u[j].is_zero()) x.c[size_t(idx) * d + j] = ctx.H.u[j];
            break;
        case Role::B1: // eps (x) S(e_idx)
            for (const auto& [j, sc] : ctx.s_row[idx])
                for (int i = 0; i < d; ++i)
                    if (!ctx.H.eps[i].is_zero()) x.c[size_t(i) * d + j] += ctx.H.eps[i] * sc;
            break;
    }
    return x;
}

namespace {

void factor_combine(const HContext& ctx, int f, int deg, size_t dd, size_t flat, Scalar coef,
                    const std::vector<const std::vector<std::pair<int, Scalar>>*>& lists,
                    HTensor& out) {
    if (f == deg) {
        out.c[flat] += coef;
        return;
    }
    for (const auto& [kr, c] : *lists[f])
        factor_combine(ctx, f + 1, deg, dd, flat * dd + kr, coef * c, lists, out);
}

} // namespace

HTensor h_mul(const HContext& ctx, const HTensor& x, const HTensor& y) {
    if (x.deg != y.deg) throw ShapeError("h_mul degree mismatch");
    int d = ctx.d, deg = x.deg;
    size_t dd = size_t(d) * d;
    HTensor r(d, deg, ctx.H.mod);
    std::vector<std::pair<size_t, const Scalar*>> nx, ny;
    for (size_t t = 0; t < x.c.size(); ++t)
        if (!x.c[t].is_zero()) nx.emplace_back(t, &x.c[t]);
    for (size_t t = 0; t < y.c.size(); ++t)
        if (!y.c[t].is_zero()) ny.emplace_back(t, &y.c[t]);
    std::vector<size_t> powdd(deg);
    powdd[deg - 1] = 1;
    for (int f = deg - 2; f >= 0; --f) powdd[f] = powdd[f + 1] * dd;
    std::vector<const std::vector<std::pair<int, Scalar>>*> lists(deg);
    for (const auto& [ix, cx] : nx)
        for (const auto& [iy, cy] : ny) {
            bool dead = false;
            for (int f = 0; f < deg; ++f) {
                size_t px = (ix / powdd[f]) % dd;
                size_t py = (iy / powdd[f]) % dd;
                // px = i*d+a, py = j*d+b
                lists[f] = &ctx.pairtab[(px * d + int(py / d)) * d + int(py % d)];
                if (lists[f]->empty()) { dead = true; break; }
            }
            if (dead) continue;
            factor_combine(ctx, 0, deg, dd, 0, (*cx) * (*cy), lists, r);
        }
    return r;
}

HTensor canonical_T(const HContext& ctx) {
    int d = ctx.d;
    HTensor t(d, 2, ctx.H.mod);
    size_t dd = size_t(d) * d;
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            if (ctx.H.eps[k].is_zero()) continue;
            for (int j = 0; j < d; ++j) {
                Scalar c = ctx.H.eps[k] * ctx.H.u[j];
                if (!c.is_zero()) t.c[(size_t(k) * d + i) * dd + size_t(i) * d + j] += c;
            }
        }
    return t;
}

HTensor canonical_Tbar(const HContext& ctx) {
    int d = ctx.d;
    HTensor t(d, 2, ctx.H.mod);
    size_t dd = size_t(d) * d;
    for (int i = 0; i < d; ++i)
        for (const auto& [m, sc] : ctx.s_row[i])
            for (int k = 0; k < d; ++k) {
                if (ctx.H.eps[k].is_zero()) continue;
                for (int j = 0; j < d; ++j) {
                    Scalar c = ctx.H.eps[k] * sc * ctx.H.u[j];
                    if (!c.is_zero()) t.c[(size_t(k) * d + m) * dd + size_t(i) * d + j] += c;
                }
            }
    return t;
}

HTensor embed2(const HContext& ctx, const HTensor& x, int leg_a, int leg_b) {
    if (x.deg != 2) throw ShapeError("embed2 wants a degree-2 tensor");
    int d = ctx.d;
    size_t dd = size_t(d) * d;
    HTensor one = h_unit(ctx, 1);
    HTensor r(d, 3, ctx.H.mod);
    int leg_c = 3 - leg_a - leg_b;
    for (size_t t = 0; t < x.c.size(); ++t) {
        if (x.c[t].is_zero()) continue;
        size_t pa = t / dd, pb = t % dd;
        for (size_t pc = 0; pc < dd; ++pc) {
            if (one.c[pc].is_zero()) continue;
            size_t parts[3];
            parts[leg_a] = pa;
            parts[leg_b] = pb;
            parts[leg_c] = pc;
            r.c[(parts[0] * dd + parts[1]) * dd + parts[2]] += x.c[t] * one.c[pc];
        }
    }
    return r;
}

Matrix fock_action(const HContext& ctx, const HTensor& x) {
    if (x.deg != 1) throw ShapeError("fock_action wants degree 1");
    int d = ctx.d;
    Matrix F(d, d);
    for (auto& e : F.a) e = Scalar(0, ctx.H.mod);
    for (size_t t = 0; t < x.c.size(); ++t) {
        if (x.c[t].is_zero()) continue;
        int i = int(t / d), a = int(t % d);
        // phi(e^i (x) e_a): e^n -> sum_{k,s} M[s][a][n] D[k][i][s] e^k
        for (const auto& [s, n, m1] : ctx.mul_mid[a])
            for (const auto& [k, m2] : ctx.comul_pair[size_t(i) * d + s])
                F.at(k, n) += x.c[t] * m1 * m2;
    }
    return F;
}

Scalar chi_fock(const HContext& ctx, const HTensor& x) {
    if (x.deg != 1) throw ShapeError("chi_fock wants degree 1");
    if (!ctx.involutory) throw UnsupportedAlgebra(ctx.H.name + ": antipode is not involutory");
    const IntegralData& I = ctx.integrals();
    Scalar s(0, ctx.H.mod);
    for (size_t t = 0; t < x.c.size(); ++t) {
        if (x.c[t].is_zero()) continue;
        int i = int(t / ctx.d), a = int(t % ctx.d);
        s += x.c[t] * I.e_L[i] * I.mu_R[a];
    }
    return s;
}

Scalar chi_fock_trace(const HContext& ctx, const HTensor& x) { return trace(fock_action(ctx, x)); }

HTensor lu_preimage(const HContext& ctx, const Matrix& F) {
    int d = ctx.d;
    Matrix smat(d, d);
    smat.a = ctx.H.S;
    Matrix sinv = mat_inverse(smat);
    HTensor r(d, 1, ctx.H.mod);
    // sum_{i,j} F(e^i) e^j (x) S^{-1}(e_j) e_i
    for (int k = 0; k < d; ++k)
        for (int i = 0; i < d; ++i) {
            const Scalar& f = F.at(k, i);
            if (f.is_zero()) continue;
            for (int j = 0; j < d; ++j)
                for (const auto& [m, c2] : ctx.comul_pair[size_t(k) * d + j]) // D[m][k][j]
                    for (int t = 0; t < d; ++t) {
                        const Scalar& c3 = sinv.at(j, t);
                        if (c3.is_zero()) continue;
                        for (const auto& [rr, c4] : ctx.mul_out[size_t(t) * d + i])
                            r.c[size_t(m) * d + rr] += f * c2 * c3 * c4;
                    }
        }
    return r;
}

bool check_pentagon(const HContext& ctx) {
    HTensor T = canonical_T(ctx);
    HTensor t12 = embed2(ctx, T, 0, 1);
    HTensor t13 = embed2(ctx, T, 0, 2);
    HTensor t23 = embed2(ctx, T, 1, 2);
    HTensor lhs = h_mul(ctx, h_mul(ctx, t12, t13), t23);
    HTensor rhs = h_mul(ctx, t23, t12);
    return lhs == rhs;
}

bool check_zero_two(const HContext& ctx) {
    int d = ctx.d;
    // product form: sum_{i,j} T2(i) B2(j) B1(j) T1(i) = unit
    HTensor acc(d, 1, ctx.H.mod);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            HTensor w = h_mul(ctx, h_simple(ctx, Role::T2, i), h_simple(ctx, Role::B2, j));
            w = h_mul(ctx, w, h_simple(ctx, Role::B1, j));
            w = h_mul(ctx, w, h_simple(ctx, Role::T1, i));
            for (size_t t = 0; t < acc.c.size(); ++t) acc.c[t] += w.c[t];
        }
    if (!(acc == h_unit(ctx, 1))) return false;
    // antipode-cancellation form: S(x_(2)) x_(1) = eps(x) 1 on the basis
    for (int k = 0; k < d; ++k) {
        Vec v(d, Scalar(0, ctx.H.mod));
        for (const auto& [i, j, c] : ctx.comul_out[k])
            for (const auto& [m, sc] : ctx.s_row[j])
                for (const auto& [t, mc] : ctx.mul_out[size_t(m) * d + i]) v[t] += c * sc * mc;
        for (int t = 0; t < d; ++t)
            if (v[t] != ctx.H.eps[k] * ctx.H.u[t]) return false;
    }
    return true;
}

// dense degree-1 product, shared with the bead evaluator
void elem_mul(const HContext& ctx, std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    int d = ctx.d;
    size_t dd = size_t(d) * d;
    std::vector<Scalar> r(dd, Scalar(0, ctx.H.mod));
    for (size_t px = 0; px < dd; ++px) {
        if (x[px].is_zero()) continue;
        for (size_t py = 0; py < dd; ++py) {
            if (y[py].is_zero()) continue;
            for (const auto& [kr, c] : ctx.pairtab[(px * d + int(py / d)) * d + int(py % d)])
                r[kr] += x[px] * y[py] * c;
        }
    }
    x = std::move(r);
}

std::map<size_t, Scalar> mp_side_eval(const HContext& ctx, const MPSide& side) {
    int d = ctx.d;
    size_t dd = size_t(d) * d;
    int nc = int(side.crossings.size());
    std::map<size_t, Scalar> total;
    HTensor one = h_unit(ctx, 1);
    size_t count = 1;
    for (int k = 0; k < nc; ++k) count *= size_t(d);
    for (size_t flat = 0; flat < count; ++flat) {
        // one summation index per named crossing
        std::map<std::string, int> idx;
        size_t rem = flat;
        for (int k = nc - 1; k >= 0; --k) {
            idx[side.crossings[k].first] = int(rem % d);
            rem /= d;
        }
        std::vector<std::vector<Scalar>> legvals;
        bool dead = false;
        for (const auto& leg : side.legs) {
            std::vector<Scalar> cur = one.c;
            for (const auto& [name, role] : leg) {
                bool barred = false;
                for (const auto& [nm, b] : side.crossings)
                    if (nm == name) barred = b;
                Role r = barred ? (role == 1 ? Role::B1 : Role::B2)
                                : (role == 1 ? Role::T1 : Role::T2);
                elem_mul(ctx, cur, h_simple(ctx, r, idx[name]).c);
            }
            bool allzero = true;
            for (const auto& c : cur)
                if (!c.is_zero()) { allzero = false; break; }
            if (allzero) { dead = true; break; }
            legvals.push_back(std::move(cur));
        }
        if (dead) continue;
        for (size_t p1 = 0; p1 < dd; ++p1) {
            if (legvals[0][p1].is_zero()) continue;
            for (size_t p2 = 0; p2 < dd; ++p2) {
                if (legvals[1][p2].is_zero()) continue;
                Scalar c12 = legvals[0][p1] * legvals[1][p2];
                for (size_t p3 = 0; p3 < dd; ++p3) {
                    if (legvals[2][p3].is_zero()) continue;
                    total[(p1 * dd + p2) * dd + p3] += c12 * legvals[2][p3];
                }
            }
        }
    }
    for (auto it = total.begin(); it != total.end();)
        it = it->second.is_zero() ? total.erase(it) : std::next(it);
    return total;
}

std::vector<std::pair<std::string, bool>> check_mp_identities(const HContext& ctx) {
    const auto& table = mp_identities();
    std::vector<std::pair<std::string, bool>> out(table.size());
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < int(table.size()); ++i) {
        auto lhs = mp_side_eval(ctx, table[i].lhs);
        auto rhs = mp_side_eval(ctx, table[i].rhs);
        out[i] = {table[i].name, lhs == rhs};
    }
    return out;
}

} // namespace hd
