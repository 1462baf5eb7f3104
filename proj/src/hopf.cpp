#include "hopf.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace hd {

void HopfAlgebra::check_shapes() const {
    size_t dd = size_t(d);
    if (d <= 0 || M.size() != dd * dd * dd || u.size() != dd || D.size() != dd * dd * dd ||
        eps.size() != dd || S.size() != dd * dd)
        throw ShapeError("Hopf structure tensors inconsistent with dim " + std::to_string(d));
}

AxiomReport validate_hopf(const HopfAlgebra& H) {
    H.check_shapes();
    int d = H.d;
    AxiomReport rep;
    auto add = [&](const std::string& nm, bool ok) { rep.items.emplace_back(nm, ok); };

    bool ok = true;
    for (int i = 0; i < d && ok; ++i)
        for (int j = 0; j < d && ok; ++j)
            for (int k = 0; k < d && ok; ++k)
                for (int l = 0; l < d && ok; ++l) {
                    Scalar lhs, rhs;
                    for (int m = 0; m < d; ++m) {
                        lhs += H.m(i, j, m) * H.m(m, k, l);
                        rhs += H.m(j, k, m) * H.m(i, m, l);
                    }
                    ok = (lhs == rhs);
                }
    add("associativity", ok);

    ok = true;
    for (int i = 0; i < d && ok; ++i)
        for (int k = 0; k < d && ok; ++k) {
            Scalar l, r, want(i == k ? 1 : 0);
            for (int j = 0; j < d; ++j) {
                l += H.u[j] * H.m(j, i, k);
                r += H.u[j] * H.m(i, j, k);
            }
            ok = (l == want && r == want);
        }
    add("unitality", ok);

    ok = true;
    for (int k = 0; k < d && ok; ++k)
        for (int a = 0; a < d && ok; ++a)
            for (int b = 0; b < d && ok; ++b)
                for (int c = 0; c < d && ok; ++c) {
                    Scalar lhs, rhs;
                    for (int m = 0; m < d; ++m) {
                        lhs += H.cm(k, m, c) * H.cm(m, a, b);
                        rhs += H.cm(k, a, m) * H.cm(m, b, c);
                    }
                    ok = (lhs == rhs);
                }
    add("coassociativity", ok);

    ok = true;
    for (int k = 0; k < d && ok; ++k)
        for (int j = 0; j < d && ok; ++j) {
            Scalar l, r, want(j == k ? 1 : 0);
            for (int i = 0; i < d; ++i) {
                l += H.cm(k, i, j) * H.eps[i];
                r += H.cm(k, j, i) * H.eps[i];
            }
            ok = (l == want && r == want);
        }
    add("counitality", ok);

    // Delta is an algebra map: Delta(xy) = Delta(x)Delta(y), Delta(1) = 1 (x) 1
    ok = true;
    for (int i = 0; i < d && ok; ++i)
        for (int j = 0; j < d && ok; ++j)
            for (int a = 0; a < d && ok; ++a)
                for (int b = 0; b < d && ok; ++b) {
                    Scalar lhs, rhs;
                    for (int k = 0; k < d; ++k) lhs += H.m(i, j, k) * H.cm(k, a, b);
                    for (int p = 0; p < d; ++p)
                        for (int q = 0; q < d; ++q) {
                            Scalar cpq = H.cm(i, p, q);
                            if (cpq.is_zero()) continue;
                            for (int r = 0; r < d; ++r) {
                                Scalar mp = H.m(p, r, a);
                                if (mp.is_zero()) continue;
                                for (int s = 0; s < d; ++s)
                                    rhs += cpq * H.cm(j, r, s) * mp * H.m(q, s, b);
                            }
                        }
                    ok = (lhs == rhs);
                }
    for (int a = 0; a < d && ok; ++a)
        for (int b = 0; b < d && ok; ++b) {
            Scalar lhs;
            for (int k = 0; k < d; ++k) lhs += H.u[k] * H.cm(k, a, b);
            ok = (lhs == H.u[a] * H.u[b]);
        }
    add("comult algebra map", ok);

    // eps is an algebra map: eps(xy) = eps(x)eps(y), eps(1) = 1
    ok = true;
    for (int i = 0; i < d && ok; ++i)
        for (int j = 0; j < d && ok; ++j) {
            Scalar lhs;
            for (int k = 0; k < d; ++k) lhs += H.m(i, j, k) * H.eps[k];
            ok = (lhs == H.eps[i] * H.eps[j]);
        }
    if (ok) {
        Scalar e1;
        for (int k = 0; k < d; ++k) e1 += H.u[k] * H.eps[k];
        ok = (e1 == Scalar(1));
    }
    add("counit algebra map", ok);

    // m(S (x) id)Delta = u eps = m(id (x) S)Delta
    bool okl = true, okr = true;
    for (int k = 0; k < d; ++k)
        for (int t = 0; t < d; ++t) {
            Scalar v1, v2;
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    Scalar c = H.cm(k, i, j);
                    if (c.is_zero()) continue;
                    for (int m2 = 0; m2 < d; ++m2) {
                        v1 += c * H.s(i, m2) * H.m(m2, j, t);
                        v2 += c * H.s(j, m2) * H.m(i, m2, t);
                    }
                }
            Scalar ue = H.eps[k] * H.u[t];
            if (v1 != ue) okl = false;
            if (v2 != ue) okr = false;
        }
    add("antipode left", okl);
    add("antipode right", okr);
    return rep;
}

bool is_involutory(const HopfAlgebra& H) {
    Matrix s(H.d, H.d);
    s.a = H.S;
    return mat_mul(s, s) == Matrix::identity(H.d, H.mod);
}

namespace {

Vec unique_solution(const Matrix& A, const std::string& what) {
    auto basis = solve_nullspace(A);
    if (basis.size() != 1)
        throw IntegralSpaceDimension(what + " space has dimension " +
                                     std::to_string(basis.size()) + ", expected 1");
    Vec v = basis[0];
    for (auto& x : v)
        if (!x.is_zero()) {
            Scalar f = x.inv();
            for (auto& y : v) y *= f;
            break;
        }
    return v;
}

bool satisfies(const Matrix& A, const Vec& v) {
    for (int r = 0; r < A.rows; ++r) {
        Scalar acc;
        for (int c = 0; c < A.cols; ++c) acc += A.at(r, c) * v[c];
        if (!acc.is_zero()) return false;
    }
    return true;
}

// mu is a right integral: for all f, mu . f = f(1) mu, i.e. for all k, j:
// sum_i D[k][i][j] mu_i = mu_k u[j]
Matrix right_integral_system(const HopfAlgebra& H) {
    int d = H.d;
    Matrix A(d * d, d);
    for (int k = 0; k < d; ++k)
        for (int j = 0; j < d; ++j) {
            for (int i = 0; i < d; ++i) A.at(k * d + j, i) = H.cm(k, i, j);
            A.at(k * d + j, k) -= H.u[j];
        }
    return A;
}

Matrix left_integral_system(const HopfAlgebra& H) {
    int d = H.d;
    Matrix A(d * d, d);
    for (int k = 0; k < d; ++k)
        for (int j = 0; j < d; ++j) {
            for (int i = 0; i < d; ++i) A.at(k * d + j, i) = H.cm(k, j, i);
            A.at(k * d + j, k) -= H.u[j];
        }
    return A;
}

// e is a left cointegral: x e = eps(x) e, i.e. sum_j M[i][j][k] e_j = eps_i e_k
Matrix left_cointegral_system(const HopfAlgebra& H) {
    int d = H.d;
    Matrix A(d * d, d);
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            for (int j = 0; j < d; ++j) A.at(i * d + k, j) = H.m(i, j, k);
            A.at(i * d + k, k) -= H.eps[i];
        }
    return A;
}

Matrix right_cointegral_system(const HopfAlgebra& H) {
    int d = H.d;
    Matrix A(d * d, d);
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            for (int j = 0; j < d; ++j) A.at(i * d + k, j) = H.m(j, i, k);
            A.at(i * d + k, k) -= H.eps[i];
        }
    return A;
}

} // namespace

Vec right_integral(const HopfAlgebra& H) { return unique_solution(right_integral_system(H), "right integral"); }
Vec left_integral(const HopfAlgebra& H) { return unique_solution(left_integral_system(H), "left integral"); }
Vec left_cointegral(const HopfAlgebra& H) { return unique_solution(left_cointegral_system(H), "left cointegral"); }
Vec right_cointegral(const HopfAlgebra& H) { return unique_solution(right_cointegral_system(H), "right cointegral"); }

bool is_unimodular(const HopfAlgebra& H) {
    return satisfies(right_cointegral_system(H), left_cointegral(H));
}

bool is_counimodular(const HopfAlgebra& H) {
    return satisfies(right_integral_system(H), left_integral(H));
}

Scalar pair_eval(const Vec& f, const Vec& x) {
    Scalar s;
    for (size_t i = 0; i < x.size(); ++i) s += f[i] * x[i];
    return s;
}

IntegralData normalize_integrals(const HopfAlgebra& H) {
    IntegralData I;
    I.mu_R = right_integral(H);
    I.mu_L = left_integral(H);
    I.e_L = left_cointegral(H);
    Scalar p = pair_eval(I.mu_R, I.e_L);
    if (p.is_zero()) throw DegeneratePairing("mu_R(e_L) = 0 for " + H.name);
    Scalar pi = p.inv();
    for (auto& x : I.mu_R) x *= pi;
    Scalar q = pair_eval(I.mu_L, I.e_L);
    if (q.is_zero()) throw DegeneratePairing("mu_L(e_L) = 0 for " + H.name);
    Scalar qi = q.inv();
    for (auto& x : I.mu_L) x *= qi;
    I.e_R.assign(H.d, Scalar(0));
    for (int i = 0; i < H.d; ++i) {
        if (I.e_L[i].is_zero()) continue;
        for (int j = 0; j < H.d; ++j) I.e_R[j] += I.e_L[i] * H.s(i, j);
    }
    return I;
}

GroupTable::GroupTable(int order, std::vector<int> table, std::string nm)
    : n(order), t(std::move(table)), name(std::move(nm)) {
    if (n <= 0 || t.size() != size_t(n) * n) throw ShapeError("group table shape");
    for (int x : t)
        if (x < 0 || x >= n) throw ShapeError("group table entry out of range");
    for (int g = 0; g < n; ++g)
        if (mul(0, g) != g || mul(g, 0) != g) throw ShapeError("index 0 is not the identity");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw ShapeError("group table not associative");
    inv.assign(n, -1);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            if (mul(g, h) == 0) inv[g] = h;
    for (int g = 0; g < n; ++g)
        if (inv[g] < 0 || mul(inv[g], g) != 0) throw ShapeError("group table lacks inverses");
}

GroupTable cyclic_group(int n) {
    std::vector<int> t(size_t(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[size_t(i) * n + j] = (i + j) % n;
    return GroupTable(n, std::move(t), "Z" + std::to_string(n));
}

namespace {

GroupTable perm_group(const std::vector<std::vector<int>>& perms, const std::string& name) {
    int n = int(perms.size());
    auto idx = [&](const std::vector<int>& p) {
        for (int i = 0; i < n; ++i)
            if (perms[i] == p) return i;
        throw ShapeError("permutation set not closed");
    };
    std::vector<int> t(size_t(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> comp(perms[i].size());
            for (size_t k = 0; k < comp.size(); ++k) comp[k] = perms[i][perms[j][k]];
            t[size_t(i) * n + j] = idx(comp);
        }
    return GroupTable(n, std::move(t), name);
}

} // namespace

GroupTable s3_group() {
    std::vector<std::vector<int>> perms = {{0, 1, 2}};
    std::vector<int> base = {0, 1, 2};
    std::sort(base.begin(), base.end());
    do {
        if (base != std::vector<int>{0, 1, 2}) perms.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return perm_group(perms, "S3");
}

GroupTable d4_group() {
    // square symmetries as corner permutations, closure from a rotation and a flip
    std::vector<int> r = {1, 2, 3, 0}, s = {1, 0, 3, 2};
    std::vector<std::vector<int>> elems = {{0, 1, 2, 3}};
    std::vector<std::vector<int>> frontier = elems;
    while (!frontier.empty()) {
        std::vector<std::vector<int>> nf;
        for (auto& e : frontier)
            for (auto* g : {&r, &s}) {
                std::vector<int> c(4);
                for (int k = 0; k < 4; ++k) c[k] = (*g)[e[k]];
                if (std::find(elems.begin(), elems.end(), c) == elems.end()) {
                    elems.push_back(c);
                    nf.push_back(c);
                }
            }
        frontier = std::move(nf);
    }
    if (elems.size() != 8) throw ShapeError("D4 closure failed");
    return perm_group(elems, "D4");
}

GroupTable q8_group() {
    // {1,-1,i,-i,j,-j,k,-k}: encode x as (axis, sign) with axes 1,i,j,k
    auto enc = [](int axis, int sgn) { return axis * 2 + (sgn < 0 ? 1 : 0); };
    int base[4][4];  // axis product table
    int bsgn[4][4];
    const int E = 0, I = 1, J = 2, K = 3;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) { base[a][b] = a == E ? b : (b == E ? a : -1); bsgn[a][b] = 1; }
    auto put = [&](int a, int b, int c, int s) { base[a][b] = c; bsgn[a][b] = s; };
    put(I, I, E, -1); put(J, J, E, -1); put(K, K, E, -1);
    put(I, J, K, 1); put(J, K, I, 1); put(K, I, J, 1);
    put(J, I, K, -1); put(K, J, I, -1); put(I, K, J, -1);
    std::vector<int> t(64);
    for (int a = 0; a < 4; ++a)
        for (int sa = 1; sa >= -1; sa -= 2)
            for (int b = 0; b < 4; ++b)
                for (int sb = 1; sb >= -1; sb -= 2)
                    t[size_t(enc(a, sa)) * 8 + enc(b, sb)] = enc(base[a][b], sa * sb * bsgn[a][b]);
    return GroupTable(8, std::move(t), "Q8");
}

HopfAlgebra group_algebra(const GroupTable& G, unsigned long mod, const std::string& name) {
    HopfAlgebra H;
    int n = G.n;
    H.d = n;
    H.mod = mod;
    H.name = name;
    size_t nn = size_t(n);
    H.M.assign(nn * nn * nn, Scalar(0, mod));
    H.D.assign(nn * nn * nn, Scalar(0, mod));
    H.u.assign(nn, Scalar(0, mod));
    H.eps.assign(nn, Scalar(1, mod));
    H.S.assign(nn * nn, Scalar(0, mod));
    H.u[0] = Scalar(1, mod);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) H.M[(size_t(i) * n + j) * n + G.mul(i, j)] = Scalar(1, mod);
        H.D[(size_t(i) * n + i) * n + i] = Scalar(1, mod); // Delta(g) = g (x) g
        H.S[size_t(i) * n + G.inv[i]] = Scalar(1, mod);
    }
    return H;
}

HopfAlgebra dual(const HopfAlgebra& H) {
    HopfAlgebra R;
    int d = H.d;
    R.d = d;
    R.mod = H.mod;
    R.name = H.name + "*";
    size_t dd = size_t(d);
    R.M.assign(dd * dd * dd, Scalar(0, H.mod));
    R.D.assign(dd * dd * dd, Scalar(0, H.mod));
    R.S.assign(dd * dd, Scalar(0, H.mod));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                R.M[(size_t(i) * d + j) * d + k] = H.cm(k, i, j);
                R.D[(size_t(k) * d + i) * d + j] = H.m(i, j, k);
            }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) R.S[size_t(i) * d + j] = H.s(j, i);
    R.u = H.eps;
    R.eps = H.u;
    return R;
}

HopfAlgebra function_algebra(const GroupTable& G, unsigned long mod, const std::string& name) {
    HopfAlgebra H = dual(group_algebra(G, mod, name));
    H.name = name;
    return H;
}

namespace {

using nlohmann::json;

Scalar json_scalar(const json& j, unsigned long mod) {
    if (j.is_number_integer()) return Scalar(j.get<long>(), mod);
    if (j.is_string()) return Scalar::parse(j.get<std::string>(), mod);
    throw ParseError("scalar entries must be integers or strings");
}

void flatten(const json& j, unsigned long mod, std::vector<Scalar>& out) {
    if (j.is_array()) {
        for (const auto& e : j) flatten(e, mod, out);
    } else {
        out.push_back(json_scalar(j, mod));
    }
}

std::vector<Scalar> tensor_field(const json& j, const char* key, unsigned long mod, size_t want) {
    if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    std::vector<Scalar> out;
    flatten(j.at(key), mod, out);
    if (out.size() != want)
        throw ParseError(std::string("field '") + key + "' has " + std::to_string(out.size()) +
                         " entries, expected " + std::to_string(want));
    return out;
}

} // namespace

HopfAlgebra parse_hopf_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    HopfAlgebra H;
    if (!j.contains("dim")) throw ParseError("missing field 'dim'");
    H.d = j.at("dim").get<int>();
    if (H.d <= 0) throw ParseError("dim must be positive");
    if (j.contains("name")) H.name = j.at("name").get<std::string>();
    if (!j.contains("field")) throw ParseError("missing field 'field'");
    const auto& f = j.at("field");
    if (f.is_string() && f.get<std::string>() == "Q") {
        H.mod = 0;
    } else if (f.is_object() && f.contains("Fp")) {
        H.mod = f.at("Fp").get<unsigned long>();
    } else {
        throw ParseError("field must be \"Q\" or {\"Fp\": p}");
    }
    size_t dd = size_t(H.d);
    H.M = tensor_field(j, "mult", H.mod, dd * dd * dd);
    H.u = tensor_field(j, "unit", H.mod, dd);
    H.D = tensor_field(j, "comult", H.mod, dd * dd * dd);
    H.eps = tensor_field(j, "counit", H.mod, dd);
    H.S = tensor_field(j, "antipode", H.mod, dd * dd);
    return H;
}

GroupTable parse_group_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    if (!j.contains("order") || !j.contains("table")) throw ParseError("group file needs 'order' and 'table'");
    int n = j.at("order").get<int>();
    std::vector<int> t;
    for (const auto& row : j.at("table"))
        for (const auto& e : row) t.push_back(e.get<int>());
    std::string nm = j.contains("name") ? j.at("name").get<std::string>() : "G";
    return GroupTable(n, std::move(t), nm);
}

} // namespace hd
