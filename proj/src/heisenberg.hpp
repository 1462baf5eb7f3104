#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopf.hpp"
#include "mp_table.hpp"

namespace hd {

// Element of the n-fold tensor power of the Heisenberg double H* (x) H,
// dense over the basis e^{i1} (x) e_{j1} (x) ... : coefficient index is
// ((i1*d + j1) * d^2 + (i2*d + j2)) * d^2 + ...
struct HTensor {
    int d = 0;
    int deg = 1;
    std::vector<Scalar> c;

    HTensor() = default;
    HTensor(int dim, int degree, unsigned long mod)
        : d(dim), deg(degree) {
        size_t sz = 1;
        for (int k = 0; k < degree; ++k) sz *= size_t(dim) * dim;
        c.assign(sz, Scalar(0, mod));
    }
    bool operator==(const HTensor& o) const { return d == o.d && deg == o.deg && c == o.c; }
};

// Bead roles: the four components of the canonical element and its inverse.
// T1 = eps (x) e_i, T2 = e^i (x) 1, B1 = eps (x) S(e_i), B2 = e^i (x) 1.
enum class Role { T1, T2, B1, B2 };

const char* role_name(Role r);

// Immutable per-algebra evaluation context: sparse views of the structure
// constants, the full table of basis products in the Heisenberg double, the
// normalized integral data and the hypothesis flags. Read-only after
// construction, safe to share across threads.
struct HContext {
    HopfAlgebra H;
    int d;
    bool involutory = false;
    bool unimodular = false;
    bool counimodular = false;
    std::optional<IntegralData> ints; // absent when normalization fails
    std::string ints_error;

    std::vector<std::vector<std::pair<int, Scalar>>> mul_out;      // [i*d+j] -> (k, M[i][j][k])
    std::vector<std::vector<std::pair<int, Scalar>>> mul_byright;  // [p*d+j] -> (m, M[m][p][j])
    std::vector<std::vector<std::tuple<int, int, Scalar>>> mul_mid; // [a] -> (s, n, M[s][a][n])
    std::vector<std::vector<std::tuple<int, int, Scalar>>> comul_out; // [a] -> (p, q, D[a][p][q])
    std::vector<std::vector<std::pair<int, Scalar>>> comul_pair;   // [i*d+m] -> (k, D[k][i][m])
    std::vector<std::vector<std::pair<int, Scalar>>> s_row;        // [i] -> (j, S[i][j])

    // basis product in the Heisenberg double:
    // (e^i (x) e_a)(e^j (x) e_b) = sum pairtab[((i*d+a)*d+j)*d+b] of (k*d+r, c)
    std::vector<std::vector<std::pair<int, Scalar>>> pairtab;

    explicit HContext(const HopfAlgebra& algebra, int dim_cap = 8);

    const IntegralData& integrals() const;
    // Throws UnsupportedAlgebra naming the first failed hypothesis, if any.
    void require_admissible() const;
};

HTensor h_unit(const HContext& ctx, int deg);
HTensor h_simple(const HContext& ctx, Role r, int idx); // degree 1
HTensor h_mul(const HContext& ctx, const HTensor& x, const HTensor& y);

HTensor canonical_T(const HContext& ctx);    // degree 2
HTensor canonical_Tbar(const HContext& ctx); // degree 2

// Place a degree-2 tensor on legs (a, b) of a degree-3 tensor, unit elsewhere.
HTensor embed2(const HContext& ctx, const HTensor& x, int leg_a, int leg_b);

Matrix fock_action(const HContext& ctx, const HTensor& x); // x degree 1
Scalar chi_fock(const HContext& ctx, const HTensor& x);    // f(e_L) mu_R(a) formula
Scalar chi_fock_trace(const HContext& ctx, const HTensor& x); // trace realization
HTensor lu_preimage(const HContext& ctx, const Matrix& F);

bool check_pentagon(const HContext& ctx);
bool check_zero_two(const HContext& ctx);
std::vector<std::pair<std::string, bool>> check_mp_identities(const HContext& ctx);

// One side of an MP identity as a sparse degree-3 tensor (used by the checks
// and exposed for tests).
std::map<size_t, Scalar> mp_side_eval(const HContext& ctx, const MPSide& side);

// In-place degree-1 product on raw d^2 coefficient vectors (the evaluator's
// bead kernel works on these directly).
void elem_mul(const HContext& ctx, std::vector<Scalar>& x, const std::vector<Scalar>& y);

} // namespace hd
