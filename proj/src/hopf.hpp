#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace hd {

// Finite-dimensional Hopf algebra given purely by structure constants over
// basis e_1..e_d (0-indexed internally):
//   e_i e_j   = sum_k M[i][j][k] e_k
//   1         = sum_k u[k] e_k
//   Delta e_k = sum_{i,j} D[k][i][j] e_i (x) e_j
//   S e_i     = sum_j S[i][j] e_j
struct HopfAlgebra {
    int d = 0;
    unsigned long mod = 0; // base field: 0 = Q, else F_mod
    std::string name;
    std::vector<Scalar> M;   // d^3, [(i*d+j)*d+k]
    Vec u;                   // d
    std::vector<Scalar> D;   // d^3, [(k*d+i)*d+j]
    Vec eps;                 // d
    std::vector<Scalar> S;   // d^2, [i*d+j]

    Scalar m(int i, int j, int k) const { return M[(size_t(i) * d + j) * d + k]; }
    Scalar cm(int k, int i, int j) const { return D[(size_t(k) * d + i) * d + j]; }
    Scalar s(int i, int j) const { return S[size_t(i) * d + j]; }

    void check_shapes() const; // throws ShapeError
};

struct AxiomReport {
    std::vector<std::pair<std::string, bool>> items;
    bool all_pass() const {
        for (auto& it : items)
            if (!it.second) return false;
        return true;
    }
};

// One verdict per Hopf axiom, all checked as exact tensor equations.
AxiomReport validate_hopf(const HopfAlgebra& H);

bool is_involutory(const HopfAlgebra& H);

// Defining linear systems, solved exactly; each throws IntegralSpaceDimension
// unless the solution space is 1-dimensional. The representative returned has
// its first nonzero coordinate scaled to 1 (deterministic).
Vec right_integral(const HopfAlgebra& H);
Vec left_integral(const HopfAlgebra& H);
Vec left_cointegral(const HopfAlgebra& H);
Vec right_cointegral(const HopfAlgebra& H);

bool is_unimodular(const HopfAlgebra& H);   // the left cointegral is also right
bool is_counimodular(const HopfAlgebra& H); // the left integral is also right

struct IntegralData {
    Vec mu_R, mu_L, e_L, e_R; // normalized: mu_R(e_L) = mu_L(e_L) = 1, e_R = S(e_L)
};

Scalar pair_eval(const Vec& f, const Vec& x); // <f, x> = sum f_i x_i

// Throws DegeneratePairing when mu_R(e_L) = 0 or mu_L(e_L) = 0.
IntegralData normalize_integrals(const HopfAlgebra& H);

struct GroupTable {
    int n = 0;
    std::vector<int> t;   // n*n, t[g*n+h]; index 0 is the identity
    std::vector<int> inv; // n
    std::string name;

    GroupTable() = default;
    GroupTable(int order, std::vector<int> table, std::string nm); // checks group axioms
    int mul(int g, int h) const { return t[size_t(g) * n + h]; }
};

GroupTable cyclic_group(int n);
GroupTable s3_group();
GroupTable d4_group();
GroupTable q8_group();

HopfAlgebra group_algebra(const GroupTable& G, unsigned long mod, const std::string& name);
HopfAlgebra dual(const HopfAlgebra& H);
HopfAlgebra function_algebra(const GroupTable& G, unsigned long mod, const std::string& name);

// JSON file formats (see README): Hopf algebras {dim, field, mult, unit,
// comult, counit, antipode}, group tables {order, table}.
HopfAlgebra parse_hopf_json(const std::string& text);
GroupTable parse_group_json(const std::string& text);

} // namespace hd
