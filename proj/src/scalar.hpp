#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "errors.hpp"

namespace hd {

// Exact base-field element. mod == 0 means arbitrary-precision rationals;
// mod == p > 0 means the prime field F_p, stored as an integer in [0, p).
// All arithmetic is exact; there is no tolerance anywhere in this codebase.
struct Scalar {
    mpq_class v;
    unsigned long mod = 0;

    Scalar() : v(0) {}
    Scalar(long x) : v(x) {}
    Scalar(long x, unsigned long m) : v(x), mod(m) { reduce(); }
    Scalar(const mpq_class& q, unsigned long m = 0) : v(q), mod(m) { reduce(); }

    bool is_zero() const { return v == 0; }

    Scalar operator+(const Scalar& o) const { return Scalar(v + o.v, join(o)); }
    Scalar operator-(const Scalar& o) const { return Scalar(v - o.v, join(o)); }
    Scalar operator*(const Scalar& o) const { return Scalar(v * o.v, join(o)); }
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const { return Scalar(-v, mod); }
    Scalar& operator+=(const Scalar& o) { mod = join(o); v += o.v; reduce(); return *this; }
    Scalar& operator-=(const Scalar& o) { mod = join(o); v -= o.v; reduce(); return *this; }
    Scalar& operator*=(const Scalar& o) { mod = join(o); v *= o.v; reduce(); return *this; }

    bool operator==(const Scalar& o) const { return v == o.v; }
    bool operator!=(const Scalar& o) const { return v != o.v; }

    Scalar inv() const;

    // "p/q" over the rationals (lowest terms, positive denominator, the "/q"
    // suffix dropped when q = 1), "k mod p" over F_p.
    std::string str() const;
    static Scalar parse(const std::string& s, unsigned long mod);

  private:
    unsigned long join(const Scalar& o) const;
    void reduce();
};

struct Matrix {
    int rows = 0, cols = 0;
    std::vector<Scalar> a; // dense, row-major

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}
    Scalar& at(int r, int c) { return a[size_t(r) * cols + c]; }
    const Scalar& at(int r, int c) const { return a[size_t(r) * cols + c]; }
    static Matrix identity(int d, unsigned long mod = 0);
    bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

using Vec = std::vector<Scalar>;

Matrix mat_mul(const Matrix& x, const Matrix& y);
Matrix mat_add(const Matrix& x, const Matrix& y);
Matrix transpose(const Matrix& x);
Scalar trace(const Matrix& x);
Matrix mat_inverse(const Matrix& x); // throws ShapeError if singular

// Basis of { x : A x = 0 }. Gaussian elimination, first-nonzero pivot,
// free columns in ascending order (deterministic).
std::vector<Vec> solve_nullspace(const Matrix& A);

} // namespace hd
