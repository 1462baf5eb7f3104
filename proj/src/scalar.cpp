#include "scalar.hpp"

#include <sstream>

namespace hd {

unsigned long Scalar::join(const Scalar& o) const {
    if (mod == o.mod) return mod;
    if (mod == 0) return o.mod;
    if (o.mod == 0) return mod;
    throw ShapeError("mixing scalars from different prime fields");
}

void Scalar::reduce() {
    if (mod == 0) return;
    mpz_class p(static_cast<unsigned long>(mod));
    mpz_class num = v.get_num() % p;
    if (num < 0) num += p;
    mpz_class den = v.get_den() % p;
    if (den == 0) throw ShapeError("denominator not invertible in F_p");
    if (den != 1) {
        mpz_class di;
        if (mpz_invert(di.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
            throw ShapeError("denominator not invertible in F_p");
        num = (num * di) % p;
    }
    v = mpq_class(num);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.v == 0) throw ShapeError("division by zero");
    return Scalar(v / o.v, join(o));
}

Scalar Scalar::inv() const {
    if (v == 0) throw ShapeError("inverse of zero");
    return Scalar(1 / v, mod);
}

std::string Scalar::str() const {
    std::ostringstream os;
    if (mod == 0) {
        os << v.get_num();
        if (v.get_den() != 1) os << "/" << v.get_den();
    } else {
        os << v.get_num() << " mod " << mod;
    }
    return os.str();
}

Scalar Scalar::parse(const std::string& s, unsigned long mod) {
    auto mp = s.find(" mod ");
    if (mp != std::string::npos) {
        std::string k = s.substr(0, mp);
        unsigned long p = std::stoul(s.substr(mp + 5));
        if (mod != 0 && mod != p) throw ParseError("scalar '" + s + "' has wrong modulus");
        return Scalar(mpq_class(k), p);
    }
    // mpq_class parses "a/b"; validate first for a clean error
    for (char c : s)
        if (!(isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/' || c == '+'))
            throw ParseError("bad scalar '" + s + "'");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad scalar '" + s + "'");
    q.canonicalize();
    return Scalar(q, mod);
}

Matrix Matrix::identity(int d, unsigned long mod) {
    Matrix m(d, d);
    for (auto& x : m.a) x.mod = mod;
    for (int i = 0; i < d; ++i) m.at(i, i) = Scalar(1, mod);
    return m;
}

Matrix mat_mul(const Matrix& x, const Matrix& y) {
    if (x.cols != y.rows) throw ShapeError("mat_mul shape mismatch");
    Matrix r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Scalar& xv = x.at(i, k);
            if (xv.is_zero()) continue;
            for (int j = 0; j < y.cols; ++j) {
                const Scalar& yv = y.at(k, j);
                if (yv.is_zero()) continue;
                r.at(i, j) += xv * yv;
            }
        }
    return r;
}

Matrix mat_add(const Matrix& x, const Matrix& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw ShapeError("mat_add shape mismatch");
    Matrix r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
    return r;
}

Matrix transpose(const Matrix& x) {
    Matrix r(x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
    return r;
}

Scalar trace(const Matrix& x) {
    if (x.rows != x.cols) throw ShapeError("trace of non-square matrix");
    Scalar t;
    for (int i = 0; i < x.rows; ++i) t += x.at(i, i);
    return t;
}

Matrix mat_inverse(const Matrix& x) {
    if (x.rows != x.cols) throw ShapeError("inverse of non-square matrix");
    int d = x.rows;
    Matrix a = x;
    Matrix inv = Matrix::identity(d);
    for (int c = 0; c < d; ++c) {
        int pr = -1;
        for (int i = c; i < d; ++i)
            if (!a.at(i, c).is_zero()) { pr = i; break; }
        if (pr < 0) throw ShapeError("singular matrix");
        for (int j = 0; j < d; ++j) {
            std::swap(a.at(c, j), a.at(pr, j));
            std::swap(inv.at(c, j), inv.at(pr, j));
        }
        Scalar pv = a.at(c, c).inv();
        for (int j = 0; j < d; ++j) {
            a.at(c, j) *= pv;
            inv.at(c, j) *= pv;
        }
        for (int i = 0; i < d; ++i) {
            if (i == c || a.at(i, c).is_zero()) continue;
            Scalar f = a.at(i, c);
            for (int j = 0; j < d; ++j) {
                a.at(i, j) -= f * a.at(c, j);
                inv.at(i, j) -= f * inv.at(c, j);
            }
        }
    }
    return inv;
}

std::vector<Vec> solve_nullspace(const Matrix& A) {
    Matrix a = A;
    int m = a.rows, d = a.cols;
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < d; ++c) {
        int pr = -1;
        for (int i = r; i < m; ++i)
            if (!a.at(i, c).is_zero()) { pr = i; break; }
        if (pr < 0) continue;
        for (int j = 0; j < d; ++j) std::swap(a.at(r, j), a.at(pr, j));
        Scalar pv = a.at(r, c).inv();
        for (int j = 0; j < d; ++j) a.at(r, j) *= pv;
        for (int i = 0; i < m; ++i) {
            if (i == r || a.at(i, c).is_zero()) continue;
            Scalar f = a.at(i, c);
            for (int j = 0; j < d; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    std::vector<Vec> basis;
    std::vector<bool> is_piv(d, false);
    for (int c : piv) is_piv[c] = true;
    for (int fc = 0; fc < d; ++fc) {
        if (is_piv[fc]) continue;
        Vec v(d);
        v[fc] = Scalar(1);
        for (size_t ri = 0; ri < piv.size(); ++ri) v[piv[ri]] = -a.at(int(ri), fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace hd
