#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scalar.hpp"

using namespace hd;

TEST_CASE("rational arithmetic and printing") {
    Scalar a = Scalar::parse("2/3", 0);
    Scalar b = Scalar::parse("-1/6", 0);
    CHECK((a + b).str() == "1/2");
    CHECK((a * b).str() == "-1/9");
    CHECK((a - a).is_zero());
    CHECK((a / b).str() == "-4");
    CHECK(a.inv().str() == "3/2");
    CHECK(Scalar(5).str() == "5");
    CHECK(Scalar::parse("4/2", 0).str() == "2"); // canonicalized
}

TEST_CASE("prime field arithmetic") {
    Scalar a(3, 5), b(4, 5);
    CHECK((a + b).str() == "2 mod 5");
    CHECK((a * b).str() == "2 mod 5");
    CHECK((-a).str() == "2 mod 5");
    CHECK(a.inv().str() == "2 mod 5"); // 3*2 = 6 = 1
    CHECK((a / b).str() == "2 mod 5"); // 3 * 4^-1 = 3*4 = 12 = 2
    CHECK(Scalar::parse("9 mod 7", 7).str() == "2 mod 7");
    // mixing Q with F_p is allowed only through exact integer literals
    CHECK((Scalar(1) + Scalar(1, 3)).str() == "2 mod 3");
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(Scalar::parse("1.5", 0), ParseError);
    CHECK_THROWS_AS(Scalar::parse("", 0), ParseError);
    CHECK_THROWS_AS(Scalar::parse("x", 0), ParseError);
    CHECK_THROWS_AS(Scalar(0).inv(), ShapeError);
}

TEST_CASE("matrix inverse and trace") {
    Matrix A(2, 2);
    A.at(0, 0) = Scalar(1);
    A.at(0, 1) = Scalar(2);
    A.at(1, 0) = Scalar(3);
    A.at(1, 1) = Scalar(4);
    Matrix B = mat_inverse(A);
    CHECK(mat_mul(A, B) == Matrix::identity(2));
    CHECK(mat_mul(B, A) == Matrix::identity(2));
    CHECK(trace(A).str() == "5");
    Matrix S(2, 2); // singular
    S.at(0, 0) = Scalar(1);
    S.at(0, 1) = Scalar(2);
    S.at(1, 0) = Scalar(2);
    S.at(1, 1) = Scalar(4);
    CHECK_THROWS_AS(mat_inverse(S), ShapeError);
}

TEST_CASE("nullspace is deterministic and exact") {
    // x + y + z = 0 over Q: nullspace dimension 2
    Matrix A(1, 3);
    for (int c = 0; c < 3; ++c) A.at(0, c) = Scalar(1);
    auto ns = solve_nullspace(A);
    REQUIRE(ns.size() == 2);
    for (const auto& v : ns) {
        Scalar s;
        for (const auto& x : v) s += x;
        CHECK(s.is_zero());
    }
    // over F_2 the same system
    Matrix B(1, 3);
    for (int c = 0; c < 3; ++c) B.at(0, c) = Scalar(1, 2);
    CHECK(solve_nullspace(B).size() == 2);
    // full-rank system has trivial nullspace
    CHECK(solve_nullspace(Matrix::identity(3)).empty());
}
