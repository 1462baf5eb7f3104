#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heisenberg.hpp"
#include "registry.hpp"

using namespace hd;

TEST_CASE("dim-1 algebra: everything is trivial") {
    HContext ctx(builtin_algebra("QZ1"));
    CHECK(canonical_T(ctx) == h_unit(ctx, 2));
    CHECK(check_pentagon(ctx));
    CHECK(check_zero_two(ctx));
    for (const auto& [name, pass] : check_mp_identities(ctx)) {
        INFO(name);
        CHECK(pass);
    }
}

TEST_CASE("heisenberg multiplication is associative and unital") {
    for (const auto& name : {"QZ3", "QS3", "FZ4"}) {
        HContext ctx(builtin_algebra(name));
        int d = ctx.d;
        HTensor one = h_unit(ctx, 1);
        for (int x = 0; x < d * d; x += d + 1) {
            HTensor a(d, 1, ctx.H.mod);
            a.c[size_t(x)] = Scalar(1, ctx.H.mod);
            HTensor b(d, 1, ctx.H.mod);
            b.c[size_t((x + 1) % (d * d))] = Scalar(2, ctx.H.mod);
            HTensor c(d, 1, ctx.H.mod);
            c.c[size_t((x + d) % (d * d))] = Scalar(1, ctx.H.mod);
            CHECK(h_mul(ctx, h_mul(ctx, a, b), c) == h_mul(ctx, a, h_mul(ctx, b, c)));
            CHECK(h_mul(ctx, one, a) == a);
            CHECK(h_mul(ctx, a, one) == a);
        }
    }
}

TEST_CASE("pentagon and 0-2 for small builtins") {
    for (const auto& name : {"QZ2", "QZ5", "QS3", "FZ2", "FS3", "QD4"}) {
        HContext ctx(builtin_algebra(name));
        INFO(name);
        CHECK(check_pentagon(ctx));
        CHECK(check_zero_two(ctx));
    }
}

TEST_CASE("the sixteen pentagon-family identities") {
    for (const auto& name : {"QZ2", "QZ3", "QS3", "FZ3"}) {
        HContext ctx(builtin_algebra(name));
        auto verdicts = check_mp_identities(ctx);
        REQUIRE(verdicts.size() == 16);
        for (const auto& [id, pass] : verdicts) {
            INFO(name << " " << id);
            CHECK(pass);
        }
    }
}

TEST_CASE("fock character: formula equals trace") {
    for (const auto& name : {"QZ2", "QZ4", "QS3", "FZ3", "FS3"}) {
        HContext ctx(builtin_algebra(name));
        int d = ctx.d;
        for (int i = 0; i < d; ++i)
            for (int a = 0; a < d; ++a) {
                HTensor x(d, 1, ctx.H.mod);
                x.c[size_t(i) * d + a] = Scalar(1, ctx.H.mod);
                INFO(name << " basis " << i << "," << a);
                CHECK(chi_fock(ctx, x) == chi_fock_trace(ctx, x));
            }
    }
}

TEST_CASE("chi_fock of eps (x) 1 is the dimension") {
    for (const auto& name : {"QZ2", "QS3", "QQ8"}) {
        HContext ctx(builtin_algebra(name));
        HTensor x(ctx.d, 1, ctx.H.mod);
        for (int i = 0; i < ctx.d; ++i)
            for (int a = 0; a < ctx.d; ++a) {
                Scalar c = ctx.H.eps[size_t(i)] * ctx.H.u[size_t(a)];
                if (!c.is_zero()) x.c[size_t(i) * ctx.d + a] = c;
            }
        CHECK(chi_fock(ctx, x) == Scalar(ctx.d));
    }
}

TEST_CASE("fock action is an algebra map") {
    HContext ctx(builtin_algebra("QS3"));
    int d = ctx.d;
    HTensor a(d, 1, 0), b(d, 1, 0);
    a.c[size_t(1) * d + 2] = Scalar(1);
    a.c[size_t(3) * d + 0] = Scalar(-2);
    b.c[size_t(0) * d + 4] = Scalar(1);
    b.c[size_t(5) * d + 5] = Scalar(3);
    CHECK(fock_action(ctx, h_mul(ctx, a, b)) ==
          mat_mul(fock_action(ctx, a), fock_action(ctx, b)));
}

TEST_CASE("lu preimage inverts the fock action") {
    for (const auto& name : {"QZ2", "QZ3", "QZ4", "QS3", "FZ3"}) {
        HContext ctx(builtin_algebra(name));
        int d = ctx.d;
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) {
                Matrix F(d, d);
                F.at(r, c) = Scalar(1, ctx.H.mod);
                INFO(name << " unit matrix " << r << "," << c);
                CHECK(fock_action(ctx, lu_preimage(ctx, F)) == F);
            }
    }
}

TEST_CASE("admissibility gate") {
    HContext good(builtin_algebra("QZ2"));
    CHECK_NOTHROW(good.require_admissible());
    // break involutivity: replace S with the zero map
    HopfAlgebra H = builtin_algebra("QZ4");
    for (auto& s : H.S) s = Scalar(0);
    HContext bad(H);
    CHECK_THROWS_AS(bad.require_admissible(), UnsupportedAlgebra);
    // dimension cap
    CHECK_THROWS_AS(HContext(builtin_algebra("QD4"), 4), BudgetExceeded);
}
