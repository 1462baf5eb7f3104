#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "evaluator.hpp"
#include "registry.hpp"

using namespace hd;

TEST_CASE("builtin name registry") {
    auto groups = builtin_group_names();
    CHECK(groups.size() == 11);
    auto algebras = builtin_algebra_names();
    CHECK(algebras.size() == 22);
    for (const auto& g : groups) CHECK_NOTHROW(builtin_group(g));
    for (const auto& a : algebras) {
        HopfAlgebra H = builtin_algebra(a);
        CHECK(H.name == a);
        CHECK(H.mod == 0);
    }
    CHECK_THROWS_AS(builtin_group("Z9"), ParseError);
    CHECK_THROWS_AS(builtin_algebra("QZ9"), ParseError);
}

TEST_CASE("bare group names alias the group algebra") {
    HopfAlgebra a = builtin_algebra("S3");
    HopfAlgebra b = builtin_algebra("QS3");
    CHECK(a.M == b.M);
    CHECK(a.D == b.D);
    // Q8 the group vs QQ8 the algebra over the quaternion group
    CHECK(builtin_algebra("Q8").d == 8);
    CHECK(builtin_algebra("QQ8").d == 8);
    CHECK(builtin_algebra("FQ8").D == dual(builtin_algebra("QQ8")).D);
}

TEST_CASE("field selection for builtins") {
    HopfAlgebra H = builtin_algebra("QZ3", 5);
    CHECK(H.mod == 5);
    CHECK(validate_hopf(H).all_pass());
    HContext ctx(H);
    CHECK(invariant(ctx, lens(3)).z == Scalar(3, 5));
    CHECK(invariant(ctx, lens(3)).z.str() == "3 mod 5");
}

TEST_CASE("graph spec resolution") {
    CHECK(resolve_graph("lens:4").n == 4);
    CHECK(resolve_graph("sum(lens:2,lens:2)").n == 4);
    CHECK(resolve_graph("sum(sum(lens:2,lens:2),lens:3)").n == 7);
    CHECK_THROWS_AS(resolve_graph("lens:0"), ParseError);
    CHECK_THROWS_AS(resolve_graph("lens:x"), ParseError);
    CHECK_THROWS_AS(resolve_graph("sum(lens:2)"), ParseError);
    CHECK_THROWS_AS(resolve_graph("/no/such/file"), ParseError);
}

TEST_CASE("algebra spec resolution") {
    CHECK(resolve_algebra("builtin:QD4").name == "QD4");
    CHECK(resolve_algebra("QD4").name == "QD4");
    CHECK_THROWS_AS(resolve_algebra("builtin:nope"), ParseError);
    CHECK_THROWS_AS(resolve_algebra("/no/such/file.json"), ParseError);
}

TEST_CASE("graph files round trip through resolve") {
    std::string path = "cli_format_tmp_graph.txt";
    {
        std::ofstream out(path);
        out << serialize(lens(3));
    }
    OGraph g = resolve_graph(path);
    CHECK(g.n == 3);
    CHECK(g.circuit == lens(3).circuit);
    std::remove(path.c_str());
}
