#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopf.hpp"
#include "registry.hpp"

using namespace hd;

TEST_CASE("group tables") {
    GroupTable z4 = cyclic_group(4);
    CHECK(z4.mul(1, 3) == 0);
    CHECK(z4.inv[3] == 1);
    CHECK(s3_group().n == 6);
    CHECK(d4_group().n == 8);
    GroupTable q8 = q8_group();
    CHECK(q8.n == 8);
    // Q8 has a unique element of order 2
    int order2 = 0;
    for (int g = 1; g < 8; ++g)
        if (q8.mul(g, g) == 0) ++order2;
    CHECK(order2 == 1);
    // bad table: constant map is not a group
    CHECK_THROWS_AS(GroupTable(2, std::vector<int>{0, 0, 0, 0}, "bad"), ShapeError);
}

TEST_CASE("axioms hold for every builtin algebra") {
    for (const auto& name : builtin_algebra_names()) {
        HopfAlgebra H = builtin_algebra(name);
        AxiomReport rep = validate_hopf(H);
        INFO(name);
        CHECK(rep.all_pass());
        CHECK(is_involutory(H));
        CHECK(is_unimodular(H));
        CHECK(is_counimodular(H));
    }
}

TEST_CASE("breaking the antipode is detected") {
    HopfAlgebra H = builtin_algebra("QZ2");
    for (auto& s : H.S) s = Scalar(0);
    AxiomReport rep = validate_hopf(H);
    CHECK_FALSE(rep.all_pass());
    bool antipode_flagged = false;
    for (const auto& [name, pass] : rep.items)
        if (name.rfind("antipode", 0) == 0 && !pass) antipode_flagged = true;
    CHECK(antipode_flagged);
}

TEST_CASE("integrals of a group algebra") {
    // mu_R = evaluation at the identity, cointegral = sum of group elements
    HopfAlgebra H = builtin_algebra("QZ3");
    IntegralData I = normalize_integrals(H);
    for (int i = 0; i < 3; ++i) {
        CHECK(I.mu_R[size_t(i)] == Scalar(i == 0 ? 1 : 0));
        CHECK(I.mu_L[size_t(i)] == Scalar(i == 0 ? 1 : 0));
        CHECK(I.e_L[size_t(i)] == Scalar(1));
        CHECK(I.e_R[size_t(i)] == Scalar(1));
    }
    CHECK(pair_eval(I.mu_R, I.e_L) == Scalar(1));
}

TEST_CASE("integrals of a function algebra") {
    // dual picture: integral = sum over the group, cointegral = delta at e
    HopfAlgebra H = builtin_algebra("FS3");
    IntegralData I = normalize_integrals(H);
    for (int i = 0; i < 6; ++i) {
        CHECK(I.mu_R[size_t(i)] == Scalar(1));
        CHECK(I.e_L[size_t(i)] == Scalar(i == 0 ? 1 : 0));
    }
}

TEST_CASE("dual is an involution") {
    for (const auto& name : {"QZ4", "QS3", "QQ8"}) {
        HopfAlgebra H = builtin_algebra(name);
        HopfAlgebra HH = dual(dual(H));
        CHECK(HH.M == H.M);
        CHECK(HH.D == H.D);
        CHECK(HH.S == H.S);
        CHECK(HH.u == H.u);
        CHECK(HH.eps == H.eps);
    }
}

TEST_CASE("function_algebra agrees with dual of the group algebra") {
    GroupTable G = d4_group();
    HopfAlgebra F = function_algebra(G, 0, "FD4");
    HopfAlgebra D = dual(group_algebra(G, 0, "QD4"));
    CHECK(F.M == D.M);
    CHECK(F.D == D.D);
    CHECK(F.S == D.S);
}

TEST_CASE("hopf json round trip") {
    // Q[Z2] written out by hand
    std::string text = R"({
      "dim": 2, "field": "Q",
      "mult": [[[1,0],[0,1]],[[0,1],[1,0]]],
      "unit": [1,0],
      "comult": [[[1,0],[0,0]],[[0,0],[0,1]]],
      "counit": [1,1],
      "antipode": [[1,0],[0,1]]
    })";
    HopfAlgebra H = parse_hopf_json(text);
    CHECK(H.d == 2);
    CHECK(H.mod == 0);
    CHECK(validate_hopf(H).all_pass());
    HopfAlgebra ref = builtin_algebra("QZ2");
    CHECK(H.M == ref.M);
    CHECK(H.D == ref.D);

    std::string fp = R"({
      "dim": 2, "field": {"Fp": 5},
      "mult": [[["1 mod 5","0 mod 5"],["0 mod 5","1 mod 5"]],
               [["0 mod 5","1 mod 5"],["1 mod 5","0 mod 5"]]],
      "unit": ["1 mod 5","0 mod 5"],
      "comult": [[["1 mod 5","0 mod 5"],["0 mod 5","0 mod 5"]],
                 [["0 mod 5","0 mod 5"],["0 mod 5","1 mod 5"]]],
      "counit": ["1 mod 5","1 mod 5"],
      "antipode": [["1 mod 5","0 mod 5"],["0 mod 5","1 mod 5"]]
    })";
    HopfAlgebra Hp = parse_hopf_json(fp);
    CHECK(Hp.mod == 5);
    CHECK(validate_hopf(Hp).all_pass());

    CHECK_THROWS_AS(parse_hopf_json("{\"dim\": 2}"), ParseError);
    CHECK_THROWS_AS(parse_hopf_json("not json"), ParseError);
}

TEST_CASE("group json") {
    GroupTable G = parse_group_json(R"({"order": 2, "table": [[0,1],[1,0]]})");
    CHECK(G.n == 2);
    CHECK(G.mul(1, 1) == 0);
    CHECK_THROWS_AS(parse_group_json(R"({"order": 2, "table": [[1,0],[0,1]]})"), ShapeError);
}

TEST_CASE("degenerate input raises a typed error") {
    // 2-dim algebra that is not Hopf: comult with a 2-dim cointegral space
    HopfAlgebra H = builtin_algebra("QZ2");
    for (auto& x : H.D) x = Scalar(0);
    CHECK_THROWS_AS(right_integral(H), IntegralSpaceDimension);
}
