#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invint/poly.hpp"

using namespace invint;

namespace {

Poly var(int n, int i, int j) { return Poly::variable(n, i, j); }

}  // namespace

TEST_CASE("Rat canonical form and arithmetic") {
    CHECK(Rat(Int(2), Int(4)) == Rat(Int(1), Int(2)));
    CHECK(Rat(Int(-2), Int(-4)) == Rat(Int(1), Int(2)));
    CHECK(Rat(Int(3), Int(-6)).str() == "-1/2");
    CHECK(Rat(Int(3), Int(-6)).den() == Int(2));
    CHECK((Rat(1) / Rat(3) + Rat(1) / Rat(6)).str() == "1/2");
    CHECK((Rat(2) * Rat(Int(1), Int(2))) == Rat(1));
    CHECK(Rat(0).is_zero());
    CHECK(Rat(-5).str() == "-5");
    CHECK_THROWS_AS(Rat(Int(1), Int(0)), error);
    CHECK_THROWS_AS(Rat(1) / Rat(0), error);
}

TEST_CASE("Rat parse") {
    CHECK(Rat::parse("-7/14") == Rat(Int(-1), Int(2)));
    CHECK(Rat::parse("42") == Rat(42));
    CHECK(Rat::parse("0") == Rat(0));
    CHECK(Rat::parse("+3/9").str() == "1/3");
    CHECK_THROWS_AS(Rat::parse(""), error);
    CHECK_THROWS_AS(Rat::parse("1/0"), error);
    CHECK_THROWS_AS(Rat::parse("a/b"), error);
    CHECK_THROWS_AS(Rat::parse("1/"), error);
    CHECK_THROWS_AS(Rat::parse("1.5"), error);
}

TEST_CASE("poly_det small cases") {
    CHECK(poly_det(1) == var(1, 1, 1));
    CHECK(poly_det(2) == var(2, 1, 1) * var(2, 2, 2) - var(2, 1, 2) * var(2, 2, 1));

    // Leibniz expansion of det_3, the six signed terms listed independently
    Poly expect(3);
    struct Term { int j1, j2, j3, sgn; };
    for (const Term& t : {Term{1, 2, 3, +1}, Term{2, 3, 1, +1}, Term{3, 1, 2, +1},
                          Term{1, 3, 2, -1}, Term{2, 1, 3, -1}, Term{3, 2, 1, -1}}) {
        Poly mono = var(3, 1, t.j1) * var(3, 2, t.j2) * var(3, 3, t.j3);
        expect += Rat(t.sgn) * mono;
    }
    CHECK(poly_det(3) == expect);
    CHECK(poly_det(3).terms().size() == 6);
    CHECK(poly_det(4).terms().size() == 24);
}

TEST_CASE("poly arithmetic examples") {
    Poly det2 = poly_det(2);
    CHECK(poly_mul(var(2, 1, 1), var(2, 2, 2)) == var(2, 1, 1) * var(2, 2, 2));
    CHECK(poly_mul(det2, Poly::constant(2, Rat(1))) == det2);
    Poly a = var(2, 1, 1) + var(2, 1, 2);
    Poly b = var(2, 1, 1) - var(2, 1, 2);
    CHECK(a * b == var(2, 1, 1) * var(2, 1, 1) - var(2, 1, 2) * var(2, 1, 2));
    CHECK_THROWS_AS(poly_mul(poly_det(2), poly_det(3)), error);
}

TEST_CASE("homogeneous components") {
    Poly p = var(2, 1, 1) + var(2, 1, 1) * var(2, 2, 2);
    CHECK(homogeneous_component(p, 2) == var(2, 1, 1) * var(2, 2, 2));
    CHECK(homogeneous_component(p, 3).is_zero());
    Poly d2sq = poly_det(2).pow(2);
    CHECK(homogeneous_component(d2sq, 4) == d2sq);
    CHECK(poly_det(3).degree() == 3);
    CHECK(homogeneous_component(poly_det(3), 3) == poly_det(3));
}

TEST_CASE("apply_diff_op") {
    DiffOp d11 = DiffOp::partial(2, 1, 1);
    CHECK(apply_diff_op(d11, var(2, 1, 1) * var(2, 1, 1)) == Rat(2) * var(2, 1, 1));
    CHECK(apply_diff_op(d11, var(2, 2, 2)).is_zero());

    // (d11 d22 - d12 d21)(x11 x22) = 1 by hand differentiation
    DiffOp cay(poly_det(2));
    Poly one = apply_diff_op(cay, var(2, 1, 1) * var(2, 2, 2));
    CHECK(one == Poly::constant(2, Rat(1)));

    // linearity
    Poly p = var(2, 1, 1) * var(2, 1, 1) + Rat(3) * var(2, 2, 1);
    Poly q = var(2, 1, 2);
    CHECK(apply_diff_op(d11, p + q) == apply_diff_op(d11, p) + apply_diff_op(d11, q));
    CHECK_THROWS_AS(apply_diff_op(DiffOp::partial(3, 1, 1), p), error);
}

TEST_CASE("eval_at_zero") {
    CHECK(eval_at_zero(Poly::constant(2, Rat(3)) + var(2, 1, 1)) == Rat(3));
    CHECK(eval_at_zero(poly_det(2)).is_zero());
    CHECK(eval_at_zero(Poly(2)).is_zero());
}

TEST_CASE("deterministic printing") {
    CHECK(poly_det(2).str() == "x11*x22 - x12*x21");
    CHECK(Poly(2).str() == "0");
    CHECK((Rat(Int(1), Int(2)) * var(2, 1, 1)).str() == "1/2*x11");
    CHECK((var(2, 1, 1) * var(2, 1, 1) - Poly::constant(2, Rat(7))).str() == "x11^2 - 7");
    DiffOp cay(poly_det(2));
    CHECK(cay.str() == "d11*d22 - d12*d21");
}
