#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invint/json_io.hpp"
#include "invint/linalg.hpp"

using namespace invint;
using fg::Cplx;

namespace {

fg::FiniteGroup load_group(const std::string& name) {
    return group_from_json(parse_file(std::string(INVINT_DATA_DIR) + "/groups/" + name +
                                      ".group.json"));
}

LoadedIrreps load_irreps(const std::string& name) {
    return irreps_from_json(parse_file(std::string(INVINT_DATA_DIR) + "/groups/" + name +
                                       ".irreps.json"));
}

// element indices in the shipped S3 table
enum { E = 0, T12 = 1, T13 = 2, T23 = 3, C123 = 4, C132 = 5 };

fg::GroupFunction<Rat> coeff_fn(const fg::FiniteGroup& g, const fg::IrrepTable<Rat>& t, int i,
                                int r, int s) {
    fg::GroupFunction<Rat> f(g.order);
    for (int x = 0; x < g.order; ++x) f[x] = t.irreps[i].rho[x].at(r, s);
    return f;
}

}  // namespace

TEST_CASE("group table validation") {
    auto s3 = load_group("s3");
    CHECK(s3.order == 6);
    CHECK(s3.identity == E);
    CHECK(s3.inv[T12] == T12);
    CHECK(s3.inv[C123] == C132);
    CHECK(s3.op(T12, T13) == C132);

    // broken tables are rejected eagerly
    CHECK_THROWS_AS(fg::FiniteGroup::from_table({{0, 1}, {1, 1}}), error);   // no inverse law
    CHECK_THROWS_AS(fg::FiniteGroup::from_table({{1, 0}, {1, 0}}), error);   // no identity
    CHECK_THROWS_AS(fg::FiniteGroup::from_table({{0, 1}, {1, 2}}), error);   // out of range
}

TEST_CASE("subgroups and normality") {
    auto s3 = load_group("s3");
    CHECK(s3.contains_subgroup({E, C123, C132}));
    CHECK(s3.is_normal({E, C123, C132}));
    CHECK(s3.contains_subgroup({E, T12}));
    CHECK_FALSE(s3.is_normal({E, T12}));
    CHECK_FALSE(s3.contains_subgroup({E, C123}));
}

TEST_CASE("irrep table validation") {
    auto s3 = load_group("s3");
    auto irr = load_irreps("s3");
    REQUIRE(irr.rational);
    irr.rat.validate(s3);
    CHECK(irr.rat.irreps.size() == 3);
    CHECK(irr.rat.irreps[2].degree == 2);

    // tampering breaks the homomorphism check
    auto bad = irr.rat;
    bad.irreps[2].rho[T12].at(0, 0) = Rat(7);
    CHECK_THROWS_AS(bad.validate(s3), error);

    // wrong degree sum
    fg::IrrepTable<Rat> small;
    small.irreps.push_back({1, std::vector<fg::Mat<Rat>>(6, fg::Mat<Rat>::identity(1))});
    CHECK_THROWS_AS(small.validate(s3), error);
}

TEST_CASE("invariant integral") {
    auto s3 = load_group("s3");
    auto irr = load_irreps("s3");
    fg::GroupFunction<Rat> one(6, Rat(1));
    CHECK(fg::invariant_integral(s3, one) == Rat(1));
    fg::GroupFunction<Rat> chireg(6, Rat(0));
    chireg[E] = Rat(6);
    CHECK(fg::invariant_integral(s3, chireg) == Rat(1));
    CHECK(fg::invariant_integral(s3, fg::character(s3, irr.rat, 1)).is_zero());
}

TEST_CASE("fourier blocks") {
    auto s3 = load_group("s3");
    auto irr = load_irreps("s3");
    // F(1) = w_G: trivial block 1, others 0
    fg::GroupFunction<Rat> one(6, Rat(1));
    auto hat = fg::fourier(s3, irr.rat, one);
    CHECK(hat[0].at(0, 0) == Rat(1));
    CHECK(hat[1].at(0, 0).is_zero());
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) CHECK(hat[2].at(r, c).is_zero());

    // F(chi_i) = 1_i / n_i
    auto hat2 = fg::fourier(s3, irr.rat, fg::character(s3, irr.rat, 2));
    CHECK(hat2[0].at(0, 0).is_zero());
    CHECK(hat2[2].at(0, 0) == Rat(Int(1), Int(2)));
    CHECK(hat2[2].at(0, 1).is_zero());

    // a = |G| delta_e has every block equal to the identity
    fg::GroupFunction<Rat> delta(6, Rat(0));
    delta[E] = Rat(6);
    auto hat3 = fg::fourier(s3, irr.rat, delta);
    for (size_t i = 0; i < hat3.size(); ++i)
        CHECK(hat3[i].approx_equal(fg::Mat<Rat>::identity(irr.rat.irreps[i].degree)));
}

TEST_CASE("inverse fourier") {
    auto s3 = load_group("s3");
    auto irr = load_irreps("s3");
    // roundtrip on every delta function
    for (int h = 0; h < 6; ++h) {
        fg::GroupFunction<Rat> delta(6, Rat(0));
        delta[h] = Rat(1);
        auto back = fg::inverse_fourier(s3, irr.rat, fg::fourier(s3, irr.rat, delta));
        CHECK(back == delta);
    }
    // dual element with only the trivial block set gives the constant 1
    fg::DualElement<Rat> w = {fg::Mat<Rat>::identity(1), fg::Mat<Rat>(1), fg::Mat<Rat>(2)};
    auto constant = fg::inverse_fourier(s3, irr.rat, w);
    for (int x = 0; x < 6; ++x) CHECK(constant[x] == Rat(1));
}

TEST_CASE("convolution") {
    auto s3 = load_group("s3");
    auto irr = load_irreps("s3");
    // scaled indicators: (|G| 1_{g0}) * (|G| 1_{h0}) = |G| 1_{h0 g0}
    fg::GroupFunction<Rat> a(6, Rat(0)), b(6, Rat(0));
    a[T12] = Rat(6);
    b[T13] = Rat(6);
    auto c = fg::convolution(s3, a, b);
    int expect = s3.op(T13, T12);
    for (int x = 0; x < 6; ++x) CHECK(c[x] == (x == expect ? Rat(6) : Rat(0)));

    // sign character convolved with the trivial character vanishes
    auto zero = fg::convolution(s3, fg::character(s3, irr.rat, 1), fg::character(s3, irr.rat, 0));
    for (int x = 0; x < 6; ++x) CHECK(zero[x].is_zero());

    // (a*b)(e) = T^2(a,b)
    fg::GroupFunction<Rat> u = {Rat(1), Rat(-2), Rat(3), Rat(0), Rat(5), Rat(-1)};
    fg::GroupFunction<Rat> v = {Rat(2), Rat(1), Rat(-1), Rat(4), Rat(0), Rat(3)};
    auto uv = fg::convolution(s3, u, v);
    CHECK(uv[E] == fg::parseval_pairing(s3, irr.rat, u, v).lhs);
}

TEST_CASE("parseval") {
    auto s3 = load_group("s3");
    auto irr = load_irreps("s3");
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            auto rep = fg::parseval_pairing(s3, irr.rat, fg::character(s3, irr.rat, i),
                                            fg::character(s3, irr.rat, j));
            CHECK(rep.equal);
            CHECK(rep.lhs == (i == j ? Rat(1) : Rat(0)));
        }
    fg::GroupFunction<Rat> one(6, Rat(1));
    auto rep = fg::parseval_pairing(s3, irr.rat, one, one);
    CHECK(rep.equal);
    CHECK(rep.lhs == Rat(1));
    // matrix coefficients of the 2-dim irrep pair to 1/n_i
    auto rep2 = fg::parseval_pairing(s3, irr.rat, coeff_fn(s3, irr.rat, 2, 0, 1),
                                     coeff_fn(s3, irr.rat, 2, 1, 0));
    CHECK(rep2.equal);
    CHECK(rep2.lhs == Rat(Int(1), Int(2)));
}

TEST_CASE("peter-weyl gram") {
    auto s3 = load_group("s3");
    auto irr = load_irreps("s3");
    auto gram = fg::peter_weyl_gram(s3, irr.rat);  // throws if the pattern is violated
    CHECK(gram.size() == 6);
    CHECK(gram[0][0] == Rat(1));
    // find the value 1/2 at the (2-dim, off-diagonal) pair: indices are
    // (i=0),(i=1),(i=2: rs=00,01,10,11) -> positions 2..5
    CHECK(gram[3][4] == Rat(Int(1), Int(2)));
    CHECK(gram[3][3].is_zero());
}

TEST_CASE("isotypic projections of the regular representation") {
    auto s3 = load_group("s3");
    auto irr = load_irreps("s3");
    auto rep = fg::regular_representation<Rat>(s3);
    fg::Mat<Rat> sum(6);
    std::vector<int> ranks;
    for (int i = 0; i < 3; ++i) {
        auto p = fg::isotypic_projection(s3, irr.rat, rep, i);
        CHECK((p * p).approx_equal(p));
        MatQ q(6, 6);
        for (int r = 0; r < 6; ++r)
            for (int c = 0; c < 6; ++c) q.at(r, c) = p.at(r, c);
        ranks.push_back(rank(q));
        sum = sum + p;
        // disjoint images: P_i P_j = 0 for i != j
        for (int j = 0; j < i; ++j) {
            auto pj = fg::isotypic_projection(s3, irr.rat, rep, j);
            fg::Mat<Rat> prod = p * pj;
            CHECK(prod.approx_equal(fg::Mat<Rat>(6)));
        }
    }
    CHECK(ranks == std::vector<int>({1, 1, 4}));
    CHECK(sum.approx_equal(fg::Mat<Rat>::identity(6)));
}

TEST_CASE("poisson summation") {
    auto s3 = load_group("s3");
    auto irr = load_irreps("s3");
    fg::GroupFunction<Rat> chireg(6, Rat(0));
    chireg[E] = Rat(6);
    auto rep = fg::poisson_check(s3, {E, C123, C132}, chireg, irr.rat);
    CHECK(rep.equal);
    CHECK(rep.lhs == Rat(2));
    CHECK(rep.rhs == Rat(2));
    // non-normal subgroup rejected
    CHECK_THROWS_AS(fg::poisson_check(s3, {E, T12}, chireg, irr.rat), error);
}

TEST_CASE("complex backend on C5 and C3") {
    auto c5 = load_group("c5");
    auto irr = load_irreps("c5");
    REQUIRE_FALSE(irr.rational);
    irr.cplx.validate(c5);
    fg::GroupFunction<Cplx> a = {{1, 0}, {0, 2}, {-1, 1}, {3, 0}, {0, -1}};
    auto back = fg::inverse_fourier(c5, irr.cplx, fg::fourier(c5, irr.cplx, a));
    for (int x = 0; x < 5; ++x) CHECK(std::abs(back[x] - a[x]) <= 1e-9);

    auto rep = fg::parseval_pairing(c5, irr.cplx, a, a);
    CHECK(rep.equal);

    auto c3 = load_group("c3");
    auto irr3 = load_irreps("c3");
    CHECK_NOTHROW(fg::peter_weyl_gram(c3, irr3.cplx));
}

TEST_CASE("peter-weyl violation is reported with indices") {
    // two copies of the trivial irrep pass the homomorphism law but violate
    // the coefficient orthogonality; the gram check must name the indices
    auto c2 = load_group("c2");
    fg::IrrepTable<Rat> bogus;
    bogus.irreps.push_back({1, {fg::Mat<Rat>::identity(1), fg::Mat<Rat>::identity(1)}});
    bogus.irreps.push_back({1, {fg::Mat<Rat>::identity(1), fg::Mat<Rat>::identity(1)}});
    CHECK_THROWS_WITH_AS(fg::peter_weyl_gram(c2, bogus), doctest::Contains("i=1"), error);
    CHECK_THROWS_AS(bogus.validate(c2), error);
}

TEST_CASE("function length validation") {
    auto s3 = load_group("s3");
    fg::GroupFunction<Rat> tooshort(3, Rat(1));
    CHECK_THROWS_AS(fg::invariant_integral(s3, tooshort), error);
    auto irr = load_irreps("s3");
    CHECK_THROWS_AS(fg::fourier(s3, irr.rat, tooshort), error);
}

TEST_CASE("translations and star") {
    auto s3 = load_group("s3");
    fg::GroupFunction<Rat> a = {Rat(1), Rat(2), Rat(3), Rat(4), Rat(5), Rat(6)};
    auto left = fg::translate_left(s3, a, T12);
    for (int x = 0; x < 6; ++x) CHECK(left[x] == a[s3.op(x, T12)]);
    auto starred = fg::star(s3, a);
    for (int x = 0; x < 6; ++x) CHECK(starred[x] == a[s3.inv[x]]);
    // star is an involution
    CHECK(fg::star(s3, starred) == a);
}
