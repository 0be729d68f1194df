#include "doctest.h"

#include "saito/geometry.hpp"
#include "saito/parser.hpp"

using namespace saito;

namespace {
RatFn R2(const std::string& num, const std::string& den) {
    return RatFn(parse_poly(num, {"u1", "u2"}), parse_poly(den, {"u1", "u2"}));
}
}  // namespace

TEST_CASE("rank one: Z5") {
    GroupSpec g = make_group_by_name("Z5");
    auto jd = jacobian(g);
    CHECK(jd.J.at(0, 0) == parse_poly("5*u1^4", {"u1"}));
    CHECK(jd.detJ == parse_poly("5*u1^4", {"u1"}));
    auto ef = e_field(g, jd);
    CHECK(ef.e[0].equals(RatFn(parse_poly("1", {"u1"}), parse_poly("5*u1^4", {"u1"}))));

    auto hm = hessian_metric(g);
    CHECK(hm.H.at(0, 0) == parse_poly("20*u1^3", {"u1"}));
    CHECK(hm.S[0].at(0, 0).equals(RatFn(parse_poly("3", {"u1"}), parse_poly("2*u1", {"u1"}))));
}

TEST_CASE("G(3,1,2) e-field and Hessian data") {
    GroupSpec g = make_group_by_name("G3_1_2");
    auto jd = jacobian(g);
    auto ef = e_field(g, jd);
    CHECK(ef.e[0].equals(R2("-1", "3*u1^2*(u1^3 - u2^3)")));
    CHECK(ef.e[1].equals(R2("1", "3*u2^2*(u1^3 - u2^3)")));
    CHECK_FALSE(ef.detQ.is_zero());

    auto hm = hessian_metric(g);
    CHECK(hm.H.at(0, 0) == parse_poly("6*u1", {"u1", "u2"}));
    CHECK(hm.H.at(1, 1) == parse_poly("6*u2", {"u1", "u2"}));
    CHECK(hm.H.at(0, 1).is_zero());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                RatFn got = hm.S[i].at(k, j);
                if (i == j && j == k) {
                    CHECK(got.equals(R2("1", "2*u" + std::to_string(i + 1))));
                } else {
                    CHECK(got.is_zero());
                }
            }
}

TEST_CASE("Coxeter groups have vanishing Hessian Christoffels") {
    for (const char* name : {"A2", "B2", "B3", "I2:5", "D4"}) {
        GroupSpec g = make_group_by_name(name);
        CAPTURE(name);
        auto hm = hessian_metric(g);
        for (const auto& s : hm.S) CHECK(s.is_zero());
    }
}

TEST_CASE("B2 Jacobian determinant degree") {
    GroupSpec g = make_group_by_name("B2");
    auto jd = jacobian(g);
    int d = 0;
    CHECK(jd.detJ.is_homogeneous(g.unit_weights(), &d));
    CHECK(d == 4);
}

TEST_CASE("J times Jinv is the identity and Q is the e-Jacobian") {
    for (const char* name : {"Z5", "A2", "A3", "B2", "B3", "I2:5", "G3_1_2", "G3_1_3", "G4_1_2",
                             "G4_1_3", "G3_3_3"}) {
        GroupSpec g = make_group_by_name(name);
        CAPTURE(name);
        auto jd = jacobian(g);
        auto prod = to_ratfn(jd.J) * jd.Jinv;
        auto id = RatFnMatrix::identity(g.rank, RatFn::zero(g.variables),
                                        RatFn::constant(g.variables, 1));
        CHECK(ratfn_matrix_equal(prod, id));
        auto ef = e_field(g, jd);
        // defining property: e applied to x^1 is 1, to the others 0
        for (int a = 0; a < g.rank; ++a) {
            RatFn applied = RatFn::zero(g.variables);
            for (int k = 0; k < g.rank; ++k)
                applied += ef.e[k] * RatFn(g.invariants[a].derivative(k));
            CHECK(applied.equals(RatFn::constant(g.variables, a == 0 ? 1 : 0)));
        }
    }
}

TEST_CASE("euler field") {
    GroupSpec g = make_group_by_name("G3_1_2");
    auto e = euler_field(g);  // throws if the degree-operator identity fails
    CHECK(e.scale == Rat(1, 6));
    CHECK(euler_field(make_group_by_name("B2")).scale == Rat(1, 4));
    Poly x1 = g.invariants[0];
    Poly applied(g.variables);
    for (int i = 0; i < g.rank; ++i) applied += e.e_deg[i] * x1.derivative(i);
    CHECK(applied == x1.scaled(6));
}

TEST_CASE("flatness checker") {
    std::vector<std::string> uv = {"u1", "u2"};
    RatFn zero = RatFn::zero(uv);
    std::vector<RatFnMatrix> trivial(2, RatFnMatrix(2, 2, zero));
    CHECK_FALSE(flatness_check(trivial).has_value());

    auto hm = hessian_metric(make_group_by_name("G3_1_2"));
    CHECK_FALSE(flatness_check(hm.S).has_value());
    CHECK_FALSE(flatness_check(hessian_metric(make_group_by_name("G3_1_3")).S).has_value());
    CHECK_FALSE(flatness_check(hessian_metric(make_group_by_name("Z5")).S).has_value());

    // d2 of the (1,1) entry of Gamma_1 survives
    std::vector<RatFnMatrix> bad(2, RatFnMatrix(2, 2, zero));
    bad[0].at(0, 0) = RatFn(parse_poly("u2", uv));
    auto w = flatness_check(bad);
    REQUIRE(w.has_value());
    CHECK(w->i == 0);
    CHECK(w->j == 1);
    CHECK(w->row == 0);
    CHECK(w->col == 0);
}

TEST_CASE("Hessian connection rescales the Euler field by d_n/(2 d_1)") {
    for (const char* name : {"Z5", "B2", "B3", "A2", "I2:5", "G3_1_2", "G3_1_3"}) {
        GroupSpec g = make_group_by_name(name);
        CAPTURE(name);
        auto hm = hessian_metric(g);
        Rat r = cs_parameter(g);
        CHECK(connection_scales_euler(g, hm.S, r));
        CHECK_FALSE(connection_scales_euler(g, hm.S, r + 1));
    }
    CHECK(cs_parameter(make_group_by_name("Z5")) == Rat(1, 2));
    CHECK(cs_parameter(make_group_by_name("G3_1_2")) == Rat(1, 4));
    CHECK(cs_parameter(make_group_by_name("B2")) == Rat(1, 4));
}
