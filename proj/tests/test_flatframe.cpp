#include "doctest.h"

#include "saito/flatframe.hpp"
#include "saito/parser.hpp"
#include "saito/rewrite.hpp"

using namespace saito;

namespace {

void require_all(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks) {
        CAPTURE(c.id);
        CAPTURE(c.detail);
        CHECK(c.pass);
    }
}

CsFrameData full_pipeline(const char* name) {
    GroupSpec g = make_group_by_name(name);
    FlatFrame ff = find_flat_coordinates(g);
    require_all(frame_invariants(ff));
    CsFrameData cfd = frame_matrices(ff);
    require_all(cs_frame_invariants(cfd));
    require_all(levi_civita_flat_frame(cfd));
    require_all(cs_flat_coordinates(cfd));
    return cfd;
}

}  // namespace

TEST_CASE("rewriting a symmetric polynomial in the invariants") {
    GroupSpec g = make_group_by_name("B2");
    // (x^2)^2 - 2 x^1 written back in u must be u1^4 + u2^4 + ... minus cross terms
    Poly p = g.invariants[1].pow(2) - g.invariants[0].scaled(2);
    auto q = express_in_invariants(p, g.invariants, g.degrees, {"x1", "x2"});
    REQUIRE(q.has_value());
    CHECK(*q == parse_poly("x2^2 - 2*x1", {"x1", "x2"}));

    // u1^2 alone is not invariant
    Poly bad = Poly::variable(g.variables, "u1").pow(2);
    CHECK_FALSE(express_in_invariants(bad, g.invariants, g.degrees, {"x1", "x2"}).has_value());
}

TEST_CASE("weighted exponent enumeration") {
    auto exps = weighted_exponents({4, 2}, 8);
    CHECK(exps.size() == 3);  // x1^2, x1 x2^2, x2^4
    CHECK(weighted_exponents({4, 2}, 3).empty());
}

TEST_CASE("rank one flat frame") {
    GroupSpec g = make_group_by_name("Z5");
    FlatFrame ff = find_flat_coordinates(g);
    CHECK(ff.t_in_x[0] == Poly::variable({"x1"}, "x1"));
    require_all(frame_invariants(ff));

    CsFrameData cfd = frame_matrices(ff);
    CHECK(cfd.A.at(0, 0) == Poly::constant(ff.tvars, Rat(4, 5)));
    require_all(cs_frame_invariants(cfd));
    require_all(levi_civita_flat_frame(cfd));
    // 2 S_1 = (-2 d_1 + d_n)/d_1 * 1/t1 = -1/t1
    CHECK(cfd.S[0].at(0, 0).scaled(2).equals(
        RatFn(parse_poly("-1", {"t1"}), parse_poly("t1", {"t1"}))));
    require_all(cs_flat_coordinates(cfd));
    CHECK(cfd.X.at(0, 0) == Poly::constant(ff.tvars, 1));
    CHECK(cfd.s_coords[0] == Poly::variable(ff.tvars, "t1"));

    auto cls = classify_compatible_metric(cfd);
    CHECK(cls.admits_compatible_metric);
    CHECK(cls.charge == Rat(0));
}

TEST_CASE("Coxeter flat frame has a constant anti-diagonal pairing") {
    CsFrameData cfd = full_pipeline("B2");
    CHECK(cfd.A.at(0, 0).is_zero());
    CHECK(cfd.A.at(0, 1).is_constant());
    CHECK_FALSE(cfd.A.at(0, 1).is_zero());
    CHECK(cfd.A.at(1, 1).is_zero());

    // trivial gauge: X = I and s = t
    for (int a = 0; a < 2; ++a) CHECK(cfd.Upsilon[a].is_zero());
    CHECK(cfd.X.at(0, 1).is_zero());
    CHECK(cfd.s_coords[0] == Poly::variable(cfd.ff.tvars, "t1"));

    auto cls = classify_compatible_metric(cfd);
    CHECK(cls.admits_compatible_metric);
    CHECK(cls.charge == Rat(1, 2));
    REQUIRE(cls.metric.has_value());
    CHECK((*cls.metric - cfd.A).is_zero());
}

TEST_CASE("Shephard flat frame needs a nontrivial gauge") {
    CsFrameData cfd = full_pipeline("G3_1_2");
    const FlatFrame& ff = cfd.ff;

    // t^1 = x^1 + c (x^2)^2 for a single constant c != 0
    Poly corr = ff.t_in_x[0] - Poly::variable({"x1", "x2"}, "x1");
    CHECK_FALSE(corr.is_zero());
    CHECK(corr.degree_in(0) <= 0);
    CHECK(corr.degree_in(1) == 2);

    // pairing is not anti-diagonal: (2,2) entry survives
    CHECK_FALSE(cfd.A.at(1, 1).is_zero());
    auto cls = classify_compatible_metric(cfd);
    CHECK_FALSE(cls.admits_compatible_metric);
    REQUIRE(cls.witness.has_value());
    CHECK(*cls.witness == std::pair<int, int>(2, 2));

    // gauge entry of degree d_1 - d_2 = 3, and s^1 = t^1 + F_1(t^2)
    CHECK_FALSE(cfd.X.at(0, 1).is_zero());
    int deg = 0;
    CHECK(cfd.X.at(0, 1).is_homogeneous(ff.g.degrees, &deg));
    CHECK(deg == 3);
    Poly sc = cfd.s_coords[0] - Poly::variable(ff.tvars, "t1");
    CHECK_FALSE(sc.is_zero());
    CHECK(sc.degree_in(0) <= 0);
}

TEST_CASE("other rank-two catalog members classify correctly") {
    for (const char* name : {"A2", "I2:5"}) {
        CAPTURE(name);
        CsFrameData cfd = full_pipeline(name);
        auto cls = classify_compatible_metric(cfd);
        CHECK(cls.admits_compatible_metric);
    }
}

TEST_CASE("t-frame product agrees with the u-frame product") {
    GroupSpec g = make_group_by_name("G3_1_2");
    FlatFrame ff = find_flat_coordinates(g);
    CsFrameData cfd = frame_matrices(ff);

    auto ef = e_field(g, jacobian(g));
    auto hm = hessian_metric(g);
    MultTensor diamond = cs_multiplication(g, hm, ef);

    int n = g.rank;
    PolyMatrix Jt(n, n, Poly(g.variables));
    for (int a = 0; a < n; ++a)
        for (int i = 0; i < n; ++i) Jt.at(a, i) = ff.t_in_u[a].derivative(i);
    RatFnMatrix Jti = ratfn_inverse(to_ratfn(Jt));
    for (int a = 0; a < n; ++a) {
        RatFnMatrix m(n, n, RatFn::zero(g.variables));
        for (int i = 0; i < n; ++i)
            m = m + diamond.B[i].map([&](const RatFn& v) { return v * Jti.at(i, a); });
        RatFnMatrix pushed = to_ratfn(Jt) * m * Jti;
        RatFnMatrix from_frame =
            cfd.B[a].map([&](const RatFn& v) { return v.substitute(ff.t_in_u); });
        CHECK(ratfn_matrix_equal(pushed, from_frame));
    }
}

TEST_CASE("repeated degrees are rejected") {
    CHECK_THROWS_AS(find_flat_coordinates(make_group_by_name("D4")), std::invalid_argument);
}
