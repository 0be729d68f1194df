#include "doctest.h"

#include "saito/appendix.hpp"
#include "saito/geometry.hpp"
#include "saito/parser.hpp"

using namespace saito;

TEST_CASE("determinant closed form matches the cofactor oracle") {
    CHECK(closed_det(2) == parse_poly("v1 - v2", {"v1", "v2"}));
    CHECK(closed_det(3) ==
          parse_poly("(v1 - v2)*(v1 - v3)*(v2 - v3)", {"v1", "v2", "v3"}));
    for (int n = 1; n <= 5; ++n) {
        CAPTURE(n);
        CHECK(closed_det(n) == poly_det_cofactor(elem_sym_matrix(n)));
    }
}

TEST_CASE("the matrix has ones in the first row and omits its column variable") {
    PolyMatrix m = elem_sym_matrix(4);
    for (int j = 0; j < 4; ++j) {
        CHECK(m.at(0, j).is_constant());
        CHECK(m.at(0, j).constant_value() == 1);
        for (int a = 0; a < 4; ++a) CHECK(m.at(a, j).degree_in(j) <= 0);
    }
}

TEST_CASE("deleted-row-and-column minors") {
    CHECK(closed_minor(2, 1, 1) == parse_poly("v1", {"v1", "v2"}));
    CHECK(closed_minor(3, 2, 2) == parse_poly("v2*(v1 - v3)", {"v1", "v2", "v3"}));
    CHECK(closed_minor(3, 1, 3) == parse_poly("v3^2*(v1 - v2)", {"v1", "v2", "v3"}));
    CHECK_THROWS_AS(closed_minor(3, 0, 1), std::out_of_range);
    CHECK_THROWS_AS(closed_minor(3, 1, 4), std::out_of_range);

    for (int n = 2; n <= 4; ++n) {
        PolyMatrix m = elem_sym_matrix(n);
        for (int a = 1; a <= n; ++a)
            for (int j = 1; j <= n; ++j) {
                CAPTURE(n);
                CAPTURE(a);
                CAPTURE(j);
                PolyMatrix sub(n - 1, n - 1, m.zero_like());
                for (int r = 0, rr = 0; r < n; ++r) {
                    if (r == a - 1) continue;
                    for (int c = 0, cc = 0; c < n; ++c) {
                        if (c == j - 1) continue;
                        sub.at(rr, cc++) = m.at(r, c);
                    }
                    ++rr;
                }
                CHECK(closed_minor(n, a, j) == poly_det_cofactor(sub));
            }
    }
}

TEST_CASE("closed-form inverse") {
    CHECK(closed_inverse_entry(1, 1, 1).equals(RatFn::constant({"v1"}, 1)));
    CHECK(closed_inverse_entry(2, 1, 1).equals(
        RatFn(parse_poly("v1", {"v1", "v2"}), parse_poly("v1 - v2", {"v1", "v2"}))));
    CHECK(closed_inverse_entry(2, 1, 2).equals(
        RatFn(parse_poly("-1", {"v1", "v2"}), parse_poly("v1 - v2", {"v1", "v2"}))));

    for (int n = 1; n <= 5; ++n) {
        CAPTURE(n);
        RatFnMatrix em = to_ratfn(elem_sym_matrix(n));
        RatFnMatrix inv(n, n, em.zero_like());
        for (int i = 1; i <= n; ++i)
            for (int a = 1; a <= n; ++a) inv.at(i - 1, a - 1) = closed_inverse_entry(n, i, a);
        RatFnMatrix id = RatFnMatrix::identity(n, em.zero_like(),
                                               RatFn::constant(em.zero_like().vars(), 1));
        CHECK(ratfn_matrix_equal(em * inv, id));
    }
}

TEST_CASE("deletion recursion for elementary symmetric polynomials") {
    auto vars = std::vector<std::string>{"v1", "v2", "v3", "v4"};
    std::vector<Poly> all;
    for (const auto& v : vars) all.push_back(Poly::variable(vars, v));
    // e_a(without i) = v^l e_{a-1}(without i, l) + e_a(without i, l)
    for (int i = 0; i < 4; ++i)
        for (int l = 0; l < 4; ++l) {
            if (l == i) continue;
            std::vector<Poly> wo_i, wo_il;
            for (int k = 0; k < 4; ++k) {
                if (k == i) continue;
                wo_i.push_back(all[k]);
                if (k != l) wo_il.push_back(all[k]);
            }
            for (int a = 1; a <= 3; ++a) {
                CAPTURE(i);
                CAPTURE(l);
                CAPTURE(a);
                CHECK(elementary_symmetric(wo_i, a) ==
                      all[l] * elementary_symmetric(wo_il, a - 1) +
                          elementary_symmetric(wo_il, a));
            }
        }
}

TEST_CASE("inverse Jacobian closed form for the imprimitive series") {
    for (auto [m, n] : {std::pair{3, 2}, {3, 3}, {4, 2}, {4, 3}}) {
        CAPTURE(m);
        CAPTURE(n);
        GroupSpec g = make_group(Family::Gm1n, m, n);
        JacobianData jd = jacobian(g);
        for (int i = 1; i <= n; ++i)
            for (int a = 1; a <= n; ++a)
                CHECK(jd.Jinv.at(i - 1, a - 1).equals(closed_du_dx(m, n, i, a)));

        // inverse-function identity
        for (int b = 0; b < n; ++b)
            for (int a = 1; a <= n; ++a) {
                RatFn sum = RatFn::zero(g.variables);
                for (int i = 1; i <= n; ++i)
                    sum += RatFn(jd.J.at(b, i - 1)) * closed_du_dx(m, n, i, a);
                CHECK(sum.equals(RatFn::constant(g.variables, b == a - 1 ? 1 : 0)));
            }

        auto ef = e_field(g, jd);
        auto closed = closed_e_field(m, n);
        for (int k = 0; k < n; ++k) CHECK(ef.e[k].equals(closed[k]));
    }
}

TEST_CASE("printed examples of the vector field") {
    auto e32 = closed_e_field(3, 2);
    CHECK(e32[0].equals(RatFn(parse_poly("-1", {"u1", "u2"}),
                              parse_poly("3*u1^2*(u1^3 - u2^3)", {"u1", "u2"}))));
    auto e42 = closed_e_field(4, 2);
    CHECK(e42[0].equals(RatFn(parse_poly("-1", {"u1", "u2"}),
                              parse_poly("4*u1^3*(u1^4 - u2^4)", {"u1", "u2"}))));
    auto vars3 = std::vector<std::string>{"u1", "u2", "u3"};
    auto e33 = closed_e_field(3, 3);
    CHECK(e33[0].equals(
        RatFn(parse_poly("1", vars3),
              parse_poly("3*u1^2*(u1^3 - u2^3)*(u1^3 - u3^3)", vars3))));
}
