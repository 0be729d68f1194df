#include "saito/geometry.hpp"

namespace saito {

JacobianData jacobian(const GroupSpec& g) {
    int n = g.rank;
    PolyMatrix jac(n, n, Poly(g.variables));
    for (int a = 0; a < n; ++a)
        for (int i = 0; i < n; ++i) {
            jac.at(a, i) = g.invariants[a].derivative(i);
            int d = 0;
            if (!jac.at(a, i).is_homogeneous(g.unit_weights(), &d) ||
                (!jac.at(a, i).is_zero() && d != g.degrees[a] - 1))
                throw std::invalid_argument("Jacobian entry fails the degree bookkeeping");
        }
    Poly det = poly_det_cofactor(jac);
    if (det.is_zero()) throw std::invalid_argument("singular Jacobian: invariants are dependent");
    return {jac, ratfn_inverse(to_ratfn(jac)), det};
}

EFieldData e_field(const GroupSpec& g, const JacobianData& jd) {
    int n = g.rank;
    EFieldData ef;
    for (int k = 0; k < n; ++k) ef.e.push_back(jd.Jinv.at(k, 0));
    ef.Q = RatFnMatrix(n, n, RatFn::zero(g.variables));
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) ef.Q.at(k, j) = ef.e[k].derivative(j);
    ef.detQ = ratfn_det(ef.Q);
    if (ef.detQ.is_zero())
        throw std::invalid_argument("det Q vanishes identically; e does not generate");
    return ef;
}

EulerField euler_field(const GroupSpec& g) {
    EulerField e;
    for (const auto& v : g.variables) e.e_deg.push_back(Poly::variable(g.variables, v));
    e.scale = Rat(1) / Rat(g.degrees[0]);
    for (int a = 0; a < g.rank; ++a) {
        Poly applied(g.variables);
        for (int i = 0; i < g.rank; ++i) applied += e.e_deg[i] * g.invariants[a].derivative(i);
        if (applied != g.invariants[a].scaled(g.degrees[a]))
            throw std::logic_error("degree operator identity failed for invariant " + std::to_string(a + 1));
    }
    return e;
}

HessianMetric hessian_metric(const GroupSpec& g) {
    int n = g.rank;
    const Poly& xn = g.invariants[n - 1];
    HessianMetric hm;
    hm.H = PolyMatrix(n, n, Poly(g.variables));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) hm.H.at(i, j) = xn.derivative(i).derivative(j);
    if (poly_det_cofactor(hm.H).is_zero())
        throw std::invalid_argument("Hessian of the lowest-degree invariant is degenerate");
    hm.Hinv = ratfn_inverse(to_ratfn(hm.H));

    // third derivatives, totally symmetric
    std::vector<PolyMatrix> d3(n, PolyMatrix(n, n, Poly(g.variables)));
    for (int l = 0; l < n; ++l)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d3[l].at(i, j) = hm.H.at(i, j).derivative(l);

    for (int i = 0; i < n; ++i) {
        RatFnMatrix s(n, n, RatFn::zero(g.variables));
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                RatFn acc = RatFn::zero(g.variables);
                for (int l = 0; l < n; ++l) acc += hm.Hinv.at(k, l) * RatFn(d3[l].at(i, j));
                s.at(k, j) = acc.scaled(Rat(1, 2));
            }
        hm.S.push_back(std::move(s));
    }
    return hm;
}

std::optional<CurvatureWitness> flatness_check(const std::vector<RatFnMatrix>& gamma) {
    size_t n = gamma.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            RatFnMatrix curv = gamma[j].derivative(i) - gamma[i].derivative(j) +
                               gamma[i] * gamma[j] - gamma[j] * gamma[i];
            for (size_t r = 0; r < curv.rows(); ++r)
                for (size_t c = 0; c < curv.cols(); ++c)
                    if (!curv.at(r, c).is_zero())
                        return CurvatureWitness{i, j, r, c, curv.at(r, c)};
        }
    return std::nullopt;
}

bool connection_scales_euler(const GroupSpec& g, const std::vector<RatFnMatrix>& gamma, const Rat& r) {
    // nabla_{d/du^i} E = (1/d_1)(d/du^i + sum_j u^j Gamma_i e_j)
    int n = g.rank;
    Rat inv_d1 = Rat(1) / Rat(g.degrees[0]);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            RatFn acc = RatFn::zero(g.variables);
            if (k == i) acc += RatFn::constant(g.variables, 1);
            for (int j = 0; j < n; ++j)
                acc += RatFn(Poly::variable(g.variables, g.variables[j])) * gamma[i].at(k, j);
            RatFn want = RatFn::constant(g.variables, k == i ? r : Rat(0));
            if (!acc.scaled(inv_d1).equals(want)) return false;
        }
    return true;
}

}  // namespace saito
