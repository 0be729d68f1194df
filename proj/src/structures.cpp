#include "saito/structures.hpp"

namespace saito {

namespace {

std::vector<RatFn> euler_components(const GroupSpec& g) {
    std::vector<RatFn> e;
    Rat inv_d1 = Rat(1) / Rat(g.degrees[0]);
    for (const auto& v : g.variables)
        e.push_back(RatFn(Poly::variable(g.variables, v).scaled(inv_d1)));
    return e;
}

}  // namespace

MultTensor natural_multiplication(const GroupSpec& g, const EFieldData& ef) {
    int n = g.rank;
    if (ef.detQ.is_zero()) throw std::invalid_argument("Q is singular");
    RatFnMatrix qinv = ratfn_inverse(ef.Q);
    MultTensor mt;
    for (int i = 0; i < n; ++i) {
        RatFnMatrix dq = ef.Q.derivative(i);
        RatFnMatrix b = (qinv * dq).scaled(-1);
        // defining identity, re-checked by substitution
        if (!(dq + ef.Q * b).is_zero())
            throw std::logic_error("structure constants fail their defining identity");
        mt.B.push_back(std::move(b));
    }
    mt.unit = euler_components(g);
    return mt;
}

MultTensor cs_multiplication(const GroupSpec& g, const HessianMetric& hm, const EFieldData& ef) {
    int n = g.rank;
    // R(k,j) = component k of nabla^cs_{d/du^j} e
    RatFnMatrix r(n, n, RatFn::zero(g.variables));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            RatFn acc = ef.e[k].derivative(j);
            for (int p = 0; p < n; ++p) acc += hm.S[j].at(k, p) * ef.e[p];
            r.at(k, j) = acc;
        }
    if (ratfn_det(r).is_zero())
        throw std::invalid_argument("the map X -> nabla^cs_X e is singular");
    RatFnMatrix rinv = ratfn_inverse(r);
    MultTensor mt;
    for (int i = 0; i < n; ++i) {
        RatFnMatrix d = r.derivative(i) + hm.S[i] * r - r * hm.S[i];
        mt.B.push_back((rinv * d).scaled(-1));
    }
    mt.unit = euler_components(g);
    return mt;
}

DualSaito dualize_ass_to_ss(const GroupSpec& g, const MultTensor& star,
                            const std::vector<RatFnMatrix>& bold_gamma,
                            const std::vector<RatFn>& e) {
    int n = g.rank;
    DualSaito out;
    out.P = RatFnMatrix(n, n, RatFn::zero(g.variables));
    for (int i = 0; i < n; ++i) out.P = out.P + star.B[i].map([&](const RatFn& v) { return v * e[i]; });
    if (ratfn_det(out.P).is_zero())
        throw std::invalid_argument("the operator e* is identically singular");
    RatFnMatrix pinv = ratfn_inverse(out.P);
    for (int i = 0; i < n; ++i) out.C.push_back(pinv * star.B[i]);

    // Re(k,l) = component k of bold-nabla_{d/du^l} e
    RatFnMatrix re(n, n, RatFn::zero(g.variables));
    for (int l = 0; l < n; ++l)
        for (int k = 0; k < n; ++k) {
            RatFn acc = e[k].derivative(l);
            if (!bold_gamma.empty())
                for (int p = 0; p < n; ++p) acc += bold_gamma[l].at(k, p) * e[p];
            re.at(k, l) = acc;
        }
    for (int i = 0; i < n; ++i) {
        RatFnMatrix gi = re * out.C[i];
        gi = gi.scaled(-1);
        if (!bold_gamma.empty()) gi = gi + bold_gamma[i];
        out.gamma.push_back(std::move(gi));
    }
    return out;
}

bool dual_round_trip(const GroupSpec& g, const MultTensor& star,
                     const std::vector<RatFnMatrix>& bold_gamma, const DualSaito& ss,
                     const Rat& r) {
    int n = g.rank;
    std::vector<RatFn> euler = euler_components(g);
    // PE = matrix of (E dual -)
    RatFnMatrix pe(n, n, RatFn::zero(g.variables));
    for (int i = 0; i < n; ++i) pe = pe + ss.C[i].map([&](const RatFn& v) { return v * euler[i]; });
    for (int i = 0; i < n; ++i)
        if (!ratfn_matrix_equal(pe * star.B[i], ss.C[i])) return false;

    // T(m,l) = component m of nabla_{d/du^l} E
    RatFnMatrix t(n, n, RatFn::zero(g.variables));
    for (int l = 0; l < n; ++l)
        for (int m = 0; m < n; ++m) {
            RatFn acc = euler[m].derivative(l);
            for (int k = 0; k < n; ++k) acc += ss.gamma[l].at(m, k) * euler[k];
            t.at(m, l) = acc;
        }
    for (int i = 0; i < n; ++i) {
        RatFnMatrix want = ss.gamma[i] + star.B[i].scaled(r) - t * star.B[i];
        RatFnMatrix got = bold_gamma.empty() ? RatFnMatrix(n, n, RatFn::zero(g.variables))
                                             : bold_gamma[i];
        if (!ratfn_matrix_equal(got, want)) return false;
    }
    return true;
}

CompareResult compare_structures(const GroupSpec& g, const MultTensor& star,
                               const std::vector<RatFnMatrix>& stilde, const MultTensor& diamond) {
    int n = g.rank;
    CompareResult res;
    res.multiplications_equal = true;
    res.connections_equal = true;
    for (int i = 0; i < n && res.multiplications_equal; ++i) {
        auto d = first_difference(star.B[i], diamond.B[i]);
        if (d) {
            res.multiplications_equal = false;
            res.mult_witness = {{i + 1, static_cast<int>(d->second) + 1,
                                 static_cast<int>(d->first) + 1}};
        }
    }
    Rat c = Rat(g.degrees[g.rank - 1] - 2) / Rat(2 * g.degrees[0]);
    for (int i = 0; i < n && res.connections_equal; ++i) {
        auto d = first_difference(stilde[i], star.B[i].scaled(c));
        if (d) {
            res.connections_equal = false;
            res.conn_witness = {{i + 1, static_cast<int>(d->second) + 1,
                                 static_cast<int>(d->first) + 1}};
        }
    }
    return res;
}

std::optional<std::array<int, 3>> difference_identity(const GroupSpec& g,
                                                      const std::vector<RatFnMatrix>& stilde,
                                                      const std::vector<RatFnMatrix>& btilde) {
    int n = g.rank;
    Rat c = Rat(g.degrees[g.rank - 1] - 2) / Rat(2 * g.degrees[0]);
    if (btilde.empty() && c != 0)
        throw std::invalid_argument("the product tensor is required when the scale is nonzero");
    for (int i = 0; i < n; ++i) {
        if (c == 0) {
            for (int k = 0; k < n; ++k)
                for (int j = 0; j < n; ++j)
                    if (!stilde[i].at(k, j).is_zero()) return std::array<int, 3>{i + 1, j + 1, k + 1};
        } else if (auto d = first_difference(stilde[i], btilde[i].scaled(c))) {
            return std::array<int, 3>{i + 1, static_cast<int>(d->second) + 1,
                                      static_cast<int>(d->first) + 1};
        }
    }
    return std::nullopt;
}

}  // namespace saito
