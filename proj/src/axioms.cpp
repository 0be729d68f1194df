#include "saito/axioms.hpp"

namespace saito {

VecField basis_field(const std::vector<std::string>& vars, int i) {
    VecField x(vars.size(), RatFn::zero(vars));
    x[i] = RatFn::constant(vars, 1);
    return x;
}

RatFn field_apply(const VecField& x, const RatFn& f) {
    RatFn acc = RatFn::zero(f.vars());
    for (size_t i = 0; i < x.size(); ++i) acc += x[i] * f.derivative(i);
    return acc;
}

VecField lie_bracket(const VecField& x, const VecField& y) {
    VecField z;
    for (size_t k = 0; k < x.size(); ++k) z.push_back(field_apply(x, y[k]) - field_apply(y, x[k]));
    return z;
}

VecField mult_apply(const std::vector<RatFnMatrix>& m, const VecField& x, const VecField& y) {
    size_t n = x.size();
    VecField z(n, RatFn::zero(x[0].vars()));
    for (size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            for (size_t k = 0; k < n; ++k) z[k] += x[i] * y[j] * m[i].at(k, j);
        }
    }
    return z;
}

VecField nabla_apply(const std::vector<RatFnMatrix>& gamma, const VecField& x, const VecField& y) {
    size_t n = x.size();
    VecField z;
    for (size_t k = 0; k < n; ++k) z.push_back(field_apply(x, y[k]));
    if (!gamma.empty())
        for (size_t i = 0; i < n; ++i) {
            if (x[i].is_zero()) continue;
            for (size_t j = 0; j < n; ++j) {
                if (y[j].is_zero()) continue;
                for (size_t k = 0; k < n; ++k) z[k] += x[i] * y[j] * gamma[i].at(k, j);
            }
        }
    return z;
}

bool field_is_zero(const VecField& x) {
    for (const auto& c : x)
        if (!c.is_zero()) return false;
    return true;
}

bool fields_equal(const VecField& x, const VecField& y) {
    for (size_t k = 0; k < x.size(); ++k)
        if (!x[k].equals(y[k])) return false;
    return true;
}

namespace {

std::string triple(int i, int j, int k) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) +
           ")";
}

VecField minus(VecField a, const VecField& b) {
    for (size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
    return a;
}

RatFn eta(const RatFnMatrix& m, const VecField& x, const VecField& y) {
    RatFn acc = RatFn::zero(x[0].vars());
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < y.size(); ++j) acc += x[i] * y[j] * m.at(i, j);
    }
    return acc;
}

// Evaluates a field-valued identity on every basis pair, recording the first
// failing pair as the witness.
template <typename F>
CheckResult check_pairs(const std::string& id, int n, F residual) {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!field_is_zero(residual(i, j)))
                return {id, false, "fails at (" + std::to_string(i + 1) + "," +
                                       std::to_string(j + 1) + ")"};
    return {id, true, ""};
}

}  // namespace

std::vector<CheckResult> verify_common(const AxiomInput& in) {
    int n = static_cast<int>(in.vars.size());
    std::vector<CheckResult> out;

    std::optional<CurvatureWitness> curv;
    if (!in.gamma.empty()) curv = flatness_check(in.gamma);
    out.push_back({"flat", !curv.has_value(),
                   curv ? "curvature survives at connection pair (" + std::to_string(curv->i + 1) +
                              "," + std::to_string(curv->j + 1) + ")"
                        : ""});

    out.push_back(check_pairs("torsion-free", n, [&](int i, int j) {
        VecField x = basis_field(in.vars, i), y = basis_field(in.vars, j);
        return minus(minus(nabla_apply(in.gamma, x, y), nabla_apply(in.gamma, y, x)),
                     lie_bracket(x, y));
    }));

    out.push_back(check_pairs("commutative", n, [&](int i, int j) {
        VecField x = basis_field(in.vars, i), y = basis_field(in.vars, j);
        return minus(mult_apply(in.mult, x, y), mult_apply(in.mult, y, x));
    }));

    {
        CheckResult assoc{"associative", true, ""};
        for (int i = 0; i < n && assoc.pass; ++i)
            for (int j = 0; j < n && assoc.pass; ++j)
                for (int k = 0; k < n && assoc.pass; ++k) {
                    VecField x = basis_field(in.vars, i), y = basis_field(in.vars, j),
                             z = basis_field(in.vars, k);
                    VecField lhs = mult_apply(in.mult, mult_apply(in.mult, x, y), z);
                    VecField rhs = mult_apply(in.mult, x, mult_apply(in.mult, y, z));
                    if (!fields_equal(lhs, rhs)) assoc = {"associative", false, "fails at " + triple(i, j, k)};
                }
        out.push_back(assoc);
    }

    {
        CheckResult unit{"unit", true, ""};
        for (int j = 0; j < n && unit.pass; ++j) {
            VecField y = basis_field(in.vars, j);
            if (!fields_equal(mult_apply(in.mult, in.unit, y), y))
                unit = {"unit", false, "unit fails on basis field " + std::to_string(j + 1)};
        }
        out.push_back(unit);
    }
    return out;
}

namespace {

// shared shape of SS1 and ASS1
CheckResult leibniz_axiom(const std::string& id, const AxiomInput& in) {
    int n = static_cast<int>(in.vars.size());
    CheckResult res{id, true, ""};
    for (int i = 0; i < n && res.pass; ++i)
        for (int j = 0; j < n && res.pass; ++j)
            for (int k = 0; k < n && res.pass; ++k) {
                VecField x = basis_field(in.vars, i), y = basis_field(in.vars, j),
                         z = basis_field(in.vars, k);
                VecField lhs = nabla_apply(in.gamma, x, mult_apply(in.mult, y, z));
                lhs = minus(lhs, mult_apply(in.mult, y, nabla_apply(in.gamma, x, z)));
                lhs = minus(lhs, nabla_apply(in.gamma, y, mult_apply(in.mult, x, z)));
                VecField t = mult_apply(in.mult, x, nabla_apply(in.gamma, y, z));
                for (int l = 0; l < n; ++l) lhs[l] += t[l];
                VecField rhs = mult_apply(in.mult, lie_bracket(x, y), z);
                if (!fields_equal(lhs, rhs)) res = {id, false, "fails at " + triple(i, j, k)};
            }
    return res;
}

}  // namespace

std::vector<CheckResult> verify_ss(const AxiomInput& in) {
    int n = static_cast<int>(in.vars.size());
    auto out = verify_common(in);
    out.push_back(leibniz_axiom("SS1", in));

    out.push_back(check_pairs("SS2", n, [&](int i, int j) {
        VecField x = basis_field(in.vars, i), y = basis_field(in.vars, j);
        VecField xy = mult_apply(in.mult, x, y);
        VecField lhs = lie_bracket(in.second, xy);
        lhs = minus(lhs, mult_apply(in.mult, lie_bracket(in.second, x), y));
        lhs = minus(lhs, mult_apply(in.mult, x, lie_bracket(in.second, y)));
        return minus(lhs, xy);
    }));

    {
        CheckResult ss3{"SS3", true, ""};
        for (int i = 0; i < n && ss3.pass; ++i)
            if (!field_is_zero(nabla_apply(in.gamma, basis_field(in.vars, i), in.unit)))
                ss3 = {"SS3", false, "nabla e has a component in direction " + std::to_string(i + 1)};
        out.push_back(ss3);
    }

    out.push_back(check_pairs("SS4", n, [&](int i, int j) {
        VecField x = basis_field(in.vars, i), y = basis_field(in.vars, j);
        VecField lhs = nabla_apply(in.gamma, x, nabla_apply(in.gamma, y, in.second));
        return minus(lhs, nabla_apply(in.gamma, nabla_apply(in.gamma, x, y), in.second));
    }));
    return out;
}

std::vector<CheckResult> verify_ass(const AxiomInput& in) {
    int n = static_cast<int>(in.vars.size());
    auto out = verify_common(in);
    out.push_back(leibniz_axiom("ASS1", in));

    out.push_back(check_pairs("ASS2", n, [&](int i, int j) {
        VecField x = basis_field(in.vars, i), y = basis_field(in.vars, j);
        VecField xy = mult_apply(in.mult, x, y);
        VecField lhs = lie_bracket(in.second, xy);
        lhs = minus(lhs, mult_apply(in.mult, lie_bracket(in.second, x), y));
        lhs = minus(lhs, mult_apply(in.mult, x, lie_bracket(in.second, y)));
        VecField t = mult_apply(in.mult, in.second, xy);
        for (int l = 0; l < n; ++l) lhs[l] += t[l];
        return lhs;
    }));

    {
        CheckResult ass3{"ASS3", true, ""};
        for (int i = 0; i < n && ass3.pass; ++i) {
            VecField x = basis_field(in.vars, i);
            VecField want = x;
            for (auto& c : want) c = c.scaled(in.r);
            if (!fields_equal(nabla_apply(in.gamma, x, in.unit), want))
                ass3 = {"ASS3", false, "fails on basis field " + std::to_string(i + 1)};
        }
        out.push_back(ass3);
    }

    out.push_back(check_pairs("ASS4", n, [&](int i, int j) {
        VecField x = basis_field(in.vars, i), y = basis_field(in.vars, j);
        VecField lhs = nabla_apply(in.gamma, x, nabla_apply(in.gamma, y, in.second));
        lhs = minus(lhs, nabla_apply(in.gamma, nabla_apply(in.gamma, x, y), in.second));
        VecField t = nabla_apply(in.gamma, mult_apply(in.mult, x, y), in.second);
        for (size_t l = 0; l < lhs.size(); ++l) lhs[l] += t[l];
        return lhs;
    }));
    return out;
}

namespace {

std::vector<CheckResult> metric_axioms(const AxiomInput& in, bool almost) {
    int n = static_cast<int>(in.vars.size());
    const RatFnMatrix& m = *in.metric;
    std::vector<CheckResult> out;
    std::string p = almost ? "af" : "f";

    {
        CheckResult f1{p + "1", !ratfn_det(m).is_zero(),
                       ratfn_det(m).is_zero() ? "metric is degenerate" : ""};
        for (int i = 0; i < n && f1.pass; ++i)
            for (int j = 0; j < n && f1.pass; ++j)
                for (int k = 0; k < n && f1.pass; ++k) {
                    VecField x = basis_field(in.vars, i), y = basis_field(in.vars, j),
                             z = basis_field(in.vars, k);
                    RatFn lhs = field_apply(x, eta(m, y, z));
                    lhs -= eta(m, nabla_apply(in.gamma, x, y), z);
                    lhs -= eta(m, y, nabla_apply(in.gamma, x, z));
                    if (!lhs.is_zero()) f1 = {p + "1", false, "fails at " + triple(i, j, k)};
                }
        out.push_back(f1);
    }

    {
        CheckResult f2{p + "2", true, ""};
        for (int i = 0; i < n && f2.pass; ++i)
            for (int j = 0; j < n && f2.pass; ++j)
                for (int k = 0; k < n && f2.pass; ++k) {
                    VecField x = basis_field(in.vars, i), y = basis_field(in.vars, j),
                             z = basis_field(in.vars, k);
                    RatFn lhs = eta(m, mult_apply(in.mult, x, y), z) -
                                eta(m, x, mult_apply(in.mult, y, z));
                    if (!lhs.is_zero()) f2 = {p + "2", false, "fails at " + triple(i, j, k)};
                }
        out.push_back(f2);
    }

    {
        CheckResult f3{p + "3", true, ""};
        for (int i = 0; i < n && f3.pass; ++i)
            for (int j = 0; j < n && f3.pass; ++j) {
                VecField x = basis_field(in.vars, i), y = basis_field(in.vars, j);
                RatFn lhs = field_apply(in.second, eta(m, x, y));
                lhs -= eta(m, lie_bracket(in.second, x), y);
                lhs -= eta(m, x, lie_bracket(in.second, y));
                if (almost) {
                    lhs += eta(m, mult_apply(in.mult, in.second, x), y);
                } else {
                    lhs -= eta(m, x, y).scaled(Rat(2) - in.charge);
                }
                if (!lhs.is_zero()) {
                    f3 = {p + "3", false,
                          "fails at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"};
                    break;
                }
            }
        out.push_back(f3);
    }
    return out;
}

}  // namespace

std::vector<CheckResult> verify_frobenius(const AxiomInput& in) { return metric_axioms(in, false); }
std::vector<CheckResult> verify_almost_frobenius(const AxiomInput& in) {
    return metric_axioms(in, true);
}

}  // namespace saito
