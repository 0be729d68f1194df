// saito — exact computations with the two flat structures on reflection-group
// orbit spaces: construction, axiom verification, comparison, flat frames and
// the closed-form identities for the imprimitive series.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "saito/appendix.hpp"
#include "saito/axioms.hpp"
#include "saito/flatframe.hpp"
#include "saito/parser.hpp"

using namespace saito;

namespace {

struct Options {
    std::string group;
    std::string spec;
    std::string out;
    std::string format = "json";
    std::string expect = "same";
    std::vector<std::string> axioms;
    int max_degree = 200;
    int m = 3;
    int n = 2;
};

void add_group_options(CLI::App* cmd, Options& opt) {
    auto* g = cmd->add_option("--group", opt.group, "catalog group name");
    auto* s = cmd->add_option("--spec", opt.spec, "group spec JSON file");
    g->excludes(s);
    s->excludes(g);
}

void add_output_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("--out", opt.out, "write the report to a file instead of stdout");
    cmd->add_option("--format", opt.format, "report format")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--max-degree", opt.max_degree, "abort when intermediate degrees can exceed this")
        ->check(CLI::PositiveNumber);
}

GroupSpec resolve_group(const Options& opt) {
    if (!opt.spec.empty()) return load_group_spec_file(opt.spec);
    if (!opt.group.empty()) return make_group_by_name(opt.group);
    throw std::invalid_argument("one of --group or --spec is required");
}

// Coarse a-priori bound on the degrees the pipeline can produce: the
// discriminant has degree sum(d_a) and the pairing computations square it.
void degree_guard(const GroupSpec& g, int max_degree) {
    int sum = 0;
    for (int d : g.degrees) sum += d;
    if (2 * sum > max_degree)
        throw std::invalid_argument("degree guard: expected intermediate degree " +
                                    std::to_string(2 * sum) + " exceeds --max-degree " +
                                    std::to_string(max_degree));
}

std::vector<RatFn> euler_components(const GroupSpec& g) {
    std::vector<RatFn> e;
    for (const auto& v : g.variables)
        e.push_back(RatFn(Poly::variable(g.variables, v).scaled(Rat(1) / Rat(g.degrees[0]))));
    return e;
}

int emit(const Report& report, const Options& opt, int code_on_fail) {
    std::string body = opt.format == "text" ? report.to_text() : report.to_json().dump(2) + "\n";
    if (opt.out.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(opt.out);
        if (!f) throw std::invalid_argument("cannot write to " + opt.out);
        f << body;
    }
    return report.all_pass() ? 0 : code_on_fail;
}

void append_checks(Report& r, const std::string& prefix, const std::vector<CheckResult>& checks) {
    for (const auto& c : checks) r.add_check(prefix + "/" + c.id, c.pass, c.detail);
}

int cmd_catalog(const Options& opt) {
    Report r;
    r.command = "catalog";
    if (opt.group.empty() && opt.spec.empty()) {
        r.group = "-";
        r.data["families"] = {"Zm:<m>", "G<m>_1_<n>", "G<m>_<m>_<n>", "A<n>", "B<n>", "D<n>",
                              "I2:<m>"};
        return emit(r, opt, 1);
    }
    GroupSpec g = resolve_group(opt);
    r.group = g.name;
    r.data["spec"] = group_spec_to_json(g);
    Classification cls = classify(g);
    Json c;
    if (cls.is_duality.has_value()) c["duality"] = *cls.is_duality;
    c["coxeter_or_shephard"] = cls.is_cs;
    c["coxeter"] = cls.is_coxeter;
    r.data["classification"] = c;
    Json table = Json::array();
    for (const auto& row : degree_inequality_table(g)) {
        Json jr = Json::array();
        for (auto t : row)
            jr.push_back(t == DegreeTrichotomy::Less ? "<" : t == DegreeTrichotomy::Equal ? "=" : ">");
        table.push_back(jr);
    }
    r.data["degree_inequalities"] = table;
    r.add_check("invariance", invariance_spot_check(g), "invariants fixed by the group action");
    return emit(r, opt, 1);
}

int cmd_geometry(const Options& opt) {
    GroupSpec g = resolve_group(opt);
    degree_guard(g, opt.max_degree);
    Report r;
    r.command = "geometry";
    r.group = g.name;
    JacobianData jd = jacobian(g);
    r.add_check("jacobian-nonsingular", true, "det J not identically zero");
    r.data["detJ"] = jd.detJ.to_string();
    EFieldData ef = e_field(g, jd);
    Json e = Json::array();
    for (const auto& c : ef.e) e.push_back(c.to_string());
    r.data["e"] = e;
    r.add_check("e-nondegenerate", true, "det of the derivative matrix of e not identically zero");
    try {
        HessianMetric hm = hessian_metric(g);
        r.add_check("hessian-nondegenerate", true);
        r.data["hessian"] = matrix_to_json(hm.H);
        r.data["levi_civita"] = tensor_to_json(hm.S);
        auto w = flatness_check(hm.S);
        r.add_check("hessian-connection-flat", !w.has_value(),
                    w ? "curvature entry (" + std::to_string(w->i + 1) + "," +
                            std::to_string(w->j + 1) + ")"
                      : "");
    } catch (const std::exception& e) {
        r.add_check("hessian-nondegenerate", false, e.what());
    }
    return emit(r, opt, 1);
}

int cmd_natural(const Options& opt) {
    GroupSpec g = resolve_group(opt);
    degree_guard(g, opt.max_degree);
    Report r;
    r.command = "natural";
    r.group = g.name;
    EFieldData ef = e_field(g, jacobian(g));
    MultTensor star = natural_multiplication(g, ef);
    r.data["product"] = tensor_to_json(star.B);
    RatFnMatrix p(g.rank, g.rank, RatFn::zero(g.variables));
    for (int i = 0; i < g.rank; ++i)
        p = p + star.B[i].map([&](const RatFn& v) { return v * star.unit[i]; });
    r.add_check("unit-euler",
                ratfn_matrix_equal(p, RatFnMatrix::identity(g.rank, RatFn::zero(g.variables),
                                                            RatFn::constant(g.variables, 1))),
                "E is the unit of the product");
    r.add_check("euler-scale", connection_scales_euler(g, {}, Rat(1) / Rat(g.degrees[0])),
                "trivial connection scales E by 1/d_1");
    return emit(r, opt, 1);
}

int cmd_cs(const Options& opt) {
    GroupSpec g = resolve_group(opt);
    degree_guard(g, opt.max_degree);
    Report r;
    r.command = "cs";
    r.group = g.name;
    EFieldData ef = e_field(g, jacobian(g));
    HessianMetric hm = hessian_metric(g);
    MultTensor diamond = cs_multiplication(g, hm, ef);
    r.data["product"] = tensor_to_json(diamond.B);
    r.data["connection"] = tensor_to_json(hm.S);
    auto w = flatness_check(hm.S);
    r.add_check("connection-flat", !w.has_value());
    r.add_check("euler-scale", connection_scales_euler(g, hm.S, cs_parameter(g)),
                "connection scales E by d_n/(2 d_1)");
    return emit(r, opt, 1);
}

int cmd_compare(const Options& opt) {
    GroupSpec g = resolve_group(opt);
    degree_guard(g, opt.max_degree);
    Report r;
    r.command = "compare";
    r.group = g.name;
    EFieldData ef = e_field(g, jacobian(g));
    HessianMetric hm = hessian_metric(g);
    MultTensor star = natural_multiplication(g, ef);
    MultTensor diamond = cs_multiplication(g, hm, ef);
    CompareResult res = compare_structures(g, star, hm.S, diamond);
    r.data["multiplications_equal"] = res.multiplications_equal;
    r.data["connections_equal"] = res.connections_equal;
    if (res.mult_witness)
        r.data["mult_witness"] = {(*res.mult_witness)[0], (*res.mult_witness)[1],
                                  (*res.mult_witness)[2]};
    if (res.conn_witness)
        r.data["conn_witness"] = {(*res.conn_witness)[0], (*res.conn_witness)[1],
                                  (*res.conn_witness)[2]};
    r.add_check("multiplications-equal", res.multiplications_equal);
    bool expect_same = opt.expect == "same";
    r.add_check("connections-as-expected", res.connections_equal == expect_same,
                expect_same ? "expected the connections to agree"
                            : "expected the connections to differ");
    return emit(r, opt, 1);
}

int cmd_flat(const Options& opt) {
    GroupSpec g = resolve_group(opt);
    degree_guard(g, opt.max_degree);
    Report r;
    r.command = "flat";
    r.group = g.name;
    FlatFrame ff = find_flat_coordinates(g);
    append_checks(r, "frame", frame_invariants(ff));
    CsFrameData cfd = frame_matrices(ff);
    append_checks(r, "pairing", cs_frame_invariants(cfd));
    append_checks(r, "levi-civita", levi_civita_flat_frame(cfd));
    append_checks(r, "gauge", cs_flat_coordinates(cfd));
    Json t = Json::array(), s = Json::array();
    for (const auto& p : ff.t_in_x) t.push_back(p.to_string());
    for (const auto& p : cfd.s_coords) s.push_back(p.to_string());
    r.data["t"] = t;
    r.data["s"] = s;
    r.data["U"] = matrix_to_json(ff.U);
    r.data["A"] = matrix_to_json(cfd.A);
    r.data["X"] = matrix_to_json(cfd.X);
    return emit(r, opt, 1);
}

int cmd_classify(const Options& opt) {
    GroupSpec g = resolve_group(opt);
    degree_guard(g, opt.max_degree);
    Report r;
    r.command = "classify";
    r.group = g.name;
    FlatFrame ff = find_flat_coordinates(g);
    append_checks(r, "frame", frame_invariants(ff));
    CsFrameData cfd = frame_matrices(ff);
    ClassifyResult cls = classify_compatible_metric(cfd);
    r.data["admits_compatible_metric"] = cls.admits_compatible_metric;
    r.data["charge"] = rat_to_string(cls.charge);
    if (cls.metric) r.data["metric"] = matrix_to_json(*cls.metric);
    if (cls.witness) r.data["witness"] = {cls.witness->first, cls.witness->second};
    return emit(r, opt, 1);
}

int cmd_verify(const Options& opt) {
    GroupSpec g = resolve_group(opt);
    degree_guard(g, opt.max_degree);
    Report r;
    r.command = "verify";
    r.group = g.name;
    std::vector<std::string> sets = opt.axioms;
    if (sets.empty()) sets = {"ass-natural", "ass-cs", "ss-dual", "af-cs", "frobenius-dual"};

    EFieldData ef = e_field(g, jacobian(g));
    MultTensor star = natural_multiplication(g, ef);
    for (const auto& set : sets) {
        AxiomInput in;
        in.vars = g.variables;
        if (set == "ass-natural") {
            in.mult = star.B;
            in.unit = star.unit;
            in.second = ef.e;
            in.r = Rat(1) / Rat(g.degrees[0]);
            append_checks(r, set, verify_ass(in));
        } else if (set == "ass-cs") {
            HessianMetric hm = hessian_metric(g);
            MultTensor diamond = cs_multiplication(g, hm, ef);
            in.gamma = hm.S;
            in.mult = diamond.B;
            in.unit = diamond.unit;
            in.second = ef.e;
            in.r = cs_parameter(g);
            append_checks(r, set, verify_ass(in));
        } else if (set == "ss-dual") {
            DualSaito ss = dualize_ass_to_ss(g, star, {}, ef.e);
            in.gamma = ss.gamma;
            in.mult = ss.C;
            in.unit = ef.e;
            in.second = euler_components(g);
            append_checks(r, set, verify_ss(in));
        } else if (set == "af-cs") {
            HessianMetric hm = hessian_metric(g);
            MultTensor diamond = cs_multiplication(g, hm, ef);
            in.gamma = hm.S;
            in.mult = diamond.B;
            in.unit = diamond.unit;
            in.second = ef.e;
            in.metric = to_ratfn(hm.H);
            in.charge = Rat(1) - Rat(g.degrees[g.rank - 1]) / Rat(g.degrees[0]);
            append_checks(r, set, verify_almost_frobenius(in));
        } else if (set == "frobenius-dual") {
            HessianMetric hm = hessian_metric(g);
            MultTensor diamond = cs_multiplication(g, hm, ef);
            DualSaito ss = dualize_ass_to_ss(g, diamond, hm.S, ef.e);
            std::vector<RatFn> euler = euler_components(g);
            RatFnMatrix pe(g.rank, g.rank, RatFn::zero(g.variables));
            for (int i = 0; i < g.rank; ++i)
                pe = pe + ss.C[i].map([&](const RatFn& v) { return v * euler[i]; });
            in.gamma = ss.gamma;
            in.mult = ss.C;
            in.unit = ef.e;
            in.second = euler;
            in.metric = to_ratfn(hm.H) * pe;
            in.charge = Rat(1) - Rat(g.degrees[g.rank - 1]) / Rat(g.degrees[0]);
            append_checks(r, set, verify_ss(in));
            append_checks(r, set, verify_frobenius(in));
        } else {
            throw std::invalid_argument("unknown axiom set: " + set);
        }
    }
    return emit(r, opt, 1);
}

int cmd_appendix(const Options& opt) {
    if (opt.m < 3 || opt.n < 2) throw std::invalid_argument("appendix requires --m >= 3, --n >= 2");
    Report r;
    r.command = "appendix";
    r.group = "G" + std::to_string(opt.m) + "_1_" + std::to_string(opt.n);
    int n = opt.n;

    PolyMatrix em = elem_sym_matrix(n);
    r.add_check("det", closed_det(n) == poly_det_cofactor(em),
                "product formula vs cofactor expansion");
    r.data["det"] = closed_det(n).to_string();

    bool minors = true;
    for (int a = 1; a <= n && minors; ++a)
        for (int j = 1; j <= n && minors; ++j) {
            PolyMatrix sub(n - 1, n - 1, em.zero_like());
            for (int row = 0, rr = 0; row < n; ++row) {
                if (row == a - 1) continue;
                for (int col = 0, cc = 0; col < n; ++col) {
                    if (col == j - 1) continue;
                    sub.at(rr, cc++) = em.at(row, col);
                }
                ++rr;
            }
            minors = closed_minor(n, a, j) == poly_det_cofactor(sub);
        }
    r.add_check("minors", minors, "all deleted-row-and-column determinants");

    std::vector<std::string> vvars = em.zero_like().vars();
    RatFnMatrix inv(n, n, RatFn::zero(vvars));
    for (int i = 1; i <= n; ++i)
        for (int a = 1; a <= n; ++a) inv.at(i - 1, a - 1) = closed_inverse_entry(n, i, a);
    RatFnMatrix id = RatFnMatrix::identity(n, RatFn::zero(vvars), RatFn::constant(vvars, 1));
    r.add_check("inverse", ratfn_matrix_equal(to_ratfn(em) * inv, id), "E * closed inverse = I");

    GroupSpec g = make_group(Family::Gm1n, opt.m, n);
    degree_guard(g, opt.max_degree);
    JacobianData jd = jacobian(g);
    bool dudx = true;
    for (int i = 1; i <= n && dudx; ++i)
        for (int a = 1; a <= n && dudx; ++a)
            dudx = jd.Jinv.at(i - 1, a - 1).equals(closed_du_dx(opt.m, n, i, a));
    r.add_check("du-dx", dudx, "closed form vs the inverse Jacobian");

    auto closed = closed_e_field(opt.m, n);
    auto ef = e_field(g, jd);
    bool ematch = true;
    for (int k = 0; k < n; ++k)
        if (!ef.e[k].equals(closed[k])) ematch = false;
    r.add_check("e-field", ematch, "closed form vs the generic route");
    Json e = Json::array();
    for (const auto& c : closed) e.push_back(c.to_string());
    r.data["e"] = e;
    return emit(r, opt, 1);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic engine for the flat structures on reflection-group orbit spaces"};
    app.require_subcommand(1);
    Options opt;

    auto* catalog = app.add_subcommand("catalog", "resolve and describe a group");
    auto* geometry = app.add_subcommand("geometry", "Jacobian, distinguished vector fields, Hessian pairing");
    auto* natural = app.add_subcommand("natural", "product from the trivial connection");
    auto* cs = app.add_subcommand("cs", "product and connection from the Hessian pairing");
    auto* compare = app.add_subcommand("compare", "decide whether the two structures coincide");
    auto* flat = app.add_subcommand("flat", "flat coordinate frames and their invariants");
    auto* classify = app.add_subcommand("classify", "existence of a compatible metric");
    auto* verify = app.add_subcommand("verify", "run axiom checklists");
    auto* appendix = app.add_subcommand("appendix", "closed forms for G(m,1,n) vs oracles");

    for (CLI::App* c : {catalog, geometry, natural, cs, compare, flat, classify, verify}) {
        add_group_options(c, opt);
        add_output_options(c, opt);
    }
    add_output_options(appendix, opt);
    compare->add_option("--expect", opt.expect, "success polarity for the connection comparison")
        ->check(CLI::IsMember({"same", "differ"}));
    verify->add_option("--axioms", opt.axioms,
                       "axiom sets: ass-natural, ass-cs, ss-dual, af-cs, frobenius-dual")
        ->delimiter(',');
    appendix->add_option("--m", opt.m, "order of the cyclic factor")->check(CLI::PositiveNumber);
    appendix->add_option("--n", opt.n, "rank")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (catalog->parsed()) return cmd_catalog(opt);
        if (geometry->parsed()) return cmd_geometry(opt);
        if (natural->parsed()) return cmd_natural(opt);
        if (cs->parsed()) return cmd_cs(opt);
        if (compare->parsed()) return cmd_compare(opt);
        if (flat->parsed()) return cmd_flat(opt);
        if (classify->parsed()) return cmd_classify(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (appendix->parsed()) return cmd_appendix(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
