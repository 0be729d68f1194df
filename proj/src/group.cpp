#include "saito/group.hpp"

#include <algorithm>
#include <numeric>

namespace saito {

Poly elementary_symmetric(const std::vector<Poly>& values, int k) {
    if (values.empty()) throw std::invalid_argument("elementary_symmetric: empty value list");
    const auto& vars = values[0].vars();
    // e_k via the generating-function recurrence prod (1 + v_i z)
    std::vector<Poly> e(values.size() + 1, Poly(vars));
    e[0] = Poly::constant(vars, 1);
    for (const Poly& v : values)
        for (size_t j = std::min(e.size() - 1, values.size()); j >= 1; --j) e[j] += e[j - 1] * v;
    if (k < 0 || k > static_cast<int>(values.size())) return Poly(vars);
    return e[k];
}

namespace {

std::vector<std::string> default_vars(int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back("u" + std::to_string(i));
    return v;
}

std::vector<Poly> var_polys(const std::vector<std::string>& vars) {
    std::vector<Poly> v;
    for (const auto& name : vars) v.push_back(Poly::variable(vars, name));
    return v;
}

void sort_descending(std::vector<Poly>& invs, std::vector<int>& degs) {
    std::vector<size_t> idx(invs.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return degs[a] > degs[b]; });
    std::vector<Poly> si;
    std::vector<int> sd;
    for (size_t i : idx) {
        si.push_back(invs[i]);
        sd.push_back(degs[i]);
    }
    invs = std::move(si);
    degs = std::move(sd);
}

std::vector<int> duality_codegrees(const std::vector<int>& degrees) {
    std::vector<int> c;
    for (int d : degrees) c.push_back(degrees[0] - d);
    return c;
}

}  // namespace

GroupSpec make_group(Family family, int m, int n) {
    GroupSpec g;
    g.family = family;
    switch (family) {
        case Family::Zm: {
            if (m < 2) throw std::invalid_argument("Z_m requires m >= 2");
            g.name = "Z" + std::to_string(m);
            g.rank = 1;
            g.variables = default_vars(1);
            g.invariants = {Poly::variable(g.variables, "u1").pow(m)};
            g.degrees = {m};
            break;
        }
        case Family::B:
            if (n < 2) throw std::invalid_argument("B_n requires n >= 2");
            g = make_group(Family::Gm1n, 2, n);
            g.name = "B" + std::to_string(n);
            g.family = Family::B;
            return g;
        case Family::Gm1n: {
            if (m < 2 || n < 2) throw std::invalid_argument("G(m,1,n) requires m >= 3, n >= 2");
            g.name = "G" + std::to_string(m) + "_1_" + std::to_string(n);
            g.rank = n;
            g.variables = default_vars(n);
            std::vector<Poly> vm;
            for (const Poly& u : var_polys(g.variables)) vm.push_back(u.pow(m));
            for (int a = 1; a <= n; ++a) {
                g.invariants.push_back(elementary_symmetric(vm, n + 1 - a));
                g.degrees.push_back(m * (n + 1 - a));
            }
            break;
        }
        case Family::D:
            if (n < 4) throw std::invalid_argument("D_n requires n >= 4");
            g = make_group(Family::Gmmn, 2, n);
            g.name = "D" + std::to_string(n);
            g.family = Family::D;
            return g;
        case Family::I2:
            if (m < 5) throw std::invalid_argument("I_2(m) requires m >= 5");
            g = make_group(Family::Gmmn, m, 2);
            g.name = "I2_" + std::to_string(m);
            g.family = Family::I2;
            return g;
        case Family::Gmmn: {
            bool ok = (m >= 3 && n >= 3) || (m >= 5 && n == 2) || (m == 2 && n >= 4);
            if (!ok) throw std::invalid_argument("G(m,m,n) requires m,n >= 3 (or I_2(m), D_n ranges)");
            g.name = "G" + std::to_string(m) + "_" + std::to_string(m) + "_" + std::to_string(n);
            g.rank = n;
            g.variables = default_vars(n);
            std::vector<Poly> us = var_polys(g.variables);
            std::vector<Poly> vm;
            for (const Poly& u : us) vm.push_back(u.pow(m));
            for (int k = 1; k < n; ++k) {
                g.invariants.push_back(elementary_symmetric(vm, k));
                g.degrees.push_back(m * k);
            }
            g.invariants.push_back(elementary_symmetric(us, n));
            g.degrees.push_back(n);
            sort_descending(g.invariants, g.degrees);
            break;
        }
        case Family::A: {
            if (n < 2) throw std::invalid_argument("A_{n-1} requires n >= 2");
            g.name = "A" + std::to_string(n - 1);
            g.rank = n - 1;
            g.variables = default_vars(n - 1);
            std::vector<Poly> ws = var_polys(g.variables);
            Poly last(g.variables);
            for (const Poly& u : ws) last -= u;
            ws.push_back(last);
            for (int k = n; k >= 2; --k) {
                g.invariants.push_back(elementary_symmetric(ws, k));
                g.degrees.push_back(k);
            }
            break;
        }
        case Family::Custom:
            throw std::invalid_argument("make_group: Custom has no catalog constructor");
    }
    g.codegrees = duality_codegrees(g.degrees);
    return g;
}

GroupSpec make_group_by_name(const std::string& name) {
    auto num = [&](size_t pos, size_t end) { return std::stoi(name.substr(pos, end - pos)); };
    try {
        if (name.rfind("Zm:", 0) == 0) return make_group(Family::Zm, num(3, name.size()), 0);
        if (name.rfind("Z", 0) == 0 && name.size() > 1 && std::isdigit(name[1]))
            return make_group(Family::Zm, num(1, name.size()), 0);
        if (name.rfind("I2:", 0) == 0) return make_group(Family::I2, num(3, name.size()), 2);
        if (name.rfind("A", 0) == 0 && std::isdigit(name[1]))
            return make_group(Family::A, num(1, name.size()) + 1, num(1, name.size()) + 1);
        if (name.rfind("B", 0) == 0 && std::isdigit(name[1]))
            return make_group(Family::B, 2, num(1, name.size()));
        if (name.rfind("D", 0) == 0 && std::isdigit(name[1]))
            return make_group(Family::D, 2, num(1, name.size()));
        if (name[0] == 'G') {
            size_t p1 = name.find('_');
            size_t p2 = name.find('_', p1 + 1);
            if (p1 != std::string::npos && p2 != std::string::npos) {
                int m = num(1, p1);
                int mid = num(p1 + 1, p2);
                int n = num(p2 + 1, name.size());
                if (mid == 1) return make_group(Family::Gm1n, m, n);
                if (mid == m) return make_group(Family::Gmmn, m, n);
            }
        }
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        // fall through to the unknown-name error
    }
    throw std::invalid_argument("unknown catalog group name: " + name);
}

Classification classify(const GroupSpec& g) {
    Classification c;
    const auto& d = g.degrees;
    int n = g.rank;
    bool descending = true;
    for (int i = 0; i + 1 < n; ++i)
        if (d[i] < d[i + 1]) descending = false;
    bool cs_sum = true;
    for (int a = 0; a < n; ++a)
        if (d[a] + d[n - 1 - a] != d[0] + d[n - 1]) cs_sum = false;
    // D_n with even n has a repeated degree, so strict descent is not
    // required here; flat-frame construction separately insists on it.
    c.is_cs = descending && cs_sum;
    c.is_coxeter = c.is_cs && d[n - 1] == 2;
    if (g.codegrees) {
        bool dual = true;
        for (int a = 0; a < n; ++a)
            if (d[a] + (*g.codegrees)[a] != d[0]) dual = false;
        c.is_duality = dual;
    }
    return c;
}

std::vector<std::vector<DegreeTrichotomy>> degree_inequality_table(const GroupSpec& g) {
    int n = g.rank;
    int ref = g.degrees[0] + g.degrees[n - 1];
    std::vector<std::vector<DegreeTrichotomy>> t(n, std::vector<DegreeTrichotomy>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int s = g.degrees[a] + g.degrees[b];
            t[a][b] = s < ref   ? DegreeTrichotomy::Less
                      : s > ref ? DegreeTrichotomy::Greater
                                : DegreeTrichotomy::Equal;
        }
    return t;
}

GroupSpec validate_group(std::string name, int rank, std::vector<std::string> variables,
                         std::vector<Poly> invariants, std::optional<std::vector<int>> degrees) {
    if (rank <= 0) throw std::invalid_argument("rank must be positive");
    if (static_cast<int>(variables.size()) != rank)
        throw std::invalid_argument("variable count must equal rank");
    if (static_cast<int>(invariants.size()) != rank)
        throw std::invalid_argument("need exactly rank invariants");

    std::vector<int> w(rank, 1);
    std::vector<int> computed;
    for (const Poly& p : invariants) {
        int d = 0;
        if (!p.is_homogeneous(w, &d) || p.is_zero())
            throw std::invalid_argument("invariant is not a nonzero homogeneous polynomial: " + p.to_string());
        computed.push_back(d);
    }
    if (degrees && *degrees != computed)
        throw std::invalid_argument("declared degrees do not match computed degrees");
    for (int i = 0; i + 1 < rank; ++i)
        if (computed[i] < computed[i + 1])
            throw std::invalid_argument("invariants must be listed in descending degree order");

    PolyMatrix jac(rank, rank, Poly(variables));
    for (int a = 0; a < rank; ++a)
        for (int i = 0; i < rank; ++i) jac.at(a, i) = invariants[a].derivative(i);
    if (poly_det_cofactor(jac).is_zero())
        throw std::invalid_argument("invariants are algebraically dependent (det J = 0)");

    GroupSpec g;
    g.name = std::move(name);
    g.rank = rank;
    g.variables = std::move(variables);
    g.invariants = std::move(invariants);
    g.degrees = std::move(computed);
    return g;
}

namespace {

bool fixed_by_substitution(const GroupSpec& g, const std::vector<Poly>& images) {
    for (const Poly& p : g.invariants)
        if (p.substitute(images) != p) return false;
    return true;
}

std::vector<Poly> swap_images(const GroupSpec& g, int i, int j) {
    auto imgs = std::vector<Poly>();
    for (int k = 0; k < g.rank; ++k) imgs.push_back(Poly::variable(g.variables, g.variables[k]));
    std::swap(imgs[i], imgs[j]);
    return imgs;
}

// torus part of G(m,1,n): every exponent divisible by m
bool exponents_divisible(const GroupSpec& g, int m) {
    for (const Poly& p : g.invariants)
        for (const auto& [e, c] : p.terms())
            for (int k : e)
                if (k % m != 0) return false;
    return true;
}

// torus part of G(m,m,n): exponents pairwise congruent mod m
bool exponents_congruent(const GroupSpec& g, int m) {
    for (const Poly& p : g.invariants)
        for (const auto& [e, c] : p.terms())
            for (size_t i = 1; i < e.size(); ++i)
                if ((e[i] - e[0]) % m != 0) return false;
    return true;
}

int family_m(const GroupSpec& g) {
    switch (g.family) {
        case Family::B:
        case Family::D: return 2;
        case Family::Zm: return g.degrees[0];
        case Family::I2: return g.degrees[0];
        case Family::Gm1n: return g.degrees[g.rank - 1];
        case Family::Gmmn: return g.rank >= 2 ? g.degrees[0] / (g.rank - 1) : 0;
        default: return 0;
    }
}

}  // namespace

bool invariance_spot_check(const GroupSpec& g) {
    switch (g.family) {
        case Family::Zm:
            return exponents_divisible(g, family_m(g));
        case Family::Gm1n:
        case Family::B: {
            if (!exponents_divisible(g, family_m(g))) return false;
            for (int i = 0; i + 1 < g.rank; ++i)
                if (!fixed_by_substitution(g, swap_images(g, i, i + 1))) return false;
            return true;
        }
        case Family::Gmmn:
        case Family::D:
        case Family::I2: {
            if (!exponents_congruent(g, family_m(g))) return false;
            for (int i = 0; i + 1 < g.rank; ++i)
                if (!fixed_by_substitution(g, swap_images(g, i, i + 1))) return false;
            return true;
        }
        case Family::A: {
            for (int i = 0; i + 1 < g.rank; ++i)
                if (!fixed_by_substitution(g, swap_images(g, i, i + 1))) return false;
            // transposition moving the eliminated coordinate: u_last -> -(u1+...+u_last)
            std::vector<Poly> imgs;
            for (int k = 0; k < g.rank; ++k) imgs.push_back(Poly::variable(g.variables, g.variables[k]));
            Poly last(g.variables);
            for (int k = 0; k < g.rank; ++k) last -= imgs[k];
            imgs[g.rank - 1] = last;
            return fixed_by_substitution(g, imgs);
        }
        case Family::Custom:
            return true;  // nothing known to check against
    }
    return true;
}

}  // namespace saito
