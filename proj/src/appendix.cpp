#include "saito/appendix.hpp"

#include <stdexcept>

namespace saito {

namespace {

std::vector<std::string> vvars(int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back("v" + std::to_string(i));
    return v;
}

std::vector<std::string> uvars(int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back("u" + std::to_string(i));
    return v;
}

void check_index(int n, int i, const char* what) {
    if (i < 1 || i > n) throw std::out_of_range(std::string(what) + " index out of range");
}

}  // namespace

PolyMatrix elem_sym_matrix(int n) {
    auto vars = vvars(n);
    PolyMatrix m(n, n, Poly(vars));
    for (int j = 0; j < n; ++j) {
        std::vector<Poly> rest;
        for (int l = 0; l < n; ++l)
            if (l != j) rest.push_back(Poly::variable(vars, vars[l]));
        for (int a = 0; a < n; ++a)
            m.at(a, j) = rest.empty() ? Poly::constant(vars, a == 0 ? 1 : 0)
                                      : elementary_symmetric(rest, a);
    }
    return m;
}

Poly closed_det(int n) {
    auto vars = vvars(n);
    Poly p = Poly::constant(vars, 1);
    for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l)
            p *= Poly::variable(vars, vars[k]) - Poly::variable(vars, vars[l]);
    return p;
}

Poly closed_minor(int n, int a, int j) {
    check_index(n, a, "row");
    check_index(n, j, "column");
    auto vars = vvars(n);
    Poly p = Poly::variable(vars, vars[j - 1]).pow(n - a);
    for (int k = 0; k < n; ++k) {
        if (k == j - 1) continue;
        for (int l = k + 1; l < n; ++l) {
            if (l == j - 1) continue;
            p *= Poly::variable(vars, vars[k]) - Poly::variable(vars, vars[l]);
        }
    }
    return p;
}

RatFn closed_inverse_entry(int n, int i, int a) {
    check_index(n, i, "row");
    check_index(n, a, "column");
    auto vars = vvars(n);
    Poly num = Poly::variable(vars, vars[i - 1]).pow(n - a);
    if ((a + 1) % 2 != 0) num = -num;
    Poly den = Poly::constant(vars, 1);
    for (int l = 0; l < n; ++l)
        if (l != i - 1) den *= Poly::variable(vars, vars[i - 1]) - Poly::variable(vars, vars[l]);
    return RatFn(num, den);
}

RatFn closed_du_dx(int m, int n, int i, int a) {
    check_index(n, i, "row");
    check_index(n, a, "column");
    auto vars = uvars(n);
    int p = m * (a - 2) + 1;
    Poly num = Poly::constant(vars, 1);
    Poly den = Poly::constant(vars, Rat(m));
    if (p >= 0)
        num = Poly::variable(vars, vars[i - 1]).pow(p);
    else
        den *= Poly::variable(vars, vars[i - 1]).pow(-p);
    if ((n + a) % 2 != 0) num = -num;
    Poly vi = Poly::variable(vars, vars[i - 1]).pow(m);
    for (int l = 0; l < n; ++l)
        if (l != i - 1) den *= vi - Poly::variable(vars, vars[l]).pow(m);
    return RatFn(num, den);
}

std::vector<RatFn> closed_e_field(int m, int n) {
    std::vector<RatFn> e;
    for (int k = 1; k <= n; ++k) e.push_back(closed_du_dx(m, n, k, 1));
    return e;
}

}  // namespace saito
