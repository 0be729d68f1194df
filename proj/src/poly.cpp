#include "saito/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

namespace saito {

bool GradedLexLess::operator()(const Exp& a, const Exp& b) const {
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    // same total degree: a < b iff at the first differing slot a has the
    // smaller exponent (so larger powers of earlier variables sort last)
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

Poly Poly::constant(std::vector<std::string> vars, const Rat& c) {
    Poly p(std::move(vars));
    if (c != 0) p.terms_[Exp(p.vars_.size(), 0)] = c;
    return p;
}

Poly Poly::variable(std::vector<std::string> vars, const std::string& name) {
    Poly p(std::move(vars));
    Exp e(p.vars_.size(), 0);
    e[p.var_index(name)] = 1;
    p.terms_[e] = 1;
    return p;
}

Poly Poly::monomial(std::vector<std::string> vars, Exp e, const Rat& c) {
    Poly p(std::move(vars));
    if (e.size() != p.vars_.size()) throw std::invalid_argument("monomial: exponent length mismatch");
    if (c != 0) p.terms_[std::move(e)] = c;
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exp& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

Rat Poly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

void Poly::check_same_vars(const Poly& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("polynomial variable lists differ");
}

void Poly::add_term(const Exp& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const {
    check_same_vars(o);
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    check_same_vars(o);
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Poly Poly::operator-() const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_same_vars(o);
    Poly r(vars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exp e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    return vars_ == o.vars_ &&
           std::equal(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
                      [](const auto& a, const auto& b) { return a.first == b.first && a.second == b.second; });
}

Poly Poly::scaled(const Rat& c) const {
    Poly r(vars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
}

Poly Poly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative exponent");
    Poly r = Poly::constant(vars_, 1);
    Poly base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = (k >>= 1) ? base * base : base;
    }
    return r;
}

size_t Poly::var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw std::invalid_argument("unknown variable: " + name);
    return static_cast<size_t>(it - vars_.begin());
}

Poly Poly::derivative(size_t var) const {
    if (var >= vars_.size()) throw std::invalid_argument("variable index out of range");
    Poly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exp d = e;
        d[var] -= 1;
        r.add_term(d, c * e[var]);
    }
    return r;
}

int Poly::total_degree() const {
    int best = -1;
    for (const auto& [e, c] : terms_) {
        int d = std::accumulate(e.begin(), e.end(), 0);
        best = std::max(best, d);
    }
    return best;
}

int Poly::degree_in(size_t var) const {
    int best = -1;
    for (const auto& [e, c] : terms_) best = std::max(best, e[var]);
    return best;
}

bool Poly::is_homogeneous(const std::vector<int>& weights, int* deg) const {
    if (weights.size() != vars_.size()) throw std::invalid_argument("weight vector length mismatch");
    if (terms_.empty()) {
        if (deg) *deg = -1;
        return true;
    }
    int d0 = -1;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (size_t i = 0; i < e.size(); ++i) d += e[i] * weights[i];
        if (d0 == -1) d0 = d;
        else if (d != d0) return false;
    }
    if (deg) *deg = d0;
    return true;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
    if (images.size() != vars_.size()) throw std::invalid_argument("substitute: image count mismatch");
    const std::vector<std::string>& tvars = images.empty() ? vars_ : images[0].vars();
    // power tables per variable
    std::vector<std::vector<Poly>> pows(images.size());
    for (size_t i = 0; i < images.size(); ++i) pows[i].push_back(Poly::constant(tvars, 1));
    Poly result(tvars);
    for (const auto& [e, c] : terms_) {
        Poly term = Poly::constant(tvars, c);
        for (size_t i = 0; i < e.size(); ++i) {
            while (static_cast<int>(pows[i].size()) <= e[i]) pows[i].push_back(pows[i].back() * images[i]);
            if (e[i] > 0) term = term * pows[i][e[i]];
        }
        result += term;
    }
    return result;
}

Poly Poly::with_vars(const std::vector<std::string>& new_vars) const {
    std::vector<int> pos(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
        if (it == new_vars.end()) throw std::invalid_argument("with_vars: missing variable " + vars_[i]);
        pos[i] = static_cast<int>(it - new_vars.begin());
    }
    Poly r(new_vars);
    for (const auto& [e, c] : terms_) {
        Exp ne(new_vars.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        r.terms_[ne] = c;
    }
    return r;
}

const Exp& Poly::lead_exp() const {
    if (terms_.empty()) throw std::logic_error("lead_exp of zero polynomial");
    return terms_.rbegin()->first;
}

const Rat& Poly::lead_coeff() const {
    if (terms_.empty()) throw std::logic_error("lead_coeff of zero polynomial");
    return terms_.rbegin()->second;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // graded-lex descending
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Exp& e = it->first;
        Rat c = it->second;
        bool neg = c < 0;
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        if (neg) c = -c;
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out << rat_to_string(c);
        } else {
            if (c != 1) out << rat_to_string(c) << "*";
            out << mono;
        }
        first = false;
    }
    return out.str();
}

std::optional<Poly> exact_divide(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (num.vars() != den.vars()) throw std::invalid_argument("polynomial variable lists differ");
    Poly q(num.vars());
    Poly r = num;
    const Exp& de = den.lead_exp();
    const Rat& dc = den.lead_coeff();
    while (!r.is_zero()) {
        const Exp& re = r.lead_exp();
        Exp t(re.size());
        for (size_t i = 0; i < re.size(); ++i) {
            t[i] = re[i] - de[i];
            if (t[i] < 0) return std::nullopt;
        }
        Poly m = Poly::monomial(num.vars(), t, r.lead_coeff() / dc);
        q += m;
        r -= m * den;
    }
    return q;
}

namespace {

// a as univariate in variable `var` with Poly coefficients (exponent of `var`
// zeroed out in the coefficients)
std::map<int, Poly> univariate_view(const Poly& a, size_t var) {
    std::map<int, Poly> coeffs;
    for (const auto& [e, c] : a.terms()) {
        Exp rest = e;
        int k = rest[var];
        rest[var] = 0;
        auto it = coeffs.find(k);
        if (it == coeffs.end()) it = coeffs.emplace(k, Poly(a.vars())).first;
        it->second.add_term(rest, c);
    }
    return coeffs;
}

Poly from_univariate(const std::map<int, Poly>& coeffs, size_t var, const std::vector<std::string>& vars) {
    Poly r(vars);
    for (const auto& [k, c] : coeffs) {
        Exp xe(vars.size(), 0);
        xe[var] = k;
        r += c * Poly::monomial(vars, xe, 1);
    }
    return r;
}

// normalize: positive integer-primitive content, positive leading coefficient
Poly normalize_gcd(const Poly& p) {
    if (p.is_zero()) return p;
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : p.terms()) {
        num_gcd = gcd(num_gcd, numerator(c));
        den_lcm = lcm(den_lcm, denominator(c));
    }
    Rat scale = Rat(den_lcm) / Rat(num_gcd);
    if (p.lead_coeff() < 0) scale = -scale;
    return p.scaled(scale);
}

Poly content_wrt(const Poly& a, size_t var);

Poly gcd_impl(const Poly& a, const Poly& b) {
    if (a.is_zero()) return normalize_gcd(b);
    if (b.is_zero()) return normalize_gcd(a);
    if (a.is_constant() || b.is_constant()) return Poly::constant(a.vars(), 1);
    size_t var = 0;
    while (a.degree_in(var) <= 0 && b.degree_in(var) <= 0) ++var;
    int da = a.degree_in(var), db = b.degree_in(var);
    if (da == 0) return gcd_impl(a, content_wrt(b, var));
    if (db == 0) return gcd_impl(content_wrt(a, var), b);

    Poly ca = content_wrt(a, var);
    Poly cb = content_wrt(b, var);
    Poly cg = gcd_impl(ca, cb);
    Poly pa = *exact_divide(a, ca);
    Poly pb = *exact_divide(b, cb);
    if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);

    // primitive pseudo-remainder sequence
    while (true) {
        int dpa = pa.degree_in(var), dpb = pb.degree_in(var);
        if (dpb == 0) return normalize_gcd(cg);
        // pseudo-remainder of pa by pb in var
        auto ub = univariate_view(pb, var);
        Poly lcb = ub.rbegin()->second;
        Poly r = pa;
        while (!r.is_zero() && r.degree_in(var) >= dpb) {
            auto ur = univariate_view(r, var);
            int dr = ur.rbegin()->first;
            Poly lcr = ur.rbegin()->second;
            Exp shift(r.vars().size(), 0);
            shift[var] = dr - dpb;
            r = r * lcb - lcr * Poly::monomial(r.vars(), shift, 1) * pb;
        }
        if (r.is_zero()) return normalize_gcd(cg * pb);
        r = *exact_divide(r, content_wrt(r, var));
        pa = pb;
        pb = r;
        (void)dpa;
    }
}

Poly content_wrt(const Poly& a, size_t var) {
    auto coeffs = univariate_view(a, var);
    Poly g(a.vars());
    for (const auto& [k, c] : coeffs) {
        g = gcd_impl(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

// per-variable minimum exponent (monomial content)
Exp monomial_content(const Poly& a) {
    Exp m;
    for (const auto& [e, c] : a.terms()) {
        if (m.empty()) {
            m = e;
        } else {
            for (size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
        }
    }
    return m;
}

Poly shift_exponents(const Poly& a, const Exp& by, int sign) {
    Poly r(a.vars());
    for (const auto& [e, c] : a.terms()) {
        Exp ne = e;
        for (size_t i = 0; i < ne.size(); ++i) ne[i] += sign * by[i];
        r.add_term(ne, c);
    }
    return r;
}

// positive integer weights under which both polynomials are homogeneous
// (e.g. quasi-homogeneous invariants), or nullopt when no grading fits
std::optional<std::vector<int>> common_grading(const Poly& a, const Poly& b) {
    size_t m = a.vars().size();
    // row-reduce the exponent-difference constraints; at most m pivots
    std::map<size_t, std::vector<Rat>> piv;
    auto insert_row = [&](std::vector<Rat> r) {
        for (size_t c = 0; c < m; ++c) {
            if (r[c] == 0) continue;
            auto it = piv.find(c);
            if (it == piv.end()) {
                Rat lead = r[c];
                for (auto& x : r) x /= lead;
                piv.emplace(c, std::move(r));
                return;
            }
            Rat f = r[c];
            for (size_t i = c; i < m; ++i) r[i] -= f * it->second[i];
        }
    };
    for (const Poly* p : {&a, &b}) {
        const Exp* first = nullptr;
        for (const auto& [e, c] : p->terms()) {
            if (!first) {
                first = &e;
                continue;
            }
            std::vector<Rat> r(m);
            for (size_t i = 0; i < m; ++i) r[i] = Rat(e[i] - (*first)[i]);
            insert_row(std::move(r));
        }
    }
    if (piv.size() >= m) return std::nullopt;
    // back-substitute to reduced echelon form
    for (auto& [c, row] : piv)
        for (auto& [c2, row2] : piv) {
            if (c2 <= c || row[c2] == 0) continue;
            Rat f = row[c2];
            for (size_t i = 0; i < m; ++i) row[i] -= f * row2[i];
        }
    // nullspace basis: one vector per free column
    std::vector<std::vector<Rat>> basis;
    for (size_t f = 0; f < m; ++f) {
        if (piv.count(f)) continue;
        std::vector<Rat> v(m, Rat(0));
        v[f] = 1;
        for (const auto& [c, row] : piv) v[c] = -row[f];
        basis.push_back(std::move(v));
    }
    auto positive = [&](const std::vector<Rat>& w) {
        for (const auto& x : w)
            if (x <= 0) return false;
        return true;
    };
    std::vector<std::vector<Rat>> candidates;
    {
        std::vector<Rat> sum(m, Rat(0));
        for (const auto& bv : basis) {
            Rat s(0);
            for (const auto& x : bv) s += x;
            for (size_t i = 0; i < m; ++i) sum[i] += (s >= 0 ? bv[i] : -bv[i]);
        }
        candidates.push_back(std::move(sum));
    }
    for (const auto& bv : basis) {
        candidates.push_back(bv);
        std::vector<Rat> neg(m);
        for (size_t i = 0; i < m; ++i) neg[i] = -bv[i];
        candidates.push_back(std::move(neg));
    }
    for (const auto& cand : candidates) {
        if (!positive(cand)) continue;
        Int lcm = 1;
        for (const auto& x : cand) lcm = lcm / gcd(lcm, denominator(x)) * denominator(x);
        std::vector<Int> scaled(m);
        Int g = 0;
        for (size_t i = 0; i < m; ++i) {
            scaled[i] = numerator(cand[i]) * (lcm / denominator(cand[i]));
            g = gcd(g, scaled[i]);
        }
        std::vector<int> w(m);
        bool fits = true;
        for (size_t i = 0; i < m; ++i) {
            Int q = scaled[i] / g;
            if (q > 1000000) fits = false;
            w[i] = static_cast<int>(q);
        }
        if (fits) return w;
    }
    return std::nullopt;
}

// inverse of substituting v = 1 into a w-homogeneous polynomial with no v
// factor; nullopt if no weighted degree is consistent
std::optional<Poly> homogenize_weighted(const Poly& a, size_t v, const std::vector<int>& w) {
    int top = 0;
    bool first = true;
    std::vector<int> sdeg;
    for (const auto& [e, c] : a.terms()) {
        int s = 0;
        for (size_t i = 0; i < e.size(); ++i) s += e[i] * w[i];
        sdeg.push_back(s);
        top = first ? s : std::max(top, s);
        first = false;
    }
    Poly r(a.vars());
    size_t idx = 0;
    for (const auto& [e, c] : a.terms()) {
        int gap = top - sdeg[idx++];
        if (gap % w[v] != 0) return std::nullopt;
        Exp ne = e;
        ne[v] += gap / w[v];
        r.add_term(ne, c);
    }
    return r;
}

Poly gcd_entry(const Poly& a, const Poly& b);

// coefficient of x^d in p, viewed univariately in variable x
Poly coeff_of(const Poly& p, size_t x, int d) {
    Poly c(p.vars());
    for (const auto& [e, k] : p.terms()) {
        if (e[x] != d) continue;
        Exp ne = e;
        ne[x] = 0;
        c.add_term(ne, k);
    }
    return c;
}

Poly eval_var(const Poly& p, size_t y, const Rat& t) {
    std::vector<Poly> images;
    for (size_t i = 0; i < p.vars().size(); ++i)
        images.push_back(i == y ? Poly::constant(p.vars(), t)
                                : Poly::variable(p.vars(), p.vars()[i]));
    return p.substitute(images);
}

Poly content_in(const Poly& p, size_t x) {
    Poly g(p.vars());
    for (int d = 0; d <= p.degree_in(x); ++d) {
        Poly c = coeff_of(p, x, d);
        if (c.is_zero()) continue;
        g = gcd_entry(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

// Exact bivariate gcd by Newton interpolation of univariate gcd images along
// y; inputs must be primitive w.r.t. x (no polynomial x-content). Unlucky
// evaluation points are discarded by degree comparison and the final
// candidate is verified by exact division, falling back to the
// pseudo-remainder path when verification keeps failing.
Poly gcd_bivariate_primitive(const Poly& a, const Poly& b, size_t x, size_t y) {
    Poly lca = coeff_of(a, x, a.degree_in(x));
    Poly lcb = coeff_of(b, x, b.degree_in(x));
    Poly gamma = gcd_entry(lca, lcb);  // univariate in y

    std::vector<Rat> nodes;
    std::vector<Rat> node_products;  // prod_{l<k}(t_k - t_l) for the Newton step
    Poly h(a.vars());                // interpolant so far, in x and y
    int mindeg = -1;

    long t = 0;
    for (int tries = 0; tries < 120; ++tries, t = t > 0 ? -t : -t + 1) {
        Rat tv(t);
        if (eval_var(lca, y, tv).is_zero() || eval_var(lcb, y, tv).is_zero()) continue;
        Poly gt = gcd_entry(eval_var(a, y, tv), eval_var(b, y, tv));
        int d = gt.degree_in(x);
        if (d == 0) return Poly::constant(a.vars(), 1);
        if (mindeg != -1 && d > mindeg) continue;  // unlucky point
        if (mindeg == -1 || d < mindeg) {
            mindeg = d;
            nodes.clear();
            node_products.clear();
            h = Poly(a.vars());
        }
        // image of gamma/lc(g) * g at y = t
        Rat scale = eval_var(gamma, y, tv).constant_value() / coeff_of(gt, x, d).constant_value();
        Poly img = gt.scaled(scale);

        Poly diff = img - eval_var(h, y, tv);
        if (!diff.is_zero()) {
            Rat denom = 1;
            for (const Rat& n : nodes) denom *= tv - n;
            Poly basis = Poly::constant(a.vars(), 1);
            for (const Rat& n : nodes)
                basis = basis * (Poly::variable(a.vars(), a.vars()[y]) - Poly::constant(a.vars(), n));
            h += diff.scaled(Rat(1) / denom) * basis;
            nodes.push_back(tv);
            continue;
        }
        if (nodes.size() < 2) {  // too early to trust a constant difference
            nodes.push_back(tv);
            continue;
        }
        Poly cand = h;
        Poly cont = content_in(cand, x);
        if (!cont.is_constant()) cand = *exact_divide(cand, cont);
        cand = normalize_gcd(cand);
        if (exact_divide(a, cand) && exact_divide(b, cand)) return cand;
        nodes.push_back(tv);
    }
    return gcd_impl(a, b);
}

Poly gcd_entry(const Poly& a, const Poly& b) {
    if (a.is_zero()) return normalize_gcd(b);
    if (b.is_zero()) return normalize_gcd(a);
    if (a.is_constant() || b.is_constant()) return Poly::constant(a.vars(), 1);

    Exp ma = monomial_content(a), mb = monomial_content(b);
    Exp common(ma.size());
    bool stripped = false;
    for (size_t i = 0; i < ma.size(); ++i) {
        common[i] = std::min(ma[i], mb[i]);
        stripped = stripped || ma[i] > 0 || mb[i] > 0;
    }
    if (stripped) {
        Poly g = gcd_entry(shift_exponents(a, ma, -1), shift_exponents(b, mb, -1));
        return shift_exponents(g, common, +1);
    }

    // Inputs homogeneous under a common (possibly weighted) grading in
    // several variables: substitute 1 for the last occurring variable to
    // drop the variable count, then restore by homogenizing (sound because
    // neither input has a monomial factor).
    if (a.vars().size() > 1) {
        size_t occurring = 0;
        for (size_t i = 0; i < a.vars().size(); ++i)
            if (a.degree_in(i) > 0 || b.degree_in(i) > 0) ++occurring;
        if (occurring > 1) {
            if (auto w = common_grading(a, b)) {
                size_t v = a.vars().size();
                while (v-- > 0)
                    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) break;
                std::vector<Poly> images;
                for (size_t i = 0; i < a.vars().size(); ++i)
                    images.push_back(i == v ? Poly::constant(a.vars(), 1)
                                            : Poly::variable(a.vars(), a.vars()[i]));
                Poly g1 = gcd_entry(a.substitute(images), b.substitute(images));
                if (auto g = homogenize_weighted(g1, v, *w)) return normalize_gcd(*g);
            }
        }
    }

    std::vector<size_t> eff;
    for (size_t i = 0; i < a.vars().size(); ++i)
        if (a.degree_in(i) > 0 || b.degree_in(i) > 0) eff.push_back(i);
    if (eff.size() == 2 && a.degree_in(eff[0]) > 0 && b.degree_in(eff[0]) > 0) {
        size_t x = eff[0], y = eff[1];
        Poly ca = content_in(a, x), cb = content_in(b, x);
        Poly g = gcd_entry(ca, cb);
        Poly pa = ca.is_constant() ? a : *exact_divide(a, ca);
        Poly pb = cb.is_constant() ? b : *exact_divide(b, cb);
        return normalize_gcd(g * gcd_bivariate_primitive(pa, pb, x, y));
    }
    return gcd_impl(a, b);
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.vars() != b.vars()) throw std::invalid_argument("polynomial variable lists differ");
    return gcd_entry(a, b);
}

}  // namespace saito
