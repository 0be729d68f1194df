#include "saito/rewrite.hpp"

#include <map>

namespace saito {

std::vector<Exp> weighted_exponents(const std::vector<int>& weights, int degree) {
    std::vector<Exp> out;
    if (degree < 0) return out;
    Exp cur(weights.size(), 0);
    // lexicographic backtracking over the exponent of each generator
    std::function<void(size_t, int)> rec = [&](size_t i, int rem) {
        if (i == weights.size()) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        if (i + 1 == weights.size()) {
            if (rem % weights[i] == 0) {
                cur[i] = rem / weights[i];
                out.push_back(cur);
                cur[i] = 0;
            }
            return;
        }
        for (int k = 0; k * weights[i] <= rem; ++k) {
            cur[i] = k;
            rec(i + 1, rem - k * weights[i]);
        }
        cur[i] = 0;
    };
    rec(0, degree);
    return out;
}

std::optional<Poly> express_in_invariants(const Poly& p, const std::vector<Poly>& invs,
                                          const std::vector<int>& inv_degrees,
                                          const std::vector<std::string>& new_vars,
                                          const std::vector<int>& in_weights) {
    Poly result(new_vars);
    if (p.is_zero()) return result;
    std::vector<int> w = in_weights.empty() ? std::vector<int>(p.vars().size(), 1) : in_weights;

    // group the terms of p by weighted degree and match each piece separately
    std::map<int, Poly> pieces;
    for (const auto& [e, c] : p.terms()) {
        int d = 0;
        for (size_t k = 0; k < e.size(); ++k) d += e[k] * w[k];
        auto it = pieces.find(d);
        if (it == pieces.end()) it = pieces.emplace(d, Poly(p.vars())).first;
        it->second.add_term(e, c);
    }

    for (const auto& [deg, piece] : pieces) {
        std::vector<Exp> cands = weighted_exponents(inv_degrees, deg);
        if (cands.empty()) return std::nullopt;

        std::vector<Poly> expanded;
        expanded.reserve(cands.size());
        for (const Exp& e : cands) {
            Poly m = Poly::constant(p.vars(), 1);
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) m *= invs[i].pow(e[i]);
            expanded.push_back(std::move(m));
        }

        // row index for every u-monomial appearing anywhere
        std::map<Exp, size_t, GradedLexLess> rows;
        auto row_of = [&](const Exp& e) {
            auto [it, inserted] = rows.emplace(e, rows.size());
            return it->second;
        };
        for (const auto& m : expanded)
            for (const auto& [e, c] : m.terms()) row_of(e);
        for (const auto& [e, c] : piece.terms()) row_of(e);

        std::vector<std::vector<Rat>> a(rows.size(), std::vector<Rat>(cands.size(), Rat(0)));
        std::vector<Rat> b(rows.size(), Rat(0));
        for (size_t j = 0; j < expanded.size(); ++j)
            for (const auto& [e, c] : expanded[j].terms()) a[rows.at(e)][j] = c;
        for (const auto& [e, c] : piece.terms()) b[rows.at(e)] = c;

        auto sol = solve_rational(a, b);
        if (!sol) return std::nullopt;
        for (size_t j = 0; j < cands.size(); ++j)
            if ((*sol)[j] != 0) result.add_term(cands[j], (*sol)[j]);
    }

    // round-trip verification in the original variables
    std::vector<Poly> images;
    for (const auto& inv : invs) images.push_back(inv);
    if (result.substitute(images) != p) return std::nullopt;
    return result;
}

std::optional<Poly> express_in_invariants(const RatFn& p, const std::vector<Poly>& invs,
                                          const std::vector<int>& inv_degrees,
                                          const std::vector<std::string>& new_vars,
                                          const std::vector<int>& in_weights) {
    auto pol = p.as_poly();
    if (!pol) return std::nullopt;
    return express_in_invariants(*pol, invs, inv_degrees, new_vars, in_weights);
}

}  // namespace saito
