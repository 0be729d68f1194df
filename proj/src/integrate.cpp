#include "saito/integrate.hpp"

namespace saito {

std::optional<Poly> euler_integrate(const std::vector<Poly>& components,
                                    const std::vector<int>& weights,
                                    int target_degree) {
    if (components.empty()) throw std::invalid_argument("euler_integrate: no components");
    if (target_degree <= 0) throw std::invalid_argument("euler_integrate: target degree must be positive");
    const auto& vars = components[0].vars();
    if (components.size() != vars.size() || weights.size() != vars.size())
        throw std::invalid_argument("euler_integrate: component/weight count mismatch");

    for (size_t i = 0; i < components.size(); ++i) {
        int d = 0;
        if (!components[i].is_homogeneous(weights, &d)) return std::nullopt;
        if (!components[i].is_zero() && d != target_degree - weights[i]) return std::nullopt;
    }

    Poly candidate(vars);
    for (size_t i = 0; i < components.size(); ++i) {
        Exp e(vars.size(), 0);
        e[i] = 1;
        candidate += components[i] * Poly::monomial(vars, e, Rat(weights[i]) / Rat(target_degree));
    }
    for (size_t i = 0; i < components.size(); ++i)
        if (candidate.derivative(i) != components[i]) return std::nullopt;
    return candidate;
}

}  // namespace saito
