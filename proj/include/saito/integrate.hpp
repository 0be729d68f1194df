#pragma once

#include "saito/poly.hpp"

namespace saito {

// Recover the homogeneous F with dF/dx_i = components[i] from the Euler
// identity F = (1/deg F) * sum_i w_i x_i dF/dx_i, where w_i is the weighted
// degree of the i-th variable. Returns nullopt (Incompatible) when the
// components are not the gradient of any such F.
std::optional<Poly> euler_integrate(const std::vector<Poly>& components,
                                    const std::vector<int>& weights,
                                    int target_degree);

}  // namespace saito
