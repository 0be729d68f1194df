#pragma once

#include "saito/group.hpp"

namespace saito {

// Matrix of elementary symmetric polynomials in v1..vn with the j-th
// variable omitted: entry (a, j) = e_{a-1}(v with v^j removed). The first
// row is all ones and column j never involves v^j.
PolyMatrix elem_sym_matrix(int n);

// det = prod_{k<l} (v^k - v^l)
Poly closed_det(int n);

// minor with row a and column j deleted (1-based):
// (v^j)^{n-a} prod_{k<l, k,l != j} (v^k - v^l)
Poly closed_minor(int n, int a, int j);

// (i, a) entry of the inverse (1-based):
// (-1)^{a+1} (v^i)^{n-a} prod_{l != i} (v^i - v^l)^{-1}
RatFn closed_inverse_entry(int n, int i, int a);

// du^i/dx^a for the group G(m,1,n), in the variables u1..un with v = u^m:
// (-1)^{n+a} (u^i)^{m(a-2)+1}/m * prod_{l != i} (v_i - v_l)^{-1}
RatFn closed_du_dx(int m, int n, int i, int a);

// components of d/dx^1 in the u-frame:
// e^k = (-1)^{n+1}/(m (u^k)^{m-1}) * prod_{l != k} (v_k - v_l)^{-1}
std::vector<RatFn> closed_e_field(int m, int n);

}  // namespace saito
