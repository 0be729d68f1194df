#pragma once

#include "saito/group.hpp"
#include "saito/matrix.hpp"

namespace saito {

// Connection matrices are indexed so that (Gamma[i])^k_j is the coefficient
// of d/du^k in nabla_{d/du^i} d/du^j, i.e. row = upper index.

struct JacobianData {
    PolyMatrix J;      // J(a,i) = dx^a/du^i
    RatFnMatrix Jinv;  // Jinv(i,a) = du^i/dx^a
    Poly detJ;
};

struct EFieldData {
    std::vector<RatFn> e;  // components of e = d/dx^1 in the u-frame
    RatFnMatrix Q;         // Q(k,j) = de^k/du^j
    RatFn detQ;
};

struct HessianMetric {
    PolyMatrix H;      // H(i,j) = d2 x^n / du^i du^j
    RatFnMatrix Hinv;
    std::vector<RatFnMatrix> S;  // Levi-Civita Christoffel matrices
};

struct EulerField {
    std::vector<Poly> e_deg;  // components of E_deg = sum u^i d/du^i
    Rat scale;                // E = scale * E_deg = (1/d_1) E_deg
};

struct CurvatureWitness {
    size_t i, j;        // connection index pair
    size_t row, col;    // offending matrix entry
    RatFn value;
};

JacobianData jacobian(const GroupSpec& g);
EFieldData e_field(const GroupSpec& g, const JacobianData& jd);
EulerField euler_field(const GroupSpec& g);
HessianMetric hessian_metric(const GroupSpec& g);

// Full curvature check d_i Gamma_j - d_j Gamma_i + [Gamma_i, Gamma_j] = O.
// Returns the first offending entry, or nullopt when flat.
std::optional<CurvatureWitness> flatness_check(const std::vector<RatFnMatrix>& gamma);

// Verifies nabla_{d/du^i} E = r * d/du^i for all i with the given
// Christoffel matrices.
bool connection_scales_euler(const GroupSpec& g, const std::vector<RatFnMatrix>& gamma, const Rat& r);

// r = d_n / (2 d_1) for the Hessian Levi-Civita connection
inline Rat cs_parameter(const GroupSpec& g) {
    return Rat(g.degrees[g.rank - 1]) / Rat(2 * g.degrees[0]);
}

}  // namespace saito
