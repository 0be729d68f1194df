#pragma once

#include "saito/geometry.hpp"

namespace saito {

// Structure constants of a commutative multiplication on the tangent sheaf,
// in the u-frame: B[i](k, j) is the d/du^k component of (d/du^i) * (d/du^j).
struct MultTensor {
    std::vector<RatFnMatrix> B;
    std::vector<RatFn> unit;
};

// Structure constants of the multiplication with unit E determined by the
// trivial connection: B_i = -Q^{-1} dQ/du^i. The defining identity
// dQ^k_j/du^i + sum_l Q^k_l B_ij^l = 0 is re-verified by substitution.
MultTensor natural_multiplication(const GroupSpec& g, const EFieldData& ef);

// Multiplication with unit E determined the same way by the Levi-Civita
// connection of the Hessian metric, via the linear system induced by its
// defining identity (X, Y) -> nabla_X nabla_Y e - nabla_{nabla_X Y} e +
// nabla_{X mult Y} e = 0.
MultTensor cs_multiplication(const GroupSpec& g, const HessianMetric& hm, const EFieldData& ef);

// A Saito structure obtained from an almost Saito structure by duality.
struct DualSaito {
    std::vector<RatFnMatrix> C;      // dual multiplication, unit e
    std::vector<RatFnMatrix> gamma;  // dual connection
    RatFnMatrix P;                   // matrix of the operator (e mult -)
};

// Duality transform: e*(X dual Y) = X*Y and
// nabla_X Y = bold-nabla_X Y - bold-nabla_{X dual Y} e.
DualSaito dualize_ass_to_ss(const GroupSpec& g, const MultTensor& star,
                            const std::vector<RatFnMatrix>& bold_gamma,
                            const std::vector<RatFn>& e);

// Converse transform with parameter r: checks E dual (X*Y) = X dual Y and
// bold-nabla_X Y = nabla_X Y + r X*Y - nabla_{X*Y} E entrywise.
bool dual_round_trip(const GroupSpec& g, const MultTensor& star,
                     const std::vector<RatFnMatrix>& bold_gamma, const DualSaito& ss,
                     const Rat& r);

struct CompareResult {
    bool multiplications_equal = false;
    bool connections_equal = false;
    // first failing (i,j,k), 1-based
    std::optional<std::array<int, 3>> mult_witness;
    std::optional<std::array<int, 3>> conn_witness;
};

// Decides whether the two structures coincide: multiplications entrywise,
// connections via S_ij^k = (d_n-2)/(2 d_1) B_ij^k.
CompareResult compare_structures(const GroupSpec& g, const MultTensor& star,
                               const std::vector<RatFnMatrix>& stilde, const MultTensor& diamond);

// Connection part of the comparison alone: first (i,j,k) where
// S_ij^k != (d_n-2)/(2 d_1) B_ij^k, or nullopt when the identity holds.
// btilde may be omitted when the scale vanishes (d_n = 2), where the identity
// reduces to S = 0; this keeps high-rank Coxeter groups cheap.
std::optional<std::array<int, 3>> difference_identity(const GroupSpec& g,
                                                      const std::vector<RatFnMatrix>& stilde,
                                                      const std::vector<RatFnMatrix>& btilde);

}  // namespace saito
