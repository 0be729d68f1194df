#pragma once

#include "saito/report.hpp"
#include "saito/structures.hpp"

namespace saito {

// Flat coordinate frame of the connection dual to the trivial one. The
// coordinates t are polynomial in the basic invariants x, homogeneous of the
// same degrees, normalized so that t^1 = x^1 + element of C[x^2..x^n] and
// t^n = x^n.
struct FlatFrame {
    GroupSpec g;
    std::vector<std::string> tvars;
    std::vector<Poly> t_in_x;  // t as polynomials in x
    std::vector<Poly> x_in_t;  // inverse change
    std::vector<Poly> t_in_u;  // t composed with the invariants
    std::vector<PolyMatrix> C;  // structure constants of the dual product, entries in C[t']
    PolyMatrix U;               // matrix of (E mult -): U = sum (d_a/d_1) t^a C_a
    std::vector<Rat> W;         // diagonal of the degree matrix, d_a/d_1
};

// Connection/metric data of the Hessian pairing expressed in the t-frame.
struct CsFrameData {
    FlatFrame ff;
    std::vector<RatFnMatrix> B;     // B_a = U^{-1} C_a
    RatFnMatrix H;                  // Hessian metric in the t-frame
    PolyMatrix A;                   // A = HU, polynomial with entries in C[t']
    std::vector<RatFnMatrix> S;     // Levi-Civita connection of H
    std::vector<PolyMatrix> Upsilon;  // dual connection matrices, (1/2) A^{-1} dA
    PolyMatrix X;                   // unitriangular gauge solving dX + Upsilon X = 0
    std::vector<Poly> s_coords;     // flat coordinates of the dual connection, in t
};

struct ClassifyResult {
    bool admits_compatible_metric = false;
    Rat charge;                        // D = 1 - d_n/d_1
    std::optional<PolyMatrix> metric;  // the anti-diagonal constant matrix A
    std::optional<std::pair<int, int>> witness;  // 1-based entry of A breaking anti-diagonality
};

// Construct flat coordinates by triangular gauge integration: the x-frame
// connection matrices are certified polynomial and strictly upper triangular
// by the degree grading, the unitriangular gauge is integrated column by
// column, and flatness of the resulting frame is re-verified from scratch in
// the u-frame. Requires pairwise distinct degrees.
FlatFrame find_flat_coordinates(const GroupSpec& g);

// Consistency checks on a computed frame: C_1 = I, commutativity,
// integrability and degree identities, t^1-independence, det U monic of
// degree n in t^1.
std::vector<CheckResult> frame_invariants(const FlatFrame& ff);

// B_a, H, A; A = HU is cross-checked against the shortcut
// A_ab = (d_n-1)/d_1 C_ab^n and the metric pulled back through the frame.
CsFrameData frame_matrices(const FlatFrame& ff);

// Shape, degree and symmetry checks on A and B (triangularity of A^{-1}WA,
// symmetry relations, commutation identities, the derivative identity for
// B, and the two routes to the dual-pair connection matrices).
std::vector<CheckResult> cs_frame_invariants(const CsFrameData& cfd);

// Levi-Civita matrices of H in the t-frame, computed both from the closed
// formula 2S_a = A^{-1} dA + (-I - W + A^{-1}WA) B_a and from the Christoffel
// symbols of H directly; a mismatch throws. Fills cfd.S.
std::vector<CheckResult> levi_civita_flat_frame(CsFrameData& cfd);

// The gauge X and the flat coordinates s of the dual connection, with the
// verification that s is again a triangular set of basic invariants and the
// product structure constants in the s-frame do not involve s^1. Fills
// cfd.Upsilon, cfd.X, cfd.s_coords.
std::vector<CheckResult> cs_flat_coordinates(CsFrameData& cfd);

// A compatible metric exists iff A is an anti-diagonal constant matrix.
ClassifyResult classify_compatible_metric(const CsFrameData& cfd);

}  // namespace saito
