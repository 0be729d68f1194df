#pragma once

#include "saito/report.hpp"
#include "saito/structures.hpp"

namespace saito {

// Vector fields as component lists in the u-frame.
using VecField = std::vector<RatFn>;

VecField basis_field(const std::vector<std::string>& vars, int i);
RatFn field_apply(const VecField& x, const RatFn& f);
VecField lie_bracket(const VecField& x, const VecField& y);
// (X mult Y)^k = sum_{i,j} X^i Y^j M[i](k,j)
VecField mult_apply(const std::vector<RatFnMatrix>& m, const VecField& x, const VecField& y);
// (nabla_X Y)^k = X(Y^k) + sum_{i,j} X^i Y^j G[i](k,j); empty G means the
// trivial connection
VecField nabla_apply(const std::vector<RatFnMatrix>& gamma, const VecField& x, const VecField& y);
bool field_is_zero(const VecField& x);
bool fields_equal(const VecField& x, const VecField& y);

// Everything needed to verify a (almost) Saito / Frobenius structure in the
// u-frame. `unit` is the unit of the multiplication; `second` is the other
// distinguished vector field (the Euler field for a Saito structure, the
// field e for an almost Saito structure).
struct AxiomInput {
    std::vector<std::string> vars;
    std::vector<RatFnMatrix> gamma;  // empty = trivial connection
    std::vector<RatFnMatrix> mult;
    VecField unit;
    VecField second;
    Rat r = 0;                          // parameter of an almost Saito structure
    std::optional<RatFnMatrix> metric;  // for the (almost) Frobenius checks
    Rat charge = 0;                     // D
};

// Shared preconditions: flatness, torsion-freeness, commutativity,
// associativity, unit law. Each axiom is expanded through the generic field
// operations above on all basis-field tuples.
std::vector<CheckResult> verify_common(const AxiomInput& in);
std::vector<CheckResult> verify_ss(const AxiomInput& in);    // SS1-SS4 (+ common)
std::vector<CheckResult> verify_ass(const AxiomInput& in);   // ASS1-ASS4 (+ common)
std::vector<CheckResult> verify_frobenius(const AxiomInput& in);         // f1-f3
std::vector<CheckResult> verify_almost_frobenius(const AxiomInput& in);  // af1-af3

}  // namespace saito
