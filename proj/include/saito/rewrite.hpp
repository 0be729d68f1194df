#pragma once

#include "saito/matrix.hpp"
#include "saito/poly.hpp"

namespace saito {

// Rewrite a homogeneous polynomial p(u) as a polynomial in the homogeneous
// generators invs (given as polynomials in the same u-variables, with weighted
// degrees inv_degrees). The result is a polynomial in new_vars. Returns
// nullopt when p is not in the subring generated by invs.
//
// Method: enumerate the monomials in the generators whose weighted degree
// matches each homogeneous piece of p, expand them in u, and solve the exact
// linear system for the coefficients. in_weights are the weights of p's own
// variables (empty = all 1).
std::optional<Poly> express_in_invariants(const Poly& p, const std::vector<Poly>& invs,
                                          const std::vector<int>& inv_degrees,
                                          const std::vector<std::string>& new_vars,
                                          const std::vector<int>& in_weights = {});

// Same, but the input is a rational function that must first reduce to a
// polynomial in u (certified by exact division).
std::optional<Poly> express_in_invariants(const RatFn& p, const std::vector<Poly>& invs,
                                          const std::vector<int>& inv_degrees,
                                          const std::vector<std::string>& new_vars,
                                          const std::vector<int>& in_weights = {});

// All exponent vectors e >= 0 with sum_i e_i * weights_i == degree.
std::vector<Exp> weighted_exponents(const std::vector<int>& weights, int degree);

}  // namespace saito
