#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace saito {

// Exact rational scalar. gcd-normalized with positive denominator.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace saito
