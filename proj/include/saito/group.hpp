#pragma once

#include <optional>

#include "saito/matrix.hpp"
#include "saito/poly.hpp"

namespace saito {

enum class Family { Zm, Gm1n, Gmmn, A, B, D, I2, Custom };

// A reflection group presented by its basic invariants in the standard
// coordinates u1..un, ordered by descending degree.
struct GroupSpec {
    std::string name;
    int rank = 0;
    std::vector<std::string> variables;
    std::vector<Poly> invariants;
    std::vector<int> degrees;
    std::optional<std::vector<int>> codegrees;
    Family family = Family::Custom;

    std::vector<int> unit_weights() const { return std::vector<int>(variables.size(), 1); }
};

struct Classification {
    std::optional<bool> is_duality;  // unknown when codegrees are absent
    bool is_cs = false;
    bool is_coxeter = false;
};

enum class DegreeTrichotomy { Less, Equal, Greater };

// Catalog constructors. Parameter ranges follow the classification:
// Zm (m>=2), G(m,1,n) (m>=3, n>=2), G(m,m,n) (m,n>=3), A_{n-1} (n>=2),
// B_n (n>=2), D_n (n>=4), I_2(m) (m>=5).
GroupSpec make_group(Family family, int m, int n);

// Catalog names: "Zm:<m>", "G<m>_1_<n>", "G<m>_<m>_<n>", "A<n>", "B<n>",
// "D<n>", "I2:<m>"
GroupSpec make_group_by_name(const std::string& name);

Classification classify(const GroupSpec& g);

// For each (alpha, beta): sign of d_alpha + d_beta - (d_1 + d_n).
std::vector<std::vector<DegreeTrichotomy>> degree_inequality_table(const GroupSpec& g);

// Validates homogeneity, descending degrees, and Jacobian nonsingularity;
// throws std::invalid_argument with a diagnostic on failure.
GroupSpec validate_group(std::string name, int rank, std::vector<std::string> variables,
                         std::vector<Poly> invariants, std::optional<std::vector<int>> degrees);

// Symbolic invariance test against a generating set of the group action
// (rational substitutions plus exponent congruences for the torus parts).
bool invariance_spot_check(const GroupSpec& g);

// k-th elementary symmetric polynomial of the given values (k >= 0)
Poly elementary_symmetric(const std::vector<Poly>& values, int k);

}  // namespace saito
