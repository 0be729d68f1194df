#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "saito/rat.hpp"

namespace saito {

using Exp = std::vector<int>;

// Graded-lexicographic "less": lower total degree first, ties broken so that
// earlier variables dominate. Leading term of a Poly is the map's last entry.
struct GradedLexLess {
    bool operator()(const Exp& a, const Exp& b) const;
};

// Sparse multivariate polynomial over Q. Terms with zero coefficient are
// never stored; the zero polynomial has an empty term map.
class Poly {
public:
    using TermMap = std::map<Exp, Rat, GradedLexLess>;

    Poly() = default;
    explicit Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Poly constant(std::vector<std::string> vars, const Rat& c);
    static Poly variable(std::vector<std::string> vars, const std::string& name);
    static Poly monomial(std::vector<std::string> vars, Exp e, const Rat& c);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const;  // 0 for the zero polynomial

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly scaled(const Rat& c) const;
    Poly pow(int k) const;

    size_t var_index(const std::string& name) const;
    Poly derivative(size_t var) const;
    Poly derivative(const std::string& var) const { return derivative(var_index(var)); }

    int total_degree() const;       // -1 for zero
    int degree_in(size_t var) const;  // -1 for zero

    // Homogeneity w.r.t. a weight vector (one weight per variable).
    // The zero polynomial is homogeneous of every degree (deg set to -1).
    bool is_homogeneous(const std::vector<int>& weights, int* deg = nullptr) const;

    // Substitute images[i] for variable i. All images must share a common
    // variable list, which becomes the result's variable list.
    Poly substitute(const std::vector<Poly>& images) const;

    // Same polynomial over a different variable list (old vars must be a
    // subset of the new list).
    Poly with_vars(const std::vector<std::string>& new_vars) const;

    // Leading term in graded-lex order. Polynomial must be nonzero.
    const Exp& lead_exp() const;
    const Rat& lead_coeff() const;

    std::string to_string() const;

    // Internal: insert with zero-coefficient cleanup.
    void add_term(const Exp& e, const Rat& c);

private:
    std::vector<std::string> vars_;
    TermMap terms_;

    void check_same_vars(const Poly& o) const;
};

// Exact multivariate division: returns q with num = q*den, or nullopt.
std::optional<Poly> exact_divide(const Poly& num, const Poly& den);

// gcd over Q[vars], normalized to have positive integer-primitive content
// and positive leading coefficient. Returns 1 for coprime inputs.
Poly poly_gcd(const Poly& a, const Poly& b);

}  // namespace saito
