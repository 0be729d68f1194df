#pragma once

#include "saito/poly.hpp"

namespace saito {

// Quotient of two polynomials. Equality is by cross-multiplication, so no
// canonical form is required; internally each value is reduced by gcd with a
// monic denominator to keep intermediate expressions small.
class RatFn {
public:
    RatFn() = default;
    explicit RatFn(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.vars(), 1)) {}
    RatFn(Poly num, Poly den);

    static RatFn constant(std::vector<std::string> vars, const Rat& c) {
        return RatFn(Poly::constant(std::move(vars), c));
    }
    static RatFn zero(std::vector<std::string> vars) { return constant(std::move(vars), 0); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const std::vector<std::string>& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    // num/den as a Poly if den divides num exactly
    std::optional<Poly> as_poly() const;

    RatFn operator+(const RatFn& o) const;
    RatFn operator-(const RatFn& o) const;
    RatFn operator*(const RatFn& o) const;
    RatFn operator/(const RatFn& o) const;
    RatFn operator-() const;
    RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
    RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
    RatFn& operator*=(const RatFn& o) { return *this = *this * o; }

    // cross-multiplication equality
    bool equals(const RatFn& o) const;

    RatFn derivative(size_t var) const;
    RatFn derivative(const std::string& var) const { return derivative(num_.var_index(var)); }

    RatFn scaled(const Rat& c) const { return RatFn(num_.scaled(c), den_); }
    RatFn substitute(const std::vector<Poly>& images) const {
        return RatFn(num_.substitute(images), den_.substitute(images));
    }
    RatFn with_vars(const std::vector<std::string>& nv) const {
        return RatFn(num_.with_vars(nv), den_.with_vars(nv));
    }

    // homogeneous as a rational function: num and den homogeneous; degree is
    // deg num - deg den
    bool is_homogeneous(const std::vector<int>& weights, int* deg = nullptr) const;

    std::string to_string() const;

private:
    Poly num_, den_;
    void reduce();
};

}  // namespace saito
