#include "saito/ratfn.hpp"

namespace saito {

RatFn::RatFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("rational function with zero denominator");
    if (num_.vars() != den_.vars()) throw std::invalid_argument("num/den variable lists differ");
    reduce();
}

void RatFn::reduce() {
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.vars(), 1);
        return;
    }
    if (!den_.is_constant()) {
        Poly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = *exact_divide(num_, g);
            den_ = *exact_divide(den_, g);
        }
    }
    // monic denominator
    Rat lc = den_.lead_coeff();
    if (lc != 1) {
        Rat inv = Rat(1) / lc;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

std::optional<Poly> RatFn::as_poly() const {
    return exact_divide(num_, den_);
}

RatFn RatFn::operator+(const RatFn& o) const {
    return RatFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFn RatFn::operator-(const RatFn& o) const {
    return RatFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFn RatFn::operator*(const RatFn& o) const {
    return RatFn(num_ * o.num_, den_ * o.den_);
}

RatFn RatFn::operator/(const RatFn& o) const {
    if (o.is_zero()) throw std::invalid_argument("division by zero rational function");
    return RatFn(num_ * o.den_, den_ * o.num_);
}

RatFn RatFn::operator-() const {
    RatFn r = *this;
    r.num_ = -r.num_;
    return r;
}

bool RatFn::equals(const RatFn& o) const {
    return (num_ * o.den_ - o.num_ * den_).is_zero();
}

RatFn RatFn::derivative(size_t var) const {
    return RatFn(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

bool RatFn::is_homogeneous(const std::vector<int>& weights, int* deg) const {
    int dn = 0, dd = 0;
    if (!num_.is_homogeneous(weights, &dn) || !den_.is_homogeneous(weights, &dd)) return false;
    if (deg) *deg = num_.is_zero() ? 0 : dn - dd;
    return true;
}

std::string RatFn::to_string() const {
    if (is_polynomial()) {
        Rat c = den_.constant_value();
        return c == 1 ? num_.to_string() : num_.scaled(Rat(1) / c).to_string();
    }
    // Always the fully parenthesized form: Poly::to_string emits no parens,
    // so ")/(" is an unambiguous separator for round-tripping.
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace saito
