#pragma once

#include <functional>
#include <vector>

#include "saito/ratfn.hpp"

namespace saito {

template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols, const T& zero)
        : rows_(rows), cols_(cols), data_(rows * cols, zero) {}

    static Matrix identity(size_t n, const T& zero, const T& one) {
        Matrix m(n, n, zero);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    T& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const T& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    Matrix operator+(const Matrix& o) const { return zip(o, [](const T& a, const T& b) { return a + b; }); }
    Matrix operator-(const Matrix& o) const { return zip(o, [](const T& a, const T& b) { return a - b; }); }

    Matrix operator*(const Matrix& o) const {
        Matrix r(rows_, o.cols_, zero_like());
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                if (at(i, k).is_zero()) continue;
                for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
            }
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_, zero_like());
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    Matrix scaled(const Rat& c) const {
        return map([&](const T& a) { return a.scaled(c); });
    }

    Matrix derivative(size_t var) const {
        return map([&](const T& a) { return a.derivative(var); });
    }

    template <typename F>
    Matrix map(F f) const {
        Matrix r = *this;
        for (auto& x : r.data_) x = f(x);
        return r;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    T zero_like() const {
        T z = data_.empty() ? T() : data_[0];
        if constexpr (std::is_same_v<T, Poly>) {
            return Poly(z.vars());
        } else {
            return RatFn::zero(z.vars());
        }
    }

private:
    size_t rows_, cols_;
    std::vector<T> data_;

    template <typename F>
    Matrix zip(const Matrix& o, F f) const {
        Matrix r = *this;
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = f(data_[i], o.data_[i]);
        return r;
    }
};

using PolyMatrix = Matrix<Poly>;
using RatFnMatrix = Matrix<RatFn>;

RatFnMatrix to_ratfn(const PolyMatrix& m);
PolyMatrix to_poly(const RatFnMatrix& m);  // throws if any entry is not polynomial

RatFn ratfn_det(const RatFnMatrix& m);
// exact inverse by Gauss-Jordan elimination; throws on singular input
RatFnMatrix ratfn_inverse(const RatFnMatrix& m);

Poly poly_det_cofactor(const PolyMatrix& m);

// adjugate by cofactors: m * poly_adjugate(m) = poly_det_cofactor(m) * I
PolyMatrix poly_adjugate(const PolyMatrix& m);

// first (i,j) where the two matrices differ under cross-multiplication
// equality, or nullopt if equal
std::optional<std::pair<size_t, size_t>> first_difference(const RatFnMatrix& a, const RatFnMatrix& b);

inline bool ratfn_matrix_equal(const RatFnMatrix& a, const RatFnMatrix& b) {
    return !first_difference(a, b).has_value();
}

// dense exact linear solve A x = b over Q; nullopt if inconsistent.
// A may be rectangular; returns one solution (free variables set to 0).
std::optional<std::vector<Rat>> solve_rational(std::vector<std::vector<Rat>> a, std::vector<Rat> b);

}  // namespace saito
