#include "saito/matrix.hpp"

namespace saito {

RatFnMatrix to_ratfn(const PolyMatrix& m) {
    RatFnMatrix r(m.rows(), m.cols(), RatFn(m.zero_like()));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) r.at(i, j) = RatFn(m.at(i, j));
    return r;
}

PolyMatrix to_poly(const RatFnMatrix& m) {
    PolyMatrix r(m.rows(), m.cols(), m.zero_like().num());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            auto p = m.at(i, j).as_poly();
            if (!p) throw std::logic_error("matrix entry is not a polynomial");
            r.at(i, j) = *p;
        }
    return r;
}

RatFn ratfn_det(const RatFnMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    size_t n = m.rows();
    RatFnMatrix a = m;
    RatFn det = RatFn::constant(m.zero_like().vars(), 1);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return RatFn::zero(m.zero_like().vars());
        if (pivot != col) {
            for (size_t j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
            det = -det;
        }
        det *= a.at(col, col);
        RatFn inv = RatFn::constant(m.zero_like().vars(), 1) / a.at(col, col);
        for (size_t i = col + 1; i < n; ++i) {
            if (a.at(i, col).is_zero()) continue;
            RatFn f = a.at(i, col) * inv;
            for (size_t j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
        }
    }
    return det;
}

RatFnMatrix ratfn_inverse(const RatFnMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    size_t n = m.rows();
    RatFn zero = m.zero_like();
    RatFn one = RatFn::constant(zero.vars(), 1);
    RatFnMatrix a = m;
    RatFnMatrix inv = RatFnMatrix::identity(n, zero, one);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw std::domain_error("singular matrix");
        if (pivot != col)
            for (size_t j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        RatFn pinv = one / a.at(col, col);
        for (size_t j = 0; j < n; ++j) {
            a.at(col, j) *= pinv;
            inv.at(col, j) *= pinv;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a.at(i, col).is_zero()) continue;
            RatFn f = a.at(i, col);
            for (size_t j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

Poly poly_det_cofactor(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    size_t n = m.rows();
    if (n == 1) return m.at(0, 0);
    Poly det = m.zero_like();
    for (size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        PolyMatrix sub(n - 1, n - 1, m.zero_like());
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(r - 1, cc++) = m.at(r, c);
            }
        }
        Poly term = m.at(0, j) * poly_det_cofactor(sub);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

PolyMatrix poly_adjugate(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("adjugate of non-square matrix");
    size_t n = m.rows();
    if (n == 1) {
        PolyMatrix one(1, 1, m.zero_like());
        one.at(0, 0) = m.zero_like() + Poly::constant(m.zero_like().vars(), 1);
        return one;
    }
    PolyMatrix adj(n, n, m.zero_like());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            PolyMatrix sub(n - 1, n - 1, m.zero_like());
            for (size_t r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;  // adj(i,j) is the (j,i) cofactor
                for (size_t c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    sub.at(rr, cc++) = m.at(r, c);
                }
                ++rr;
            }
            Poly cof = poly_det_cofactor(sub);
            adj.at(i, j) = ((i + j) % 2 == 0) ? cof : -cof;
        }
    return adj;
}

std::optional<std::pair<size_t, size_t>> first_difference(const RatFnMatrix& a, const RatFnMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return std::make_pair(size_t(0), size_t(0));
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            if (!a.at(i, j).equals(b.at(i, j))) return std::make_pair(i, j);
    return std::nullopt;
}

std::optional<std::vector<Rat>> solve_rational(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    std::vector<size_t> pivot_col_of_row;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t p = row;
        while (p < rows && a[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[row]);
        std::swap(b[p], b[row]);
        Rat inv = Rat(1) / a[row][col];
        for (size_t j = col; j < cols; ++j) a[row][j] *= inv;
        b[row] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (size_t j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
            b[i] -= f * b[row];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (size_t i = row; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    std::vector<Rat> x(cols, Rat(0));
    for (size_t i = 0; i < pivot_col_of_row.size(); ++i) x[pivot_col_of_row[i]] = b[i];
    return x;
}

}  // namespace saito
