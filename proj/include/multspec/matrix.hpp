#pragma once

// Exact dense linear algebra: fraction-free Bareiss determinants for
// matrices with polynomial entries, and rational Gaussian elimination.

#include <optional>
#include <stdexcept>
#include <vector>

#include "polynomial.hpp"

namespace multspec {

// Exact multivariate division; throws if the division is not exact.
inline Poly exact_divide(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::invalid_argument("exact_divide by zero");
    if (num.is_zero()) return Poly(num.nvars());
    Poly rem = num;
    Poly quot(num.nvars());
    const Term& dlt = den.terms.front();  // lex leading term
    while (!rem.is_zero()) {
        const Term& rlt = rem.terms.front();
        if (!dlt.mon.divides(rlt.mon))
            throw std::invalid_argument("exact_divide: division is not exact");
        Monomial qm = dlt.mon.quotient_of(rlt.mon);
        Rat qc = rlt.coeff / dlt.coeff;
        quot += Poly::term(num.nvars(), qm, qc);
        rem -= den.mul_term(qm, qc);
    }
    return quot;
}

// Bareiss fraction-free elimination; all intermediate divisions are exact.
inline Poly det_bareiss(std::vector<std::vector<Poly>> m) {
    size_t n = m.size();
    if (n == 0) throw std::invalid_argument("determinant of empty matrix");
    size_t nv = m[0][0].nvars();
    if (n == 1) return m[0][0];
    Poly prev = Poly::constant(nv, Rat(1));
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return Poly(nv);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Poly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = exact_divide(num, prev);
            }
            m[i][k] = Poly(nv);
        }
        prev = m[k][k];
    }
    Poly d = m[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

inline Rat det_rational(std::vector<std::vector<Rat>> m) {
    size_t n = m.size();
    Rat det(1);
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != k) {
            std::swap(m[k], m[piv]);
            det = -det;
        }
        det *= m[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rat f = m[i][k] / m[k][k];
            for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

inline std::optional<std::vector<std::vector<Rat>>> invert_rational(
    std::vector<std::vector<Rat>> m) {
    size_t n = m.size();
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(m[k], m[piv]);
        std::swap(inv[k], inv[piv]);
        Rat d = m[k][k];
        for (size_t j = 0; j < n; ++j) {
            m[k][j] /= d;
            inv[k][j] /= d;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == k || m[i][k] == 0) continue;
            Rat f = m[i][k];
            for (size_t j = 0; j < n; ++j) {
                m[i][j] -= f * m[k][j];
                inv[i][j] -= f * inv[k][j];
            }
        }
    }
    return inv;
}

// Solves A x = b over any exact field when the solution exists and is
// unique; nullopt otherwise. A may be rectangular (rows >= cols requires
// full column rank plus consistency). F needs +,-,*,/, is_zero semantics via
// == F{} ... provided through the `zero` element.
template <typename F>
inline std::optional<std::vector<F>> solve_linear_field(std::vector<std::vector<F>> a,
                                                        std::vector<F> b, const F& zero,
                                                        const F& one) {
    size_t rows = a.size();
    if (rows == 0) return std::vector<F>{};
    size_t cols = a[0].size();
    if (b.size() != rows) throw std::invalid_argument("solve_linear: size mismatch");

    size_t rank = 0;
    std::vector<size_t> pivot_col;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t piv = rank;
        while (piv < rows && a[piv][c] == zero) ++piv;
        if (piv == rows) continue;
        std::swap(a[rank], a[piv]);
        std::swap(b[rank], b[piv]);
        F inv = one / a[rank][c];
        for (size_t j = c; j < cols; ++j) a[rank][j] = a[rank][j] * inv;
        b[rank] = b[rank] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][c] == zero) continue;
            F f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[rank][j];
            b[i] = b[i] - f * b[rank];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    if (rank < cols) return std::nullopt;  // underdetermined
    for (size_t i = rank; i < rows; ++i)
        if (!(b[i] == zero)) return std::nullopt;  // inconsistent

    std::vector<F> x(cols, zero);
    for (size_t r = 0; r < rank; ++r) x[pivot_col[r]] = b[r];
    return x;
}

inline std::optional<std::vector<Rat>> solve_linear(std::vector<std::vector<Rat>> a,
                                                    std::vector<Rat> b) {
    return solve_linear_field<Rat>(std::move(a), std::move(b), Rat(0), Rat(1));
}

}  // namespace multspec
