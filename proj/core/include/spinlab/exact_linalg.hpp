#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "spinlab/scalar.hpp"

namespace spinlab {

template <class F>
using DenseRows = std::vector<std::vector<F>>;

/// Row-reduced echelon form. Exact fields pivot on any nonzero entry; floating
/// fields use partial pivoting and treat magnitudes <= tol as zero.
template <class F>
struct Echelon {
    DenseRows<F> rows;            // nonzero rows of the RREF
    std::vector<std::size_t> pivots;  // pivot column of each row
    std::size_t columns = 0;

    std::size_t rank() const { return rows.size(); }
};

template <class F>
Echelon<F> row_reduce(DenseRows<F> m, double tol = 0.0) {
    using T = ScalarTraits<F>;
    Echelon<F> out;
    if (m.empty())
        return out;
    const std::size_t cols = m.front().size();
    out.columns = cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::optional<std::size_t> pivot;
        double best = tol;
        for (std::size_t r = row; r < m.size(); ++r) {
            if constexpr (T::exact) {
                if (!T::is_zero(m[r][col])) {
                    pivot = r;
                    break;
                }
            } else {
                const double mag = T::magnitude(m[r][col]);
                if (mag > best) {
                    best = mag;
                    pivot = r;
                }
            }
        }
        if (!pivot)
            continue;
        std::swap(m[row], m[*pivot]);
        const F inv = F(T::from_int(1)) / m[row][col];
        for (std::size_t c = col; c < cols; ++c)
            m[row][c] = F(m[row][c] * inv);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || T::is_zero(m[r][col]))
                continue;
            const F factor = m[r][col];
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] = F(m[r][c] - factor * m[row][c]);
        }
        out.pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    out.rows = std::move(m);
    return out;
}

template <class F>
std::size_t rank(const DenseRows<F>& m, double tol = 0.0) {
    return row_reduce(m, tol).rank();
}

/// Basis of {x : m x = 0}.
template <class F>
DenseRows<F> null_space(const DenseRows<F>& m, double tol = 0.0) {
    using T = ScalarTraits<F>;
    const Echelon<F> e = row_reduce(m, tol);
    const std::size_t cols = m.empty() ? 0 : m.front().size();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    DenseRows<F> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<F> v(cols, T::from_int(0));
        v[free] = T::from_int(1);
        for (std::size_t r = 0; r < e.rows.size(); ++r)
            v[e.pivots[r]] = F(-e.rows[r][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solve a x = b for square a; empty optional when a is singular.
template <class F>
std::optional<std::vector<F>> solve(const DenseRows<F>& a, const std::vector<F>& b, double tol = 0.0) {
    const std::size_t n = a.size();
    if (b.size() != n)
        throw std::invalid_argument("solve: dimension mismatch");
    DenseRows<F> aug = a;
    for (std::size_t i = 0; i < n; ++i)
        aug[i].push_back(b[i]);
    const Echelon<F> e = row_reduce(std::move(aug), tol);
    if (e.rank() != n || (n > 0 && e.pivots.back() >= n))
        return std::nullopt;
    std::vector<F> x(n);
    for (std::size_t r = 0; r < n; ++r)
        x[e.pivots[r]] = e.rows[r][n];
    return x;
}

}  // namespace spinlab
