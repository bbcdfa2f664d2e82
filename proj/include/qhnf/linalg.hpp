#pragma once

#include <optional>
#include <vector>

#include "qhnf/field.hpp"

namespace qhnf {

template <ExactField F>
using Matrix = std::vector<std::vector<F>>;

namespace detail {

// In-place reduction of the augmented matrix [A | b] to reduced row echelon form.
// Returns the pivot column of each pivot row.
template <ExactField F>
std::vector<std::size_t> rref(Matrix<F>& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[sel], m[row]);
        const F inv = m[row][col].inv();
        for (auto& v : m[row]) v *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            const F f = m[r][col];
            for (std::size_t c = col; c < m[r].size(); ++c) {
                if (!m[row][c].is_zero()) m[r][c] -= f * m[row][c];
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace detail

/// Solution of a square system A z = b, or nullopt when A is singular.
template <ExactField F>
std::optional<std::vector<F>> solve_square(const Matrix<F>& a, const std::vector<F>& b) {
    const std::size_t n = b.size();
    Matrix<F> m = a;
    for (std::size_t r = 0; r < n; ++r) m[r].push_back(b[r]);
    auto piv = detail::rref(m, n);
    if (piv.size() != n) return std::nullopt;
    std::vector<F> z(n, F(0));
    for (std::size_t r = 0; r < n; ++r) z[piv[r]] = m[r][n];
    return z;
}

/// Some solution of A z = b (free variables set to zero), or nullopt if inconsistent.
template <ExactField F>
std::optional<std::vector<F>> solve_particular(const Matrix<F>& a, const std::vector<F>& b, std::size_t cols) {
    Matrix<F> m = a;
    for (std::size_t r = 0; r < m.size(); ++r) m[r].push_back(b[r]);
    auto piv = detail::rref(m, cols);
    for (std::size_t r = piv.size(); r < m.size(); ++r) {
        if (!m[r][cols].is_zero()) return std::nullopt;
    }
    std::vector<F> z(cols, F(0));
    for (std::size_t r = 0; r < piv.size(); ++r) z[piv[r]] = m[r][cols];
    return z;
}

template <ExactField F>
std::size_t rank(Matrix<F> a, std::size_t cols) {
    return detail::rref(a, cols).size();
}

}  // namespace qhnf
