#pragma once

#include <algorithm>
#include <vector>

#include "quiver/bigint.hpp"
#include "quiver/partition.hpp"

namespace quiver {

namespace detail {

// Coefficients h_0..h_deg of prod(1 - y_i t) / prod(1 - x_j t) at integer
// Chern roots, by series multiplication: the numerator is a polynomial and
// each 1/(1 - x t) factor is the geometric series.
inline std::vector<Integer> h_series_at(const std::vector<int>& xs,
                                        const std::vector<int>& ys, int deg) {
    std::vector<Integer> h(deg + 1);
    h[0] = 1;
    for (int x : xs) {  // multiply by 1 + x t + x^2 t^2 + ...
        Integer xv = x;
        for (int k = 1; k <= deg; ++k) h[k] += h[k - 1] * xv;
    }
    for (int y : ys) {  // multiply by (1 - y t)
        Integer yv = y;
        for (int k = deg; k >= 1; --k) h[k] -= h[k - 1] * yv;
    }
    return h;
}

inline Integer det_recursive(const std::vector<std::vector<Integer>>& m,
                             std::vector<int>& cols, int row) {
    const int p = static_cast<int>(m.size());
    if (row == p) return 1;
    Integer acc = 0;
    int sign = 1;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        int c = cols[k];
        if (!m[row][c].is_zero()) {
            cols.erase(cols.begin() + k);
            Integer sub = det_recursive(m, cols, row + 1);
            cols.insert(cols.begin() + k, c);
            acc += m[row][c] * sub * Integer(sign);
        }
        sign = -sign;
    }
    return acc;
}

}  // namespace detail

// Exact value of s_lambda(F - E) = det(h_{lambda_i + j - i}) at integer
// Chern roots xs of F and ys of E.
inline Integer eval_schur_difference(const Partition& lambda,
                                     const std::vector<int>& xs,
                                     const std::vector<int>& ys) {
    const int p = lambda.length();
    if (p == 0) return 1;
    int deg = 0;
    for (int i = 1; i <= p; ++i) deg = std::max(deg, lambda.part(i) + p - i);
    std::vector<Integer> h = detail::h_series_at(xs, ys, deg);
    std::vector<std::vector<Integer>> m(p, std::vector<Integer>(p));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            int k = lambda.part(i + 1) + j - i;
            m[i][j] = (k < 0) ? Integer() : h[k];
        }
    std::vector<int> cols(p);
    for (int j = 0; j < p; ++j) cols[j] = j;
    return detail::det_recursive(m, cols, 0);
}

}  // namespace quiver
