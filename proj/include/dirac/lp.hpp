#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace dirac {

// Phase-one simplex for  A x = b,  0 <= x <= upper  (one common upper bound),
// using Bland's rule on a dense tableau.  Returns a feasible point or nullopt.
// T must be an exact field type (dirac::Rational or a multiprecision rational).
template <class T>
std::optional<std::vector<T>> box_feasible(const std::vector<std::vector<std::int64_t>>& a,
                                           const std::vector<std::int64_t>& b, std::int64_t upper) {
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    const std::size_t cols = n + m;  // structural then artificial
    const T zero(0), ub(upper);

    std::vector<std::vector<T>> tab(m, std::vector<T>(cols, zero));
    std::vector<T> rhs(m, zero), cost(cols, zero);
    std::vector<std::size_t> basis(m);
    std::vector<char> at_upper(cols, 0), is_basic(cols, 0);
    T obj = zero;

    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j) tab[i][j] = T(flip ? -a[i][j] : a[i][j]);
        tab[i][n + i] = T(1);
        rhs[i] = T(flip ? -b[i] : b[i]);
        basis[i] = n + i;
        is_basic[n + i] = 1;
        obj += rhs[i];
        for (std::size_t j = 0; j < n; ++j) cost[j] -= tab[i][j];
    }

    for (;;) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < n && enter == cols; ++j) {
            if (is_basic[j]) continue;
            if ((!at_upper[j] && cost[j] < zero) || (at_upper[j] && cost[j] > zero)) enter = j;
        }
        if (enter == cols) break;
        const bool increase = !at_upper[enter];

        // Ratio test.  A bound flip of the entering variable wins ties.
        T best = ub;
        std::size_t leave_row = m;
        bool leave_to_upper = false;
        for (std::size_t i = 0; i < m; ++i) {
            T g = increase ? tab[i][enter] : -tab[i][enter];
            if (g == zero) continue;
            T limit;
            bool to_upper;
            if (g > zero) {
                limit = rhs[i] / g;
                to_upper = false;
            } else {
                if (basis[i] >= n) continue;  // artificials are unbounded above
                limit = (ub - rhs[i]) / (-g);
                to_upper = true;
            }
            if (limit < best || (limit == best && leave_row != m && basis[i] < basis[leave_row])) {
                best = limit;
                leave_row = i;
                leave_to_upper = to_upper;
            }
        }

        const T step = increase ? best : -best;
        for (std::size_t i = 0; i < m; ++i)
            if (tab[i][enter] != zero) rhs[i] -= tab[i][enter] * step;
        obj += cost[enter] * step;

        if (leave_row == m) {
            at_upper[enter] = !at_upper[enter];
            continue;
        }

        const std::size_t r = leave_row;
        const std::size_t out = basis[r];
        is_basic[out] = 0;
        at_upper[out] = leave_to_upper;
        is_basic[enter] = 1;
        at_upper[enter] = 0;
        basis[r] = enter;
        rhs[r] = (increase ? zero : ub) + step;

        const T piv = tab[r][enter];
        for (std::size_t j = 0; j < cols; ++j)
            if (tab[r][j] != zero) tab[r][j] /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || tab[i][enter] == zero) continue;
            const T f = tab[i][enter];
            for (std::size_t j = 0; j < cols; ++j)
                if (tab[r][j] != zero) tab[i][j] -= f * tab[r][j];
        }
        if (cost[enter] != zero) {
            const T f = cost[enter];
            for (std::size_t j = 0; j < cols; ++j)
                if (tab[r][j] != zero) cost[j] -= f * tab[r][j];
        }
    }

    if (obj != zero) return std::nullopt;
    std::vector<T> x(n, zero);
    for (std::size_t j = 0; j < n; ++j)
        if (at_upper[j]) x[j] = ub;
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) x[basis[i]] = rhs[i];
        else if (rhs[i] != zero) return std::nullopt;
    return x;
}

}  // namespace dirac
