#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

namespace dirac {

template <class T>
using Matrix = std::vector<std::vector<T>>;

// Gauss-Jordan inverse; throws std::domain_error on a singular matrix.
template <class T>
Matrix<T> inverse(Matrix<T> a) {
    const std::size_t n = a.size();
    Matrix<T> inv(n, std::vector<T>(n, T(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = T(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == T(0)) ++p;
        if (p == n) throw std::domain_error("singular matrix");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        T piv = a[c][c];
        for (std::size_t k = 0; k < n; ++k) {
            a[c][k] /= piv;
            inv[c][k] /= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == T(0)) continue;
            T f = a[r][c];
            for (std::size_t k = 0; k < n; ++k) {
                a[r][k] -= f * a[c][k];
                inv[r][k] -= f * inv[c][k];
            }
        }
    }
    return inv;
}

}  // namespace dirac
