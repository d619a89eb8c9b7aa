#pragma once

#include <Eigen/LU>

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nbodymat/errors.hpp"
#include "nbodymat/linalg.hpp"
#include "nbodymat/matrix.hpp"
#include "nbodymat/scalar.hpp"

namespace nbodymat {

namespace detail {

template <typename T>
void require_square(const Matrix<T>& m) {
    if (!m.is_square())
        throw DimensionError("determinant of a non-square " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + " matrix");
}

/// Size proxy used to pick pivots that keep fraction-free growth small.
template <typename T>
std::size_t pivot_cost(const T& x) {
    if constexpr (requires { x.size(); }) return x.size();
    else return 1;
}

}  // namespace detail

/// Fraction-free (Bareiss) elimination over an integral domain. Every
/// division by the previous pivot is exact; zero pivots are handled by
/// row exchange.
template <typename T>
T bareiss_determinant(Matrix<T> a) {
    detail::require_square(a);
    const std::size_t n = a.rows();
    if (n == 0) return T(1);
    using Traits = ScalarTraits<T>;
    bool negate = false;
    T prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t best = n;
        for (std::size_t i = k; i < n; ++i) {
            if (Traits::is_zero(a(i, k))) continue;
            if (best == n || detail::pivot_cost(a(i, k)) < detail::pivot_cost(a(best, k))) best = i;
        }
        if (best == n) return T(0);
        if (best != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(best, j));
            negate = !negate;
        }
        const T pivot = a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const bool row_zero = Traits::is_zero(a(i, k));
            for (std::size_t j = k + 1; j < n; ++j) {
                T v = pivot * a(i, j);
                if (!row_zero) v -= a(i, k) * a(k, j);
                a(i, j) = k == 0 ? std::move(v) : Traits::exact_div(v, prev);
            }
            a(i, k) = T(0);
        }
        prev = pivot;
    }
    T det = a(n - 1, n - 1);
    return negate ? T(-det) : det;
}

/// Laplace expansion along the first row. Exponential; intended for small
/// matrices and as an independent cross-check.
template <typename T>
T cofactor_determinant(const Matrix<T>& a) {
    detail::require_square(a);
    const std::size_t n = a.rows();
    if (n == 0) return T(1);
    if (n == 1) return a(0, 0);
    if (n > 9) throw ResourceCapExceeded("cofactor expansion limited to 9x9");
    T det(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (ScalarTraits<T>::is_zero(a(0, j))) continue;
        Matrix<T> minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t c = 0;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) minor(i - 1, c++) = a(i, k);
        }
        T term = a(0, j) * cofactor_determinant(minor);
        if (j % 2 == 0) det += term;
        else det -= term;
    }
    return det;
}

/// Division-free Laplace expansion with memoized minors: row by row, the
/// determinant of every (rows 0..k) x (column subset) minor is built from
/// the minors of the previous level. Cost grows like 2^n times the minor
/// size, and each step only multiplies a minor by a single matrix entry,
/// which is cheap when entries have few terms.
template <typename T>
T minor_expansion_determinant(const Matrix<T>& a) {
    detail::require_square(a);
    const std::size_t n = a.rows();
    if (n == 0) return T(1);
    if (n > 24) throw ResourceCapExceeded("minor expansion limited to 24x24");
    using Mask = std::uint32_t;
    std::unordered_map<Mask, T> level;
    level.emplace(Mask{0}, T(1));
    for (std::size_t row = 0; row < n; ++row) {
        std::unordered_map<Mask, T> next;
        for (const auto& [mask, minor] : level) {
            if (ScalarTraits<T>::is_zero(minor)) continue;
            for (std::size_t col = 0; col < n; ++col) {
                const Mask bit = Mask{1} << col;
                if (mask & bit) continue;
                if (ScalarTraits<T>::is_zero(a(row, col))) continue;
                // Position of col within mask|bit; the new row is the last row.
                const int pos = std::popcount(mask & (bit - 1));
                const int above = std::popcount(mask) - pos;
                T term = a(row, col) * minor;
                auto [it, inserted] = next.try_emplace(mask | bit);
                if (above % 2 == 0) it->second += term;
                else it->second -= term;
            }
        }
        level = std::move(next);
    }
    auto it = level.find((n == 32 ? ~Mask{0} : (Mask{1} << n) - 1));
    return it == level.end() ? T(0) : it->second;
}

/// Floating determinant by partial-pivot LU.
inline double determinant(const Matrix<double>& m) {
    detail::require_square(m);
    if (m.rows() == 0) return 1.0;
    return to_eigen(m).partialPivLu().determinant();
}

/// Exact determinant by fraction-free elimination.
template <typename T>
    requires ScalarTraits<T>::is_exact
T determinant(const Matrix<T>& m) {
    return bareiss_determinant(m);
}

}  // namespace nbodymat
