#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nbodymat/builders.hpp"
#include "nbodymat/domain.hpp"
#include "nbodymat/errors.hpp"

namespace nbodymat {

namespace detail {

template <typename T>
void require_length(const std::vector<T>& x, int n, const char* what) {
    if (static_cast<int>(x.size()) != n)
        throw DimensionError(std::string(what) + " has length " + std::to_string(x.size()) + ", expected " +
                             std::to_string(n));
}

}  // namespace detail

/// x^T S y for an arbitrary table S.
template <typename T>
T bilinear(const EntryTable<T>& s, const std::vector<T>& x, const std::vector<T>& y) {
    detail::require_length(x, s.n(), "x");
    detail::require_length(y, s.n(), "y");
    T acc(0);
    for (int i = 0; i < s.n(); ++i)
        for (int j = 0; j < s.n(); ++j) acc += x[static_cast<std::size_t>(i)] * s(i, j) * y[static_cast<std::size_t>(j)];
    return acc;
}

/// q(x) = x^T D x with D the squared-distance matrix.
template <typename T>
T quadratic_form_q(const DistanceVector<T>& r, const std::vector<T>& x) {
    return bilinear(squared_distance_table(r), x, x);
}

/// q_k(x) = xk^T M_k xk where xk is x with entry `base` removed.
template <typename T>
T quadratic_form_qk(const DistanceVector<T>& r, int base, const std::vector<T>& x) {
    detail::require_length(x, r.n(), "x");
    const Matrix<T> m = reduced_edm(r, base);
    std::vector<T> xk;
    for (int i = 0; i < r.n(); ++i)
        if (i != base) xk.push_back(x[static_cast<std::size_t>(i)]);
    T acc(0);
    for (std::size_t i = 0; i < xk.size(); ++i)
        for (std::size_t j = 0; j < xk.size(); ++j) acc += xk[i] * m(i, j) * xk[j];
    return acc;
}

/// Q_W(x, y) = sum over pairs {i,j}, {k,l} of w_{ij,kl} x_i x_j y_k y_l.
template <typename T>
T biquadratic_qw(const EntryTable<T>& s, const EntryTable<T>& t, const std::vector<T>& x, const std::vector<T>& y) {
    if (s.n() != t.n()) throw DimensionError("S and T differ in size");
    detail::require_length(x, s.n(), "x");
    detail::require_length(y, s.n(), "y");
    const auto pairs = PairSpace(s.n()).pairs();
    T acc(0);
    for (const auto& p : pairs) {
        const T xx = x[static_cast<std::size_t>(p.i())] * x[static_cast<std::size_t>(p.j())];
        if (ScalarTraits<T>::is_zero(xx)) continue;
        for (const auto& q : pairs)
            acc += w_entry(s, t, p.i(), p.j(), q.i(), q.j()) * xx * y[static_cast<std::size_t>(q.i())] *
                   y[static_cast<std::size_t>(q.j())];
    }
    return acc;
}

/// Q_B(x) = sum over ordered pairs of pairs of b_{ij,kl} x_i x_j x_k x_l.
template <typename T>
T quartic_qb(const MassParams<T>& alpha, const DistanceVector<T>& r, const std::vector<T>& x) {
    detail::require_length(x, r.n(), "x");
    const Matrix<T> b = nbody_matrix(alpha, r);
    const auto pairs = PairSpace(r.n()).pairs();
    std::vector<T> z;
    z.reserve(pairs.size());
    for (const auto& p : pairs) z.push_back(x[static_cast<std::size_t>(p.i())] * x[static_cast<std::size_t>(p.j())]);
    T acc(0);
    for (std::size_t p = 0; p < pairs.size(); ++p)
        for (std::size_t q = 0; q < pairs.size(); ++q) acc += b(p, q) * z[p] * z[q];
    return acc;
}

/// a(x) = sum alpha_i x_i^2.
template <typename T>
T mass_form(const MassParams<T>& alpha, const std::vector<T>& x) {
    detail::require_length(x, alpha.n(), "x");
    T acc(0);
    for (int i = 0; i < alpha.n(); ++i) acc += alpha[i] * x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
    return acc;
}

/// p(x) = |P x|^2 where P has the points as columns.
template <typename T>
T configuration_form(const PointConfiguration<T>& cfg, const std::vector<T>& x) {
    detail::require_length(x, cfg.n(), "x");
    T acc(0);
    for (std::size_t c = 0; c < cfg.d(); ++c) {
        T coord(0);
        for (int i = 0; i < cfg.n(); ++i) coord += cfg.point(i)[c] * x[static_cast<std::size_t>(i)];
        acc += coord * coord;
    }
    return acc;
}

/// z^T B z with z indexed by pairs.
template <typename T>
T pair_quadratic(const Matrix<T>& b, const std::vector<T>& z) {
    if (b.rows() != z.size()) throw DimensionError("pair vector length mismatch");
    T acc(0);
    for (std::size_t p = 0; p < z.size(); ++p)
        for (std::size_t q = 0; q < z.size(); ++q) acc += z[p] * b(p, q) * z[q];
    return acc;
}

/// z_k: entries z_{ {i,k} } for i != k, in index order.
template <typename T>
std::vector<T> restrict_to_base(const std::vector<T>& z, int base, int n) {
    const PairSpace space(n);
    if (z.size() != space.size()) throw DimensionError("pair vector length mismatch");
    std::vector<T> out;
    for (int i = 0; i < n; ++i)
        if (i != base) out.push_back(z[space.rank(i, base)]);
    return out;
}

}  // namespace nbodymat
