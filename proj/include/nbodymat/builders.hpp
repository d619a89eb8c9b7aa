#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nbodymat/domain.hpp"
#include "nbodymat/matrix.hpp"
#include "nbodymat/pair_space.hpp"

namespace nbodymat {

namespace detail {

inline std::vector<std::string> point_labels(int n, int skip = -1) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i)
        if (i != skip) out.push_back(std::to_string(i + 1));
    return out;
}

inline std::size_t idx(int i) { return static_cast<std::size_t>(i); }

}  // namespace detail

/// n x n squared-distance matrix D with zero diagonal.
template <typename T>
Matrix<T> edm(const DistanceVector<T>& r) {
    const int n = r.n();
    auto m = Matrix<T>::square(detail::idx(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) m(detail::idx(i), detail::idx(j)) = r.squared(i, j);
    m.set_labels(detail::point_labels(n));
    return m;
}

/// The table R of squared distances, as input for bordered() and w_matrix().
template <typename T>
EntryTable<T> squared_distance_table(const DistanceVector<T>& r) {
    return EntryTable<T>(edm(r));
}

/// C_H: h in the upper-left block, a border of ones, corner 0.
template <typename T>
Matrix<T> bordered(const EntryTable<T>& h) {
    const int n = h.n();
    auto m = Matrix<T>::square(detail::idx(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m(detail::idx(i), detail::idx(j)) = h(i, j);
        m(detail::idx(i), detail::idx(n)) = T(1);
        m(detail::idx(n), detail::idx(i)) = T(1);
    }
    auto labels = detail::point_labels(n);
    labels.push_back("*");
    m.set_labels(std::move(labels));
    return m;
}

/// (n+1) x (n+1) Cayley-Menger matrix: edm(r) bordered by ones.
template <typename T>
Matrix<T> cayley_menger(const DistanceVector<T>& r) {
    return bordered(squared_distance_table(r));
}

/// Reduced EDM M_k based at point `base` (0-based): entries
/// r_ik^2 + r_jk^2 - r_ij^2 over i, j != base, in index order.
template <typename T>
Matrix<T> reduced_edm(const DistanceVector<T>& r, int base) {
    const int n = r.n();
    if (base < 0 || base >= n)
        throw DomainError("base point " + std::to_string(base + 1) + " outside [1, " + std::to_string(n) + "]");
    auto m = Matrix<T>::square(detail::idx(n - 1));
    std::size_t a = 0;
    for (int i = 0; i < n; ++i) {
        if (i == base) continue;
        std::size_t b = 0;
        for (int j = 0; j < n; ++j) {
            if (j == base) continue;
            m(a, b) = r.squared(i, base) + r.squared(j, base) - r.squared(i, j);
            ++b;
        }
        ++a;
    }
    m.set_labels(detail::point_labels(n, base));
    return m;
}

/// The C(n,2) x C(n,2) n-body matrix B with rows and columns in PairSpace order.
///   b_{ij,ij} = 2 (alpha_i + alpha_j) r_ij^2
///   b_{ij,ik} = alpha_i (r_ij^2 + r_ik^2 - r_jk^2)
///   b_{ij,kl} = 0 for four distinct indices
template <typename T>
Matrix<T> nbody_matrix(const MassParams<T>& alpha, const DistanceVector<T>& r) {
    const int n = r.n();
    if (alpha.n() != n)
        throw DimensionError("mass parameters for " + std::to_string(alpha.n()) + " bodies but distances for " +
                             std::to_string(n));
    if (n < 2) throw DomainError("the n-body matrix needs n >= 2");
    const PairSpace space(n);
    const auto pairs = space.pairs();
    auto m = Matrix<T>::square(pairs.size());
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto& a = pairs[p];
        m(p, p) = T(2) * (alpha[a.i()] + alpha[a.j()]) * r.squared(a);
        for (std::size_t q = p + 1; q < pairs.size(); ++q) {
            const auto& b = pairs[q];
            int common = -1;
            if (b.contains(a.i())) common = a.i();
            else if (b.contains(a.j())) common = a.j();
            if (common < 0) continue;
            const int x = a.other(common);
            const int y = b.other(common);
            T v = alpha[common] * (r.squared(common, x) + r.squared(common, y) - r.squared(x, y));
            m(q, p) = v;
            m(p, q) = std::move(v);
        }
    }
    m.set_labels(space.labels());
    return m;
}

/// The matrix obtained by placing entry (i, j) of M_base at the pair labels
/// {i, base} and {j, base}, all other entries zero.
template <typename T>
Matrix<T> lift(const Matrix<T>& reduced, int base, int n) {
    if (reduced.rows() != detail::idx(n - 1) || !reduced.is_square())
        throw DimensionError("reduced matrix must be (n-1) x (n-1)");
    const PairSpace space(n);
    auto m = Matrix<T>::square(space.size());
    std::vector<int> others;
    for (int i = 0; i < n; ++i)
        if (i != base) others.push_back(i);
    for (std::size_t a = 0; a < others.size(); ++a)
        for (std::size_t b = 0; b < others.size(); ++b)
            m(space.rank(others[a], base), space.rank(others[b], base)) = reduced(a, b);
    m.set_labels(space.labels());
    return m;
}

/// w_{{i,j},{k,l}} for an arbitrary representative order of each pair.
template <typename T>
T w_entry(const EntryTable<T>& s, const EntryTable<T>& t, int i, int j, int k, int l) {
    return (t(j, k) + t(i, l) - t(i, k) - t(j, l)) * (s(j, k) + s(i, l) - s(i, k) - s(j, l));
}

/// W_{S,T}: pair-indexed matrix built from two arbitrary n x n tables.
template <typename T>
Matrix<T> w_matrix(const EntryTable<T>& s, const EntryTable<T>& t) {
    if (s.n() != t.n())
        throw DimensionError("W needs tables of equal size, got " + std::to_string(s.n()) + " and " +
                             std::to_string(t.n()));
    const int n = s.n();
    if (n < 2) throw DomainError("W needs n >= 2");
    const PairSpace space(n);
    const auto pairs = space.pairs();
    auto m = Matrix<T>::square(pairs.size());
    for (std::size_t p = 0; p < pairs.size(); ++p)
        for (std::size_t q = 0; q < pairs.size(); ++q)
            m(p, q) = w_entry(s, t, pairs[p].i(), pairs[p].j(), pairs[q].i(), pairs[q].j());
    m.set_labels(space.labels());
    return m;
}

}  // namespace nbodymat
