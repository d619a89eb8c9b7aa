#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "nbodymat/errors.hpp"
#include "nbodymat/linalg.hpp"
#include "nbodymat/pair_space.hpp"
#include "nbodymat/scalar.hpp"

namespace nbodymat {

/// Interpoint distances r_ij of n points, stored as squares r_ij^2 in
/// PairSpace order. Squares are kept because they stay rational for
/// rational points; r_ii = 0 is implicit.
template <typename T>
class DistanceVector {
public:
    DistanceVector() : space_(1) {}

    static DistanceVector from_squared(int n, std::vector<T> squared) {
        DistanceVector r(n);
        if (squared.size() != r.space_.size())
            throw DimensionError("expected " + std::to_string(r.space_.size()) + " squared distances for n = " +
                                 std::to_string(n) + ", got " + std::to_string(squared.size()));
        if constexpr (ScalarTraits<T>::is_ordered) {
            for (const auto& s : squared)
                if (s < T(0)) throw DomainError("squared distance must be nonnegative");
        }
        r.sq_ = std::move(squared);
        return r;
    }

    /// Entries in PairSpace order {1,2}, {1,3}, ..., {n-1,n}.
    static DistanceVector from_distances(int n, const std::vector<T>& distances) {
        if constexpr (ScalarTraits<T>::is_ordered) {
            for (const auto& d : distances)
                if (d < T(0)) throw DomainError("distance must be nonnegative");
        }
        std::vector<T> sq;
        sq.reserve(distances.size());
        for (const auto& d : distances) sq.push_back(d * d);
        return from_squared(n, std::move(sq));
    }

    int n() const { return space_.n(); }
    const PairSpace& pair_space() const { return space_; }
    const std::vector<T>& squared_entries() const { return sq_; }

    const T& squared(int i, int j) const {
        if (i == j) return zero_;
        return sq_[space_.rank(i, j)];
    }
    const T& squared(const PairIndex& p) const { return sq_[space_.rank(p)]; }

    /// r_ij as a double (the square root of an exact square is generally irrational).
    double distance(int i, int j) const { return std::sqrt(ScalarTraits<T>::to_double(squared(i, j))); }

    friend bool operator==(const DistanceVector& a, const DistanceVector& b) {
        return a.n() == b.n() && a.sq_ == b.sq_;
    }

private:
    explicit DistanceVector(int n) : space_(n) {}

    PairSpace space_;
    std::vector<T> sq_;
    T zero_ = T(0);
};

/// n points in d-dimensional Euclidean space. Coincident points are allowed.
template <typename T>
class PointConfiguration {
public:
    PointConfiguration() = default;
    explicit PointConfiguration(std::vector<std::vector<T>> points) : points_(std::move(points)) {
        if (points_.empty()) throw DomainError("a point configuration needs at least one point");
        d_ = points_.front().size();
        for (const auto& p : points_)
            if (p.size() != d_) throw DimensionError("all points must share one ambient dimension");
    }

    int n() const { return static_cast<int>(points_.size()); }
    std::size_t d() const { return d_; }
    const std::vector<T>& point(int i) const { return points_[static_cast<std::size_t>(i)]; }
    const std::vector<std::vector<T>>& points() const { return points_; }

    /// d x (n-1) matrix with columns p_i - p_base, i != base, in index order.
    Matrix<T> difference_matrix(int base) const {
        Matrix<T> a(d_, static_cast<std::size_t>(n() - 1));
        std::size_t col = 0;
        for (int i = 0; i < n(); ++i) {
            if (i == base) continue;
            for (std::size_t c = 0; c < d_; ++c) a(c, col) = point(i)[c] - point(base)[c];
            ++col;
        }
        return a;
    }

private:
    std::vector<std::vector<T>> points_;
    std::size_t d_ = 0;
};

/// Inverse masses alpha_i = 1 / m_i.
template <typename T>
class MassParams {
public:
    MassParams() = default;
    explicit MassParams(std::vector<T> alpha) : alpha_(std::move(alpha)) {}

    static MassParams from_masses(const std::vector<T>& masses) {
        std::vector<T> alpha;
        alpha.reserve(masses.size());
        for (const auto& m : masses) {
            if (ScalarTraits<T>::is_zero(m)) throw DomainError("mass must be nonzero");
            alpha.push_back(T(1) / m);
        }
        return MassParams(std::move(alpha));
    }

    int n() const { return static_cast<int>(alpha_.size()); }
    const T& operator[](int i) const { return alpha_[static_cast<std::size_t>(i)]; }
    const std::vector<T>& values() const { return alpha_; }

private:
    std::vector<T> alpha_;
};

template <typename T>
DistanceVector<T> distances(const PointConfiguration<T>& cfg) {
    const PairSpace space(cfg.n());
    std::vector<T> sq;
    sq.reserve(space.size());
    for (const auto& p : space.pairs()) {
        T acc(0);
        const auto& a = cfg.point(p.i());
        const auto& b = cfg.point(p.j());
        for (std::size_t c = 0; c < cfg.d(); ++c) {
            T diff = a[c] - b[c];
            acc += diff * diff;
        }
        sq.push_back(acc);
    }
    return DistanceVector<T>::from_squared(cfg.n(), std::move(sq));
}

inline constexpr double kDefaultSingularTol = 1e-10;

/// Dimension of the affine hull of the points. Exact for rationals; for
/// doubles singular values below tol * (largest) count as zero.
template <typename T>
std::size_t affine_rank(const PointConfiguration<T>& cfg, double tol = kDefaultSingularTol) {
    if (cfg.n() == 1) return 0;
    const Matrix<T> a = cfg.difference_matrix(cfg.n() - 1);
    if constexpr (ScalarTraits<T>::is_exact) {
        (void)tol;
        return exact_rank(a);
    } else {
        return numeric_rank(a, tol);
    }
}

/// True iff the points lie on a common affine subspace of dimension <= n-2.
template <typename T>
bool is_singular(const PointConfiguration<T>& cfg, double tol = kDefaultSingularTol) {
    if (cfg.n() == 1) return false;
    return static_cast<int>(affine_rank(cfg, tol)) <= cfg.n() - 2;
}

/// e_k(alpha_1, ..., alpha_n).
template <typename T>
T elementary_symmetric(int k, const std::vector<T>& alpha) {
    const int n = static_cast<int>(alpha.size());
    if (k < 0 || k > n)
        throw DomainError("elementary symmetric degree " + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
    std::vector<T> e(static_cast<std::size_t>(k) + 1, T(0));
    e[0] = T(1);
    for (int i = 0; i < n; ++i)
        for (int j = std::min(i + 1, k); j >= 1; --j) e[static_cast<std::size_t>(j)] += alpha[static_cast<std::size_t>(i)] * e[static_cast<std::size_t>(j - 1)];
    return e[static_cast<std::size_t>(k)];
}

template <typename T>
T elementary_symmetric(int k, const MassParams<T>& alpha) {
    return elementary_symmetric(k, alpha.values());
}

}  // namespace nbodymat
