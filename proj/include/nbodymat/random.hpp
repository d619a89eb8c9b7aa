#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "nbodymat/domain.hpp"
#include "nbodymat/rational.hpp"

namespace nbodymat {

/// Seeded generator whose outputs depend only on the seed (no
/// implementation-defined std distributions), so sampled suites are
/// reproducible across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(eng_() % span);
    }

    double uniform(double lo, double hi) {
        const double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    /// p / q with |p| <= numerator_range and 1 <= q <= max_den.
    Rational rational(std::int64_t numerator_range, std::int64_t max_den = 6) {
        Rational q(uniform_int(-numerator_range, numerator_range), uniform_int(1, max_den));
        q.canonicalize();
        return q;
    }

    Rational positive_rational(std::int64_t numerator_range, std::int64_t max_den = 6) {
        Rational q(uniform_int(1, numerator_range), uniform_int(1, max_den));
        q.canonicalize();
        return q;
    }

private:
    std::mt19937_64 eng_;
};

inline PointConfiguration<Rational> random_rational_config(Rng& rng, int n, int d, std::int64_t range = 12) {
    std::vector<std::vector<Rational>> pts(static_cast<std::size_t>(n));
    for (auto& p : pts)
        for (int c = 0; c < d; ++c) p.push_back(rng.rational(range));
    return PointConfiguration<Rational>(std::move(pts));
}

inline PointConfiguration<double> random_double_config(Rng& rng, int n, int d) {
    std::vector<std::vector<double>> pts(static_cast<std::size_t>(n));
    for (auto& p : pts)
        for (int c = 0; c < d; ++c) p.push_back(rng.uniform(-1.0, 1.0));
    return PointConfiguration<double>(std::move(pts));
}

/// n points in R^(n-1) with exact affine rank n-1 (resampled until nonsingular).
inline PointConfiguration<Rational> random_nonsingular_config(Rng& rng, int n) {
    while (true) {
        auto cfg = random_rational_config(rng, n, std::max(n - 1, 1));
        if (!is_singular(cfg)) return cfg;
    }
}

/// n points in R^(n-1) lying on an affine subspace of dimension `dim` < n-1:
/// p_i = base + sum_k c_ik v_k with `dim` random directions.
template <typename T>
PointConfiguration<T> random_singular_config(Rng& rng, int n, int dim) {
    const int d = std::max(n - 1, 1);
    auto draw = [&]() -> T {
        if constexpr (std::is_same_v<T, Rational>) return rng.rational(12);
        else return rng.uniform(-1.0, 1.0);
    };
    std::vector<T> base;
    for (int c = 0; c < d; ++c) base.push_back(draw());
    std::vector<std::vector<T>> dirs(static_cast<std::size_t>(dim));
    for (auto& v : dirs)
        for (int c = 0; c < d; ++c) v.push_back(draw());
    std::vector<std::vector<T>> pts;
    for (int i = 0; i < n; ++i) {
        std::vector<T> p = base;
        for (const auto& v : dirs) {
            const T coef = draw();
            for (int c = 0; c < d; ++c) p[static_cast<std::size_t>(c)] += coef * v[static_cast<std::size_t>(c)];
        }
        pts.push_back(std::move(p));
    }
    return PointConfiguration<T>(std::move(pts));
}

inline MassParams<Rational> random_positive_masses(Rng& rng, int n) {
    std::vector<Rational> a;
    for (int i = 0; i < n; ++i) a.push_back(rng.positive_rational(9));
    return MassParams<Rational>(std::move(a));
}

/// Random rational vector with coordinate sum zero.
inline std::vector<Rational> random_hyperplane_vector(Rng& rng, int n) {
    std::vector<Rational> x;
    Rational sum(0);
    for (int i = 0; i + 1 < n; ++i) {
        x.push_back(rng.rational(9));
        sum += x.back();
    }
    x.push_back(-sum);
    return x;
}

inline std::vector<Rational> random_rational_vector(Rng& rng, int n) {
    std::vector<Rational> x;
    for (int i = 0; i < n; ++i) x.push_back(rng.rational(9));
    return x;
}

inline EntryTable<Rational> random_entry_table(Rng& rng, int n) {
    EntryTable<Rational> t(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t(i, j) = rng.rational(9);
    return t;
}

}  // namespace nbodymat
