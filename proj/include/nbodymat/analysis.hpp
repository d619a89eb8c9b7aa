#pragma once

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "nbodymat/builders.hpp"
#include "nbodymat/determinant.hpp"
#include "nbodymat/domain.hpp"
#include "nbodymat/errors.hpp"
#include "nbodymat/linalg.hpp"

namespace nbodymat {

inline constexpr double kDefaultPsdTol = 1e-10;

enum class Definiteness { positive_definite, positive_semidefinite, indefinite };

inline const char* to_string(Definiteness d) {
    switch (d) {
        case Definiteness::positive_definite: return "positive-definite";
        case Definiteness::positive_semidefinite: return "positive-semidefinite";
        case Definiteness::indefinite: return "indefinite";
    }
    return "?";
}

struct DefinitenessReport {
    Definiteness verdict = Definiteness::indefinite;
    /// Smallest eigenvalue of the (double-converted) matrix.
    double min_eigenvalue = 0.0;
    std::size_t rank = 0;
    /// Absolute eigenvalue cut used for the verdict; 0 for exact verdicts.
    double tolerance = 0.0;
    bool exact = false;
};

namespace detail {

inline Eigen::VectorXd symmetric_eigenvalues(const Matrix<double>& m) {
    if (m.rows() == 0) return Eigen::VectorXd();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(m), Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

inline void require_symmetric(const Matrix<double>& m, double tol) {
    if (!m.is_square()) throw DimensionError("definiteness needs a square matrix");
    double scale = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) scale = std::max(scale, std::abs(m(i, j)));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (std::abs(m(i, j) - m(j, i)) > tol * std::max(scale, 1.0))
                throw DomainError("matrix is not symmetric");
}

}  // namespace detail

/// Eigenvalue-based verdict. Eigenvalues with |lambda| <= tol * max(max|lambda|, 1)
/// count as zero.
inline DefinitenessReport definiteness(const Matrix<double>& m, double tol = kDefaultPsdTol) {
    detail::require_symmetric(m, tol);
    DefinitenessReport rep;
    const Eigen::VectorXd eig = detail::symmetric_eigenvalues(m);
    double maxabs = 0.0;
    for (Eigen::Index i = 0; i < eig.size(); ++i) maxabs = std::max(maxabs, std::abs(eig(i)));
    rep.tolerance = tol * std::max(maxabs, 1.0);
    rep.min_eigenvalue = eig.size() ? eig.minCoeff() : 0.0;
    bool negative = false;
    bool zero = false;
    for (Eigen::Index i = 0; i < eig.size(); ++i) {
        if (eig(i) < -rep.tolerance) negative = true;
        else if (eig(i) <= rep.tolerance) zero = true;
        if (std::abs(eig(i)) > rep.tolerance) ++rep.rank;
    }
    rep.verdict = negative ? Definiteness::indefinite
                  : zero   ? Definiteness::positive_semidefinite
                           : Definiteness::positive_definite;
    return rep;
}

/// Exact verdict over Q by symmetric elimination with diagonal pivots: a
/// negative diagonal, or an all-zero diagonal over a nonzero block, certifies
/// indefiniteness; otherwise positive pivots are eliminated one at a time.
inline DefinitenessReport definiteness(const Matrix<Rational>& m) {
    if (!m.is_square()) throw DimensionError("definiteness needs a square matrix");
    if (!m.is_symmetric()) throw DomainError("matrix is not symmetric");
    DefinitenessReport rep;
    rep.exact = true;
    const Eigen::VectorXd eig = detail::symmetric_eigenvalues(to_double_matrix(m));
    rep.min_eigenvalue = eig.size() ? eig.minCoeff() : 0.0;

    Matrix<Rational> a = m;
    std::vector<std::size_t> live(m.rows());
    std::iota(live.begin(), live.end(), std::size_t{0});
    std::size_t pivots = 0;
    bool indefinite = false;
    while (!live.empty()) {
        std::size_t pick = live.size();
        for (std::size_t t = 0; t < live.size(); ++t) {
            const int s = sgn(a(live[t], live[t]));
            if (s < 0) {
                indefinite = true;
                break;
            }
            if (s > 0 && pick == live.size()) pick = t;
        }
        if (indefinite) break;
        if (pick == live.size()) {
            for (auto i : live)
                for (auto j : live)
                    if (sgn(a(i, j)) != 0) indefinite = true;
            break;
        }
        const std::size_t p = live[pick];
        live.erase(live.begin() + static_cast<std::ptrdiff_t>(pick));
        const Rational piv = a(p, p);
        for (auto i : live) {
            if (sgn(a(i, p)) == 0) continue;
            const Rational f = a(i, p) / piv;
            for (auto j : live) a(i, j) -= f * a(p, j);
        }
        ++pivots;
    }
    if (indefinite) {
        rep.verdict = Definiteness::indefinite;
        rep.rank = exact_rank(m);
    } else {
        rep.rank = pivots;
        rep.verdict = pivots == m.rows() ? Definiteness::positive_definite : Definiteness::positive_semidefinite;
    }
    return rep;
}

enum class ConeRegion { interior, boundary, outside };

inline const char* to_string(ConeRegion r) {
    switch (r) {
        case ConeRegion::interior: return "interior";
        case ConeRegion::boundary: return "boundary";
        case ConeRegion::outside: return "outside";
    }
    return "?";
}

struct ConeReport {
    ConeRegion region = ConeRegion::outside;
    int base = 0;
    DefinitenessReport definiteness;
};

/// Locates r relative to the Euclidean distance cone via the reduced EDM at
/// `base` (default: the last point).
template <typename T>
ConeReport cone_membership(const DistanceVector<T>& r, double tol = kDefaultPsdTol, int base = -1) {
    if (base < 0) base = r.n() - 1;
    ConeReport rep;
    rep.base = base;
    const Matrix<T> m = reduced_edm(r, base);
    if constexpr (ScalarTraits<T>::is_exact) {
        (void)tol;
        rep.definiteness = definiteness(m);
    } else {
        rep.definiteness = definiteness(m, tol);
    }
    switch (rep.definiteness.verdict) {
        case Definiteness::positive_definite: rep.region = ConeRegion::interior; break;
        case Definiteness::positive_semidefinite: rep.region = ConeRegion::boundary; break;
        case Definiteness::indefinite: rep.region = ConeRegion::outside; break;
    }
    return rep;
}

struct EmbeddingResult {
    PointConfiguration<double> points;
    std::size_t d = 0;
    /// Largest relative distance error of the reconstruction.
    double residual = 0.0;
};

/// Relative reproduction error of `r` by `cfg`: |r' - r| / r per pair, or
/// |r'| / max(r_max, 1) for pairs at distance zero.
template <typename T>
double distance_residual(const DistanceVector<T>& r, const PointConfiguration<double>& cfg) {
    const auto got = distances(cfg);
    double rmax = 0.0;
    for (int i = 0; i < r.n(); ++i)
        for (int j = i + 1; j < r.n(); ++j) rmax = std::max(rmax, r.distance(i, j));
    double worst = 0.0;
    for (int i = 0; i < r.n(); ++i)
        for (int j = i + 1; j < r.n(); ++j) {
            const double want = r.distance(i, j);
            const double err = std::abs(got.distance(i, j) - want);
            worst = std::max(worst, want > 0.0 ? err / want : err / std::max(rmax, 1.0));
        }
    return worst;
}

/// Classical scaling: spectral factorization M = Q D Q^T of the reduced EDM
/// at the last point, A = sqrt(D / 2) Q^T with zero rows dropped. Point i is
/// column i of A; the last point sits at the origin. Axes follow
/// descending eigenvalues.
template <typename T>
EmbeddingResult embed(const DistanceVector<T>& r, double tol = kDefaultPsdTol) {
    const int n = r.n();
    EmbeddingResult out;
    if (n == 1) {
        out.points = PointConfiguration<double>({std::vector<double>{}});
        return out;
    }
    Matrix<double> m = reduced_edm(r, n - 1).map([](const T& x) { return ScalarTraits<T>::to_double(x); });
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(m));
    const Eigen::VectorXd& lambda = es.eigenvalues();
    const Eigen::MatrixXd& q = es.eigenvectors();
    const double maxabs = lambda.cwiseAbs().maxCoeff();
    const double cut = tol * std::max(maxabs, 1.0);
    if (lambda.minCoeff() < -cut)
        throw NotEmbeddable("distances lie outside the Euclidean distance cone (eigenvalue " +
                                std::to_string(lambda.minCoeff()) + ")",
                            lambda.minCoeff());

    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = lambda.size() - 1; i >= 0; --i)
        if (lambda(i) > cut) keep.push_back(i);
    out.d = keep.size();

    std::vector<std::vector<double>> pts(static_cast<std::size_t>(n), std::vector<double>(out.d, 0.0));
    for (std::size_t axis = 0; axis < keep.size(); ++axis) {
        const Eigen::Index e = keep[axis];
        const double s = std::sqrt(lambda(e) / 2.0);
        for (int i = 0; i + 1 < n; ++i) pts[static_cast<std::size_t>(i)][axis] = s * q(i, e);
    }
    out.points = PointConfiguration<double>(std::move(pts));
    out.residual = distance_residual(r, out.points);
    return out;
}

/// (-1)^n 2^(n-1) ((n-1)!)^2, the factor relating the Cayley-Menger
/// determinant to the squared simplex volume.
template <typename T>
T menger_constant(int n) {
    T c(1);
    for (int i = 0; i < n - 1; ++i) c *= T(2);
    for (int i = 2; i <= n - 1; ++i) c *= T(i * i);
    return n % 2 == 0 ? c : T(-c);
}

/// Squared volume of the simplex spanned by the n points, from distances alone.
template <typename T>
T menger_volume_sq(const DistanceVector<T>& r, double tol = kDefaultPsdTol) {
    if (cone_membership(r, tol).region == ConeRegion::outside)
        throw NotEmbeddable("distances lie outside the Euclidean distance cone",
                            cone_membership(r, tol).definiteness.min_eigenvalue);
    const T delta = determinant(cayley_menger(r));
    return T(delta / menger_constant<T>(r.n()));
}

}  // namespace nbodymat
