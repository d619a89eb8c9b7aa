#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nbodymat/analysis.hpp"
#include "nbodymat/builders.hpp"
#include "nbodymat/forms.hpp"
#include "nbodymat/random.hpp"
#include "nbodymat/symbolic.hpp"

namespace nbodymat {

struct SuiteOptions {
    int n = 0;  // 0: cycle through the suite's default sizes
    std::uint64_t seed = 1;
    int samples = 100;
    double tol = kDefaultPsdTol;
};

struct SuiteReport {
    std::string name;
    int samples = 0;
    int failures = 0;
    std::string first_failure;
    bool passed() const { return failures == 0 && samples > 0; }
};

/// prod_i |row_i|, an upper bound for |det m|.
inline double hadamard_scale(const Matrix<double>& m) {
    double s = 1.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) row += m(i, j) * m(i, j);
        s *= std::sqrt(row);
    }
    return s;
}

namespace detail {

class SuiteRun {
public:
    SuiteRun(std::string name, const SuiteOptions& opt, int lo, int hi) : opt_(opt), lo_(lo), hi_(hi) {
        rep_.name = std::move(name);
        if (opt.n != 0 && (opt.n < lo || opt.n > hi))
            throw DomainError("suite " + rep_.name + " supports n in " + std::to_string(lo) + ".." + std::to_string(hi));
    }

    int size_for(int sample) const { return opt_.n != 0 ? opt_.n : lo_ + sample % (hi_ - lo_ + 1); }

    void check(bool ok, int n, const std::string& what) {
        if (ok) return;
        if (rep_.failures++ == 0) rep_.first_failure = "n = " + std::to_string(n) + ": " + what;
    }

    SuiteReport run(const std::function<void(int, Rng&)>& body) {
        Rng rng(opt_.seed);
        for (int s = 0; s < opt_.samples; ++s) {
            body(size_for(s), rng);
            ++rep_.samples;
        }
        return rep_;
    }

private:
    SuiteOptions opt_;
    int lo_;
    int hi_;
    SuiteReport rep_;
};

inline int parity_sign(int n) { return n % 2 == 0 ? 1 : -1; }

}  // namespace detail

/// Positive masses and a nonsingular configuration give a positive-definite
/// n-body matrix and Delta > 0, e_{n-1} > 0, (-1)^n delta > 0, (-1)^n sigma > 0.
inline SuiteReport verify_signs(const SuiteOptions& opt) {
    detail::SuiteRun run("signs", opt, 2, 6);
    return run.run([&](int n, Rng& rng) {
        const auto cfg = random_nonsingular_config(rng, n);
        const auto alpha = random_positive_masses(rng, n);
        const auto r = distances(cfg);
        const auto b = nbody_matrix(alpha, r);
        const auto rep = definiteness(to_double_matrix(b), opt.tol);
        run.check(rep.verdict == Definiteness::positive_definite, n, "n-body matrix not positive definite");
        const Rational big_delta = determinant(b);
        const Rational e = elementary_symmetric(n - 1, alpha);
        const Rational delta = determinant(cayley_menger(r));
        run.check(sgn(big_delta) > 0, n, "Delta <= 0");
        run.check(sgn(e) > 0, n, "e_{n-1} <= 0");
        run.check(detail::parity_sign(n) * sgn(delta) > 0, n, "(-1)^n delta <= 0");
        if (sgn(e) != 0 && sgn(delta) != 0) {
            const Rational sigma = big_delta / (e * delta);
            run.check(detail::parity_sign(n) * sgn(sigma) > 0, n, "(-1)^n sigma <= 0");
        }
    });
}

/// delta = (-1)^n det M_k for every base k.
inline SuiteReport verify_cmdk(const SuiteOptions& opt) {
    detail::SuiteRun run("cmdk", opt, 2, 7);
    return run.run([&](int n, Rng& rng) {
        const auto r = distances(random_rational_config(rng, n, n - 1));
        const Rational delta = determinant(cayley_menger(r));
        for (int k = 0; k < n; ++k)
            run.check(delta == Rational(detail::parity_sign(n) * determinant(reduced_edm(r, k))), n,
                      "delta != (-1)^n det M_" + std::to_string(k + 1));
    });
}

/// Embedding reproduces the distances and finds the affine rank.
inline SuiteReport verify_embedding(const SuiteOptions& opt) {
    detail::SuiteRun run("syh", opt, 2, 8);
    return run.run([&](int n, Rng& rng) {
        const int d = static_cast<int>(rng.uniform_int(1, n - 1));
        const auto cfg = random_double_config(rng, n, d);
        const auto e = embed(distances(cfg), opt.tol);
        run.check(e.residual <= 1e-9, n, "residual " + std::to_string(e.residual));
        run.check(e.d == affine_rank(cfg), n, "embedding dimension differs from affine rank");
    });
}

/// Cayley: a configuration is singular iff its Cayley-Menger determinant vanishes.
inline SuiteReport verify_cayley(const SuiteOptions& opt) {
    detail::SuiteRun run("cayley", opt, 2, 7);
    return run.run([&](int n, Rng& rng) {
        const bool singular = rng.uniform_int(0, 1) == 1;
        const auto cfg = singular ? random_singular_config<Rational>(rng, n, n - 2) : random_nonsingular_config(rng, n);
        const Rational delta = determinant(cayley_menger(distances(cfg)));
        run.check(is_singular(cfg) == singular, n, "constructed configuration has the wrong rank");
        run.check((sgn(delta) == 0) == singular, n, "delta vanishing disagrees with singularity");
    });
}

/// Quadratic, biquadratic and quartic form identities on the hyperplane sum x = 0.
inline SuiteReport verify_forms(const SuiteOptions& opt) {
    detail::SuiteRun run("forms", opt, 2, 6);
    return run.run([&](int n, Rng& rng) {
        const auto cfg = random_rational_config(rng, n, n - 1);
        const auto r = distances(cfg);
        const auto alpha = random_positive_masses(rng, n);
        const auto x = random_hyperplane_vector(rng, n);
        const auto y = random_hyperplane_vector(rng, n);

        const Rational q = quadratic_form_q(r, x);
        for (int k = 0; k < n; ++k) run.check(q == Rational(-quadratic_form_qk(r, k, x)), n, "q != -q_k");
        run.check(sgn(q) <= 0, n, "x^T D x > 0 on the hyperplane");

        const auto s = random_entry_table(rng, n);
        const auto t = random_entry_table(rng, n);
        run.check(biquadratic_qw(s, t, x, y) == Rational(bilinear(s, x, y) * bilinear(t, x, y)), n,
                  "Q_W != (x^T S y)(x^T T y)");

        run.check(quartic_qb(alpha, r, x) == Rational(2 * mass_form(alpha, x) * configuration_form(cfg, x)), n,
                  "Q_B != 2 a(x) p(x)");

        const auto b = nbody_matrix(alpha, r);
        Matrix<Rational> sum = Matrix<Rational>::square(b.rows());
        for (int k = 0; k < n; ++k) sum = sum + alpha[k] * lift(reduced_edm(r, k), k, n);
        run.check(sum == b, n, "B != sum alpha_k lift(M_k)");

        const auto z = random_rational_vector(rng, static_cast<int>(b.rows()));
        Rational split(0);
        for (int k = 0; k < n; ++k) {
            const auto zk = restrict_to_base(z, k, n);
            const auto m = reduced_edm(r, k);
            Rational acc(0);
            for (std::size_t i = 0; i < zk.size(); ++i)
                for (std::size_t j = 0; j < zk.size(); ++j) acc += zk[i] * m(i, j) * zk[j];
            split += alpha[k] * acc;
        }
        run.check(pair_quadratic(b, z) == split, n, "z^T B z != sum alpha_k z_k^T M_k z_k");
    });
}

/// Squared simplex volume from distances against det(A^T A) / ((n-1)!)^2.
inline SuiteReport verify_menger(const SuiteOptions& opt) {
    detail::SuiteRun run("menger", opt, 2, 6);
    return run.run([&](int n, Rng& rng) {
        const auto cfg = random_rational_config(rng, n, n - 1);
        const auto a = cfg.difference_matrix(n - 1);
        Rational gram = determinant(a.transpose() * a);
        for (int i = 2; i <= n - 1; ++i) gram /= i * i;
        run.check(menger_volume_sq(distances(cfg)) == gram, n, "Menger volume differs from the Gram volume");
    });
}

/// W_{R,A} = -B, det W_{R,A} = (-1)^C(n,2) Delta, sigma = (-1)^(C(n,2)+1) Z_{R,A}
/// at random rational points.
inline SuiteReport verify_dictionary(const SuiteOptions& opt) {
    detail::SuiteRun run("dictionary", opt, 2, 6);
    return run.run([&](int n, Rng& rng) {
        const auto r = distances(random_nonsingular_config(rng, n));
        run.check(sign_dictionary_at(random_positive_masses(rng, n), r), n, "sign dictionary identity fails");
    });
}

/// A kernel vector of a singular C_S yields z with W_{S,T} z = 0 for random T.
inline SuiteReport verify_kernel(const SuiteOptions& opt) {
    detail::SuiteRun run("kernel", opt, 2, 6);
    return run.run([&](int n, Rng& rng) {
        const auto cfg = random_singular_config<Rational>(rng, n, std::max(n - 2, 0));
        const auto s = squared_distance_table(distances(cfg));
        const auto kw = kernel_witness(s);
        const auto z = kw.z;
        const auto w = w_matrix(s, random_entry_table(rng, n));
        const auto wz = w.apply(z);
        bool zero = true;
        for (const auto& v : wz) zero = zero && sgn(v) == 0;
        run.check(zero, n, "W z != 0");
    });
}

inline std::vector<std::string> suite_names() {
    return {"signs", "cmdk", "syh", "cayley", "forms", "menger", "dictionary", "kernel"};
}

inline SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
    if (name == "signs") return verify_signs(opt);
    if (name == "cmdk") return verify_cmdk(opt);
    if (name == "syh") return verify_embedding(opt);
    if (name == "cayley") return verify_cayley(opt);
    if (name == "forms") return verify_forms(opt);
    if (name == "menger") return verify_menger(opt);
    if (name == "dictionary") return verify_dictionary(opt);
    if (name == "kernel") return verify_kernel(opt);
    throw ParseError("unknown suite \"" + name + "\"");
}

}  // namespace nbodymat
