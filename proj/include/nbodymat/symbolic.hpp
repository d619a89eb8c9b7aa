#pragma once

#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nbodymat/builders.hpp"
#include "nbodymat/determinant.hpp"
#include "nbodymat/domain.hpp"
#include "nbodymat/errors.hpp"
#include "nbodymat/linalg.hpp"
#include "nbodymat/poly.hpp"

namespace nbodymat {

enum class DetMethod { automatic, bareiss, minor_expansion, cofactor };

/// Exact determinant of a polynomial matrix.
///
/// `automatic` uses the memoized minor expansion up to 20x20 and
/// fraction-free elimination beyond. Elimination multiplies ever larger
/// intermediate polynomials together and divides by the previous pivot;
/// the expansion only ever multiplies a minor by one matrix entry, which
/// is far cheaper when entries are short (as in every family built here).
inline SparsePoly poly_det(const Matrix<SparsePoly>& m, DetMethod method = DetMethod::automatic) {
    if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
    if (method == DetMethod::automatic) {
        method = m.rows() <= 20 ? DetMethod::minor_expansion : DetMethod::bareiss;
    }
    switch (method) {
        case DetMethod::cofactor: return cofactor_determinant(m);
        case DetMethod::minor_expansion: return minor_expansion_determinant(m);
        default: return bareiss_determinant(m);
    }
}

/// Size guards for symbolic work. Term counts grow combinatorially in n.
struct SymbolicLimits {
    /// Hard cap on n for the n-body determinant; n = 5 also needs long_running.
    int nbody_max_n = 5;
    /// Cap on n for det W_{S,T}; long_running raises it to 4.
    int w_max_n = 3;
    bool long_running = false;

    /// Defaults, with NBODY_MAX_SYMBOLIC_N (if set) overriding both caps.
    static SymbolicLimits from_env() {
        SymbolicLimits lim;
        if (const char* v = std::getenv("NBODY_MAX_SYMBOLIC_N")) {
            char* end = nullptr;
            const long cap = std::strtol(v, &end, 10);
            if (end != v && cap >= 2) {
                lim.nbody_max_n = static_cast<int>(cap);
                lim.w_max_n = static_cast<int>(cap);
            }
        }
        return lim;
    }

    void check_nbody(int n) const {
        if (n < 2) throw DomainError("symbolic n-body work needs n >= 2");
        if (n > nbody_max_n)
            throw ResourceCapExceeded("symbolic n = " + std::to_string(n) + " exceeds the cap " +
                                      std::to_string(nbody_max_n));
        if (n >= 5 && !long_running)
            throw ResourceCapExceeded("symbolic n = " + std::to_string(n) + " is long-running; enable it explicitly");
    }

    void check_w(int n) const {
        if (n < 2) throw DomainError("symbolic W work needs n >= 2");
        const int cap = long_running ? std::max(w_max_n, 4) : w_max_n;
        if (n > cap)
            throw ResourceCapExceeded("symbolic det W for n = " + std::to_string(n) + " exceeds the cap " +
                                      std::to_string(cap));
    }
};

/// Inverse masses alpha_i and squared-distance atoms r_i_j (standing for
/// r_ij^2) over one variable table. With equal masses every alpha_i is the
/// single variable "alpha".
struct NBodySymbols {
    int n = 0;
    bool equal_masses = false;
    VarTablePtr vars;
    MassParams<SparsePoly> alpha;
    DistanceVector<SparsePoly> r;
    std::vector<std::size_t> alpha_vars;
    std::vector<std::size_t> r_vars;
};

inline std::string atom_name(const char* stem, int i, int j) {
    return std::string(stem) + "_" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

inline NBodySymbols make_nbody_symbols(int n, bool equal_masses = false) {
    if (n < 1) throw DomainError("need n >= 1");
    NBodySymbols sym;
    sym.n = n;
    sym.equal_masses = equal_masses;
    std::vector<std::string> names;
    if (equal_masses) {
        names.emplace_back("alpha");
    } else {
        for (int i = 0; i < n; ++i) names.push_back("alpha_" + std::to_string(i + 1));
    }
    const PairSpace space(n);
    for (const auto& p : space.pairs()) names.push_back(atom_name("r", p.i(), p.j()));
    sym.vars = make_var_table(names);

    std::vector<SparsePoly> alpha;
    for (int i = 0; i < n; ++i) alpha.push_back(SparsePoly::variable(sym.vars, equal_masses ? 0 : static_cast<std::size_t>(i)));
    const std::size_t a_count = equal_masses ? 1 : static_cast<std::size_t>(n);
    for (std::size_t v = 0; v < a_count; ++v) sym.alpha_vars.push_back(v);

    std::vector<SparsePoly> sq;
    for (std::size_t k = 0; k < space.size(); ++k) {
        sq.push_back(SparsePoly::variable(sym.vars, a_count + k));
        sym.r_vars.push_back(a_count + k);
    }
    sym.alpha = MassParams<SparsePoly>(std::move(alpha));
    sym.r = DistanceVector<SparsePoly>::from_squared(n, std::move(sq));
    return sym;
}

/// Generic tables S = (s_i_j) and T = (t_i_j) over 2 n^2 variables.
struct WSymbols {
    int n = 0;
    VarTablePtr vars;
    EntryTable<SparsePoly> s;
    EntryTable<SparsePoly> t;
};

inline WSymbols make_w_symbols(int n) {
    if (n < 1) throw DomainError("need n >= 1");
    WSymbols sym;
    sym.n = n;
    std::vector<std::string> names;
    for (const char* stem : {"s", "t"})
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) names.push_back(atom_name(stem, i, j));
    sym.vars = make_var_table(names);
    sym.s = EntryTable<SparsePoly>(n);
    sym.t = EntryTable<SparsePoly>(n);
    const auto nn = static_cast<std::size_t>(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto k = static_cast<std::size_t>(i * n + j);
            sym.s(i, j) = SparsePoly::variable(sym.vars, k);
            sym.t(i, j) = SparsePoly::variable(sym.vars, nn + k);
        }
    return sym;
}

/// Delta^(n) = det B^(n) over the alpha and r^2 variables.
inline SparsePoly symbolic_nbody_det(const NBodySymbols& sym, DetMethod method = DetMethod::automatic) {
    return poly_det(nbody_matrix(sym.alpha, sym.r), method);
}

inline SparsePoly symbolic_nbody_det(int n, const SymbolicLimits& limits = SymbolicLimits{}) {
    limits.check_nbody(n);
    return symbolic_nbody_det(make_nbody_symbols(n));
}

/// delta^(n) = det of the Cayley-Menger matrix.
inline SparsePoly symbolic_cm_det(const NBodySymbols& sym) { return poly_det(cayley_menger(sym.r)); }

inline SparsePoly symbolic_cm_det(int n) {
    if (n < 2) throw DomainError("Cayley-Menger determinant needs n >= 2");
    return symbolic_cm_det(make_nbody_symbols(n));
}

/// det C_A with A = diag(alpha).
inline SparsePoly symbolic_ca_det(const NBodySymbols& sym) {
    return poly_det(bordered(EntryTable<SparsePoly>::diagonal(sym.alpha.values())));
}

inline SparsePoly symbolic_ca_det(int n) { return symbolic_ca_det(make_nbody_symbols(n)); }

struct FactorizationCertificate {
    int n = 0;
    SparsePoly lhs;
    std::vector<SparsePoly> factors;
    SparsePoly quotient;
    bool verified = false;
};

namespace detail {

inline void finish_certificate(FactorizationCertificate& cert, const char* what) {
    SparsePoly product = cert.quotient;
    for (const auto& f : cert.factors) product = product * f;
    cert.verified = product == cert.lhs;
    if (!cert.verified) throw VerificationFailure(std::string(what) + ": factors times quotient differ from the determinant");
}

inline SparsePoly divide_or_fail(const SparsePoly& num, const SparsePoly& den, const std::string& what) {
    auto q = exact_divide(num, den);
    if (!q) throw VerificationFailure(what + " does not divide exactly");
    return std::move(*q);
}

}  // namespace detail

/// Delta^(n) = e_{n-1}(alpha) * delta^(n) * sigma^(n), with sigma obtained by
/// two exact divisions and the product re-multiplied.
inline FactorizationCertificate factor_nbody(const NBodySymbols& sym) {
    FactorizationCertificate cert;
    cert.n = sym.n;
    cert.lhs = symbolic_nbody_det(sym);
    const SparsePoly e = elementary_symmetric(sym.n - 1, sym.alpha);
    const SparsePoly delta = symbolic_cm_det(sym);
    const SparsePoly partial = detail::divide_or_fail(cert.lhs, e, "e_{n-1}(alpha)");
    cert.quotient = detail::divide_or_fail(partial, delta, "the Cayley-Menger determinant");
    cert.factors = {e, delta};
    detail::finish_certificate(cert, "n-body factorization");
    return cert;
}

inline FactorizationCertificate factor_nbody(int n, const SymbolicLimits& limits = SymbolicLimits{},
                                             bool equal_masses = false) {
    limits.check_nbody(n);
    return factor_nbody(make_nbody_symbols(n, equal_masses));
}

/// det W_{S,T} = det C_S * det C_T * Z_{S,T} over the generic tables.
inline FactorizationCertificate factor_w(const WSymbols& sym) {
    FactorizationCertificate cert;
    cert.n = sym.n;
    cert.lhs = poly_det(w_matrix(sym.s, sym.t));
    const SparsePoly cs = poly_det(bordered(sym.s));
    const SparsePoly ct = poly_det(bordered(sym.t));
    const SparsePoly partial = detail::divide_or_fail(cert.lhs, cs, "det C_S");
    cert.quotient = detail::divide_or_fail(partial, ct, "det C_T");
    cert.factors = {cs, ct};
    detail::finish_certificate(cert, "W factorization");
    return cert;
}

inline FactorizationCertificate factor_w(int n, const SymbolicLimits& limits = SymbolicLimits{}) {
    limits.check_w(n);
    return factor_w(make_w_symbols(n));
}

/// (-1)^(n choose 2)
inline int pair_count_sign(int n) { return ((n * (n - 1) / 2) % 2 == 0) ? 1 : -1; }

/// Specializes a polynomial over the W variables at S -> s_image, T -> t_image.
inline SparsePoly specialize_w(const SparsePoly& p, const WSymbols& wsym, const EntryTable<SparsePoly>& s_image,
                               const EntryTable<SparsePoly>& t_image, const VarTablePtr& target) {
    std::vector<std::optional<SparsePoly>> images(wsym.vars->size());
    const int n = wsym.n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto k = static_cast<std::size_t>(i * n + j);
            images[k] = SparsePoly(target) + s_image(i, j);
            images[static_cast<std::size_t>(n * n) + k] = SparsePoly(target) + t_image(i, j);
        }
    return p.substitute(images, target);
}

struct SignDictionaryReport {
    int n = 0;
    bool w_is_minus_b = false;
    bool det_w_matches = false;
    bool sigma_matches = false;
    /// True when Z_{R,A} came from specializing the generic Z_{S,T}; false
    /// when it was computed as det W_{R,A} / (det C_R det C_A) directly.
    bool z_from_generic = false;
    bool all() const { return w_is_minus_b && det_w_matches && sigma_matches; }
};

/// Checks W_{R,A} = -B, det W_{R,A} = (-1)^C(n,2) Delta and
/// sigma = (-1)^(C(n,2)+1) Z_{R,A} symbolically. Any failure throws.
inline SignDictionaryReport sign_dictionary(int n, const SymbolicLimits& limits = SymbolicLimits{}) {
    if (n < 2 || n > 4) throw DomainError("symbolic sign dictionary supports 2 <= n <= 4");
    limits.check_nbody(n);
    SignDictionaryReport rep;
    rep.n = n;
    const NBodySymbols sym = make_nbody_symbols(n);
    const auto r_table = squared_distance_table(sym.r);
    const auto a_table = EntryTable<SparsePoly>::diagonal(sym.alpha.values());
    const Matrix<SparsePoly> w = w_matrix(r_table, a_table);
    const Matrix<SparsePoly> b = nbody_matrix(sym.alpha, sym.r);
    rep.w_is_minus_b = w == -b;
    if (!rep.w_is_minus_b) throw VerificationFailure("W_{R,A} differs from -B");

    const FactorizationCertificate nb = factor_nbody(sym);
    const SparsePoly det_w = poly_det(w);
    const int sign = pair_count_sign(n);
    rep.det_w_matches = det_w == nb.lhs.scaled(sign);
    if (!rep.det_w_matches) throw VerificationFailure("det W_{R,A} differs from (-1)^C(n,2) Delta");

    SparsePoly z_ra;
    bool generic_ok = true;
    try {
        limits.check_w(n);
    } catch (const ResourceCapExceeded&) {
        generic_ok = false;
    }
    if (generic_ok) {
        const WSymbols wsym = make_w_symbols(n);
        const FactorizationCertificate wc = factor_w(wsym);
        z_ra = specialize_w(wc.quotient, wsym, r_table, a_table, sym.vars);
        rep.z_from_generic = true;
    } else {
        const SparsePoly cr = poly_det(cayley_menger(sym.r));
        const SparsePoly ca = poly_det(bordered(a_table));
        z_ra = detail::divide_or_fail(detail::divide_or_fail(det_w, cr, "det C_R"), ca, "det C_A");
    }
    rep.sigma_matches = nb.quotient == z_ra.scaled(-sign);
    if (!rep.sigma_matches) throw VerificationFailure("sigma differs from (-1)^(C(n,2)+1) Z_{R,A}");
    return rep;
}

/// The same three identities at one exact rational point; usable for n
/// beyond symbolic reach. Returns true iff all hold.
inline bool sign_dictionary_at(const MassParams<Rational>& alpha, const DistanceVector<Rational>& r) {
    const int n = r.n();
    const auto r_table = squared_distance_table(r);
    const auto a_table = EntryTable<Rational>::diagonal(alpha.values());
    const Matrix<Rational> w = w_matrix(r_table, a_table);
    const Matrix<Rational> b = nbody_matrix(alpha, r);
    if (!(w == -b)) return false;
    const Rational delta_nb = determinant(b);
    const Rational det_w = determinant(w);
    if (det_w != Rational(pair_count_sign(n) * delta_nb)) return false;
    const Rational e = elementary_symmetric(n - 1, alpha);
    const Rational cm = determinant(cayley_menger(r));
    const Rational ca = determinant(bordered(a_table));
    if (sgn(e) == 0 || sgn(cm) == 0) return true;
    const Rational sigma = delta_nb / (e * cm);
    const Rational z = det_w / (cm * ca);
    return sigma == Rational(-pair_count_sign(n) * z);
}

struct HeronReport {
    SparsePoly product;        // in unsquared distance variables d_i_j
    SparsePoly cayley_menger;  // delta^(3) with r_i_j -> d_i_j^2
    bool holds = false;
};

/// -(a+b+c)(-a+b+c)(a-b+c)(a+b-c) for side lengths a = r12, b = r13, c = r23.
template <typename T>
T heron_product(const T& a, const T& b, const T& c) {
    return -((a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c));
}

/// Expands the Heron product symbolically and compares with the
/// three-point Cayley-Menger determinant.
inline HeronReport heron_check() {
    const NBodySymbols sym = make_nbody_symbols(3);
    const SparsePoly delta = symbolic_cm_det(sym);
    const auto dvars = make_var_table({"d_1_2", "d_1_3", "d_2_3"});
    const SparsePoly a = SparsePoly::variable(dvars, 0);
    const SparsePoly b = SparsePoly::variable(dvars, 1);
    const SparsePoly c = SparsePoly::variable(dvars, 2);
    HeronReport rep;
    rep.product = heron_product(a, b, c);
    std::vector<std::optional<SparsePoly>> images(sym.vars->size());
    images[sym.r_vars[0]] = a * a;
    images[sym.r_vars[1]] = b * b;
    images[sym.r_vars[2]] = c * c;
    rep.cayley_menger = delta.substitute(images, dvars);
    rep.holds = rep.product == rep.cayley_menger;
    if (!rep.holds) throw VerificationFailure("Heron product differs from the Cayley-Menger determinant");
    return rep;
}

struct KernelWitness {
    std::vector<Rational> x;  // kernel vector of C_S without its last entry
    Rational v;               // last entry
    std::vector<Rational> z;  // z_{ij} = x_i x_j in PairSpace order
};

/// For a table S with det C_S = 0, a nonzero pair vector z with
/// W_{S,T} z = 0 for every T. The kernel vector is scaled so that its first
/// nonzero x entry is 1.
inline KernelWitness kernel_witness(const EntryTable<Rational>& s) {
    const int n = s.n();
    if (n < 2) throw DomainError("kernel witness needs n >= 2");
    const auto basis = exact_nullspace(bordered(s));
    if (basis.empty()) throw DomainError("C_S is nonsingular at this point; no kernel witness exists");
    std::vector<Rational> xs = basis.front();
    Rational lead(0);
    for (int i = 0; i < n; ++i)
        if (sgn(xs[static_cast<std::size_t>(i)]) != 0) {
            lead = xs[static_cast<std::size_t>(i)];
            break;
        }
    if (sgn(lead) == 0) throw VerificationFailure("kernel vector of C_S has x = 0");
    for (auto& e : xs) e /= lead;
    KernelWitness kw;
    kw.x.assign(xs.begin(), xs.begin() + n);
    kw.v = xs.back();
    for (const auto& p : PairSpace(n).pairs())
        kw.z.push_back(kw.x[static_cast<std::size_t>(p.i())] * kw.x[static_cast<std::size_t>(p.j())]);
    return kw;
}

}  // namespace nbodymat
