#pragma once

#include <cmath>
#include <type_traits>

#include "nbodymat/rational.hpp"

namespace nbodymat {

/// Scalar contract shared by every builder and determinant routine.
///
/// Specializations provide:
///   is_exact    - arithmetic is exact (no rounding)
///   is_ordered  - values can be compared against zero
///   is_zero(x)
///   exact_div(a, b) - a / b where b is known to divide a exactly
template <typename T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
    static constexpr bool is_exact = false;
    static constexpr bool is_ordered = true;
    static bool is_zero(double x) { return x == 0.0; }
    static double exact_div(double a, double b) { return a / b; }
    static double to_double(double x) { return x; }
};

template <>
struct ScalarTraits<Rational> {
    static constexpr bool is_exact = true;
    static constexpr bool is_ordered = true;
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
    static Rational exact_div(const Rational& a, const Rational& b) { return Rational(a / b); }
    static double to_double(const Rational& x) { return x.get_d(); }
};

template <typename T>
concept OrderedScalar = ScalarTraits<T>::is_ordered;

template <typename T>
concept ExactScalar = ScalarTraits<T>::is_exact;

template <typename T>
int sign_of(const T& x) {
    if constexpr (std::is_same_v<T, Rational>) {
        return sgn(x);
    } else {
        return (x > T(0)) - (x < T(0));
    }
}

}  // namespace nbodymat
