#pragma once

#include <gmpxx.h>

#include <charconv>
#include <cmath>
#include <string>
#include <string_view>

#include "nbodymat/errors.hpp"

namespace nbodymat {

using Rational = mpq_class;
using Integer = mpz_class;

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

inline Integer parse_integer(std::string_view s) {
    std::string_view body = s;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    if (!all_digits(body)) throw ParseError("not an integer: '" + std::string(s) + "'");
    Integer z;
    z.set_str(std::string(s.front() == '+' ? s.substr(1) : s), 10);
    return z;
}

}  // namespace detail

/// Parses "p", "p/q", or a terminating decimal such as "-1.25" / "3e-2" exactly.
inline Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (s.empty()) throw ParseError("empty rational literal");

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Integer num = detail::parse_integer(s.substr(0, slash));
        Integer den = detail::parse_integer(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

    bool negative = false;
    std::string_view body = s;
    if (body.front() == '-' || body.front() == '+') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_text = body.substr(e + 1);
        Integer ez = detail::parse_integer(exp_text);
        if (!ez.fits_slong_p() || abs(ez) > 10000)
            throw ParseError("exponent out of range in '" + std::string(s) + "'");
        exponent = ez.get_si();
        body = body.substr(0, e);
    }
    std::string digits;
    if (auto dot = body.find('.'); dot != std::string_view::npos) {
        std::string_view ip = body.substr(0, dot);
        std::string_view fp = body.substr(dot + 1);
        if ((!ip.empty() && !detail::all_digits(ip)) || (!fp.empty() && !detail::all_digits(fp)) ||
            (ip.empty() && fp.empty()))
            throw ParseError("malformed decimal '" + std::string(s) + "'");
        digits = std::string(ip) + std::string(fp);
        exponent -= static_cast<long>(fp.size());
    } else {
        if (!detail::all_digits(body)) throw ParseError("malformed number '" + std::string(s) + "'");
        digits = std::string(body);
    }
    Integer mant(digits, 10);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    Rational q = exponent >= 0 ? Rational(mant * scale) : Rational(mant, scale);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

/// Exact conversion of the shortest decimal that round-trips `x`.
inline Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw ParseError("non-finite value cannot be made exact");
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return parse_rational(std::string_view(buf, static_cast<std::size_t>(end - buf)));
}

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace nbodymat
