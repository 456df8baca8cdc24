#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "cspkit/errors.hpp"

namespace cspkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical "p/q" form, q > 0 and gcd(p,q) = 1 (cpp_rational keeps it reduced).
inline std::string format_rational(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "p" or "p/q" with decimal integer p, q.
inline Rational parse_rational(const std::string& s) {
    auto bad = [&] { fail(errc::parse_error, "bad rational literal: '" + s + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt p(s.substr(0, slash));
        BigInt q(s.substr(slash + 1));
        if (q == 0) bad();
        return Rational(p, q);
    } catch (const std::exception&) {
        bad();
    }
    return Rational(); // unreachable
}

inline int sign_of(const Rational& r) { return r.sign(); }

} // namespace cspkit
