#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <variant>

#include "cspkit/errors.hpp"
#include "cspkit/rational.hpp"

namespace cspkit {

/**
 * ExactComplex: element of Q(w), w = exp(i*pi/4), stored as rational
 * coordinates over the basis {1, w, w^2, w^3} with w^4 = -1.
 *
 * The field contains i = w^2 and sqrt(2) = w - w^3, which is everything the
 * classifiers and the affine evaluator ever produce. All arithmetic is exact;
 * equality is coefficient-wise on the canonical form.
 */
class ExactComplex {
    std::array<Rational, 4> c_{}; // coefficients of 1, w, w^2, w^3

public:
    ExactComplex() = default;
    ExactComplex(long n) { c_[0] = n; }
    ExactComplex(const Rational& r) { c_[0] = r; }
    ExactComplex(Rational c0, Rational c1, Rational c2, Rational c3)
        : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    static ExactComplex zero() { return ExactComplex(); }
    static ExactComplex one() { return ExactComplex(1); }
    static ExactComplex imag() { return omega_pow(2); }
    static ExactComplex sqrt2() { return ExactComplex(0, 1, 0, Rational(-1)); }

    // w^k for any integer k (w^8 = 1).
    static ExactComplex omega_pow(long k) {
        k %= 8;
        if (k < 0) k += 8;
        ExactComplex r;
        if (k < 4)
            r.c_[static_cast<size_t>(k)] = 1;
        else
            r.c_[static_cast<size_t>(k - 4)] = -1;
        return r;
    }

    const Rational& coeff(int j) const { return c_[static_cast<size_t>(j)]; }

    bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    // Real subfield is Q(sqrt2): c2 = 0 and the w, w^3 parts conjugate away.
    bool is_real() const { return c_[2] == 0 && c_[1] == -c_[3]; }

    bool operator==(const ExactComplex& o) const { return c_ == o.c_; }
    bool operator!=(const ExactComplex& o) const { return !(*this == o); }

    ExactComplex operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

    ExactComplex operator+(const ExactComplex& o) const {
        return {c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]};
    }

    ExactComplex operator-(const ExactComplex& o) const {
        return {c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2], c_[3] - o.c_[3]};
    }

    ExactComplex operator*(const ExactComplex& o) const {
        // Most values in practice are plain rationals; skip the convolution then.
        if (is_rational()) {
            if (c_[0] == 0) return ExactComplex();
            return {c_[0] * o.c_[0], c_[0] * o.c_[1], c_[0] * o.c_[2], c_[0] * o.c_[3]};
        }
        if (o.is_rational()) {
            if (o.c_[0] == 0) return ExactComplex();
            return {c_[0] * o.c_[0], c_[1] * o.c_[0], c_[2] * o.c_[0], c_[3] * o.c_[0]};
        }
        // Convolution mod w^4 + 1.
        const auto& a = c_;
        const auto& b = o.c_;
        return {a[0] * b[0] - (a[1] * b[3] + a[2] * b[2] + a[3] * b[1]),
                a[0] * b[1] + a[1] * b[0] - (a[2] * b[3] + a[3] * b[2]),
                a[0] * b[2] + a[1] * b[1] + a[2] * b[0] - a[3] * b[3],
                a[0] * b[3] + a[1] * b[2] + a[2] * b[1] + a[3] * b[0]};
    }

    ExactComplex& operator+=(const ExactComplex& o) { return *this = *this + o; }
    ExactComplex& operator-=(const ExactComplex& o) { return *this = *this - o; }
    ExactComplex& operator*=(const ExactComplex& o) { return *this = *this * o; }

    // Galois conjugate w -> w^k, k in {1,3,5,7}.
    ExactComplex galois(int k) const {
        switch (k) {
        case 1: return *this;
        case 3: return {c_[0], c_[3], -c_[2], c_[1]};
        case 5: return {c_[0], -c_[1], c_[2], -c_[3]};
        case 7: return {c_[0], -c_[3], -c_[2], -c_[1]};
        default: fail(errc::precondition, "galois: k must be odd mod 8");
        }
    }

    ExactComplex conj() const { return galois(7); }

    ExactComplex inverse() const {
        if (is_zero()) fail(errc::precondition, "division by zero");
        if (is_rational()) {
            Rational inv = Rational(1) / c_[0];
            return ExactComplex(inv);
        }
        // 1/z = (s3 s5 s7)(z) / N(z); the field norm N(z) is rational.
        ExactComplex p = galois(3) * galois(5) * galois(7);
        ExactComplex n = *this * p;
        if (!n.is_rational() || n.c_[0] == 0)
            fail(errc::verification, "field norm not a nonzero rational");
        Rational inv = Rational(1) / n.c_[0];
        return {p.c_[0] * inv, p.c_[1] * inv, p.c_[2] * inv, p.c_[3] * inv};
    }

    ExactComplex operator/(const ExactComplex& o) const { return *this * o.inverse(); }

    ExactComplex pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        ExactComplex r = one(), b = *this;
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    std::complex<double> to_complex() const {
        static const double h = std::sqrt(2.0) / 2.0;
        double re = static_cast<double>(c_[0]) + (static_cast<double>(c_[1]) - static_cast<double>(c_[3])) * h;
        double im = static_cast<double>(c_[2]) + (static_cast<double>(c_[1]) + static_cast<double>(c_[3])) * h;
        return {re, im};
    }

    // Exact sign of a real element c0 + c1*sqrt2.
    int sign_real() const {
        if (!is_real()) fail(errc::precondition, "sign_real on non-real value");
        const Rational& a = c_[0];
        const Rational& b = c_[1];
        int sa = sign_of(a), sb = sign_of(b);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // Opposite signs: the larger of |a| and sqrt2*|b| decides.
        Rational d = a * a - 2 * b * b;
        return sign_of(d) > 0 ? sa : sb;
    }

    std::string to_string() const {
        return format_rational(c_[0]) + "," + format_rational(c_[1]) + "," +
               format_rational(c_[2]) + "," + format_rational(c_[3]);
    }
};

// Returns e with a = i^e (e in Z4), or nullopt.
inline std::optional<int> is_power_of_i(const ExactComplex& a) {
    for (int e = 0; e < 4; ++e)
        if (a == ExactComplex::omega_pow(2 * e)) return e;
    return std::nullopt;
}

// The only roots of unity in Q(w8) are the eight powers of w. Returns the
// minimal order, or nullopt.
inline std::optional<int> exact_root_of_unity_order(const ExactComplex& a) {
    for (int j = 0; j < 8; ++j) {
        if (a == ExactComplex::omega_pow(j)) {
            int g = std::gcd(j, 8);
            return j == 0 ? 1 : 8 / g;
        }
    }
    return std::nullopt;
}

/** ApproxComplex: double-precision complex with finiteness enforced. */
struct ApproxComplex {
    std::complex<double> v{0.0, 0.0};

    ApproxComplex() = default;
    ApproxComplex(double re, double im = 0.0) : v(re, im) {}
    ApproxComplex(std::complex<double> z) : v(z) {}

    static ApproxComplex checked(std::complex<double> z) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            fail(errc::precondition, "approx arithmetic overflowed to non-finite value");
        return ApproxComplex(z);
    }

    bool operator==(const ApproxComplex& o) const { return v == o.v; }

    ApproxComplex operator+(const ApproxComplex& o) const { return checked(v + o.v); }
    ApproxComplex operator-(const ApproxComplex& o) const { return checked(v - o.v); }
    ApproxComplex operator-() const { return ApproxComplex(-v); }
    ApproxComplex operator*(const ApproxComplex& o) const { return checked(v * o.v); }
    ApproxComplex operator/(const ApproxComplex& o) const {
        if (o.v == std::complex<double>(0.0, 0.0)) fail(errc::precondition, "division by zero");
        return checked(v / o.v);
    }
};

enum class Mode { exact, approx };

inline const char* mode_name(Mode m) { return m == Mode::exact ? "exact" : "approx"; }

/**
 * Scalar: tagged union of ExactComplex | ApproxComplex. A whole instance
 * carries exactly one mode; mixed-mode arithmetic is an error and exact ->
 * approx conversion is the only one provided.
 */
class Scalar {
    std::variant<ExactComplex, ApproxComplex> v_;

public:
    Scalar() : v_(ExactComplex()) {}
    Scalar(ExactComplex e) : v_(std::move(e)) {}
    Scalar(ApproxComplex a) : v_(a) {}

    static Scalar exact(long n) { return Scalar(ExactComplex(n)); }
    static Scalar zero(Mode m) {
        return m == Mode::exact ? Scalar(ExactComplex()) : Scalar(ApproxComplex());
    }
    static Scalar one(Mode m) {
        return m == Mode::exact ? Scalar(ExactComplex(1)) : Scalar(ApproxComplex(1.0));
    }

    Mode mode() const { return std::holds_alternative<ExactComplex>(v_) ? Mode::exact : Mode::approx; }

    const ExactComplex& as_exact() const {
        if (mode() != Mode::exact) fail(errc::mode_mismatch, "expected exact scalar");
        return std::get<ExactComplex>(v_);
    }
    const ApproxComplex& as_approx() const {
        if (mode() != Mode::approx) fail(errc::mode_mismatch, "expected approx scalar");
        return std::get<ApproxComplex>(v_);
    }

    bool is_zero() const {
        return mode() == Mode::exact ? as_exact().is_zero()
                                     : as_approx().v == std::complex<double>(0.0, 0.0);
    }

    std::complex<double> to_complex() const {
        return mode() == Mode::exact ? as_exact().to_complex() : as_approx().v;
    }

    // Total in one direction only.
    Scalar to_approx() const {
        return mode() == Mode::approx ? *this : Scalar(ApproxComplex(as_exact().to_complex()));
    }

private:
    static void require_same(const Scalar& a, const Scalar& b) {
        if (a.mode() != b.mode())
            fail(errc::mode_mismatch, "mixed exact/approx arithmetic");
    }

public:
    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        require_same(a, b);
        if (a.mode() == Mode::exact) return Scalar(a.as_exact() + b.as_exact());
        return Scalar(a.as_approx() + b.as_approx());
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        require_same(a, b);
        if (a.mode() == Mode::exact) return Scalar(a.as_exact() - b.as_exact());
        return Scalar(a.as_approx() - b.as_approx());
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        require_same(a, b);
        if (a.mode() == Mode::exact) return Scalar(a.as_exact() * b.as_exact());
        return Scalar(a.as_approx() * b.as_approx());
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        require_same(a, b);
        if (b.is_zero()) fail(errc::precondition, "division by zero");
        if (a.mode() == Mode::exact) return Scalar(a.as_exact() / b.as_exact());
        return Scalar(a.as_approx() / b.as_approx());
    }
    Scalar operator-() const {
        if (mode() == Mode::exact) return Scalar(-as_exact());
        return Scalar(-as_approx());
    }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& b) const {
        require_same(*this, b);
        if (mode() == Mode::exact) return as_exact() == b.as_exact();
        return as_approx() == b.as_approx();
    }
    bool operator!=(const Scalar& b) const { return !(*this == b); }

    Scalar pow(long e) const {
        if (mode() == Mode::exact) return Scalar(as_exact().pow(e));
        if (e < 0) return Scalar::one(Mode::approx) / pow(-e);
        ApproxComplex r(1.0), base = as_approx();
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return Scalar(r);
    }

    std::string to_string() const {
        if (mode() == Mode::exact) return as_exact().to_string();
        auto z = as_approx().v;
        return std::to_string(z.real()) + "+" + std::to_string(z.imag()) + "i";
    }
};

inline bool approx_equal(const std::complex<double>& a, const std::complex<double>& b,
                         double tol) {
    double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= tol * scale;
}

inline bool approx_equal(const Scalar& a, const Scalar& b, double tol) {
    return approx_equal(a.to_complex(), b.to_complex(), tol);
}

/**
 * Root-of-unity test across both modes. Exact mode is decided in the ring;
 * approx mode searches orders k <= k_max against |a^k - 1| < tol, where
 * anything beyond k_max is declared a non-root (documented cutoff).
 */
inline std::optional<int> is_root_of_unity(const Scalar& a, int k_max = 360,
                                           double tol = 1e-9) {
    if (a.mode() == Mode::exact) return exact_root_of_unity_order(a.as_exact());
    std::complex<double> z = a.to_complex(), p = z;
    for (int k = 1; k <= k_max; ++k) {
        if (std::abs(p - std::complex<double>(1.0, 0.0)) < tol) return k;
        p *= z;
        if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) break;
    }
    return std::nullopt;
}

inline std::optional<int> is_power_of_i(const Scalar& a) {
    if (a.mode() != Mode::exact) fail(errc::mode_mismatch, "is_power_of_i needs exact mode");
    return is_power_of_i(a.as_exact());
}

} // namespace cspkit
