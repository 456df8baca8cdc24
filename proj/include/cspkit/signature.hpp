#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cspkit/errors.hpp"
#include "cspkit/scalar.hpp"

namespace cspkit {

inline constexpr int kMaxArity = 16;

/**
 * Signature: a function {0,1}^k -> C as a dense table of 2^k scalars.
 * Index convention: index(x1..xk) = sum x_j * 2^(k-j), i.e. x1 is the most
 * significant bit. A binary signature reads as the matrix
 * (F(0,0) F(0,1); F(1,0) F(1,1)).
 */
class Signature {
    int arity_ = 0;
    std::vector<Scalar> table_;

public:
    Signature() : table_(1, Scalar::exact(0)) {}
    Signature(int arity, std::vector<Scalar> table) : arity_(arity), table_(std::move(table)) {
        if (arity_ < 0 || arity_ > kMaxArity)
            fail(errc::cap_exceeded, "arity out of range: " + std::to_string(arity_));
        if (table_.size() != (size_t{1} << arity_))
            fail(errc::precondition, "table length must be 2^arity");
        Mode m = table_[0].mode();
        for (const auto& s : table_)
            if (s.mode() != m) fail(errc::mode_mismatch, "mixed scalar modes in one signature");
    }

    static Signature constant(Scalar v) { return Signature(0, {std::move(v)}); }

    static Signature filled(int arity, const Scalar& v) {
        return Signature(arity, std::vector<Scalar>(size_t{1} << arity, v));
    }

    int arity() const { return arity_; }
    size_t size() const { return table_.size(); }
    Mode mode() const { return table_[0].mode(); }

    const Scalar& at(size_t idx) const { return table_[idx]; }
    Scalar& at(size_t idx) { return table_[idx]; }
    const std::vector<Scalar>& table() const { return table_; }

    // Value at explicit bits, x1 first.
    const Scalar& value(const std::vector<int>& bits) const {
        size_t idx = 0;
        for (int b : bits) idx = (idx << 1) | static_cast<size_t>(b & 1);
        return table_[idx];
    }

    bool operator==(const Signature& o) const {
        if (arity_ != o.arity_ || mode() != o.mode()) return false;
        for (size_t i = 0; i < table_.size(); ++i)
            if (table_[i] != o.table_[i]) return false;
        return true;
    }
    bool operator!=(const Signature& o) const { return !(*this == o); }

    bool is_zero() const {
        return std::all_of(table_.begin(), table_.end(), [](const Scalar& s) { return s.is_zero(); });
    }

    Signature to_approx() const {
        std::vector<Scalar> t;
        t.reserve(table_.size());
        for (const auto& s : table_) t.push_back(s.to_approx());
        return Signature(arity_, std::move(t));
    }

    Signature scaled(const Scalar& c) const {
        std::vector<Scalar> t;
        t.reserve(table_.size());
        for (const auto& s : table_) t.push_back(s * c);
        return Signature(arity_, std::move(t));
    }

    std::vector<int> support() const {
        std::vector<int> s;
        for (size_t i = 0; i < table_.size(); ++i)
            if (!table_[i].is_zero()) s.push_back(static_cast<int>(i));
        return s;
    }

    std::string key() const {
        std::string k = std::to_string(arity_) + ":";
        for (const auto& s : table_) k += s.to_string() + ";";
        return k;
    }
};

// --- constructors for the named constants -----------------------------------

inline Signature make_equality(int k, Mode m = Mode::exact) {
    if (k < 1) fail(errc::precondition, "equality arity must be >= 1");
    Signature f = Signature::filled(k, Scalar::zero(m));
    f.at(0) = Scalar::one(m);
    f.at((size_t{1} << k) - 1) = Scalar::one(m);
    return f;
}

inline Signature make_delta(int c, Mode m = Mode::exact) {
    Signature f = Signature::filled(1, Scalar::zero(m));
    f.at(static_cast<size_t>(c)) = Scalar::one(m);
    return f;
}

inline Signature make_neq2(Mode m = Mode::exact) {
    Signature f = Signature::filled(2, Scalar::zero(m));
    f.at(1) = Scalar::one(m);
    f.at(2) = Scalar::one(m);
    return f;
}

inline Signature make_or2(Mode m = Mode::exact) {
    Signature f = Signature::filled(2, Scalar::one(m));
    f.at(0) = Scalar::zero(m);
    return f;
}

inline std::optional<Signature> named_signature(const std::string& name, Mode m = Mode::exact) {
    if (name == "EQ1") return make_equality(1, m);
    if (name == "EQ2") return make_equality(2, m);
    if (name == "EQ3") return make_equality(3, m);
    if (name == "NEQ2") return make_neq2(m);
    if (name == "DELTA0") return make_delta(0, m);
    if (name == "DELTA1") return make_delta(1, m);
    if (name == "OR2") return make_or2(m);
    return std::nullopt;
}

// --- symmetric view ----------------------------------------------------------

// Expands [f_0,...,f_k] (one value per Hamming weight) into a dense table.
inline Signature from_symmetric(const std::vector<Scalar>& weights) {
    int k = static_cast<int>(weights.size()) - 1;
    if (k < 0) fail(errc::parse_error, "empty symmetric signature");
    std::vector<Scalar> t(size_t{1} << k, Scalar::zero(weights[0].mode()));
    for (size_t i = 0; i < t.size(); ++i)
        t[i] = weights[static_cast<size_t>(std::popcount(i))];
    return Signature(k, std::move(t));
}

// Returns the per-weight values when F is symmetric, nullopt otherwise.
inline std::optional<std::vector<Scalar>> to_symmetric(const Signature& f) {
    std::vector<std::optional<Scalar>> w(static_cast<size_t>(f.arity()) + 1);
    for (size_t i = 0; i < f.size(); ++i) {
        size_t h = static_cast<size_t>(std::popcount(i));
        if (!w[h])
            w[h] = f.at(i);
        else if (*w[h] != f.at(i))
            return std::nullopt;
    }
    std::vector<Scalar> out;
    out.reserve(w.size());
    for (auto& x : w) out.push_back(*x);
    return out;
}

// --- core operations ---------------------------------------------------------

// Pins input j (1-based) to the constant c, dropping that input.
inline Signature pin(const Signature& f, int j, int c) {
    if (j < 1 || j > f.arity()) fail(errc::precondition, "pin: index out of range");
    int k = f.arity();
    int lower = k - j; // bits below position j
    size_t lower_mask = (size_t{1} << lower) - 1;
    std::vector<Scalar> t;
    t.reserve(f.size() / 2);
    for (size_t idx = 0; idx < f.size() / 2; ++idx) {
        size_t hi = idx >> lower, lo = idx & lower_mask;
        size_t src = (hi << (lower + 1)) | (static_cast<size_t>(c) << lower) | lo;
        t.push_back(f.at(src));
    }
    return Signature(k - 1, std::move(t));
}

// Sums over input j (marginalization).
inline Signature project(const Signature& f, int j) {
    if (j < 1 || j > f.arity()) fail(errc::precondition, "project: index out of range");
    Signature a = pin(f, j, 0), b = pin(f, j, 1);
    std::vector<Scalar> t;
    t.reserve(a.size());
    for (size_t i = 0; i < a.size(); ++i) t.push_back(a.at(i) + b.at(i));
    return Signature(f.arity() - 1, std::move(t));
}

// F (x) G with F's inputs first.
inline Signature tensor(const Signature& f, const Signature& g) {
    int k = f.arity() + g.arity();
    if (k > kMaxArity) fail(errc::cap_exceeded, "tensor: arity cap exceeded");
    std::vector<Scalar> t;
    t.reserve(size_t{1} << k);
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j) t.push_back(f.at(i) * g.at(j));
    return Signature(k, std::move(t));
}

inline Signature tensor_power(const Signature& f, int l) {
    Signature r = Signature::constant(Scalar::one(f.mode()));
    for (int i = 0; i < l; ++i) r = tensor(r, f);
    return r;
}

// --- binary matrix view ------------------------------------------------------

struct Matrix2 {
    // ((a,b),(c,d)) = (F(0,0) F(0,1); F(1,0) F(1,1))
    Scalar a, b, c, d;

    Scalar det() const { return a * d - b * c; }

    Matrix2 mul(const Matrix2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }

    Matrix2 pow(int e) const {
        Mode m = a.mode();
        Matrix2 r{Scalar::one(m), Scalar::zero(m), Scalar::zero(m), Scalar::one(m)};
        Matrix2 base = *this;
        while (e > 0) {
            if (e & 1) r = r.mul(base);
            base = base.mul(base);
            e >>= 1;
        }
        return r;
    }

    Matrix2 inverse() const {
        Scalar dt = det();
        if (dt.is_zero()) fail(errc::precondition, "singular 2x2 matrix");
        return {d / dt, -b / dt, -c / dt, a / dt};
    }

    Matrix2 transpose() const { return {a, c, b, d}; }
};

inline Matrix2 as_matrix(const Signature& f) {
    if (f.arity() != 2) fail(errc::precondition, "matrix view needs arity 2");
    return {f.at(0), f.at(1), f.at(2), f.at(3)};
}

inline Signature from_matrix(const Matrix2& m) {
    return Signature(2, {m.a, m.b, m.c, m.d});
}

// --- exact l-th roots and tensor_root ---------------------------------------

namespace detail {

// All in-ring l-th roots of W restricted to integer coordinates (W must have
// integer coordinates). Branch choices are enumerated per Galois embedding and
// every candidate is verified exactly, so the numerics only guide the search.
inline std::vector<ExactComplex> integer_lth_roots(const ExactComplex& w, int l) {
    std::vector<ExactComplex> found;
    std::array<std::complex<double>, 4> emb;
    const int ks[4] = {1, 3, 5, 7};
    for (int t = 0; t < 4; ++t) emb[t] = w.galois(ks[t]).to_complex();

    // Basis matrix M[t][m] = sigma_{ks[t]}(w^m); invert numerically once.
    std::array<std::array<std::complex<double>, 4>, 4> m{}, inv{};
    for (int t = 0; t < 4; ++t)
        for (int mm = 0; mm < 4; ++mm)
            m[t][mm] = ExactComplex::omega_pow(mm).galois(ks[t]).to_complex();
    // Gauss-Jordan inverse of the fixed 4x4.
    for (int t = 0; t < 4; ++t)
        for (int j = 0; j < 4; ++j) inv[t][j] = t == j ? 1.0 : 0.0;
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        std::swap(m[col], m[piv]);
        std::swap(inv[col], inv[piv]);
        auto p = m[col][col];
        for (int j = 0; j < 4; ++j) {
            m[col][j] /= p;
            inv[col][j] /= p;
        }
        for (int r = 0; r < 4; ++r) {
            if (r == col) continue;
            auto f = m[r][col];
            for (int j = 0; j < 4; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }

    std::array<std::complex<double>, 4> root0;
    for (int t = 0; t < 4; ++t)
        root0[t] = std::pow(emb[t], 1.0 / static_cast<double>(l));
    const double two_pi = 6.283185307179586476925287;

    std::vector<int> branch(4, 0);
    std::array<std::complex<double>, 4> u;
    auto try_branch = [&]() {
        for (int t = 0; t < 4; ++t) {
            double ang = two_pi * branch[static_cast<size_t>(t)] / l;
            u[t] = root0[t] * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        std::array<Rational, 4> coord;
        for (int mm = 0; mm < 4; ++mm) {
            std::complex<double> c{0.0, 0.0};
            for (int t = 0; t < 4; ++t) c += inv[mm][t] * u[t];
            double r = c.real();
            if (!std::isfinite(r) || std::abs(r) > 1e15) return;
            coord[static_cast<size_t>(mm)] = Rational(BigInt(std::llround(r)));
        }
        ExactComplex cand(coord[0], coord[1], coord[2], coord[3]);
        if (cand.pow(l) == w) {
            for (const auto& f : found)
                if (f == cand) return;
            found.push_back(cand);
        }
    };

    int total = 1;
    for (int t = 0; t < 4; ++t) total *= l;
    for (int it = 0; it < total; ++it) {
        int x = it;
        for (int t = 0; t < 4; ++t) {
            branch[static_cast<size_t>(t)] = x % l;
            x /= l;
        }
        try_branch();
    }
    return found;
}

// Any l-th root of z in Q(w), preferring the real positive one when z is a
// positive real. Returns nullopt when no in-ring root is found.
inline std::optional<ExactComplex> exact_lth_root(const ExactComplex& z, int l) {
    if (l < 1) fail(errc::precondition, "root order must be >= 1");
    if (l == 1) return z;
    if (z.is_zero()) return ExactComplex::zero();
    // Clear denominators: with z = Z/c, u = c*t satisfies u^l = c^(l-1) Z, an
    // algebraic integer, hence u lies in Z[w].
    BigInt den = 1;
    for (int j = 0; j < 4; ++j) den = lcm(den, denominator(z.coeff(j)));
    Rational c(den);
    ExactComplex w = z * ExactComplex(Rational(boost::multiprecision::pow(den, static_cast<unsigned>(l - 1))));
    auto roots = integer_lth_roots(w, l);
    if (roots.empty()) return std::nullopt;
    ExactComplex inv_c = ExactComplex(Rational(1) / c);
    std::vector<ExactComplex> cands;
    cands.reserve(roots.size());
    for (const auto& u : roots) cands.push_back(u * inv_c);
    if (z.is_real() && z.sign_real() > 0)
        for (const auto& t : cands)
            if (t.is_real() && t.sign_real() > 0) return t;
    // Deterministic branch: smallest coordinate string.
    const ExactComplex* best = &cands[0];
    for (const auto& t : cands)
        if (t.to_string() < best->to_string()) best = &t;
    return *best;
}

} // namespace detail

/**
 * Recovers f with f^(tensor l) = F. The branch is normalized so the first
 * nonzero entry of f is the real positive l-th root of the matching diagonal
 * entry of F when that entry is a positive real; otherwise a fixed
 * deterministic branch is taken. The result is re-verified before returning.
 */
inline Signature tensor_root(const Signature& f_pow, int l) {
    if (l < 1) fail(errc::precondition, "tensor_root: l must be >= 1");
    if (f_pow.arity() % l != 0)
        fail(errc::precondition, "tensor_root: arity not divisible by l");
    if (f_pow.is_zero()) fail(errc::precondition, "tensor_root: zero signature");
    if (l == 1) return f_pow;
    int k = f_pow.arity() / l;
    size_t n = size_t{1} << k;

    // First nonzero diagonal entry F(x,...,x) = f(x)^l.
    size_t x0 = n;
    for (size_t x = 0; x < n; ++x) {
        size_t idx = 0;
        for (int rep = 0; rep < l; ++rep) idx = (idx << k) | x;
        if (!f_pow.at(idx).is_zero()) {
            x0 = x;
            break;
        }
    }
    if (x0 == n) fail(errc::verification, "tensor_root: zero diagonal on nonzero signature");
    size_t diag_idx = 0;
    for (int rep = 0; rep < l; ++rep) diag_idx = (diag_idx << k) | x0;
    Scalar d = f_pow.at(diag_idx);

    Scalar t = Scalar::zero(f_pow.mode());
    if (f_pow.mode() == Mode::exact) {
        auto root = detail::exact_lth_root(d.as_exact(), l);
        if (!root) fail(errc::verification, "tensor_root: diagonal entry has no in-ring l-th root");
        t = Scalar(*root);
    } else {
        t = Scalar(ApproxComplex(std::pow(d.to_complex(), 1.0 / static_cast<double>(l))));
    }

    // f(x) = F(x, x0, ..., x0) * t / d.
    Scalar scale = t / d;
    std::vector<Scalar> table;
    table.reserve(n);
    for (size_t x = 0; x < n; ++x) {
        size_t idx = x;
        for (int rep = 1; rep < l; ++rep) idx = (idx << k) | x0;
        table.push_back(f_pow.at(idx) * scale);
    }
    Signature f(k, std::move(table));

    Signature check = tensor_power(f, l);
    if (f_pow.mode() == Mode::exact) {
        if (check != f_pow) fail(errc::verification, "tensor_root: not an exact tensor power");
    } else {
        for (size_t i = 0; i < check.size(); ++i)
            if (!approx_equal(check.at(i), f_pow.at(i), 1e-9))
                fail(errc::verification, "tensor_root: not a tensor power within tolerance");
    }
    return f;
}

} // namespace cspkit
