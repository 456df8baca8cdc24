#pragma once

// Test-only oracles, independent of the library code paths they check.

#include <array>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "cspkit/scalar.hpp"
#include "cspkit/signature.hpp"
#include "cspkit/instance.hpp"

namespace cspkit::testing {

// Division oracle: solve the 4x4 rational linear system M(b) q = a, where
// M(b) is the multiplication-by-b matrix in the basis {1, w, w^2, w^3}.
inline ExactComplex divide_by_linear_system(const ExactComplex& a, const ExactComplex& b) {
    // Columns of M are the coordinates of b * w^j.
    std::array<std::array<Rational, 5>, 4> m{}; // augmented
    for (int j = 0; j < 4; ++j) {
        ExactComplex col = b * ExactComplex::omega_pow(j);
        for (int r = 0; r < 4; ++r) m[static_cast<size_t>(r)][static_cast<size_t>(j)] = col.coeff(r);
    }
    for (int r = 0; r < 4; ++r) m[static_cast<size_t>(r)][4] = a.coeff(r);

    for (int col = 0; col < 4; ++col) {
        int piv = -1;
        for (int r = col; r < 4; ++r)
            if (m[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::runtime_error("singular division system");
        std::swap(m[static_cast<size_t>(col)], m[static_cast<size_t>(piv)]);
        Rational p = m[static_cast<size_t>(col)][static_cast<size_t>(col)];
        for (int j = col; j <= 4; ++j) m[static_cast<size_t>(col)][static_cast<size_t>(j)] /= p;
        for (int r = 0; r < 4; ++r) {
            if (r == col) continue;
            Rational f = m[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (f == 0) continue;
            for (int j = col; j <= 4; ++j)
                m[static_cast<size_t>(r)][static_cast<size_t>(j)] -=
                    f * m[static_cast<size_t>(col)][static_cast<size_t>(j)];
        }
    }
    return ExactComplex(m[0][4], m[1][4], m[2][4], m[3][4]);
}

// Triple-closure affine test: for all a,b,c in S, a^b^c in S.
inline bool affine_by_triples(const std::vector<int>& support) {
    std::set<int> s(support.begin(), support.end());
    for (int a : support)
        for (int b : support)
            for (int c : support)
                if (!s.count(a ^ b ^ c)) return false;
    return true;
}

// Pin oracle: naive nested-loop selection for comparing against pin().
inline Signature pin_by_loops(const Signature& f, int j, int c) {
    int k = f.arity();
    std::vector<Scalar> out;
    std::vector<int> bits(static_cast<size_t>(k), 0);
    for (size_t idx = 0; idx < (size_t{1} << (k - 1)); ++idx) {
        // Spread idx over positions != j, insert c at position j (1-based).
        size_t rest = idx;
        for (int pos = k; pos >= 1; --pos) {
            if (pos == j) continue;
            bits[static_cast<size_t>(pos - 1)] = static_cast<int>(rest & 1);
            rest >>= 1;
        }
        bits[static_cast<size_t>(j - 1)] = c;
        out.push_back(f.value(bits));
    }
    return Signature(k - 1, std::move(out));
}

// Random small rationals/scalars; biased toward plain rationals.
inline Rational random_rational(std::mt19937_64& rng, bool allow_zero = true) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 2);
    int n = num(rng);
    if (!allow_zero && n == 0) n = 1;
    return Rational(n, den(rng));
}

inline ExactComplex random_exact(std::mt19937_64& rng, bool allow_zero = true) {
    std::uniform_int_distribution<int> kind(0, 3);
    int k = kind(rng);
    if (k < 2) {
        Rational r = random_rational(rng, allow_zero);
        return ExactComplex(r);
    }
    ExactComplex z(random_rational(rng), random_rational(rng), random_rational(rng),
                   random_rational(rng));
    if (!allow_zero && z.is_zero()) return ExactComplex(1);
    return z;
}

inline Signature random_signature(std::mt19937_64& rng, int arity, bool allow_zero = true) {
    std::vector<Scalar> t;
    for (size_t i = 0; i < (size_t{1} << arity); ++i)
        t.emplace_back(random_exact(rng, allow_zero));
    return Signature(arity, std::move(t));
}

// Random simple graph with n vertices and m distinct edges.
inline std::vector<std::pair<int, int>> random_graph_edges(std::mt19937_64& rng, int n, int m) {
    std::vector<std::pair<int, int>> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.push_back({u, v});
    std::shuffle(all.begin(), all.end(), rng);
    if (m > static_cast<int>(all.size())) m = static_cast<int>(all.size());
    all.resize(static_cast<size_t>(m));
    return all;
}

// Direct vertex-cover count by subset enumeration (the global oracle).
inline long count_vertex_covers(int n, const std::vector<std::pair<int, int>>& edges) {
    long count = 0;
    for (size_t s = 0; s < (size_t{1} << n); ++s) {
        bool ok = true;
        for (auto [u, v] : edges)
            if (!((s >> u) & 1) && !((s >> v) & 1)) {
                ok = false;
                break;
            }
        if (ok) ++count;
    }
    return count;
}

} // namespace cspkit::testing
