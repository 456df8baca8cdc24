#pragma once

#include <string>
#include <vector>

#include "cspkit/instance.hpp"

namespace cspkit {

inline constexpr int kDefaultDanglingLimit = 6;

/**
 * Gadget: a CspInstance fragment plus an ordered list of dangling (external)
 * variables. Contracting the internal variables by brute-force summation
 * yields the realized signature.
 */
struct Gadget {
    CspInstance fragment;
    std::vector<int> dangling; // variable ids inside fragment, in port order

    void validate() const {
        fragment.validate();
        std::vector<bool> is_dangling(static_cast<size_t>(fragment.var_count()), false);
        for (int v : dangling) {
            if (v < 0 || v >= fragment.var_count())
                fail(errc::parse_error, "dangling variable out of range");
            if (is_dangling[static_cast<size_t>(v)])
                fail(errc::parse_error, "duplicate dangling variable");
            is_dangling[static_cast<size_t>(v)] = true;
        }
        for (int v : dangling)
            if (degree_of(fragment, v) < 1)
                fail(errc::precondition, "dangling variable occurs in no constraint");
    }
};

// Contracts all internal variables; result arity = number of dangling vars.
inline Signature gadget_signature(const Gadget& g, int dangling_limit = kDefaultDanglingLimit) {
    g.validate();
    int d = static_cast<int>(g.dangling.size());
    if (d > dangling_limit)
        fail(errc::cap_exceeded, "dangling count " + std::to_string(d) + " exceeds limit " +
                                     std::to_string(dangling_limit));
    Mode m = g.fragment.mode();

    std::vector<bool> is_dangling(static_cast<size_t>(g.fragment.var_count()), false);
    for (int v : g.dangling) is_dangling[static_cast<size_t>(v)] = true;
    std::vector<int> internals;
    for (int v = 0; v < g.fragment.var_count(); ++v)
        if (!is_dangling[static_cast<size_t>(v)]) internals.push_back(v);
    int ni = static_cast<int>(internals.size());

    std::vector<Scalar> table;
    table.reserve(size_t{1} << d);
    std::vector<int> assign(static_cast<size_t>(g.fragment.var_count()), 0);
    for (size_t ext = 0; ext < (size_t{1} << d); ++ext) {
        for (int j = 0; j < d; ++j)
            assign[static_cast<size_t>(g.dangling[static_cast<size_t>(j)])] =
                static_cast<int>((ext >> (d - 1 - j)) & 1);
        Scalar sum = Scalar::zero(m);
        for (size_t in = 0; in < (size_t{1} << ni); ++in) {
            for (int j = 0; j < ni; ++j)
                assign[static_cast<size_t>(internals[static_cast<size_t>(j)])] =
                    static_cast<int>((in >> (ni - 1 - j)) & 1);
            Scalar prod = Scalar::one(m);
            bool zero = false;
            for (const auto& c : g.fragment.constraints) {
                size_t idx = 0;
                for (int v : c.vars) idx = (idx << 1) | static_cast<size_t>(assign[static_cast<size_t>(v)]);
                const Scalar& val = g.fragment.fn_of(c).at(idx);
                if (val.is_zero()) {
                    zero = true;
                    break;
                }
                prod = prod * val;
            }
            if (!zero) sum = sum + prod;
        }
        table.push_back(sum);
    }
    return Signature(d, std::move(table));
}

// Gadget wrapping a single constraint with all its inputs dangling.
inline Gadget identity_gadget(const std::string& fn_name, const Signature& sig) {
    Gadget g;
    for (int i = 0; i < sig.arity(); ++i) g.fragment.add_variable();
    g.fragment.functions.emplace(fn_name, sig);
    std::vector<int> vars;
    for (int i = 0; i < sig.arity(); ++i) vars.push_back(i);
    g.fragment.add_constraint(fn_name, vars);
    g.dangling = vars;
    return g;
}

} // namespace cspkit
