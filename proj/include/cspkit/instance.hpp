#pragma once

#include <map>
#include <string>
#include <vector>

#include "cspkit/errors.hpp"
#include "cspkit/signature.hpp"

namespace cspkit {

inline constexpr int kDefaultBruteCap = 24;

/**
 * CspInstance: variables, a function table (name -> Signature) and a
 * constraint list. Z(I) sums the product of constraint values over all
 * 2^n assignments. Repeated variables inside one tuple are allowed (diagonal
 * restriction) and count multiply toward the degree.
 */
struct Constraint {
    std::string fn;
    std::vector<int> vars; // indices into the variable list
};

class CspInstance {
public:
    std::vector<std::string> variables;
    std::map<std::string, Signature> functions;
    std::vector<Constraint> constraints;

    int var_count() const { return static_cast<int>(variables.size()); }

    int add_variable(const std::string& name = "") {
        int id = var_count();
        variables.push_back(name.empty() ? "x" + std::to_string(id + 1) : name);
        return id;
    }

    const Signature& fn_of(const Constraint& c) const {
        auto it = functions.find(c.fn);
        if (it == functions.end()) fail(errc::parse_error, "unknown function: " + c.fn);
        return it->second;
    }

    void add_constraint(const std::string& fn, std::vector<int> vars) {
        constraints.push_back({fn, std::move(vars)});
    }

    // Registers the signature under a name derived from `hint`, reusing an
    // existing entry when the table already matches.
    std::string intern_function(const std::string& hint, const Signature& sig) {
        auto it = functions.find(hint);
        if (it == functions.end()) {
            functions.emplace(hint, sig);
            return hint;
        }
        if (it->second == sig) return hint;
        for (int i = 2;; ++i) {
            std::string name = hint + "_" + std::to_string(i);
            auto jt = functions.find(name);
            if (jt == functions.end()) {
                functions.emplace(name, sig);
                return name;
            }
            if (jt->second == sig) return name;
        }
    }

    Mode mode() const {
        for (const auto& [name, sig] : functions) return sig.mode();
        return Mode::exact;
    }

    void validate() const {
        for (const auto& c : constraints) {
            const Signature& f = fn_of(c);
            if (static_cast<int>(c.vars.size()) != f.arity())
                fail(errc::parse_error, "tuple length does not match arity of " + c.fn);
            for (int v : c.vars)
                if (v < 0 || v >= var_count()) fail(errc::parse_error, "variable index out of range");
        }
        Mode m = mode();
        for (const auto& [name, sig] : functions)
            if (sig.mode() != m) fail(errc::mode_mismatch, "mixed scalar modes across functions");
    }

    CspInstance to_approx() const {
        CspInstance out = *this;
        for (auto& [name, sig] : out.functions) sig = sig.to_approx();
        return out;
    }
};

// Maximum number of constraint slots any variable appears in (multiplicity
// counts: a variable used twice by one constraint counts twice).
inline int max_degree(const CspInstance& inst) {
    std::vector<int> deg(static_cast<size_t>(inst.var_count()), 0);
    for (const auto& c : inst.constraints)
        for (int v : c.vars) ++deg[static_cast<size_t>(v)];
    int d = 0;
    for (int x : deg) d = std::max(d, x);
    return d;
}

inline int degree_of(const CspInstance& inst, int var) {
    int d = 0;
    for (const auto& c : inst.constraints)
        for (int v : c.vars)
            if (v == var) ++d;
    return d;
}

// Z(I) by plain binary-counting enumeration of all assignments.
inline Scalar eval_csp_brute(const CspInstance& inst, int cap = kDefaultBruteCap) {
    inst.validate();
    int n = inst.var_count();
    if (n > cap)
        fail(errc::cap_exceeded,
             "brute-force cap exceeded: " + std::to_string(n) + " > " + std::to_string(cap));
    Mode m = inst.mode();

    // Pre-resolve signatures to avoid map lookups in the hot loop.
    struct Slot {
        const Signature* sig;
        const std::vector<int>* vars;
    };
    std::vector<Slot> slots;
    slots.reserve(inst.constraints.size());
    for (const auto& c : inst.constraints) slots.push_back({&inst.fn_of(c), &c.vars});

    Scalar total = Scalar::zero(m);
    size_t limit = size_t{1} << n;
    for (size_t a = 0; a < limit; ++a) {
        Scalar prod = Scalar::one(m);
        bool zero = false;
        for (const auto& s : slots) {
            size_t idx = 0;
            for (int v : *s.vars) idx = (idx << 1) | ((a >> (n - 1 - v)) & 1);
            const Scalar& val = s.sig->at(idx);
            if (val.is_zero()) {
                zero = true;
                break;
            }
            prod = prod * val;
        }
        if (!zero) total = total + prod;
    }
    return total;
}

/**
 * HolantGrid: vertices carry signatures; edges join (vertex, port) pairs and
 * every port is used exactly once. An optional scalar ledger multiplies the
 * Holant value (used by conversions that factor constants out of the grid).
 */
struct PortRef {
    int vertex;
    int port;
    bool operator==(const PortRef& o) const { return vertex == o.vertex && port == o.port; }
};

struct GridEdge {
    PortRef a, b;
};

class HolantGrid {
public:
    std::vector<Signature> vertices;
    std::vector<GridEdge> edges;
    Scalar ledger = Scalar::exact(1);

    int add_vertex(Signature s) {
        vertices.push_back(std::move(s));
        return static_cast<int>(vertices.size()) - 1;
    }

    void add_edge(int v, int p, int u, int q) { edges.push_back({{v, p}, {u, q}}); }

    Mode mode() const { return vertices.empty() ? ledger.mode() : vertices[0].mode(); }

    void validate() const {
        std::vector<std::vector<int>> used(vertices.size());
        for (size_t i = 0; i < vertices.size(); ++i)
            used[i].assign(static_cast<size_t>(vertices[i].arity()), 0);
        auto touch = [&](const PortRef& p) {
            if (p.vertex < 0 || p.vertex >= static_cast<int>(vertices.size()))
                fail(errc::parse_error, "edge references missing vertex");
            if (p.port < 0 || p.port >= vertices[static_cast<size_t>(p.vertex)].arity())
                fail(errc::parse_error, "edge references missing port");
            ++used[static_cast<size_t>(p.vertex)][static_cast<size_t>(p.port)];
        };
        for (const auto& e : edges) {
            touch(e.a);
            touch(e.b);
        }
        for (size_t v = 0; v < used.size(); ++v)
            for (size_t p = 0; p < used[v].size(); ++p)
                if (used[v][p] != 1)
                    fail(errc::parse_error, "port (" + std::to_string(v) + "," + std::to_string(p) +
                                                ") used " + std::to_string(used[v][p]) + " times");
        Mode m = mode();
        for (const auto& s : vertices)
            if (s.mode() != m) fail(errc::mode_mismatch, "mixed scalar modes across vertices");
    }

    HolantGrid to_approx() const {
        HolantGrid g = *this;
        for (auto& s : g.vertices) s = s.to_approx();
        g.ledger = g.ledger.to_approx();
        return g;
    }
};

// Sum over all edge assignments of the vertex-signature product, times ledger.
inline Scalar eval_holant_brute(const HolantGrid& grid, int cap = kDefaultBruteCap) {
    grid.validate();
    int m = static_cast<int>(grid.edges.size());
    if (m > cap)
        fail(errc::cap_exceeded,
             "holant brute cap exceeded: " + std::to_string(m) + " > " + std::to_string(cap));
    Mode mode = grid.mode();

    // For each vertex, the list of (edge index) per port.
    std::vector<std::vector<int>> port_edge(grid.vertices.size());
    for (size_t v = 0; v < grid.vertices.size(); ++v)
        port_edge[v].assign(static_cast<size_t>(grid.vertices[v].arity()), -1);
    for (int e = 0; e < m; ++e) {
        const auto& ed = grid.edges[static_cast<size_t>(e)];
        port_edge[static_cast<size_t>(ed.a.vertex)][static_cast<size_t>(ed.a.port)] = e;
        port_edge[static_cast<size_t>(ed.b.vertex)][static_cast<size_t>(ed.b.port)] = e;
    }

    Scalar total = Scalar::zero(mode);
    size_t limit = size_t{1} << m;
    for (size_t a = 0; a < limit; ++a) {
        Scalar prod = Scalar::one(mode);
        bool zero = false;
        for (size_t v = 0; v < grid.vertices.size() && !zero; ++v) {
            size_t idx = 0;
            for (int e : port_edge[v]) idx = (idx << 1) | ((a >> (m - 1 - e)) & 1);
            const Scalar& val = grid.vertices[v].at(idx);
            if (val.is_zero())
                zero = true;
            else
                prod = prod * val;
        }
        if (!zero) total = total + prod;
    }
    return total * grid.ledger;
}

/** BipartiteGrid: a HolantGrid with a two-coloring; every edge crosses sides. */
enum class Side : uint8_t { left, right };

class BipartiteGrid : public HolantGrid {
public:
    std::vector<Side> sides;

    int add_vertex_on(Side s, Signature sig) {
        sides.push_back(s);
        return HolantGrid::add_vertex(std::move(sig));
    }

    void validate_bipartite() const {
        validate();
        if (sides.size() != vertices.size())
            fail(errc::parse_error, "side list does not match vertex list");
        for (const auto& e : edges)
            if (sides[static_cast<size_t>(e.a.vertex)] == sides[static_cast<size_t>(e.b.vertex)])
                fail(errc::parse_error, "edge does not cross sides");
    }
};

/**
 * #CSP -> bipartite Holant: each variable of degree d becomes a left =_d
 * vertex, each constraint a right vertex. Degree-0 variables contribute a
 * factor 2 to the ledger instead of a vertex, keeping the left family within
 * {=_1, =_2, ...}.
 */
inline BipartiteGrid csp_to_holant(const CspInstance& inst) {
    inst.validate();
    Mode m = inst.mode();
    BipartiteGrid g;
    g.ledger = Scalar::one(m);

    std::vector<int> deg(static_cast<size_t>(inst.var_count()), 0);
    for (const auto& c : inst.constraints)
        for (int v : c.vars) ++deg[static_cast<size_t>(v)];

    std::vector<int> var_vertex(static_cast<size_t>(inst.var_count()), -1);
    std::vector<int> next_port(static_cast<size_t>(inst.var_count()), 0);
    for (int v = 0; v < inst.var_count(); ++v) {
        if (deg[static_cast<size_t>(v)] == 0) {
            g.ledger = g.ledger * (Scalar::one(m) + Scalar::one(m));
            continue;
        }
        var_vertex[static_cast<size_t>(v)] =
            g.add_vertex_on(Side::left, make_equality(deg[static_cast<size_t>(v)], m));
    }
    for (const auto& c : inst.constraints) {
        int rv = g.add_vertex_on(Side::right, inst.fn_of(c));
        for (size_t slot = 0; slot < c.vars.size(); ++slot) {
            int v = c.vars[slot];
            int lv = var_vertex[static_cast<size_t>(v)];
            g.add_edge(lv, next_port[static_cast<size_t>(v)]++, rv, static_cast<int>(slot));
        }
    }
    g.validate_bipartite();
    return g;
}

// Convenience: a #VC instance (every edge OR2) from an edge list.
inline CspInstance vc_instance(int n, const std::vector<std::pair<int, int>>& edge_list,
                               Mode m = Mode::exact) {
    CspInstance inst;
    for (int i = 0; i < n; ++i) inst.add_variable();
    inst.functions.emplace("OR2", make_or2(m));
    for (auto [u, v] : edge_list) inst.add_constraint("OR2", {u, v});
    inst.validate();
    return inst;
}

} // namespace cspkit
