#include <catch2/catch_amalgamated.hpp>

#include "cspkit/gadget.hpp"
#include "cspkit/signature.hpp"
#include "support/oracles.hpp"

using namespace cspkit;
namespace tt = cspkit::testing;

namespace {
Signature sym(std::vector<long> weights) {
    std::vector<Scalar> w;
    for (long x : weights) w.push_back(Scalar::exact(x));
    return from_symmetric(w);
}
} // namespace

TEST_CASE("pin basics") {
    // OR2 with one input pinned to 0 is the identity on the other.
    CHECK(pin(sym({0, 1, 1}), 1, 0) == make_delta(1));
    // Equality pinned to 1 selects delta_1.
    CHECK(pin(sym({1, 0, 1}), 2, 1) == make_delta(1));

    std::mt19937_64 rng(11);
    for (int it = 0; it < 30; ++it) {
        Signature f = tt::random_signature(rng, 4);
        for (int j = 1; j <= 4; ++j)
            for (int c = 0; c <= 1; ++c) CHECK(pin(f, j, c) == tt::pin_by_loops(f, j, c));
    }
    CHECK_THROWS_AS(pin(sym({1, 0, 1}), 3, 0), error);
}

TEST_CASE("pin order independence") {
    std::mt19937_64 rng(12);
    for (int it = 0; it < 20; ++it) {
        Signature f = tt::random_signature(rng, 5);
        // Pin x2=1 then x4=0, in both orders (indices shift after removal).
        Signature a = pin(pin(f, 2, 1), 3, 0);
        Signature b = pin(pin(f, 4, 0), 2, 1);
        CHECK(a == b);
    }
}

TEST_CASE("project basics and pin identity") {
    CHECK(project(sym({0, 1, 1}), 1) == Signature(1, {Scalar::exact(1), Scalar::exact(2)}));
    CHECK(project(sym({1, 0, 1}), 1) == Signature(1, {Scalar::exact(1), Scalar::exact(1)}));
    CHECK(project(tensor(make_delta(0), make_delta(1)), 2) == make_delta(0));

    std::mt19937_64 rng(13);
    for (int it = 0; it < 20; ++it) {
        Signature f = tt::random_signature(rng, 4);
        for (int j = 1; j <= 4; ++j) {
            Signature p = project(f, j);
            Signature q = pin(f, j, 0);
            Signature r = pin(f, j, 1);
            for (size_t i = 0; i < p.size(); ++i) CHECK(p.at(i) == q.at(i) + r.at(i));
        }
    }
}

TEST_CASE("tensor product") {
    Signature u(1, {Scalar::exact(1), Scalar::exact(2)});
    Signature t = tensor(u, u);
    CHECK(t == Signature(2, {Scalar::exact(1), Scalar::exact(2), Scalar::exact(2), Scalar::exact(4)}));
    CHECK(tensor(make_delta(0), make_delta(1)) ==
          Signature(2, {Scalar::exact(0), Scalar::exact(1), Scalar::exact(0), Scalar::exact(0)}));

    std::mt19937_64 rng(14);
    Signature f = tt::random_signature(rng, 2), g = tt::random_signature(rng, 3);
    Signature fg = tensor(f, g);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int it = 0; it < 20; ++it) {
        std::vector<int> bits;
        for (int j = 0; j < 5; ++j) bits.push_back(bit(rng));
        std::vector<int> fb(bits.begin(), bits.begin() + 2), gb(bits.begin() + 2, bits.end());
        CHECK(fg.value(bits) == f.value(fb) * g.value(gb));
    }
}

TEST_CASE("symmetric compress/expand round-trip") {
    std::mt19937_64 rng(15);
    for (int k = 0; k <= 6; ++k) {
        std::vector<Scalar> w;
        for (int j = 0; j <= k; ++j) w.push_back(Scalar(tt::random_exact(rng)));
        Signature f = from_symmetric(w);
        auto back = to_symmetric(f);
        REQUIRE(back.has_value());
        CHECK(back->size() == w.size());
        for (size_t j = 0; j < w.size(); ++j) CHECK((*back)[j] == w[j]);
    }
    // A non-symmetric table compresses to nothing.
    CHECK_FALSE(to_symmetric(Signature(2, {Scalar::exact(0), Scalar::exact(1), Scalar::exact(2),
                                           Scalar::exact(3)}))
                    .has_value());
}

TEST_CASE("tensor_root recovers factors") {
    Signature u(1, {Scalar::exact(1), Scalar::exact(2)});
    CHECK(tensor_root(tensor(u, u), 2) == u);
    CHECK(tensor_root(tensor(make_delta(0), make_delta(0)), 2) == make_delta(0));

    std::mt19937_64 rng(16);
    for (int it = 0; it < 25; ++it) {
        Signature f = tt::random_signature(rng, 2);
        if (f.is_zero()) continue;
        Signature cube = tensor_power(f, 3);
        Signature root = tensor_root(cube, 3);
        CHECK(tensor_power(root, 3) == cube);
    }

    // Not a tensor power: OR2 is entangled; a zero table has no root.
    CHECK_THROWS_AS(tensor_root(make_or2(), 2), error);
    CHECK_THROWS_AS(tensor_root(Signature::filled(2, Scalar::exact(0)), 2), error);
    CHECK_THROWS_AS(tensor_root(tt::random_signature(rng, 3), 2), error);
}

TEST_CASE("tensor_root picks the positive real branch when available") {
    Signature u(1, {Scalar::exact(2), Scalar::exact(-3)});
    Signature root = tensor_root(tensor(u, u), 2);
    CHECK(root == u); // leading diagonal entry 4 -> positive root 2
}

TEST_CASE("gadget_signature") {
    // A single binary constraint with both variables dangling is the function itself.
    std::mt19937_64 rng(17);
    Signature h = tt::random_signature(rng, 2);
    Gadget id = identity_gadget("H", h);
    CHECK(gadget_signature(id) == h);

    // Chain of two binary signatures equals their matrix product.
    Signature a = tt::random_signature(rng, 2), b = tt::random_signature(rng, 2);
    Gadget chain;
    int x1 = chain.fragment.add_variable();
    int x2 = chain.fragment.add_variable();
    int x3 = chain.fragment.add_variable();
    chain.fragment.functions.emplace("A", a);
    chain.fragment.functions.emplace("B", b);
    chain.fragment.add_constraint("A", {x1, x2});
    chain.fragment.add_constraint("B", {x2, x3});
    chain.dangling = {x1, x3};
    Signature prod = gadget_signature(chain);
    Matrix2 expect = as_matrix(a).mul(as_matrix(b));
    CHECK(prod == from_matrix(expect));
}

TEST_CASE("gadget_signature matches the closed form for the unary-dressed square") {
    // H'(x1,x2) = sum_x3 H(x1,x3) H(x3,x2) Ux(x3), H = ((1,1),(1,2)), Ux = [1,-1]
    Signature h(2, {Scalar::exact(1), Scalar::exact(1), Scalar::exact(1), Scalar::exact(2)});
    Signature ux(1, {Scalar::exact(1), Scalar::exact(-1)});
    Gadget g;
    int x1 = g.fragment.add_variable();
    int x2 = g.fragment.add_variable();
    int x3 = g.fragment.add_variable();
    g.fragment.functions.emplace("H", h);
    g.fragment.functions.emplace("Ux", ux);
    g.fragment.add_constraint("H", {x1, x3});
    g.fragment.add_constraint("H", {x3, x2});
    g.fragment.add_constraint("Ux", {x3});
    g.dangling = {x1, x2};
    Signature got = gadget_signature(g);

    // Closed form ((0,(bc-d)/c),((bc-d)/b,((bc)^2-d^2)/(bc))) at b=c=1, d=2,
    // cross-checked by the direct contraction above.
    Signature expect(2, {Scalar::exact(0), Scalar::exact(-1), Scalar::exact(-1), Scalar::exact(-3)});
    CHECK(got == expect);
}

TEST_CASE("double-edge merge realizes [0,c,d^2]") {
    // H(x1,x2) H(x2,x1) for H = ((0,1),(c,d)) is symmetric [0, c, d^2].
    Scalar c = Scalar::exact(3), d = Scalar::exact(5);
    Signature h(2, {Scalar::exact(0), Scalar::exact(1), c, d});
    Gadget g;
    int x1 = g.fragment.add_variable();
    int x2 = g.fragment.add_variable();
    g.fragment.functions.emplace("H", h);
    g.fragment.add_constraint("H", {x1, x2});
    g.fragment.add_constraint("H", {x2, x1});
    g.dangling = {x1, x2};
    Signature got = gadget_signature(g);
    CHECK(got == Signature(2, {Scalar::exact(0), c, c, d * d}));
}

TEST_CASE("gadget dangling limit") {
    Signature f = Signature::filled(7, Scalar::exact(1));
    Gadget g = identity_gadget("F", f);
    CHECK_THROWS_AS(gadget_signature(g), error);
    CHECK_NOTHROW(gadget_signature(g, /*dangling_limit=*/7));
}
