#include <doctest.h>

#include <numeric>

#include "dsrg/errors.hpp"
#include "dsrg/group.hpp"

using namespace dsrg;

namespace {
// pair index in a semidirect product with normal factor of order na
int pidx(int i, int j, int na) { return i + na * j; }
}  // namespace

TEST_CASE("cyclic groups") {
    auto c1 = cyclic(1);
    CHECK(c1.order() == 1);
    CHECK(c1.op(0, 0) == 0);

    auto c6 = cyclic(6);
    CHECK(c6.op(2, 5) == 1);  // x^2 x^5 = x
    CHECK(c6.inv(2) == 4);
    CHECK(c6.name(3) == "x^3");

    auto c7 = cyclic(7);
    for (int g = 1; g < 7; ++g) {
        int ord = 1, x = g;
        while (x != 0) {
            x = c7.op(x, g);
            ++ord;
        }
        CHECK(ord == 7);
    }
}

TEST_CASE("semidirect C3 x| C2 is the symmetric group on three letters") {
    auto g = semidirect_cyclic({3, 2, 2});
    CHECK(g.order() == 6);
    int a = pidx(1, 0, 3), x = pidx(0, 1, 3), a2x = pidx(2, 1, 3);
    CHECK(g.op(x, a) == a2x);              // x a = a^2 x
    CHECK(g.op(a, x) != g.op(x, a));       // nonabelian
    CHECK(g.name(a) == "a");
    CHECK(g.name(a2x) == "a^2 x");
}

TEST_CASE("semidirect C4 x| C2 with inversion is dihedral of order 8") {
    auto g = dihedral(4);
    CHECK(g.order() == 8);
    int b = pidx(1, 0, 4), a = pidx(0, 1, 4);
    // a b = b^-1 a
    CHECK(g.op(a, b) == pidx(3, 1, 4));
    CHECK(g.op(g.op(a, a), 0) == 0);  // a^2 = e
    CHECK(g.op(b, a) == pidx(1, 1, 4));
}

TEST_CASE("trivial action gives the direct product") {
    auto g = semidirect_cyclic({4, 3, 1});
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v) CHECK(g.op(u, v) == g.op(v, u));
}

TEST_CASE("invalid semidirect actions are rejected") {
    CHECK_THROWS_AS(semidirect_cyclic({4, 2, 2}), PreconditionError);  // gcd(2,4) != 1
    CHECK_THROWS_AS(semidirect_cyclic({5, 3, 2}), PreconditionError);  // 2^3 != 1 mod 5
}

TEST_CASE("nested semidirect group of order p^2 n") {
    auto g = nested_semidirect_314(3, 2, 2);  // full axiom check runs at construction
    CHECK(g.order() == 18);
    // theta(y)(x) = a^-1 x a = a x  (since x a = a^2 x)
    int a = 1, x = 0 + 3 * 1, y = 0 + 3 * (0 + 2 * 1);
    int ax = 1 + 3 * 1;
    CHECK(g.op(g.op(g.inv(a), x), a) == ax);
    // (e,y)(x,e) = (theta(y)(x), y)
    int ax_y = 1 + 3 * (1 + 2 * 1);
    CHECK(g.op(y, x) == ax_y);

    CHECK(nested_semidirect_314(5, 4, 2).order() == 100);
    CHECK_THROWS_AS(nested_semidirect_314(4, 2, 3), PreconditionError);  // p not prime
    CHECK_THROWS_AS(nested_semidirect_314(3, 2, 1), PreconditionError);  // s = 1
    CHECK_THROWS_AS(nested_semidirect_314(3, 3, 2), PreconditionError);  // s^n != 1
}

TEST_CASE("multiplicative_order") {
    CHECK(multiplicative_order(2, 7) == 3);
    CHECK(multiplicative_order(1, 5) == 1);
    CHECK(multiplicative_order(3, 7) == 6);
    CHECK_THROWS_AS(multiplicative_order(2, 8), PreconditionError);
}

TEST_CASE("primitive_root") {
    CHECK(primitive_root(3) == 2);
    CHECK(primitive_root(7) == 3);
    CHECK(primitive_root(4) == 3);
    CHECK(!primitive_root(8).has_value());
    CHECK(!primitive_root(15).has_value());
}

TEST_CASE("q_orbit_check on power maps of cyclic groups") {
    auto c7 = cyclic(7, "a");
    auto res = q_orbit_check(c7, power_map(c7, 2), 3);
    CHECK(res.ok);
    REQUIRE(res.orbits.size() == 2);
    CHECK(res.orbits[0] == std::vector<int>{1, 2, 4});
    CHECK(res.orbits[1] == std::vector<int>{3, 6, 5});

    CHECK(!q_orbit_check(c7, power_map(c7, 3), 3).ok);  // order 6 map

    auto c5 = cyclic(5, "a");
    std::vector<int> id{0, 1, 2, 3, 4};
    auto r1 = q_orbit_check(c5, id, 1);
    CHECK(r1.ok);
    CHECK(r1.orbits.size() == 4);

    std::vector<int> notmap{0, 2, 1, 3, 3};
    CHECK_THROWS_AS(q_orbit_check(c5, notmap, 2), PreconditionError);
    std::vector<int> nothom{0, 2, 4, 1, 3};  // bijection fixing e but a -> a^2 is x2 map: ok
    CHECK(q_orbit_check(c5, nothom, 4).ok);  // a -> a^2 has one orbit of size 4
}

TEST_CASE("orbit_representatives picks least indices") {
    auto c7 = cyclic(7, "a");
    auto res = q_orbit_check(c7, power_map(c7, 2), 3);
    auto reps = orbit_representatives(c7, res.orbits);
    CHECK(reps.elems() == std::vector<int>{1, 3});

    for (auto [m, s, q] : {std::tuple{7, 2, 3}, {5, 4, 2}, {9, 8, 2}, {13, 3, 3}, {5, 1, 1}}) {
        auto cm = cyclic(m, "a");
        auto r = q_orbit_check(cm, power_map(cm, s), q);
        REQUIRE(r.ok);
        CHECK(static_cast<int>(orbit_representatives(cm, r.orbits).size()) == (m - 1) / q);
    }
}

TEST_CASE("left_cosets") {
    auto g = semidirect_cyclic({3, 2, 2});
    CHECK(left_cosets(g, Subset(g, {0})).size() == 6);
    std::vector<int> all(6);
    std::iota(all.begin(), all.end(), 0);
    CHECK(left_cosets(g, Subset(g, all)).size() == 1);

    auto cosets = left_cosets(g, cyclic_subgroup(g, pidx(0, 1, 3)));
    REQUIRE(cosets.size() == 3);
    for (const auto& c : cosets) CHECK(c.size() == 2);

    CHECK_THROWS_AS(left_cosets(g, Subset(g, {1})), PreconditionError);  // not a subgroup
}

TEST_CASE("set_stabilizer") {
    auto g = semidirect_cyclic({3, 2, 2});
    std::vector<int> all(6);
    std::iota(all.begin(), all.end(), 0);
    CHECK(set_stabilizer(g, Subset(g, all)).size() == 6);

    // S = {a, ax}: the stabilizer is {e, a^2 x}, not just {e}
    Subset s(g, {pidx(1, 0, 3), pidx(1, 1, 3)});
    auto stab = set_stabilizer(g, s);
    CHECK(stab.elems() == std::vector<int>{0, pidx(2, 1, 3)});

    // a K-left-translate union absorbs K on the left
    Subset k = cyclic_subgroup(g, pidx(1, 0, 3));  // <a>
    std::vector<int> kx;
    for (int e : k.elems()) kx.push_back(g.op(e, pidx(0, 1, 3)));
    auto stab2 = set_stabilizer(g, Subset(g, kx));
    for (int e : k.elems()) CHECK(stab2.contains(e));
    CHECK(is_subgroup(g, stab2));
}

TEST_CASE("all_subgroups of the order-6 nonabelian group") {
    auto g = semidirect_cyclic({3, 2, 2});
    auto subs = all_subgroups(g);
    CHECK(subs.size() == 6);  // e, three order-2, one order-3, the whole group
}

TEST_CASE("semidirect_product validates the action") {
    auto c5 = cyclic(5);
    auto c2 = cyclic(2, "y");
    // j = 1 acts by a -> a^2, which has order 4, not 2: not a homomorphism
    CHECK_THROWS_AS(
        semidirect_product(c5, c2, [](int j, int i) { return j ? (2 * i) % 5 : i; }),
        PreconditionError);
    // constant map is not a bijection
    CHECK_THROWS_AS(semidirect_product(c5, c2, [](int j, int i) { return j ? 0 : i; }),
                    PreconditionError);
}

TEST_CASE("q_orbit_check rejects bijections that are not homomorphisms") {
    auto c5 = cyclic(5, "a");
    std::vector<int> swap_only{0, 2, 1, 3, 4};  // fixes e, swaps a and a^2
    CHECK_THROWS_AS(q_orbit_check(c5, swap_only, 2), PreconditionError);
}

TEST_CASE("double_coset") {
    auto g = semidirect_cyclic({3, 2, 2});
    Subset h = cyclic_subgroup(g, pidx(0, 1, 3));  // {e, x}
    Subset s(g, {pidx(1, 0, 3)});                  // {a}
    auto hsh = double_coset(g, h, s);
    // HSH = {a, ax, a^2 x, a^2}
    CHECK(hsh.elems() ==
          std::vector<int>{pidx(1, 0, 3), pidx(2, 0, 3), pidx(1, 1, 3), pidx(2, 1, 3)});
}
