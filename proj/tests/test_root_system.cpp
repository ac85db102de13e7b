#include <doctest.h>

#include <set>

#include "qbg/errors.hpp"
#include "qbg/root_system.hpp"
#include "qbg/weyl.hpp"

using namespace qbg;

namespace {

struct TypeCase {
    char type;
    int rank;
    int positive;
};

const TypeCase kTypes[] = {{'A', 1, 1},  {'A', 2, 3},  {'A', 3, 6},  {'A', 4, 10}, {'B', 2, 4},
                           {'B', 3, 9},  {'B', 4, 16}, {'C', 2, 4},  {'C', 3, 9},  {'C', 4, 16},
                           {'D', 4, 12}, {'D', 5, 20}, {'E', 6, 36}, {'F', 4, 24}, {'G', 2, 6}};

// Length of r_alpha counted directly on root vectors.
int reflection_length(const RootSystem& rs, int a) {
    int n = 0;
    for (int b = 0; b < rs.num_positive(); ++b) {
        Vec img = rs.reflect(rs.root(a), rs.root(b));
        bool negative = false;
        for (Int c : img)
            if (c != 0) {
                negative = c < 0;
                break;
            }
        n += negative;
    }
    return n;
}

}  // namespace

TEST_CASE("positive root counts and Cartan invariants") {
    for (const auto& t : kTypes) {
        CAPTURE(t.type);
        CAPTURE(t.rank);
        RootSystem rs = RootSystem::build(t.type, t.rank);
        CHECK(rs.num_positive() == t.positive);
        for (int i = 0; i < t.rank; ++i)
            for (int j = 0; j < t.rank; ++j) {
                if (i == j) {
                    CHECK(rs.cartan(i, j) == 2);
                } else {
                    CHECK(rs.cartan(i, j) <= 0);
                    CHECK((rs.cartan(i, j) == 0) == (rs.cartan(j, i) == 0));
                }
                CHECK(rs.pair(rs.coroot(rs.simple(i)), rs.root(rs.simple(j))) == rs.cartan(i, j));
            }
        // closure under reflect-then-normalize
        for (int a = 0; a < rs.num_positive(); ++a)
            for (int i = 0; i < t.rank; ++i) {
                int img = rs.reflect_simple(i, a);
                CHECK(img >= 0);
                CHECK(rs.index_of(rs.root(img)) == img);
            }
        // theta dominant and maximal
        Vec th = rs.root(rs.theta());
        for (int i = 0; i < t.rank; ++i) CHECK(rs.pair(rs.coroot(rs.simple(i)), th) >= 0);
        for (int a = 0; a < rs.num_positive(); ++a)
            for (int i = 0; i < t.rank; ++i) CHECK(rs.root(a)[i] <= th[i]);
    }
}

TEST_CASE("small rank data") {
    RootSystem a2 = RootSystem::build('A', 2);
    CHECK(a2.root(a2.theta()) == Vec{1, 1});
    CHECK(a2.pair(a2.coroot(a2.theta()), a2.two_rho()) == 4);
    CHECK(a2.reflect(a2.root(a2.theta()), Vec{1, 0}) == Vec{0, -1});
    CHECK(a2.reflect(Vec{1, 0}, Vec{1, 0}) == Vec{-1, 0});

    RootSystem c2 = RootSystem::build('C', 2);
    CHECK(c2.root(c2.theta()) == Vec{2, 1});
    CHECK(c2.cartan(0, 1) == -2);
    CHECK(c2.cartan(1, 0) == -1);
    CHECK(c2.two_rho() == Vec{4, 3});
    CHECK(c2.pair(c2.coroot(c2.simple(0)), c2.two_rho()) == 2);
    CHECK(c2.reflect(Vec{1, 0}, Vec{0, 1}) == Vec{2, 1});
    CHECK(c2.coroot_of(Vec{1, 1}) == Vec{1, 2});

    RootSystem g2 = RootSystem::build('G', 2);
    CHECK(g2.num_positive() == 6);
    CHECK(g2.root(g2.theta()) == Vec{3, 2});

    CHECK_THROWS_AS(RootSystem::build('D', 3), ConfigError);
    CHECK_THROWS_AS(RootSystem::build('G', 3), ConfigError);
    CHECK_THROWS_AS(RootSystem::build('X', 2), ConfigError);
}

TEST_CASE("quantum roots agree with the reflection length criterion") {
    for (const auto& t : kTypes) {
        RootSystem rs = RootSystem::build(t.type, t.rank);
        for (int a = 0; a < rs.num_positive(); ++a) {
            CAPTURE(rs.name());
            CAPTURE(format_vec(rs.root(a)));
            int len = reflection_length(rs, a);
            Int bound = rs.pair(rs.coroot(a), rs.two_rho()) - 1;
            CHECK(len <= bound);
            CHECK((len == bound) == rs.is_quantum_root(a));
        }
    }
    RootSystem c2 = RootSystem::build('C', 2);
    CHECK_FALSE(c2.is_quantum_root(c2.index_of(Vec{1, 1})));
    CHECK(c2.is_quantum_root(c2.theta()));
    CHECK(reflection_length(c2, c2.index_of(Vec{1, 1})) == 3);
    RootSystem a3 = RootSystem::build('A', 3);
    for (int a = 0; a < a3.num_positive(); ++a) CHECK(a3.is_quantum_root(a));
}

TEST_CASE("coroot equivariance") {
    for (const auto& t : {TypeCase{'B', 3, 9}, TypeCase{'C', 3, 9}, TypeCase{'G', 2, 6}, TypeCase{'F', 4, 24}}) {
        WeylGroup W(RootSystem::build(t.type, t.rank));
        const RootSystem& rs = W.roots();
        for (Elem w = 0; w < W.size(); w += (W.size() > 200 ? 7 : 1))
            for (int a = 0; a < rs.num_roots(); ++a)
                CHECK(rs.coroot(W.act(w, a)) == W.act_coroot(w, rs.coroot(a)));
    }
}

TEST_CASE("special node coefficients are at most one") {
    for (const auto& t : kTypes) {
        RootSystem rs = RootSystem::build(t.type, t.rank);
        for (int i : rs.special_nodes())
            for (int a = 0; a < rs.num_positive(); ++a) CHECK(rs.root(a)[i] <= 1);
    }
    CHECK(RootSystem::build('C', 3).special_nodes() == std::vector<int>{2});
    CHECK(RootSystem::build('B', 3).special_nodes() == std::vector<int>{0});
    CHECK(RootSystem::build('E', 6).special_nodes() == std::vector<int>{0, 5});
    CHECK(RootSystem::build('G', 2).special_nodes().empty());
}

TEST_CASE("parabolic data") {
    RootSystem a3 = RootSystem::build('A', 3);
    Parabolic J = make_parabolic(a3, parse_nodes("1,3", 3));
    CHECK(J.components.size() == 2);
    CHECK(J.two_rho_J == Vec{1, 0, 1});
    CHECK(format_nodes(J.mask) == "{1,3}");
    CHECK_THROWS_AS(parse_nodes("4", 3), ConfigError);
    CHECK_THROWS_AS(parse_nodes("x", 3), ConfigError);

    // z(2rho - 2rho_J) = 2rho - 2rho_J for z in W_J
    for (const auto& t : kTypes) {
        if (t.rank > 4) continue;
        WeylGroup W(RootSystem::build(t.type, t.rank));
        const RootSystem& rs = W.roots();
        for (NodeSet m = 0; m < (NodeSet{1} << t.rank); ++m) {
            Parabolic P = make_parabolic(rs, m);
            Vec d = sub(rs.two_rho(), P.two_rho_J);
            for (Elem z : W.subgroup(P)) CHECK(W.act_root(z, d) == d);
        }
    }
}

TEST_CASE("coroot lattice helpers") {
    RootSystem a2 = RootSystem::build('A', 2);
    auto mu = a2.coroot_from_pairings(Vec{0, -6});
    REQUIRE(mu);
    CHECK(*mu == Vec{-2, -4});
    CHECK(a2.pairings(*mu) == Vec{0, -6});
    CHECK_FALSE(a2.coroot_from_pairings(Vec{0, 1}));
    CHECK(a2.coweight_index() == 3);
    CHECK(RootSystem::build('G', 2).coweight_index() == 1);
    CHECK(RootSystem::build('D', 4).coweight_index() == 2);
}
