#include "doctest.h"

#include <random>

#include "caytop/coloring.hpp"
#include "caytop/ncomplex.hpp"
#include "caytop/pi1.hpp"
#include "oracles.hpp"

using namespace caytop;

namespace {

Graph cycle(int n) {
    Graph g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete(int n) {
    Graph g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

CayleyGraph cayley_of(const std::string& spec, const std::vector<std::string>& elems) {
    FgAbelianGroup g = FgAbelianGroup::parse(spec);
    std::vector<GroupElement> parsed;
    for (const std::string& s : elems) parsed.push_back(g.parse_element(s));
    return build_cayley(g, SymmetricSet::symmetrize(g, parsed), CayleyScope::whole_group);
}

} // namespace

TEST_CASE("neighborhood complex of a triangle is a hollow triangle") {
    Complex2 c = neighborhood_complex_2skeleton(complete(3));
    CHECK(c.vertices == std::vector<int>{0, 1, 2});
    CHECK(c.edges.size() == 3);
    CHECK(c.triangles.empty());
    AbelianInvariants h1 = h1_invariants(c);
    CHECK(h1.free_rank == 1);
    CHECK(h1.torsion.empty());
    CHECK_FALSE(h1_is_torsion(c));
}

TEST_CASE("neighborhood complex of K4 is a two-sphere") {
    Complex2 c = neighborhood_complex_2skeleton(complete(4));
    CHECK(c.vertices.size() == 4);
    CHECK(c.edges.size() == 6);
    CHECK(c.triangles.size() == 4);
    CHECK(h1_invariants(c) == AbelianInvariants{});
    CHECK(h1_is_torsion(c));
}

TEST_CASE("neighborhood complex of K5 has trivial first homology") {
    Complex2 c = neighborhood_complex_2skeleton(complete(5));
    CHECK(c.edges.size() == 10);
    CHECK(c.triangles.size() == 10);
    CHECK(h1_invariants(c) == AbelianInvariants{});
}

TEST_CASE("neighborhood complex of an even cycle splits into two cycles") {
    Complex2 c = neighborhood_complex_2skeleton(cycle(8));
    CHECK(c.vertices.size() == 8);
    CHECK(c.edges.size() == 8); // {v-1, v+1} for each v
    CHECK(c.triangles.empty());
    AbelianInvariants h1 = h1_invariants(c);
    CHECK(h1.free_rank == 2);
    CHECK(h1.torsion.empty());
}

TEST_CASE("isolated vertices do not enter the complex") {
    Graph g(5);
    g.add_edge(0, 1);
    Complex2 c = neighborhood_complex_2skeleton(g);
    CHECK(c.vertices == std::vector<int>{0, 1});
    CHECK(c.edges.empty());
    CHECK(h1_invariants(c) == AbelianInvariants{});
}

TEST_CASE("boundary operators compose to zero") {
    std::mt19937_64 eng(0x5eedd00d);
    for (int t = 0; t < 20; ++t) {
        Graph g = oracles::random_graph(6 + eng() % 3, 1 + static_cast<unsigned>(eng() % 3), 4,
                                        eng);
        Complex2 c = neighborhood_complex_2skeleton(g);
        IntMatrix d1 = boundary1(c);
        IntMatrix d2 = boundary2(c);
        CHECK(d1.rows == c.vertices.size());
        CHECK(d1.cols == c.edges.size());
        CHECK(d2.rows == c.edges.size());
        CHECK(d2.cols == c.triangles.size());
        if (d2.cols > 0) CHECK(multiply(d1, d2).is_zero());
    }
}

TEST_CASE("torsion shortcut agrees with the exact invariants") {
    std::mt19937_64 eng(0x5eedd11d);
    for (int t = 0; t < 30; ++t) {
        Graph g = oracles::random_graph(5 + eng() % 4, 1 + static_cast<unsigned>(eng() % 3), 4,
                                        eng);
        Complex2 c = neighborhood_complex_2skeleton(g);
        CHECK(h1_is_torsion(c) == is_torsion(h1_invariants(c)));
    }
}

TEST_CASE("halved circulant has first homology Z and no certificate") {
    CayleyGraph x = cayley_of("Z/8", {"1", "4"});
    AbelianInvariants h1 = h1_invariants(x.graph());
    CHECK(h1.free_rank == 1);
    CHECK(h1.torsion.empty());

    Chi4Certificate cert = chi4_certificate(x.graph());
    CHECK(cert.connected);
    CHECK(cert.non_bipartite);
    CHECK(cert.h1_torsion == false);
    CHECK_FALSE(cert.implied_lower_bound.has_value());
    CHECK(chromatic_number_exact(x.graph()) == 3); // consistent: no bound claimed
}

TEST_CASE("complete graph certificate fires and is sound") {
    Chi4Certificate cert = chi4_certificate(complete(4));
    CHECK(cert.connected);
    CHECK(cert.non_bipartite);
    CHECK(cert.h1_torsion == true);
    CHECK(cert.implied_lower_bound == 4);
    CHECK(chromatic_number_exact(complete(4)) == 4);
}

TEST_CASE("certificates stay silent on bipartite or disconnected graphs") {
    Chi4Certificate bip = chi4_certificate(cycle(6));
    CHECK_FALSE(bip.non_bipartite);
    CHECK_FALSE(bip.implied_lower_bound.has_value());

    Graph two(6);
    two.add_edge(0, 1);
    two.add_edge(2, 3);
    two.add_edge(3, 4);
    two.add_edge(4, 2);
    Chi4Certificate disc = chi4_certificate(two);
    CHECK_FALSE(disc.connected);
    CHECK_FALSE(disc.implied_lower_bound.has_value());
}

TEST_CASE("cayley certificate route uses the fundamental group") {
    CayleyGraph k4 = cayley_of("Z/2 x Z/2", {"(1,0)", "(0,1)", "(1,1)"});
    Chi4Certificate cert = chi4_certificate(k4);
    CHECK(cert.pi1_torsion == true);
    CHECK_FALSE(cert.h1_torsion.has_value()); // not computed by default
    CHECK(cert.implied_lower_bound == 4);

    Chi4Certificate both = chi4_certificate(k4, true);
    CHECK(both.h1_torsion == true);
    CHECK(both.pi1_torsion == true);

    Chi4Certificate quiet = chi4_certificate(cayley_of("Z/8", {"1", "4"}));
    CHECK(quiet.pi1_torsion == false);
    CHECK_FALSE(quiet.implied_lower_bound.has_value());
}

TEST_CASE("even fundamental group quotient matches neighborhood-complex homology") {
    struct Case {
        const char* spec;
        std::vector<std::string> elems;
    };
    for (const Case& c : {Case{"Z/3", {"1"}}, Case{"Z/2 x Z/2", {"(1,0)", "(0,1)", "(1,1)"}},
                          Case{"Z/5", {"1", "2"}}, Case{"Z/8", {"1", "4"}},
                          Case{"Z/9", {"1", "2"}},
                          Case{"Z/4 x Z/2", {"(1,0)", "(2,0)", "(0,1)"}}}) {
        CayleyGraph x = cayley_of(c.spec, c.elems);
        REQUIRE(is_connected(x.graph()));
        EvenPi1Result even = pi1_even_invariants(x);
        REQUIRE(even.interpretation_valid);
        CHECK(h1_invariants(x.graph()) == even.invariants);
    }
}
