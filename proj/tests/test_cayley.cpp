#include "doctest.h"

#include "caytop/cayley.hpp"
#include "oracles.hpp"

using namespace caytop;

namespace {

SymmetricSet set_of(const FgAbelianGroup& g, const std::vector<std::string>& elems) {
    std::vector<GroupElement> parsed;
    for (const std::string& s : elems) parsed.push_back(g.parse_element(s));
    return SymmetricSet::symmetrize(g, parsed);
}

} // namespace

TEST_CASE("symmetrize keeps first-seen order and appends negatives") {
    FgAbelianGroup g = FgAbelianGroup::parse("Z/8");
    SymmetricSet s = set_of(g, {"1", "4"});
    std::vector<GroupElement> want = {{1}, {7}, {4}};
    CHECK(s.elements() == want);
    CHECK(s.inverse_index(0) == 1);
    CHECK(s.inverse_index(1) == 0);
    CHECK(s.self_inverse(2));

    SymmetricSet t = set_of(g, {"1", "2"});
    std::vector<GroupElement> want2 = {{1}, {7}, {2}, {6}};
    CHECK(t.elements() == want2);
}

TEST_CASE("symmetrize drops identities and duplicates") {
    FgAbelianGroup g = FgAbelianGroup::parse("Z/8");
    SymmetricSet s = set_of(g, {"0", "1", "7", "1"});
    std::vector<GroupElement> want = {{1}, {7}};
    CHECK(s.elements() == want);
    CHECK(set_of(g, {}).empty());
    CHECK(set_of(g, {"0"}).empty());
}

TEST_CASE("from_elements validates symmetry") {
    FgAbelianGroup g = FgAbelianGroup::parse("Z/8");
    auto parse = [&](const std::vector<std::string>& xs) {
        std::vector<GroupElement> out;
        for (const std::string& x : xs) out.push_back(g.parse_element(x));
        return out;
    };
    CHECK(SymmetricSet::from_elements(g, parse({"1", "7", "4"})).size() == 3);
    CHECK_THROWS_AS(SymmetricSet::from_elements(g, parse({"1"})), std::invalid_argument);
    CHECK_THROWS_AS(SymmetricSet::from_elements(g, parse({"1", "7", "7"})),
                    std::invalid_argument);
    CHECK_THROWS_AS(SymmetricSet::from_elements(g, parse({"0"})), std::invalid_argument);
}

TEST_CASE("set lookup") {
    FgAbelianGroup g = FgAbelianGroup::parse("Z/8");
    SymmetricSet s = set_of(g, {"1", "4"});
    CHECK(s.index_of(g.parse_element("7")) == 1);
    CHECK(s.find(g.parse_element("2")) == std::nullopt);
    CHECK_THROWS_AS(s.index_of(g.parse_element("2")), std::invalid_argument);
}

TEST_CASE("whole-group cayley graph of a circulant") {
    FgAbelianGroup g = FgAbelianGroup::parse("Z/8");
    CayleyGraph x = build_cayley(g, set_of(g, {"1", "4"}), CayleyScope::whole_group);
    CHECK(x.graph().num_vertices() == 8);
    CHECK(x.graph().num_edges() == 12); // 3-regular
    CHECK(x.graph().adjacent(0, 1));
    CHECK(x.graph().adjacent(0, 7));
    CHECK(x.graph().adjacent(0, 4));
    CHECK_FALSE(x.graph().adjacent(0, 2));
    CHECK(is_connected(x.graph()));

    // step labels match the generator order (1, 7, 4)
    CHECK(x.step_generator(0, 1) == 0);
    CHECK(x.step_generator(1, 0) == 1);
    CHECK(x.step_generator(0, 4) == 2);
    CHECK_THROWS_AS(x.step_generator(0, 2), internal_error);

    CHECK(x.vertex_index(g.parse_element("5")) == 5);
    CHECK(x.find_vertex(g.parse_element("5")) == 5);
}

TEST_CASE("complete graphs from all non-identity elements") {
    FgAbelianGroup g = FgAbelianGroup::parse("Z/2 x Z/2");
    CayleyGraph k4 =
        build_cayley(g, set_of(g, {"(1,0)", "(0,1)", "(1,1)"}), CayleyScope::whole_group);
    CHECK(k4.graph().num_vertices() == 4);
    CHECK(k4.graph().num_edges() == 6);
}

TEST_CASE("generated-subgroup scope walks the closure only") {
    FgAbelianGroup g = FgAbelianGroup::parse("Z/8");
    SymmetricSet s = set_of(g, {"2"});
    CayleyGraph sub = build_cayley(g, s, CayleyScope::generated_subgroup);
    CHECK(sub.graph().num_vertices() == 4); // {0, 2, 4, 6}
    CHECK(sub.graph().num_edges() == 4);    // a 4-cycle
    CHECK(is_connected(sub.graph()));
    CHECK(sub.vertex(0) == g.zero());

    CayleyGraph whole = build_cayley(g, s, CayleyScope::whole_group);
    CHECK(whole.graph().num_vertices() == 8);
    CHECK(components(whole.graph()).size() == 2);

    Graph comp = identity_component(whole);
    CHECK(comp.num_vertices() == 4);
    CHECK(comp.num_edges() == 4);
    CHECK(identity_component(sub).num_vertices() == 4);
}

TEST_CASE("infinite groups need the generated-subgroup scope and finite closure") {
    FgAbelianGroup z = FgAbelianGroup::parse("Z x Z/2");
    SymmetricSet torsion = set_of(z, {"(0,1)"});
    CHECK_THROWS_AS(build_cayley(z, torsion, CayleyScope::whole_group), std::domain_error);
    CayleyGraph x = build_cayley(z, torsion, CayleyScope::generated_subgroup);
    CHECK(x.graph().num_vertices() == 2);
    CHECK(x.graph().num_edges() == 1);

    SymmetricSet free = set_of(z, {"(1,0)"});
    CHECK_THROWS_AS(build_cayley(z, free, CayleyScope::generated_subgroup), std::domain_error);
}

TEST_CASE("empty symmetric set gives an edgeless graph") {
    FgAbelianGroup g = FgAbelianGroup::parse("Z/3");
    CayleyGraph x = build_cayley(g, SymmetricSet(), CayleyScope::whole_group);
    CHECK(x.graph().num_vertices() == 3);
    CHECK(x.graph().num_edges() == 0);
    CHECK(identity_component(x).num_vertices() == 1);

    CayleyGraph sub = build_cayley(g, SymmetricSet(), CayleyScope::generated_subgroup);
    CHECK(sub.graph().num_vertices() == 1);
}

TEST_CASE("mismatched set and group are rejected") {
    FgAbelianGroup g = FgAbelianGroup::parse("Z/8");
    FgAbelianGroup h = FgAbelianGroup::parse("Z/9");
    SymmetricSet s = set_of(h, {"1"});
    CHECK_THROWS_AS(build_cayley(g, s, CayleyScope::whole_group), std::invalid_argument);
}

TEST_CASE("box product of cycles matches the product cayley graph") {
    FgAbelianGroup z3 = FgAbelianGroup::parse("Z/3");
    Graph c3 = build_cayley(z3, set_of(z3, {"1"}), CayleyScope::whole_group).graph();

    FgAbelianGroup g = FgAbelianGroup::parse("Z/3 x Z/3");
    Graph torus =
        build_cayley(g, set_of(g, {"(1,0)", "(0,1)"}), CayleyScope::whole_group).graph();

    // lexicographic element order equals the box-product index convention
    Graph boxed = box_product(c3, c3);
    CHECK(boxed.num_vertices() == torus.num_vertices());
    CHECK(boxed.edges() == torus.edges());
}

TEST_CASE("regularity holds across random small instances") {
    std::mt19937_64 eng(0x5eedcafe);
    for (const char* spec : {"Z/5", "Z/9", "Z/2 x Z/4", "Z/3 x Z/3", "Z/12"}) {
        FgAbelianGroup g = FgAbelianGroup::parse(spec);
        auto subsets = oracles::all_symmetric_subsets(g);
        for (const auto& elems : subsets) {
            SymmetricSet s = SymmetricSet::from_elements(g, elems);
            CayleyGraph x = build_cayley(g, s, CayleyScope::whole_group);
            for (std::size_t v = 0; v < x.graph().num_vertices(); ++v)
                CHECK(x.graph().degree(static_cast<int>(v)) == s.size());
        }
        (void)eng;
    }
}
