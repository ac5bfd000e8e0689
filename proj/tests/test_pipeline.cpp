#include "test_util.hpp"

using namespace testutil;

TEST(Pipeline, StarCanonicalTd) {
    const auto k13 = instances::star(3);
    const auto c = canonical_td(k13);
    EXPECT_TRUE(c.ok());
    EXPECT_EQ(c.td.size(), 4);
    EXPECT_FALSE(c.classification.into_maximal_cliques);
}

TEST(Pipeline, ExampleCounts) {
    const std::pair<int, std::uint64_t> cases[] = {{3, 3}, {4, 16}, {5, 125}};
    for (auto [t, trees] : cases) {
        const auto r = reproduce_example_51(t);
        EXPECT_EQ(r.trees, trees);
        EXPECT_EQ(r.valid, trees);
        EXPECT_EQ(r.canonical, 0U);
        EXPECT_TRUE(r.star_canonical);
        EXPECT_TRUE(r.star_into_cliques);
        EXPECT_FALSE(r.star_into_maximal_cliques);
    }
    EXPECT_EQ(error_of([] { reproduce_example_51(2); }), ErrorCode::OutOfRange);
    EXPECT_EQ(error_of([] { reproduce_example_51(7); }), ErrorCode::OutOfRange);
}

TEST(Pipeline, EdgeOrbitsOfCanonicalTd) {
    const auto tt = instances::two_triangles();
    const auto c = canonical_td(tt);
    EXPECT_EQ(td_edge_orbits(c.td, c.aut), (std::vector<std::vector<int>>{{0}}));
    const auto k13 = instances::star(3);
    const auto s = canonical_td(k13);
    EXPECT_EQ(td_edge_orbits(s.td, s.aut), (std::vector<std::vector<int>>{{0, 1, 2}}));
}

TEST(Pipeline, PathHasCanonicalMaximalDecomposition) {
    // The swap of P4 reverses the path of three edge-bags; the middle edge is its own orbit.
    const auto p4 = instances::path(4);
    const auto c = canonical_td(p4);
    ASSERT_TRUE(c.ok());
    const auto out = contract_to_maximal(p4, c.td, td_edge_orbits(c.td, c.aut));
    EXPECT_TRUE(classify_td(p4, out).into_maximal_cliques);
    EXPECT_TRUE(verify_canonical_td(out, c.aut).canonical);
}
