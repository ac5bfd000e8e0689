#include "oracles.hpp"
#include "test_util.hpp"

using namespace testutil;

TEST(Graph, PathFromEdgeList) {
    const auto g = from_edge_list({{"a", "b"}, {"b", "c"}});
    EXPECT_EQ(g.order(), 3);
    EXPECT_EQ(g.num_edges(), 2U);
    EXPECT_EQ(g.name(0), "a");
    EXPECT_EQ(g.name(2), "c");
}

TEST(Graph, DuplicateEdgesCollapse) {
    const auto g = from_edge_list({{"a", "b"}, {"a", "b"}});
    EXPECT_EQ(g.order(), 2);
    EXPECT_EQ(g.num_edges(), 1U);
}

TEST(Graph, LoopsRejected) {
    EXPECT_EQ(error_of([] { from_edge_list({{"a", "a"}}); }), ErrorCode::LoopEdge);
}

TEST(Graph, UnknownName) {
    const auto g = instances::path(3);
    EXPECT_EQ(error_of([&] { (void)g.index("zz"); }), ErrorCode::UnknownVertex);
}

TEST(Graph, Distances) {
    const auto p3 = instances::path(3);
    EXPECT_EQ(distance(p3, 0, 2), 2);
    EXPECT_EQ(distance(p3, 1, 1), 0);
    const auto two = from_edge_list({{"a", "b"}, {"c", "d"}});
    EXPECT_EQ(distance(two, two.index("a"), two.index("d")), kInfiniteDistance);
}

TEST(Graph, DistancesMatchFloydWarshall) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto g = instances::random_graph(10, 0.25, seed);
        const auto d = oracle::floyd_warshall(oracle::from(g));
        for (Vertex u = 0; u < g.order(); ++u) {
            const auto row = bfs_distances(g, u);
            for (Vertex v = 0; v < g.order(); ++v) {
                const int want = d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
                const int got = row[static_cast<std::size_t>(v)];
                EXPECT_EQ(got == kInfiniteDistance ? -1 : got, want >= (1 << 20) ? -1 : want);
            }
        }
    }
}

TEST(Graph, BallOfC6RadiusTwoIsFivePath) {
    const auto g = instances::cycle(6);
    const auto b = ball(g, 0, 4);
    EXPECT_EQ(b.members.size(), 5);
    EXPECT_EQ(b.subgraph.graph.num_edges(), 4U);
    EXPECT_TRUE(is_chordal(b.subgraph.graph).chordal);
}

TEST(Graph, BallRadiusZeroIsCenter) {
    const auto g = instances::wheel(4);
    const auto b = ball(g, 2, 0);
    EXPECT_EQ(b.members, VertexSet{2});
    EXPECT_EQ(b.subgraph.graph.order(), 1);
}

TEST(Graph, OddBallAtHubIsWholeWheel) {
    const auto g = instances::wheel(4);
    const auto b = ball(g, g.index("h"), 3);
    EXPECT_EQ(b.members, g.vertices());
    EXPECT_EQ(b.subgraph.graph.num_edges(), g.num_edges());
}

TEST(Graph, ComponentsAfterDeletion) {
    const auto p3 = instances::path(3);
    const auto cs = components_after_deletion(p3, S(p3, {"b"}));
    ASSERT_EQ(cs.size(), 2U);
    EXPECT_EQ(cs[0].vertices, S(p3, {"a"}));
    EXPECT_TRUE(cs[0].full);
    EXPECT_EQ(cs[1].vertices, S(p3, {"c"}));
    EXPECT_TRUE(cs[1].full);

    const auto c4 = instances::cycle(4);
    const auto cc = components_after_deletion(c4, S(c4, {"a"}));
    ASSERT_EQ(cc.size(), 1U);
    EXPECT_EQ(cc[0].vertices, S(c4, {"b", "c", "d"}));
    EXPECT_TRUE(cc[0].full);

    const auto k4 = instances::complete(4);
    const auto ck = components_after_deletion(k4, VertexSet{});
    ASSERT_EQ(ck.size(), 1U);
    EXPECT_EQ(ck[0].vertices, k4.vertices());
    EXPECT_TRUE(ck[0].full);
}

TEST(Graph, ComponentsMatchOracle) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto g = instances::random_graph(12, 0.15, seed);
        const auto small = oracle::from(g);
        std::vector<VertexSet> want;
        for (auto m : oracle::components(small, oracle::all(small))) want.push_back(oracle::to_set(m));
        std::sort(want.begin(), want.end());
        auto got = components(g, g.vertices());
        std::sort(got.begin(), got.end());
        EXPECT_EQ(got, want);
    }
}

TEST(VertexSet, LexicographicOrder) {
    EXPECT_LT((VertexSet{0, 5}), (VertexSet{1}));
    EXPECT_LT((VertexSet{0}), (VertexSet{0, 1}));
    EXPECT_LT((VertexSet{}), (VertexSet{0}));
    EXPECT_EQ((VertexSet{3, 1}), (VertexSet{1, 3}));
}

TEST(VertexSet, Algebra) {
    VertexSet a{1, 2, 70};
    VertexSet b{2, 3};
    EXPECT_EQ(a & b, VertexSet{2});
    EXPECT_EQ(a | b, (VertexSet{1, 2, 3, 70}));
    EXPECT_EQ(a - b, (VertexSet{1, 70}));
    EXPECT_TRUE(VertexSet{70}.subset_of(a));
    EXPECT_EQ(a.size(), 3);
    a.erase(70);
    EXPECT_EQ(a, (VertexSet{1, 2}));
}
