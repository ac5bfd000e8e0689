#include "test_util.hpp"

using namespace testutil;
using chordtd::io::json;

TEST(Io, GraphRoundTrip) {
    const auto g = instances::random_chordal(12, 4);
    EXPECT_EQ(io::graph_from_json(io::to_json(g)), g);
}

TEST(Io, StrictFields) {
    EXPECT_EQ(error_of([] { io::graph_from_json(json::parse(R"({"edges":[],"extra":1})")); }), ErrorCode::InvalidInput);
    EXPECT_EQ(error_of([] { io::graph_from_json(json::parse(R"({"vertices":["a"]})")); }), ErrorCode::InvalidInput);
    EXPECT_EQ(error_of([] { io::graph_from_json(json::parse(R"({"edges":[["a","a"]]})")); }), ErrorCode::LoopEdge);
    EXPECT_EQ(error_of([] { io::graph_from_json(json::parse(R"({"edges":[["a"]]})")); }), ErrorCode::InvalidInput);
}

TEST(Io, IntegerVertexNames) {
    const auto g = io::graph_from_json(json::parse(R"({"edges":[[1,2],[2,3]]})"));
    EXPECT_EQ(g.order(), 3);
    EXPECT_EQ(g.name(0), "1");
}

TEST(Io, TreeDecompositionRoundTrip) {
    const auto g = instances::random_chordal(14, 2);
    const auto td = build_td_from_nested(g, construct_N(g).all);
    EXPECT_EQ(io::td_from_json(g, io::to_json(g, td)), td);
}

TEST(Io, GraphDecompositionRoundTrip) {
    const auto pres = instances::cycle_cover(6);
    const auto pn = periodic_N(pres, 6);
    const auto gd = fold(pn.window, build_td_from_nested(pn.window.graph, pn.levels.all)).gd;
    const auto back = io::gd_from_json(pres.base, io::to_json(pres.base, gd));
    EXPECT_EQ(back.bags, gd.bags);
    EXPECT_EQ(back.coparts, gd.coparts);
    EXPECT_EQ(back.model.edges(), gd.model.edges());
}

TEST(Io, MissingCopartsDefaultToInducedSubgraph) {
    const auto p3 = instances::path(3);
    const auto gd = io::gd_from_json(p3, json::parse(R"({"nodes":[{"id":"x","bag":["a","b"]},{"id":"y","bag":["b","c"]}],"edges":[["x","y"]]})"));
    EXPECT_EQ(gd.coparts[1].nodes, (VertexSet{0, 1}));
    EXPECT_EQ(gd.coparts[1].edges.size(), 1U);
    EXPECT_TRUE(verify_graph_decomposition(p3, gd).ok());
}

TEST(Io, PresentationRoundTrip) {
    for (const auto& p : {instances::cycle_cover(6), instances::square_ring_cover(8), instances::two_squares_cover()}) {
        const auto back = io::presentation_from_json(io::to_json(p));
        EXPECT_EQ(back.base, p.base);
        EXPECT_EQ(back.voltage, p.voltage);
        EXPECT_EQ(back.tree_edges, p.tree_edges);
    }
}

TEST(Io, DotAndGraphml) {
    const auto k13 = instances::star(3);
    const auto td = build_td_from_nested(k13, construct_N(k13).all);
    const auto dot = io::to_dot(k13, td);
    EXPECT_NE(dot.find("graph"), std::string::npos);
    EXPECT_NE(dot.find("{c}"), std::string::npos);
    const auto xml = io::to_graphml(k13, td);
    EXPECT_NE(xml.find("<graphml"), std::string::npos);
    EXPECT_NE(xml.find("</graphml>"), std::string::npos);
    EXPECT_EQ(io::to_dot(k13), io::to_dot(k13));
}
