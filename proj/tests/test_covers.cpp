#include "oracles.hpp"
#include "test_util.hpp"

using namespace testutil;

TEST(FreeGroup, Reduction) {
    const auto z = FreeWord::generator(0);
    EXPECT_TRUE((z * z.inverse()).identity());
    EXPECT_EQ((z * z).length(), 2);
    const auto y = FreeWord::generator(1, -1);
    EXPECT_EQ((z * y * y.inverse() * z.inverse()), FreeWord{});
}

TEST(FreeGroup, ParseAndFormat) {
    Alphabet al;
    const auto w = al.parse("x y^-1 z^2");
    EXPECT_EQ(al.rank(), 3);
    EXPECT_EQ(w.length(), 4);
    EXPECT_EQ(al.format(w), "x y^-1 z^2");
    EXPECT_EQ(al.format(al.parse("")), "");
    EXPECT_TRUE(al.parse("x x^-1").identity());
    EXPECT_EQ(error_of([&] { al.parse("x^"); }), ErrorCode::InvalidInput);
}

TEST(FreeGroup, WordCounts) {
    EXPECT_EQ(words_up_to(0, 5).size(), 1U);
    EXPECT_EQ(words_up_to(1, 3).size(), 7U);
    // 1 + 4 + 12 + 36 reduced words of length <= 3 in rank 2.
    EXPECT_EQ(words_up_to(2, 3).size(), 53U);
    const auto ws = words_up_to(2, 3);
    EXPECT_TRUE(std::is_sorted(ws.begin(), ws.end()));
}

TEST(Covers, C6WindowIsAPath) {
    const auto w = derive_window(instances::cycle_cover(6), 2);
    EXPECT_EQ(w.graph.order(), 30);
    EXPECT_EQ(w.graph.num_edges(), 29U);
    EXPECT_TRUE(is_connected(w.graph));
    int ends = 0;
    for (Vertex x = 0; x < w.graph.order(); ++x) {
        EXPECT_LE(w.graph.degree(x), 2);
        ends += w.graph.degree(x) == 1;
    }
    EXPECT_EQ(ends, 2);
}

TEST(Covers, IdentityWindowIsBase) {
    const auto g = instances::random_chordal(10, 2);
    for (int L : {0, 3}) EXPECT_EQ(derive_window(identity_presentation(g), L).graph, g);
    const auto tt = identity_presentation(instances::two_triangles());
    EXPECT_EQ(tt.rank(), 0);
}

TEST(Covers, VerifyC6) {
    const auto r = verify_cover(instances::cycle_cover(6), 3, 6);
    EXPECT_TRUE(r.ok());
    EXPECT_GT(r.centers_checked, 0U);
}

TEST(Covers, C3BallNotPreserved) {
    const auto r = verify_cover(instances::cycle_cover(3), 3, 6);
    EXPECT_TRUE(r.local_bijection);
    EXPECT_FALSE(r.ball_preserved);
    EXPECT_TRUE(r.ball_witness.has_value());
}

TEST(Covers, IdentityAlwaysPasses) {
    for (int r = 0; r < 6; ++r) EXPECT_TRUE(verify_cover(identity_presentation(instances::wheel(5)), r, 0).ok());
}

TEST(Covers, TreeMustSpan) {
    const auto c4 = instances::cycle(4);
    Alphabet al;
    const auto z = al.parse("z");
    EXPECT_EQ(error_of([&] { make_presentation(c4, {{0, 1}, {1, 2}}, {{2, 3, z}}, al); }), ErrorCode::InvalidInput);
}

TEST(Covers, RankAboveTwoRejected) {
    const auto k4 = instances::complete(4);
    Alphabet al;
    const auto x = al.parse("x"), y = al.parse("y"), z = al.parse("z");
    EXPECT_EQ(error_of([&] { make_presentation(k4, {{0, 1}, {0, 2}, {0, 3}}, {{1, 2, x}, {1, 3, y}, {2, 3, z}}, al); }),
              ErrorCode::TooLarge);
}

TEST(Covers, ProjectAndLift) {
    const auto pres = instances::cycle_cover(6);
    const auto w = derive_window(pres, 3);
    const Vertex a0 = *w.find(0, FreeWord{});
    const Vertex b0 = *w.find(1, FreeWord{});
    EXPECT_EQ(project_clique(w, VertexSet{a0, b0}), (VertexSet{0, 1}));
    const auto z = FreeWord::generator(0);
    const Vertex a1 = *w.find(0, z);
    EXPECT_EQ(lift_clique(w, VertexSet{0, 1}, a1), (VertexSet{a1, *w.find(1, z)}));
    const auto lifts = all_lifts(w, VertexSet{0, 1});
    EXPECT_GE(lifts.size(), 3U);
    for (std::size_t i = 0; i < lifts.size(); ++i)
        for (std::size_t j = i + 1; j < lifts.size(); ++j) {
            EXPECT_FALSE(lifts[i].intersects(lifts[j]));
            VertexSet ni = lifts[i] | neighborhood(w.graph, lifts[i]);
            VertexSet nj = lifts[j] | neighborhood(w.graph, lifts[j]);
            EXPECT_FALSE(ni.intersects(nj));
        }
}

TEST(Covers, CanonicalTranslateIsDeckInvariant) {
    const auto w = derive_window(instances::square_ring_cover(7), 4);
    const auto z = FreeWord::generator(0);
    for (Vertex x = 0; x < w.graph.order(); ++x) {
        if (!w.interior(x, 2)) continue;
        const auto y = w.translate(z, x);
        ASSERT_TRUE(y.has_value());
        VertexSet sx{x}, sy{*y};
        for (Vertex n : w.graph.adjacency(x)) {
            sx.insert(n);
            sy.insert(*w.translate(z, n));
        }
        EXPECT_EQ(canonical_translate(w, sx).key, canonical_translate(w, sy).key);
    }
}

TEST(Covers, PeriodicC6HasOneSplitPerFibre) {
    const auto pn = periodic_N(instances::cycle_cover(6), 4);
    EXPECT_TRUE(pn.stable);
    EXPECT_EQ(pn.representatives.size(), 6U);
    for (const auto& r : pn.representatives) EXPECT_EQ(r.order, 1);
}

TEST(Covers, PeriodicIdentityTwoTriangles) {
    const auto tt = instances::two_triangles();
    const auto pn = periodic_N(identity_presentation(tt), 2);
    EXPECT_EQ(pn.levels.all, construct_N(tt).all);
    EXPECT_EQ(pn.representatives.size(), 1U);
}

TEST(Covers, PeriodicC3IsChordalWindow) {
    const auto pn = periodic_N(instances::cycle_cover(3), 6);
    EXPECT_TRUE(pn.stable);
    EXPECT_EQ(pn.representatives.size(), 3U);
}

TEST(Covers, PeriodicRejectsNonChordalWindow) {
    EXPECT_EQ(error_of([] { periodic_N(identity_presentation(instances::wheel(4)), 2); }), ErrorCode::WindowNotChordal);
}

TEST(Covers, FoldC6) {
    const auto pn = periodic_N(instances::cycle_cover(6), 6);
    const auto td = build_td_from_nested(pn.window.graph, pn.levels.all);
    const auto f = fold(pn.window, td);
    const auto base = instances::cycle(6);
    EXPECT_EQ(f.gd.size(), 6);
    EXPECT_EQ(f.gd.model.num_edges(), 6U);
    for (int h = 0; h < 6; ++h) EXPECT_EQ(f.gd.model.degree(h), 2);
    auto bags = f.gd.bags;
    std::sort(bags.begin(), bags.end());
    std::vector<VertexSet> edges;
    for (auto [u, v] : base.edges()) edges.push_back(VertexSet{u, v});
    std::sort(edges.begin(), edges.end());
    EXPECT_EQ(bags, edges);
}

TEST(Covers, FoldIdentityIsIdentity) {
    const auto g = instances::random_chordal(12, 6);
    const auto pres = identity_presentation(g);
    const auto pn = periodic_N(pres, 0);
    const auto td = build_td_from_nested(pn.window.graph, pn.levels.all);
    const auto f = fold(pn.window, td);
    EXPECT_EQ(f.gd.size(), td.size());
    EXPECT_EQ(f.gd.model.num_edges(), td.tree.num_edges());
    auto a = f.gd.bags;
    auto b = td.bags;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    EXPECT_EQ(a, b);
}

TEST(Covers, FoldTwoTriangles) {
    const auto tt = instances::two_triangles();
    const auto pn = periodic_N(identity_presentation(tt), 0);
    const auto f = fold(pn.window, build_td_from_nested(pn.window.graph, pn.levels.all));
    EXPECT_EQ(f.gd.size(), 2);
    EXPECT_EQ(f.gd.model.num_edges(), 1U);
}

TEST(Covers, FoldRejectsDuplicateBags) {
    const auto g = instances::path(3);
    const auto pn = periodic_N(identity_presentation(g), 0);
    const std::vector<TreeEdge> e{{0, 1}, {1, 2}};
    const auto td = make_td({S(g, {"a", "b"}), S(g, {"b", "c"}), S(g, {"b", "c"})}, e);
    EXPECT_EQ(error_of([&] { fold(pn.window, td); }), ErrorCode::ActionMismatch);
}

TEST(Covers, LocalFoldExamples) {
    const auto c6 = instances::cycle_cover(6);
    const auto a = theorem3_pipeline(c6.base, 3, c6, 6);
    EXPECT_TRUE(a.local.holds);
    EXPECT_TRUE(a.into_cliques);
    EXPECT_TRUE(a.consistent);

    const auto tt = instances::two_triangles();
    const auto b = theorem3_pipeline(tt, 3, identity_presentation(tt), 3);
    EXPECT_TRUE(b.local.holds);
    EXPECT_TRUE(b.into_cliques);
    EXPECT_TRUE(b.consistent);

    const auto wh = instances::wheel(4);
    const auto c = theorem3_pipeline(wh, 3, identity_presentation(wh), 3);
    EXPECT_FALSE(c.local.holds);
    EXPECT_FALSE(c.window_chordal);
    EXPECT_FALSE(c.into_cliques);
    EXPECT_TRUE(c.consistent);

    const auto c3 = instances::cycle_cover(3);
    EXPECT_EQ(error_of([&] { theorem3_pipeline(c3.base, 3, c3, 6); }), ErrorCode::BallNotPreserved);
    EXPECT_EQ(error_of([&] { theorem3_pipeline(tt, 3, c6, 6); }), ErrorCode::InvalidInput);
}

TEST(Covers, WindowDistancesMatchFloydWarshall) {
    const auto w = derive_window(instances::caterpillar_cover(), 3);
    const auto d = oracle::floyd_warshall(oracle::from(w.graph));
    for (Vertex x = 0; x < w.graph.order(); ++x) {
        const auto row = bfs_distances(w.graph, x);
        for (Vertex y = 0; y < w.graph.order(); ++y)
            EXPECT_EQ(row[static_cast<std::size_t>(y)], d[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]);
    }
}
