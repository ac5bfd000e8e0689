#include "oracles.hpp"
#include "test_util.hpp"

#include <random>

using namespace testutil;

namespace {

// β(X, Y) by exhaustion over all separations: minimum order among those with
// X and Y on opposite sides, restricted to tight ones.
std::set<std::pair<oracle::Mask, oracle::Mask>> beta_oracle(const oracle::Small& g, oracle::Mask x, oracle::Mask y) {
    const auto seps = oracle::all_separations(g);
    auto splits = [&](oracle::Mask a, oracle::Mask b) {
        return (x & a) == x && (x & ~b) != 0 && (y & b) == y && (y & ~a) != 0;
    };
    int best = 64;
    for (auto [a, b] : seps)
        if (splits(a, b) || splits(b, a)) best = std::min(best, std::popcount(a & b));
    std::set<std::pair<oracle::Mask, oracle::Mask>> out;
    for (auto [a, b] : seps) {
        if (!(splits(a, b) || splits(b, a)) || std::popcount(a & b) != best) continue;
        const oracle::Mask s = a & b;
        bool full_a = false, full_b = false;
        for (auto c : oracle::components(g, oracle::all(g) & ~s)) {
            if (oracle::nbhd(g, c) != s) continue;
            full_a = full_a || (c & ~(a & ~b)) == 0;
            full_b = full_b || (c & ~(b & ~a)) == 0;
        }
        if (full_a && full_b) out.emplace(a, b);
    }
    return out;
}

std::pair<oracle::Mask, oracle::Mask> key(const Separation& s) {
    const auto a = oracle::to_mask(s.a()), b = oracle::to_mask(s.b());
    return {std::min(a, b), std::max(a, b)};
}

} // namespace

TEST(Separations, MakeValidates) {
    const auto p3 = instances::path(3);
    EXPECT_NO_THROW(sep(p3, {"a", "b"}, {"b", "c"}));
    EXPECT_EQ(error_of([&] { sep(p3, {"a"}, {"c"}); }), ErrorCode::NotASeparation);
    EXPECT_EQ(error_of([&] { sep(p3, {"a", "b"}, {"c"}); }), ErrorCode::NotASeparation);
}

TEST(Separations, StoredWithSmallerSideFirst) {
    const auto p3 = instances::path(3);
    const auto s = sep(p3, {"b", "c"}, {"a", "b"});
    EXPECT_EQ(s.a(), S(p3, {"a", "b"}));
    EXPECT_EQ(s, sep(p3, {"a", "b"}, {"b", "c"}));
}

TEST(Separations, FromSeparator) {
    const auto p3 = instances::path(3);
    const std::vector<Side> ab{Side::A, Side::B};
    EXPECT_EQ(separation_from_separator(p3, S(p3, {"b"}), ab), sep(p3, {"a", "b"}, {"b", "c"}));

    const auto star = instances::star(3);
    const std::vector<Side> abb{Side::A, Side::B, Side::B};
    EXPECT_EQ(separation_from_separator(star, S(star, {"c"}), abb), sep(star, {"c", "1"}, {"c", "2", "3"}));

    const auto c4 = instances::cycle(4);
    EXPECT_EQ(separation_from_separator(c4, S(c4, {"a", "c"}), ab), sep(c4, {"a", "b", "c"}, {"a", "c", "d"}));

    const std::vector<Side> aa{Side::A, Side::A};
    EXPECT_EQ(error_of([&] { separation_from_separator(p3, S(p3, {"b"}), aa); }), ErrorCode::EmptySide);
    EXPECT_EQ(error_of([&] { separation_from_separator(p3, S(p3, {"b"}), abb); }), ErrorCode::InvalidInput);
}

TEST(Separations, NestednessExamples) {
    const auto k14 = instances::star(4);
    const auto s = sep(k14, {"c", "1", "2"}, {"c", "3", "4"});
    EXPECT_TRUE(nested(s, s));
    EXPECT_FALSE(nested(s, sep(k14, {"c", "1", "3"}, {"c", "2", "4"})));
    const auto k13 = instances::star(3);
    EXPECT_TRUE(nested(sep(k13, {"c", "1"}, {"c", "2", "3"}), sep(k13, {"c", "2"}, {"c", "1", "3"})));
}

TEST(Separations, Classification) {
    const auto p3 = instances::path(3);
    const auto c = classify(p3, sep(p3, {"a", "b"}, {"b", "c"}));
    EXPECT_EQ(c.order, 1);
    EXPECT_TRUE(c.proper);
    EXPECT_TRUE(c.tight);

    const auto trivial = Separation::make(p3, p3.vertices(), S(p3, {"b"}));
    EXPECT_FALSE(classify(p3, trivial).proper);

    const auto k13 = instances::star(3);
    const auto t = classify(k13, sep(k13, {"c", "1", "2"}, {"c", "3"}));
    EXPECT_EQ(t.order, 1);
    EXPECT_TRUE(t.proper);
    EXPECT_TRUE(t.tight);
}

TEST(Separations, MinSeparatorExamples) {
    const auto k13 = instances::star(3);
    const auto r = min_clique_separator(k13, S(k13, {"c", "1"}), S(k13, {"c", "2"}));
    EXPECT_EQ(r.k, 1);
    EXPECT_EQ(r.separator, S(k13, {"c"}));
    ASSERT_EQ(r.paths.size(), 1U);
    EXPECT_EQ(names(k13, r.paths[0]), (std::vector<std::string>{"c"}));

    const auto tt = instances::two_triangles();
    const auto q = min_clique_separator(tt, S(tt, {"a", "b", "c"}), S(tt, {"b", "c", "d"}));
    EXPECT_EQ(q.k, 2);
    EXPECT_EQ(q.separator, S(tt, {"b", "c"}));
    EXPECT_EQ(enumerate_min_separators(tt, S(tt, {"a", "b", "c"}), S(tt, {"b", "c", "d"})),
              (std::vector<VertexSet>{S(tt, {"b", "c"})}));

    const auto two = from_edge_list({{"a", "b"}, {"c", "d"}});
    EXPECT_EQ(min_clique_separator(two, S(two, {"a"}), S(two, {"d"})).k, 0);
}

TEST(Separations, PathEndpointsAreDeletable) {
    // Every vertex may be deleted, so the endpoints themselves are minimum separators.
    const auto p5 = instances::path(5);
    const auto seps = enumerate_min_separators(p5, S(p5, {"a"}), S(p5, {"e"}));
    EXPECT_EQ(seps, (std::vector<VertexSet>{S(p5, {"a"}), S(p5, {"b"}), S(p5, {"c"}), S(p5, {"d"}), S(p5, {"e"})}));
    const auto [k, want] = oracle::min_separators(oracle::from(p5), oracle::to_mask(S(p5, {"a"})), oracle::to_mask(S(p5, {"e"})));
    EXPECT_EQ(k, 1);
    EXPECT_EQ(seps.size(), want.size());
}

TEST(Separations, SharedVertexInEveryMinSeparator) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto g = instances::random_chordal(12, seed);
        const auto cl = maximal_cliques(g);
        for (std::size_t i = 0; i < cl.size(); ++i)
            for (std::size_t j = i + 1; j < cl.size(); ++j) {
                const VertexSet common = cl[i] & cl[j];
                for (const auto& s : enumerate_min_separators(g, cl[i], cl[j])) EXPECT_TRUE(common.subset_of(s));
            }
    }
}

TEST(Separations, MengerAgainstOracle) {
    std::mt19937_64 rng(5);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto g = instances::random_graph(10, 0.3, seed);
        const auto small = oracle::from(g);
        std::uniform_int_distribution<int> pick(0, g.order() - 1);
        const VertexSet x{pick(rng), pick(rng)};
        const VertexSet y{pick(rng)};
        const auto r = min_clique_separator(g, x, y);
        const auto [k, all] = oracle::min_separators(small, oracle::to_mask(x), oracle::to_mask(y));
        EXPECT_EQ(r.k, k);
        VertexSet used;
        for (const auto& p : r.paths) {
            ASSERT_FALSE(p.empty());
            EXPECT_TRUE(x.contains(p.front()));
            EXPECT_TRUE(y.contains(p.back()));
            for (std::size_t i = 0; i + 1 < p.size(); ++i) EXPECT_TRUE(g.adjacent(p[i], p[i + 1]));
            for (auto v : p) {
                EXPECT_FALSE(used.contains(v));
                used.insert(v);
            }
        }
        std::vector<VertexSet> want;
        for (auto m : all) want.push_back(oracle::to_set(m));
        std::sort(want.begin(), want.end());
        EXPECT_EQ(enumerate_min_separators(g, x, y), want) << "seed " << seed;
    }
}

TEST(Separations, BetaExamples) {
    const auto k13 = instances::star(3);
    const auto b = beta(k13, S(k13, {"c", "1"}), S(k13, {"c", "2"}));
    EXPECT_EQ(b.order, 1);
    EXPECT_EQ(b.separations, (std::vector<Separation>{sep(k13, {"c", "1"}, {"c", "2", "3"}), sep(k13, {"c", "1", "3"}, {"c", "2"})}));

    const auto tt = instances::two_triangles();
    EXPECT_EQ(beta(tt, S(tt, {"a", "b", "c"}), S(tt, {"b", "c", "d"})).separations,
              (std::vector<Separation>{sep(tt, {"a", "b", "c"}, {"b", "c", "d"})}));

    const auto p3 = instances::path(3);
    EXPECT_EQ(beta(p3, S(p3, {"a", "b"}), S(p3, {"b", "c"})).separations, (std::vector<Separation>{sep(p3, {"a", "b"}, {"b", "c"})}));
}

TEST(Separations, BetaErrors) {
    const auto k13 = instances::star(3);
    EXPECT_EQ(error_of([&] { beta(k13, S(k13, {"c", "1"}), S(k13, {"c", "1"})); }), ErrorCode::CliquesEqual);
    EXPECT_EQ(error_of([&] { beta(k13, S(k13, {"c"}), S(k13, {"c", "1"})); }), ErrorCode::NotAClique);
    const auto c4 = instances::cycle(4);
    EXPECT_EQ(error_of([&] { beta(c4, S(c4, {"a", "b"}), S(c4, {"c", "d"})); }), ErrorCode::NotChordal);
}

TEST(Separations, BetaMatchesExhaustiveOracle) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto g = instances::random_chordal(5 + static_cast<int>(seed % 5), seed);
        const auto small = oracle::from(g);
        const auto cl = maximal_cliques(g);
        for (std::size_t i = 0; i < cl.size(); ++i)
            for (std::size_t j = i + 1; j < cl.size(); ++j) {
                const auto b = beta(g, cl[i], cl[j]);
                std::set<std::pair<oracle::Mask, oracle::Mask>> got;
                for (const auto& s : b.separations) got.insert(key(s));
                EXPECT_EQ(got, beta_oracle(small, oracle::to_mask(cl[i]), oracle::to_mask(cl[j]))) << "seed " << seed;
                EXPECT_LT(b.order, std::min(cl[i].size(), cl[j].size()));
                for (const auto& s : b.separations) EXPECT_TRUE(is_clique(g, s.separator()));
            }
    }
}

TEST(Separations, NontightOptionKeepsSuperset) {
    const auto g = instances::random_chordal(14, 3);
    const auto cl = maximal_cliques(g);
    BetaOptions all;
    all.include_nontight = true;
    for (std::size_t i = 1; i < cl.size(); ++i) {
        const auto tight = beta(g, cl[0], cl[i]);
        const auto loose = beta(g, cl[0], cl[i], all);
        EXPECT_TRUE(std::includes(loose.separations.begin(), loose.separations.end(), tight.separations.begin(), tight.separations.end()));
    }
}
