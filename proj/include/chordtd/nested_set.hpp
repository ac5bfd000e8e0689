#pragma once

#include "chordtd/chordal.hpp"
#include "chordtd/permutation.hpp"
#include "chordtd/separations.hpp"

#include <algorithm>
#include <cstdint>
#include <future>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace chordtd {

/// Number of members of `pool` that cross `s`.
inline int crossing_count(const Separation& s, std::span<const Separation> pool) {
    int n = 0;
    for (const auto& t : pool)
        if (relate(s, t) == Relation::Crossing) ++n;
    return n;
}

namespace detail {

/// Crossing counts inside a family of separations sharing the separator `sep`.
/// Each strict side is a union of components of G - sep; two such separations
/// are nested iff a side of one lies inside a side of the other, so the
/// nested partners of {P, Q} number sub(P) + sub(Q) - 1, where sub(X) counts
/// member sides contained in X.
inline std::vector<int> same_separator_crossings(const Graph& g, const VertexSet& sep, std::span<const Separation> group) {
    const auto comps = components(g, g.vertices() - sep);
    const std::size_t c = comps.size();
    std::vector<int> comp_of(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < c; ++i)
        for (Vertex v : comps[i]) comp_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
    auto mask_of = [&](const VertexSet& side) {
        std::uint64_t m = 0;
        for (Vertex v : side)
            if (comp_of[static_cast<std::size_t>(v)] >= 0) m |= std::uint64_t{1} << comp_of[static_cast<std::size_t>(v)];
        return m;
    };
    std::vector<int> sub(std::size_t{1} << c, 0);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> sides;
    for (const auto& s : group) {
        sides.emplace_back(mask_of(s.a()), mask_of(s.b()));
        ++sub[sides.back().first];
        ++sub[sides.back().second];
    }
    for (std::size_t bit = 0; bit < c; ++bit)
        for (std::size_t m = 0; m < sub.size(); ++m)
            if ((m >> bit) & 1U) sub[m] += sub[m ^ (std::size_t{1} << bit)];
    std::vector<int> out;
    out.reserve(group.size());
    for (auto [a, b] : sides) out.push_back(static_cast<int>(group.size()) - (sub[a] + sub[b] - 1));
    return out;
}

} // namespace detail

/// crossing_count(s, pool) for every member of the pool, in pool order.
inline std::vector<int> crossing_counts(const Graph& g, std::span<const Separation> pool) {
    std::map<VertexSet, std::vector<std::size_t>> by_separator;
    for (std::size_t i = 0; i < pool.size(); ++i) by_separator[pool[i].separator()].push_back(i);
    std::vector<int> out(pool.size(), 0);
    std::vector<const std::vector<std::size_t>*> groups;
    for (const auto& [sep, members] : by_separator) {
        groups.push_back(&members);
        const std::size_t parts = components(g, g.vertices() - sep).size();
        const double brute = static_cast<double>(members.size()) * static_cast<double>(members.size());
        if (parts <= 24 && brute > static_cast<double>(parts) * static_cast<double>(std::size_t{1} << parts)) {
            std::vector<Separation> group;
            for (std::size_t i : members) group.push_back(pool[i]);
            const auto counts = detail::same_separator_crossings(g, sep, group);
            for (std::size_t j = 0; j < members.size(); ++j) out[members[j]] += counts[j];
        } else {
            for (std::size_t i : members)
                for (std::size_t j : members)
                    if (i < j && relate(pool[i], pool[j]) == Relation::Crossing) {
                        ++out[i];
                        ++out[j];
                    }
        }
    }
    for (std::size_t x = 0; x < groups.size(); ++x)
        for (std::size_t y = x + 1; y < groups.size(); ++y)
            for (std::size_t i : *groups[x])
                for (std::size_t j : *groups[y])
                    if (relate(pool[i], pool[j]) == Relation::Crossing) {
                        ++out[i];
                        ++out[j];
                    }
    return out;
}

/// Index pair into NestedSetLevels::cliques.
using CliquePair = std::pair<int, int>;

struct NestedSetLevels {
    std::vector<VertexSet> cliques;                          ///< maximal cliques, sorted
    std::map<int, std::vector<Separation>> levels;           ///< N^k, sorted
    std::vector<Separation> all;                             ///< union of the levels, sorted
    std::map<Separation, std::vector<CliquePair>> provenance;
    std::vector<Bottleneck> bottlenecks;                     ///< one per clique pair, in pair order

    std::vector<Separation> below(int k) const {
        std::vector<Separation> out;
        for (const auto& [order, seps] : levels)
            if (order < k) out.insert(out.end(), seps.begin(), seps.end());
        std::sort(out.begin(), out.end());
        return out;
    }
};

struct ConstructOptions {
    bool include_nontight = false;
    int jobs = 1;
};

/// The canonical nested set of a connected chordal graph, built level by level.
inline NestedSetLevels construct_N(const Graph& g, const ConstructOptions& opt = {}) {
    if (!is_connected(g)) fail(ErrorCode::NotConnected, "graph is not connected");
    require_chordal(g);
    NestedSetLevels out;
    out.cliques = maximal_cliques(g);
    const int m = static_cast<int>(out.cliques.size());
    std::vector<CliquePair> pairs;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) pairs.emplace_back(i, j);

    BetaOptions bopt;
    bopt.include_nontight = opt.include_nontight;
    out.bottlenecks.resize(pairs.size());
    auto work = [&](std::size_t from, std::size_t step) {
        detail::ComponentCache cache(g);
        for (std::size_t p = from; p < pairs.size(); p += step)
            out.bottlenecks[p] = detail::beta_unchecked(g, out.cliques[static_cast<std::size_t>(pairs[p].first)],
                                                        out.cliques[static_cast<std::size_t>(pairs[p].second)], bopt, &cache);
    };
    const auto jobs = static_cast<std::size_t>(std::max(1, opt.jobs));
    if (jobs == 1) {
        work(0, 1);
    } else {
        std::vector<std::future<void>> tasks;
        for (std::size_t t = 0; t < jobs; ++t) tasks.push_back(std::async(std::launch::async, work, t, jobs));
        for (auto& t : tasks) t.get();
    }

    std::map<int, std::vector<std::size_t>> by_order;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto& b = out.bottlenecks[p];
        if (b.order >= std::min(b.x.size(), b.y.size()))
            fail(ErrorCode::InternalInvariant, "bottleneck order is not below the clique sizes");
        by_order[b.order].push_back(p);
    }

    std::vector<Separation> lower;
    for (const auto& [k, members] : by_order) {
        std::set<Separation> pool_set;
        for (std::size_t p : members)
            pool_set.insert(out.bottlenecks[p].separations.begin(), out.bottlenecks[p].separations.end());
        const std::vector<Separation> pool(pool_set.begin(), pool_set.end());
        const auto counts = crossing_counts(g, pool);
        std::map<Separation, int> x;
        for (std::size_t i = 0; i < pool.size(); ++i) x.emplace(pool[i], counts[i]);

        std::set<Separation> level;
        for (std::size_t p : members) {
            std::vector<Separation> eligible;
            for (const auto& s : out.bottlenecks[p].separations) {
                bool ok = true;
                for (const auto& t : lower) ok = ok && nested(s, t);
                if (ok) eligible.push_back(s);
            }
            if (eligible.empty())
                fail(ErrorCode::EmptyBottleneckSelection,
                     "no admissible separation for clique pair (" + std::to_string(pairs[p].first) + "," +
                         std::to_string(pairs[p].second) + ")");
            int best = x.at(eligible.front());
            for (const auto& s : eligible) best = std::min(best, x.at(s));
            for (const auto& s : eligible)
                if (x.at(s) == best) {
                    level.insert(s);
                    out.provenance[s].push_back(pairs[p]);
                }
        }
        out.levels[k] = {level.begin(), level.end()};
        lower.insert(lower.end(), level.begin(), level.end());
    }
    std::sort(lower.begin(), lower.end());
    lower.erase(std::unique(lower.begin(), lower.end()), lower.end());
    out.all = lower;

    for (std::size_t i = 0; i < out.all.size(); ++i)
        for (std::size_t j = i + 1; j < out.all.size(); ++j)
            if (!nested(out.all[i], out.all[j])) fail(ErrorCode::NestednessViolation, "two selected separations cross");
    if (opt.include_nontight)
        for (const auto& s : out.all)
            if (!classify(g, s).tight) fail(ErrorCode::PreconditionViolated, "a selected separation is not tight");
    return out;
}

/// True when s has X on one side, Y on the other, and order equal to the X-Y connectivity.
inline bool efficiently_distinguishes(const Separation& s, const VertexSet& x, const VertexSet& y, int k) {
    if (s.order() != k) return false;
    const bool forward = x.subset_of(s.a()) && x.intersects(s.a() - s.b()) && y.subset_of(s.b()) && y.intersects(s.b() - s.a());
    const bool backward = x.subset_of(s.b()) && x.intersects(s.b() - s.a()) && y.subset_of(s.a()) && y.intersects(s.a() - s.b());
    return forward || backward;
}

struct NestedSetReport {
    bool nested = true;
    bool tight_cliques = true;
    bool invariant = true;
    bool distinguishes = true;
    bool point_finite = true;
    std::map<Vertex, int> separator_counts;  ///< per vertex: separators containing it
    std::vector<std::string> failures;

    bool ok() const { return nested && tight_cliques && invariant && distinguishes && point_finite; }
};

/// Independent audit of a nested set against its defining properties.
inline NestedSetReport verify_N(const Graph& g, std::span<const Separation> n, std::span<const Permutation> generators) {
    NestedSetReport r;
    const std::set<Separation> members(n.begin(), n.end());
    for (std::size_t i = 0; i < n.size(); ++i)
        for (std::size_t j = i + 1; j < n.size(); ++j)
            if (!nested(n[i], n[j])) {
                r.nested = false;
                r.failures.push_back("crossing pair at positions " + std::to_string(i) + "," + std::to_string(j));
            }
    for (const auto& s : n) {
        const auto c = classify(g, s);
        if (!c.tight || !c.proper || !is_clique(g, s.separator())) {
            r.tight_cliques = false;
            r.failures.push_back("member with separator {" + std::to_string(s.order()) + " vertices} is not a tight clique separation");
        }
    }
    for (const auto& gamma : generators)
        for (const auto& s : n)
            if (!members.contains(chordtd::apply(gamma, s))) {
                r.invariant = false;
                r.failures.push_back("image of a member under a generator is missing");
            }
    const auto cliques = maximal_cliques(g);
    for (std::size_t i = 0; i < cliques.size(); ++i)
        for (std::size_t j = i + 1; j < cliques.size(); ++j) {
            const int k = min_clique_separator(g, cliques[i], cliques[j]).k;
            bool hit = false;
            for (const auto& s : n) hit = hit || efficiently_distinguishes(s, cliques[i], cliques[j], k);
            if (!hit) {
                r.distinguishes = false;
                r.failures.push_back("cliques " + std::to_string(i) + " and " + std::to_string(j) + " are not distinguished");
            }
        }
    for (Vertex v = 0; v < g.order(); ++v) {
        int c = 0;
        for (const auto& s : n) c += s.separator().contains(v) ? 1 : 0;
        r.separator_counts[v] = c;
    }
    return r;
}

} // namespace chordtd
