#pragma once

#include "chordtd/instances.hpp"
#include "chordtd/nested_set.hpp"
#include "chordtd/symmetry.hpp"
#include "chordtd/treedec.hpp"

#include <cstdint>
#include <vector>

namespace chordtd {

/// Everything produced on the way to the canonical decomposition into cliques.
struct CanonicalTd {
    NestedSetLevels levels;
    TreeDecomposition td;
    TdReport td_report;
    TDClassification classification;
    AutomorphismSet aut;
    CanonicalReport canonical;
    NestedSetReport nested_report;

    bool ok() const { return td_report.ok() && classification.regular && classification.into_cliques && canonical.canonical && nested_report.ok(); }
};

inline CanonicalTd canonical_td(const Graph& g, const ConstructOptions& opt = {}) {
    CanonicalTd out;
    out.levels = construct_N(g, opt);
    out.td = build_td_from_nested(g, out.levels.all);
    out.td_report = verify_td(g, out.td);
    out.classification = classify_td(g, out.td);
    out.aut = automorphism_generators(g);
    out.canonical = verify_canonical_td(out.td, out.aut);
    out.nested_report = verify_N(g, out.levels.all, out.aut.generators);
    return out;
}

/// Edge orbits of a canonical decomposition under the tree action of `aut`.
inline std::vector<std::vector<int>> td_edge_orbits(const TreeDecomposition& td, const AutomorphismSet& aut) {
    const auto edges = td.edges();
    std::vector<std::vector<Node>> maps;
    for (const auto& gamma : aut.generators) {
        auto phis = tree_actions(td, gamma, 1);
        if (phis.empty()) fail(ErrorCode::PreconditionViolated, "decomposition is not canonical");
        maps.push_back(std::move(phis.front()));
    }
    std::map<TreeEdge, int> index;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) index[edges[static_cast<std::size_t>(e)]] = e;
    std::vector<int> orbit_of(edges.size(), -1);
    std::vector<std::vector<int>> out;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        if (orbit_of[static_cast<std::size_t>(e)] >= 0) continue;
        std::vector<int> orbit{e};
        orbit_of[static_cast<std::size_t>(e)] = static_cast<int>(out.size());
        for (std::size_t i = 0; i < orbit.size(); ++i)
            for (const auto& phi : maps) {
                auto [s, t] = edges[static_cast<std::size_t>(orbit[i])];
                const Node a = phi[static_cast<std::size_t>(s)], b = phi[static_cast<std::size_t>(t)];
                const int f = index.at({std::min(a, b), std::max(a, b)});
                if (orbit_of[static_cast<std::size_t>(f)] < 0) {
                    orbit_of[static_cast<std::size_t>(f)] = static_cast<int>(out.size());
                    orbit.push_back(f);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

struct Example51Report {
    int t = 0;
    std::uint64_t trees = 0;      ///< labelled trees on the t maximal cliques
    std::uint64_t valid = 0;      ///< of those, tree-decompositions
    std::uint64_t canonical = 0;  ///< of those, canonical
    bool star_canonical = false;  ///< the decomposition with centre bag {c}
    bool star_into_cliques = false;
    bool star_into_maximal_cliques = false;
};

/// Exhaustive search over decompositions of K_{1,t} into its maximal cliques.
inline Example51Report reproduce_example_51(int t) {
    if (t < 3 || t > 6) fail(ErrorCode::OutOfRange, "t must lie between 3 and 6");
    const Graph g = instances::star(t);
    const auto aut = automorphism_generators(g);
    Example51Report r;
    r.t = t;
    std::vector<VertexSet> bags;
    for (int i = 1; i <= t; ++i) bags.push_back(VertexSet{0, i});
    std::vector<int> code(static_cast<std::size_t>(t - 2), 0);
    while (true) {
        // Pruefer decoding.
        std::vector<int> degree(static_cast<std::size_t>(t), 1);
        for (int x : code) ++degree[static_cast<std::size_t>(x)];
        std::vector<TreeEdge> edges;
        for (int x : code) {
            int leaf = 0;
            while (degree[static_cast<std::size_t>(leaf)] != 1) ++leaf;
            edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
            --degree[static_cast<std::size_t>(leaf)];
            --degree[static_cast<std::size_t>(x)];
        }
        std::vector<int> last;
        for (int i = 0; i < t; ++i)
            if (degree[static_cast<std::size_t>(i)] == 1) last.push_back(i);
        edges.emplace_back(last[0], last[1]);
        const auto td = make_td(bags, edges);
        ++r.trees;
        if (verify_td(g, td).ok()) {
            ++r.valid;
            if (verify_canonical_td(td, aut).canonical) ++r.canonical;
        }
        std::size_t i = 0;
        while (i < code.size() && ++code[i] == t) code[i++] = 0;
        if (i == code.size()) break;
    }
    const auto star = canonical_td(g);
    r.star_canonical = star.canonical.canonical;
    r.star_into_cliques = star.classification.into_cliques;
    r.star_into_maximal_cliques = star.classification.into_maximal_cliques;
    return r;
}

} // namespace chordtd
