#pragma once

#include "chordtd/graph.hpp"
#include "chordtd/permutation.hpp"
#include "chordtd/separations.hpp"
#include "chordtd/treedec.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace chordtd {

struct AutomorphismSet {
    int degree = 0;                          ///< number of points acted on
    std::vector<Permutation> generators;
    std::optional<std::uint64_t> group_order;  ///< empty when above kMaxExactOrder
    long double order_estimate = 1;            ///< product of stabiliser orbit lengths

    static constexpr std::uint64_t kMaxExactOrder = 1'000'000;
    bool large() const { return !group_order.has_value(); }
};

namespace detail {

using Cells = std::vector<std::vector<Vertex>>;

// Equitable refinement of an ordered partition. Depends only on cell positions
// and neighbour counts, so it commutes with isomorphisms.
inline Cells refine(const Graph& g, Cells cells) {
    std::vector<int> cell_of(static_cast<std::size_t>(g.order()));
    auto reindex = [&] {
        for (std::size_t c = 0; c < cells.size(); ++c)
            for (Vertex v : cells[c]) cell_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
    };
    reindex();
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t splitter = 0; splitter < cells.size() && !changed; ++splitter) {
            VertexSet in_splitter = VertexSet::from(cells[splitter]);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (cells[c].size() < 2) continue;
                std::map<int, std::vector<Vertex>> by_count;
                for (Vertex v : cells[c]) by_count[(g.neighbors(v) & in_splitter).size()].push_back(v);
                if (by_count.size() < 2) continue;
                Cells pieces;
                for (auto& [count, vs] : by_count) pieces.push_back(std::move(vs));
                cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
                cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
                reindex();
                changed = true;
                break;
            }
        }
    }
    return cells;
}

inline std::vector<std::size_t> shape(const Cells& cells) {
    std::vector<std::size_t> out;
    for (const auto& c : cells) out.push_back(c.size());
    return out;
}

// Moves v into its own cell just before the rest of its cell.
inline Cells individualize(Cells cells, Vertex v) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
        auto it = std::find(cells[c].begin(), cells[c].end(), v);
        if (it == cells[c].end()) continue;
        cells[c].erase(it);
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), std::vector<Vertex>{v});
        return cells;
    }
    return cells;
}

inline std::size_t first_nontrivial(const Cells& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c)
        if (cells[c].size() > 1) return c;
    return cells.size();
}

struct SearchPath {
    std::vector<Cells> partitions;  // partition at each level (refined)
    std::vector<Vertex> chosen;     // vertex individualised at each level
    std::vector<std::size_t> cell;  // index of the target cell at each level
};

inline SearchPath first_path(const Graph& g) {
    SearchPath path;
    Cells cells{g.vertices().to_vector()};
    if (g.order() == 0) return path;
    cells = refine(g, cells);
    while (true) {
        path.partitions.push_back(cells);
        const std::size_t c = first_nontrivial(cells);
        if (c == cells.size()) break;
        const Vertex v = cells[c].front();
        path.cell.push_back(c);
        path.chosen.push_back(v);
        cells = refine(g, individualize(cells, v));
    }
    return path;
}

// An automorphism fixing path.chosen[0..level) and sending path.chosen[level] to w.
inline std::optional<Permutation> find_automorphism(const Graph& g, const SearchPath& path, std::size_t level, Vertex w) {
    Cells q = refine(g, individualize(path.partitions[level], w));
    std::optional<Permutation> result;
    auto descend = [&](auto& self, std::size_t depth, const Cells& other) -> void {
        if (result) return;
        const Cells& mine = path.partitions[depth];
        if (shape(mine) != shape(other)) return;
        const std::size_t c = first_nontrivial(mine);
        if (c == mine.size()) {
            Permutation p(static_cast<std::size_t>(g.order()));
            for (std::size_t i = 0; i < mine.size(); ++i) p[static_cast<std::size_t>(mine[i].front())] = other[i].front();
            if (is_automorphism(g, p)) result = std::move(p);
            return;
        }
        for (Vertex u : other[c]) {
            self(self, depth + 1, refine(g, individualize(other, u)));
            if (result) return;
        }
    };
    descend(descend, level + 1, q);
    return result;
}

inline std::vector<Vertex> point_orbit(const std::vector<Permutation>& gens, Vertex v) {
    std::set<Vertex> seen{v};
    std::deque<Vertex> queue{v};
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        for (const auto& p : gens) {
            Vertex y = p[static_cast<std::size_t>(x)];
            if (seen.insert(y).second) queue.push_back(y);
        }
    }
    return {seen.begin(), seen.end()};
}

} // namespace detail

/// Generators of Aut(G) by refinement and individualisation.
inline AutomorphismSet automorphism_generators(const Graph& g, int bound = 64) {
    if (g.order() > bound)
        fail(ErrorCode::TooLarge, "graph has " + std::to_string(g.order()) + " vertices, bound is " + std::to_string(bound));
    AutomorphismSet out;
    out.degree = g.order();
    const auto path = detail::first_path(g);
    long double order = 1;
    for (std::size_t level = path.chosen.size(); level-- > 0;) {
        const Vertex v = path.chosen[level];
        const auto& cell = path.partitions[level][path.cell[level]];
        for (Vertex w : cell) {
            const auto orbit = detail::point_orbit(out.generators, v);
            if (std::binary_search(orbit.begin(), orbit.end(), w)) continue;
            if (auto p = detail::find_automorphism(g, path, level, w)) out.generators.push_back(std::move(*p));
        }
        order *= static_cast<long double>(detail::point_orbit(out.generators, v).size());
    }
    for (const auto& p : out.generators)
        if (!is_automorphism(g, p)) fail(ErrorCode::InternalInvariant, "generator is not an automorphism");
    out.order_estimate = order;
    if (order <= static_cast<long double>(AutomorphismSet::kMaxExactOrder))
        out.group_order = static_cast<std::uint64_t>(order + 0.5L);
    return out;
}

/// Orbits of `objects` under the generated group, each sorted, ordered by
/// their smallest member. Objects outside the input list are followed too.
template <typename T>
std::vector<std::vector<T>> orbit_closure(const AutomorphismSet& aut, const std::vector<T>& objects) {
    std::set<T> done;
    std::vector<std::vector<T>> out;
    for (const auto& seed : objects) {
        if (done.contains(seed)) continue;
        std::set<T> orbit{seed};
        std::deque<T> queue{seed};
        while (!queue.empty()) {
            T x = queue.front();
            queue.pop_front();
            for (const auto& p : aut.generators) {
                T y = chordtd::apply(p, x);
                if (orbit.insert(y).second) queue.push_back(y);
            }
        }
        done.insert(orbit.begin(), orbit.end());
        out.emplace_back(orbit.begin(), orbit.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct GeneratorAction {
    bool exists = false;
    bool unique = false;
    std::vector<Node> node_map;  ///< the tree automorphism, when it exists
};

struct CanonicalReport {
    bool canonical = true;
    std::vector<GeneratorAction> actions;  ///< one per generator
};

/// Up to `limit` tree automorphisms phi with gamma(V_t) = V_phi(t) for every node t.
inline std::vector<std::vector<Node>> tree_actions(const TreeDecomposition& td, const Permutation& gamma, int limit = 2) {
    const int n = td.size();
    std::vector<std::vector<Node>> candidates(static_cast<std::size_t>(n));
    for (Node t = 0; t < n; ++t) {
        const VertexSet image = chordtd::apply(gamma, td.bag(t));
        for (Node u = 0; u < n; ++u)
            if (td.bag(u) == image) candidates[static_cast<std::size_t>(t)].push_back(u);
        if (candidates[static_cast<std::size_t>(t)].empty()) return {};
    }
    // Visit nodes in BFS order so every node after the first has a placed neighbour.
    std::vector<Node> order;
    std::vector<Node> parent(static_cast<std::size_t>(n), -1);
    {
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        std::deque<Node> queue{0};
        seen[0] = true;
        while (!queue.empty()) {
            Node t = queue.front();
            queue.pop_front();
            order.push_back(t);
            for (Node u : td.tree.adjacency(t))
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = true;
                    parent[static_cast<std::size_t>(u)] = t;
                    queue.push_back(u);
                }
        }
    }
    std::vector<std::vector<Node>> found;
    std::vector<Node> phi(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    auto place = [&](auto& self, std::size_t i) -> void {
        if (static_cast<int>(found.size()) >= limit) return;
        if (i == order.size()) {
            found.push_back(phi);
            return;
        }
        const Node t = order[i];
        for (Node u : candidates[static_cast<std::size_t>(t)]) {
            if (used[static_cast<std::size_t>(u)]) continue;
            const Node p = parent[static_cast<std::size_t>(t)];
            if (p >= 0 && !td.tree.adjacent(phi[static_cast<std::size_t>(p)], u)) continue;
            phi[static_cast<std::size_t>(t)] = u;
            used[static_cast<std::size_t>(u)] = true;
            self(self, i + 1);
            used[static_cast<std::size_t>(u)] = false;
            phi[static_cast<std::size_t>(t)] = -1;
        }
    };
    place(place, 0);
    return found;
}

/// Checks that every generator acts on the decomposition tree compatibly with the bags.
inline CanonicalReport verify_canonical_td(const TreeDecomposition& td, const AutomorphismSet& aut) {
    CanonicalReport r;
    for (const auto& gamma : aut.generators) {
        GeneratorAction a;
        auto phis = tree_actions(td, gamma, 2);
        a.exists = !phis.empty();
        a.unique = phis.size() == 1;
        if (a.exists) a.node_map = phis.front();
        r.canonical = r.canonical && a.exists;
        r.actions.push_back(std::move(a));
    }
    return r;
}

} // namespace chordtd
