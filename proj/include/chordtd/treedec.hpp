#pragma once

#include "chordtd/chordal.hpp"
#include "chordtd/separations.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace chordtd {

using Node = int;
using TreeEdge = std::pair<Node, Node>;

/// Tree plus one bag per tree node. Tree node i is named std::to_string(i).
struct TreeDecomposition {
    Graph tree;
    std::vector<VertexSet> bags;

    int size() const { return tree.order(); }
    const VertexSet& bag(Node t) const { return bags.at(static_cast<std::size_t>(t)); }
    /// Tree edges (s, t), s < t, sorted; the index into this list names an edge.
    std::vector<TreeEdge> edges() const { return tree.edges(); }

    friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

inline Graph make_tree_graph(int nodes, std::span<const TreeEdge> edges) {
    Graph t;
    for (int i = 0; i < nodes; ++i) t.add_vertex(std::to_string(i));
    for (auto [s, u] : edges) {
        if (s < 0 || u < 0 || s >= nodes || u >= nodes) fail(ErrorCode::InvalidInput, "tree edge names a missing node");
        t.add_edge(s, u);
    }
    return t;
}

inline TreeDecomposition make_td(std::vector<VertexSet> bags, std::span<const TreeEdge> edges) {
    TreeDecomposition td;
    td.tree = make_tree_graph(static_cast<int>(bags.size()), edges);
    td.bags = std::move(bags);
    return td;
}

inline bool is_tree(const Graph& t) {
    return t.order() > 0 && is_connected(t) && t.num_edges() + 1 == static_cast<std::size_t>(t.order());
}

/// Nodes whose bags contain v.
inline VertexSet nodes_containing(const TreeDecomposition& td, Vertex v) {
    VertexSet out;
    for (Node t = 0; t < td.size(); ++t)
        if (td.bag(t).contains(v)) out.insert(t);
    return out;
}

struct TdReport {
    bool covers = true;     ///< every vertex and edge lies in some bag
    bool connected = true;  ///< every T_v is a subtree
    std::optional<Vertex> uncovered_vertex;
    std::optional<std::pair<Vertex, Vertex>> uncovered_edge;
    std::optional<Vertex> disconnected_vertex;

    bool ok() const { return covers && connected; }
};

inline TdReport verify_td(const Graph& g, const TreeDecomposition& td) {
    if (!is_tree(td.tree)) fail(ErrorCode::NotATree, "decomposition graph is not a tree");
    if (static_cast<int>(td.bags.size()) != td.size()) fail(ErrorCode::InvalidInput, "bag count differs from node count");
    TdReport r;
    for (const auto& b : td.bags)
        for (Vertex v : b) g.check_vertex(v);
    for (Vertex v = 0; v < g.order() && r.covers; ++v)
        if (nodes_containing(td, v).empty()) {
            r.covers = false;
            r.uncovered_vertex = v;
        }
    for (auto [u, v] : g.edges()) {
        if (!r.covers) break;
        bool hit = false;
        for (const auto& b : td.bags) hit = hit || (b.contains(u) && b.contains(v));
        if (!hit) {
            r.covers = false;
            r.uncovered_edge = std::make_pair(u, v);
        }
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        const VertexSet tv = nodes_containing(td, v);
        if (!tv.empty() && components(td.tree, tv).size() > 1) {
            r.connected = false;
            r.disconnected_vertex = v;
            break;
        }
    }
    return r;
}

/// Separation induced by a tree edge, with the side of each endpoint kept.
struct InducedSeparation {
    Separation separation;
    VertexSet side_s;  ///< union of bags on the side of the first endpoint
    VertexSet side_t;
    VertexSet adhesion;
};

inline InducedSeparation induced_separation(const Graph& g, const TreeDecomposition& td, TreeEdge f) {
    auto [s, t] = f;
    if (!td.tree.adjacent(s, t)) fail(ErrorCode::InvalidInput, "not a tree edge");
    const VertexSet rest = td.tree.vertices() - VertexSet{t};
    VertexSet reach_s;
    for (const auto& comp : components(td.tree, rest))
        if (comp.contains(s)) reach_s = comp;
    InducedSeparation out;
    for (Node u = 0; u < td.size(); ++u) (reach_s.contains(u) ? out.side_s : out.side_t) |= td.bag(u);
    out.adhesion = td.bag(s) & td.bag(t);
    out.separation = Separation::make(g, out.side_s, out.side_t);
    return out;
}

/// Induced separations in tree-edge order.
inline std::vector<Separation> induced_separations(const Graph& g, const TreeDecomposition& td) {
    std::vector<Separation> out;
    for (auto f : td.edges()) out.push_back(induced_separation(g, td, f).separation);
    return out;
}

namespace detail {

// Orientation of t pointing toward s: false for (t.a, t.b), true for (t.b, t.a).
inline bool orientation_toward(const Separation& t, const Separation& s) {
    if (oriented_le(t.a(), t.b(), s.a(), s.b()) || oriented_le(t.a(), t.b(), s.b(), s.a())) return false;
    if (oriented_le(t.b(), t.a(), s.a(), s.b()) || oriented_le(t.b(), t.a(), s.b(), s.a())) return true;
    fail(ErrorCode::NotNested, "two separations of the family cross");
}

} // namespace detail

/// The tree-decomposition whose induced separations are exactly `n`.
///
/// Each node is a consistent orientation of n: the orientations that point
/// toward a fixed oriented separation. Its bag is the intersection of the
/// chosen big sides.
inline TreeDecomposition build_td_from_nested(const Graph& g, std::span<const Separation> n) {
    if (!is_connected(g)) fail(ErrorCode::NotConnected, "graph is not connected");
    std::vector<Separation> seps(n.begin(), n.end());
    std::sort(seps.begin(), seps.end());
    seps.erase(std::unique(seps.begin(), seps.end()), seps.end());
    for (const auto& s : seps) {
        if (!classify(g, s).proper) fail(ErrorCode::ImproperSeparation, "family contains an improper separation");
        Separation::make(g, s.a(), s.b());
    }
    const std::size_t m = seps.size();
    if (m == 0) {
        std::vector<VertexSet> bags{g.vertices()};
        return make_td(std::move(bags), {});
    }
    std::vector<std::vector<bool>> toward(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j) toward[j][i] = detail::orientation_toward(seps[j], seps[i]);

    std::map<std::vector<bool>, Node> node_of;
    std::vector<std::vector<bool>> orientation;
    std::vector<TreeEdge> edges;
    auto head = [&](std::size_t i, bool dir) {
        std::vector<bool> sigma(m);
        for (std::size_t j = 0; j < m; ++j) sigma[j] = j == i ? dir : toward[j][i];
        auto [it, inserted] = node_of.emplace(sigma, static_cast<Node>(orientation.size()));
        if (inserted) orientation.push_back(sigma);
        return it->second;
    };
    for (std::size_t i = 0; i < m; ++i) {
        const Node u = head(i, false);
        const Node v = head(i, true);
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    if (orientation.size() != m + 1) fail(ErrorCode::InternalInvariant, "orientation graph is not a tree");
    std::vector<VertexSet> bags;
    for (const auto& sigma : orientation) {
        VertexSet bag = g.vertices();
        for (std::size_t j = 0; j < m; ++j) bag &= sigma[j] ? seps[j].a() : seps[j].b();
        bags.push_back(std::move(bag));
    }
    auto td = make_td(std::move(bags), edges);
    if (!verify_td(g, td).ok()) fail(ErrorCode::InternalInvariant, "built decomposition is invalid");
    auto induced = induced_separations(g, td);
    std::sort(induced.begin(), induced.end());
    if (induced != seps) fail(ErrorCode::InternalInvariant, "induced separations differ from the family");
    return td;
}

struct TDClassification {
    bool regular = false;
    bool point_finite = true;
    bool into_cliques = false;
    bool into_maximal_cliques = false;
};

inline TDClassification classify_td(const Graph& g, const TreeDecomposition& td) {
    TDClassification c;
    c.regular = true;
    for (const auto& s : induced_separations(g, td)) c.regular = c.regular && classify(g, s).proper;
    c.into_cliques = true;
    for (const auto& b : td.bags) c.into_cliques = c.into_cliques && is_clique(g, b);
    if (c.into_cliques) {
        const auto cliques = maximal_cliques(g);
        std::vector<VertexSet> bags = td.bags;
        std::sort(bags.begin(), bags.end());
        c.into_maximal_cliques = bags == cliques;
    }
    return c;
}

/// A node whose bag contains the clique k (smallest such node).
inline Node clique_in_bag(const Graph& g, const TreeDecomposition& td, const VertexSet& k) {
    for (Vertex v : k) g.check_vertex(v);
    if (!is_clique(g, k)) fail(ErrorCode::NotAClique, "vertex set is not a clique");
    for (Node t = 0; t < td.size(); ++t)
        if (k.subset_of(td.bag(t))) return t;
    fail(ErrorCode::InternalInvariant, "no bag contains the clique");
}

enum class OrbitOrder { Canonical, Input };

/// Contracts edge orbits whose representative has nested bags until no edge
/// joins a bag to a sub- or superset of it.
///
/// `orbits` partitions the indices of td.edges(); pass singletons for the trivial group.
inline TreeDecomposition contract_to_maximal(const Graph& g, const TreeDecomposition& td,
                                             std::vector<std::vector<int>> orbits,
                                             OrbitOrder order = OrbitOrder::Canonical) {
    if (!verify_td(g, td).ok()) fail(ErrorCode::PreconditionViolated, "input is not a tree-decomposition");
    const auto cls = classify_td(g, td);
    if (!cls.into_cliques) fail(ErrorCode::PreconditionViolated, "input is not into cliques");
    if (!cls.regular) fail(ErrorCode::PreconditionViolated, "input is not regular");
    const auto edges = td.edges();
    {
        std::vector<int> seen(edges.size(), 0);
        for (const auto& orbit : orbits) {
            if (orbit.empty()) fail(ErrorCode::InvalidInput, "empty orbit");
            for (int e : orbit) {
                if (e < 0 || static_cast<std::size_t>(e) >= edges.size()) fail(ErrorCode::InvalidInput, "orbit names a missing edge");
                ++seen[static_cast<std::size_t>(e)];
            }
        }
        for (int c : seen)
            if (c != 1) fail(ErrorCode::InvalidInput, "orbits do not partition the tree edges");
    }
    if (order == OrbitOrder::Canonical) {
        for (auto& orbit : orbits) std::sort(orbit.begin(), orbit.end());
        std::sort(orbits.begin(), orbits.end());
    }

    std::vector<Node> parent(static_cast<std::size_t>(td.size()));
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<VertexSet> bag = td.bags;
    auto find = [&](Node x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& orbit : orbits) {
            const auto [s0, t0] = edges[static_cast<std::size_t>(orbit.front())];
            const Node s = find(s0), t = find(t0);
            if (s == t) continue;
            const auto& bs = bag[static_cast<std::size_t>(s)];
            const auto& bt = bag[static_cast<std::size_t>(t)];
            if (!bs.subset_of(bt) && !bt.subset_of(bs)) continue;
            std::set<Node> ends;
            for (int e : orbit) {
                const Node a = find(edges[static_cast<std::size_t>(e)].first);
                const Node b = find(edges[static_cast<std::size_t>(e)].second);
                if (a == b || !ends.insert(a).second || !ends.insert(b).second)
                    fail(ErrorCode::OrbitNotMatching, "edge orbit is not a matching");
            }
            for (int e : orbit) {
                const Node a = find(edges[static_cast<std::size_t>(e)].first);
                const Node b = find(edges[static_cast<std::size_t>(e)].second);
                const Node keep = std::min(a, b);
                const Node drop = std::max(a, b);
                bag[static_cast<std::size_t>(keep)] |= bag[static_cast<std::size_t>(drop)];
                parent[static_cast<std::size_t>(drop)] = keep;
            }
            changed = true;
        }
    }

    std::map<Node, Node> renumber;
    std::vector<VertexSet> out_bags;
    for (Node t = 0; t < td.size(); ++t) {
        const Node r = find(t);
        if (renumber.emplace(r, static_cast<Node>(out_bags.size())).second) out_bags.push_back(bag[static_cast<std::size_t>(r)]);
    }
    std::vector<TreeEdge> out_edges;
    for (auto [s, t] : edges) {
        const Node a = renumber.at(find(s));
        const Node b = renumber.at(find(t));
        if (a != b) out_edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    auto out = make_td(std::move(out_bags), out_edges);
    for (auto [s, t] : out.edges())
        if (out.bag(s).subset_of(out.bag(t)) || out.bag(t).subset_of(out.bag(s)))
            fail(ErrorCode::InternalInvariant, "a nested pair of adjacent bags survived");
    if (!verify_td(g, out).ok() || !classify_td(g, out).into_maximal_cliques)
        fail(ErrorCode::InternalInvariant, "contraction did not produce a decomposition into maximal cliques");
    return out;
}

/// Singleton orbits: the trivial group.
inline std::vector<std::vector<int>> trivial_edge_orbits(const TreeDecomposition& td) {
    std::vector<std::vector<int>> out;
    for (int e = 0; e < static_cast<int>(td.edges().size()); ++e) out.push_back({e});
    return out;
}

/// True when G[S] is a disjoint union of complete graphs.
inline bool is_cluster(const Graph& g, const VertexSet& s) {
    for (const auto& comp : components(g, s))
        if (!is_clique(g, comp)) return false;
    return true;
}

/// On a connected graph, a decomposition whose parts are disjoint unions of
/// complete graphs has only complete parts. Returns whether that holds here.
inline bool disjoint_union_bags_lemma_check(const Graph& g, const TreeDecomposition& td) {
    if (!is_connected(g)) fail(ErrorCode::PreconditionViolated, "graph is not connected");
    if (!verify_td(g, td).ok()) fail(ErrorCode::PreconditionViolated, "input is not a tree-decomposition");
    for (const auto& b : td.bags)
        if (!is_cluster(g, b)) fail(ErrorCode::PreconditionViolated, "a part is not a disjoint union of complete graphs");
    for (const auto& b : td.bags)
        if (!is_clique(g, b)) return false;
    return true;
}

} // namespace chordtd
