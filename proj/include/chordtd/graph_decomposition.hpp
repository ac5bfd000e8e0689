#pragma once

#include "chordtd/chordal.hpp"
#include "chordtd/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace chordtd {

/// Connected subgraph of the model graph: node set plus model edges.
struct Copart {
    VertexSet nodes;
    std::vector<std::pair<int, int>> edges;  ///< (s, t), s < t, sorted

    friend bool operator==(const Copart&, const Copart&) = default;
};

/// Bags arranged along a model graph H; coparts[v] is the connected H_v for vertex v.
struct GraphDecomposition {
    Graph model;
    std::vector<VertexSet> bags;
    std::vector<Copart> coparts;

    int size() const { return model.order(); }
    VertexSet nodes_containing(Vertex v) const {
        VertexSet out;
        for (int h = 0; h < size(); ++h)
            if (bags[static_cast<std::size_t>(h)].contains(v)) out.insert(h);
        return out;
    }
};

struct GdReport {
    bool covers = true;     ///< every vertex and edge of G lies in some bag
    bool connected = true;  ///< every H[W_v] is connected and H_v is a connected subgraph of it
    bool into_cliques = false;
    bool into_maximal_cliques = false;
    std::optional<Vertex> uncovered_vertex;
    std::optional<std::pair<Vertex, Vertex>> uncovered_edge;
    std::optional<Vertex> disconnected_vertex;

    bool ok() const { return covers && connected; }
};

inline bool copart_connected(const Copart& c) {
    if (c.nodes.empty()) return false;
    VertexSet reached{c.nodes.front()};
    bool grew = true;
    while (grew) {
        grew = false;
        for (auto [s, t] : c.edges) {
            if (reached.contains(s) != reached.contains(t)) {
                reached.insert(s);
                reached.insert(t);
                grew = true;
            }
        }
    }
    return c.nodes.subset_of(reached);
}

inline GdReport verify_graph_decomposition(const Graph& g, const GraphDecomposition& gd) {
    if (static_cast<int>(gd.bags.size()) != gd.size() || static_cast<int>(gd.coparts.size()) != g.order())
        fail(ErrorCode::InvalidInput, "bag or copart count does not match");
    GdReport r;
    for (Vertex v = 0; v < g.order() && r.covers; ++v)
        if (gd.nodes_containing(v).empty()) {
            r.covers = false;
            r.uncovered_vertex = v;
        }
    for (auto [u, v] : g.edges()) {
        if (!r.covers) break;
        bool hit = false;
        for (const auto& b : gd.bags) hit = hit || (b.contains(u) && b.contains(v));
        if (!hit) {
            r.covers = false;
            r.uncovered_edge = std::make_pair(u, v);
        }
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        const VertexSet w = gd.nodes_containing(v);
        const Copart& c = gd.coparts[static_cast<std::size_t>(v)];
        bool ok = !w.empty() && components(gd.model, w).size() == 1 && c.nodes.subset_of(w) && copart_connected(c);
        for (auto [s, t] : c.edges) ok = ok && c.nodes.contains(s) && c.nodes.contains(t) && gd.model.adjacent(s, t);
        if (!ok) {
            r.connected = false;
            r.disconnected_vertex = v;
            break;
        }
    }
    r.into_cliques = std::all_of(gd.bags.begin(), gd.bags.end(), [&](const VertexSet& b) { return is_clique(g, b); });
    if (r.into_cliques) {
        auto bags = gd.bags;
        std::sort(bags.begin(), bags.end());
        r.into_maximal_cliques = bags == all_maximal_cliques(g);
    }
    return r;
}

struct AcyclicityWitness {
    std::vector<Vertex> vertices;  ///< the set X
    std::vector<int> cycle;        ///< model nodes of a cycle in the union of their coparts
};

struct RAcyclicResult {
    bool acyclic = true;
    bool exhaustive = true;
    std::uint64_t sets_checked = 0;
    std::optional<AcyclicityWitness> witness;
};

namespace detail {

// A cycle in the union of coparts, as a node sequence.
inline std::optional<std::vector<int>> copart_union_cycle(const GraphDecomposition& gd, std::span<const Vertex> xs) {
    std::set<std::pair<int, int>> edges;
    for (Vertex x : xs)
        for (auto e : gd.coparts[static_cast<std::size_t>(x)].edges) edges.insert(e);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(gd.size()));
    for (auto [s, t] : edges) {
        adj[static_cast<std::size_t>(s)].push_back(t);
        adj[static_cast<std::size_t>(t)].push_back(s);
    }
    std::vector<int> parent(static_cast<std::size_t>(gd.size()), -2);
    std::vector<int> depth(static_cast<std::size_t>(gd.size()), 0);
    for (int root = 0; root < gd.size(); ++root) {
        if (parent[static_cast<std::size_t>(root)] != -2) continue;
        parent[static_cast<std::size_t>(root)] = -1;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[static_cast<std::size_t>(u)]) {
                if (w == parent[static_cast<std::size_t>(u)]) continue;
                if (parent[static_cast<std::size_t>(w)] == -2) {
                    parent[static_cast<std::size_t>(w)] = u;
                    depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(u)] + 1;
                    stack.push_back(w);
                    continue;
                }
                // Non-tree edge u-w closes a cycle through their common ancestor.
                std::vector<int> left{u}, right{w};
                int a = u, b = w;
                while (a != b) {
                    if (depth[static_cast<std::size_t>(a)] >= depth[static_cast<std::size_t>(b)]) {
                        a = parent[static_cast<std::size_t>(a)];
                        left.push_back(a);
                    } else {
                        b = parent[static_cast<std::size_t>(b)];
                        right.push_back(b);
                    }
                }
                right.pop_back();
                std::reverse(right.begin(), right.end());
                left.insert(left.end(), right.begin(), right.end());
                return left;
            }
        }
    }
    return std::nullopt;
}

inline long double binomial(int n, int k) {
    long double r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace detail

struct RAcyclicOptions {
    std::uint64_t budget = 1'000'000;
    bool require_exhaustive = false;
    std::uint64_t seed = 1;
};

/// Whether the union of any r coparts is a forest. Unions grow with X, so only
/// sets of size min(r, |V|) are examined.
inline RAcyclicResult r_acyclic_check(const Graph& g, const GraphDecomposition& gd, int r, const RAcyclicOptions& opt = {}) {
    if (r < 0) fail(ErrorCode::InvalidInput, "r must be non-negative");
    if (static_cast<int>(gd.coparts.size()) != g.order()) fail(ErrorCode::InvalidInput, "copart count does not match");
    RAcyclicResult res;
    const int n = g.order();
    const int k = std::min(r, n);
    auto test = [&](std::span<const Vertex> set) {
        ++res.sets_checked;
        if (auto cycle = detail::copart_union_cycle(gd, set)) {
            res.acyclic = false;
            res.witness = AcyclicityWitness{{set.begin(), set.end()}, std::move(*cycle)};
            return false;
        }
        return true;
    };
    if (detail::binomial(n, k) <= static_cast<long double>(opt.budget)) {
        std::vector<Vertex> pick(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
        while (true) {
            if (!test(pick)) return res;
            int i = k - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
        return res;
    }
    if (opt.require_exhaustive) fail(ErrorCode::BudgetExceeded, "exhaustive check exceeds the budget");
    res.exhaustive = false;
    std::mt19937_64 rng(opt.seed);
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    for (std::uint64_t s = 0; s < opt.budget; ++s) {
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<Vertex> pick(all.begin(), all.begin() + k);
        std::sort(pick.begin(), pick.end());
        if (!test(pick)) return res;
    }
    return res;
}

} // namespace chordtd
