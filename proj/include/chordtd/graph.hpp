#pragma once

#include "chordtd/error.hpp"
#include "chordtd/vertex_set.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace chordtd {

/// Finite simple undirected graph over opaque string identifiers.
///
/// Vertices are renumbered densely in canonical order (order of first
/// appearance); every set the library returns is sorted by that order.
class Graph {
public:
    Graph() = default;

    /// Graph on the given vertices with no edges.
    explicit Graph(const std::vector<std::string>& names) {
        for (const auto& n : names) add_vertex(n);
    }

    /// Adds a vertex (no-op if the name exists) and returns its index.
    Vertex add_vertex(std::string_view name) {
        if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
        const auto v = static_cast<Vertex>(names_.size());
        names_.emplace_back(name);
        index_.emplace(std::string(name), v);
        adj_.emplace_back();
        adj_list_.emplace_back();
        return v;
    }

    /// Adds the edge uv; duplicates collapse. Loops raise LoopEdge.
    void add_edge(Vertex u, Vertex v) {
        if (u == v) fail(ErrorCode::LoopEdge, "loop at '" + names_.at(static_cast<std::size_t>(u)) + "'");
        if (adj_.at(static_cast<std::size_t>(u)).contains(v)) return;
        adj_[static_cast<std::size_t>(u)].insert(v);
        adj_[static_cast<std::size_t>(v)].insert(u);
        insert_sorted(adj_list_[static_cast<std::size_t>(u)], v);
        insert_sorted(adj_list_[static_cast<std::size_t>(v)], u);
        ++num_edges_;
    }
    void add_edge(std::string_view u, std::string_view v) {
        const Vertex a = add_vertex(u);
        const Vertex b = add_vertex(v);
        add_edge(a, b);
    }

    int order() const { return static_cast<int>(names_.size()); }
    std::size_t num_edges() const { return num_edges_; }

    const std::string& name(Vertex v) const { return names_.at(static_cast<std::size_t>(v)); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<Vertex> find(std::string_view name) const {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    Vertex index(std::string_view name) const {
        auto v = find(name);
        if (!v) fail(ErrorCode::UnknownVertex, "no vertex named '" + std::string(name) + "'");
        return *v;
    }
    void check_vertex(Vertex v) const {
        if (v < 0 || v >= order()) fail(ErrorCode::UnknownVertex, "vertex index " + std::to_string(v) + " out of range");
    }

    const VertexSet& neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
    const std::vector<Vertex>& adjacency(Vertex v) const { return adj_list_.at(static_cast<std::size_t>(v)); }
    int degree(Vertex v) const { return static_cast<int>(adjacency(v).size()); }
    bool adjacent(Vertex u, Vertex v) const { return neighbors(u).contains(v); }

    VertexSet vertices() const { return VertexSet::full(order()); }

    /// Edges as (u, v) with u < v, sorted.
    std::vector<std::pair<Vertex, Vertex>> edges() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        out.reserve(num_edges_);
        for (Vertex u = 0; u < order(); ++u)
            for (Vertex v : adjacency(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    /// Names of the members of a set, in canonical order.
    std::vector<std::string> names_of(const VertexSet& s) const {
        std::vector<std::string> out;
        for (Vertex v : s) out.push_back(name(v));
        return out;
    }
    VertexSet set_of(std::span<const std::string> names) const {
        VertexSet s;
        for (const auto& n : names) s.insert(index(n));
        return s;
    }
    VertexSet set_of(std::initializer_list<std::string_view> names) const {
        VertexSet s;
        for (auto n : names) s.insert(index(n));
        return s;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.names_ == b.names_ && a.adj_ == b.adj_; }

private:
    static void insert_sorted(std::vector<Vertex>& list, Vertex v) {
        auto it = std::lower_bound(list.begin(), list.end(), v);
        list.insert(it, v);
    }

    std::vector<std::string> names_;
    std::unordered_map<std::string, Vertex> index_;
    std::vector<VertexSet> adj_;
    std::vector<std::vector<Vertex>> adj_list_;
    std::size_t num_edges_ = 0;
};

/// Builds a graph from identifier pairs; `isolated` declares extra vertices
/// (they take their canonical positions first).
inline Graph from_edge_list(std::span<const std::pair<std::string, std::string>> pairs,
                            std::span<const std::string> isolated = {}) {
    Graph g;
    for (const auto& v : isolated) g.add_vertex(v);
    for (const auto& [u, v] : pairs) {
        if (u == v) fail(ErrorCode::LoopEdge, "loop at '" + u + "'");
        g.add_edge(u, v);
    }
    return g;
}

inline Graph from_edge_list(std::initializer_list<std::pair<std::string, std::string>> pairs) {
    std::vector<std::pair<std::string, std::string>> v(pairs);
    return from_edge_list(std::span<const std::pair<std::string, std::string>>(v));
}

inline constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

/// BFS distances from `source`, restricted to `within` when given.
inline std::vector<int> bfs_distances(const Graph& g, Vertex source, const VertexSet* within = nullptr) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), kInfiniteDistance);
    std::deque<Vertex> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.adjacency(u)) {
            if (within && !within->contains(w)) continue;
            if (dist[static_cast<std::size_t>(w)] != kInfiniteDistance) continue;
            dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
            queue.push_back(w);
        }
    }
    return dist;
}

/// Graph distance; kInfiniteDistance across components.
inline int distance(const Graph& g, Vertex u, Vertex v) {
    g.check_vertex(u);
    g.check_vertex(v);
    return bfs_distances(g, u)[static_cast<std::size_t>(v)];
}

/// Induced subgraph with names preserved; `to_host[i]` maps back.
struct Subgraph {
    Graph graph;
    std::vector<Vertex> to_host;

    VertexSet lift(const VertexSet& local) const {
        VertexSet s;
        for (Vertex v : local) s.insert(to_host[static_cast<std::size_t>(v)]);
        return s;
    }
};

inline Subgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    Subgraph sub;
    std::vector<Vertex> local(static_cast<std::size_t>(g.order()), -1);
    for (Vertex v : keep) {
        local[static_cast<std::size_t>(v)] = sub.graph.add_vertex(g.name(v));
        sub.to_host.push_back(v);
    }
    for (Vertex v : keep)
        for (Vertex w : g.adjacency(v))
            if (v < w && keep.contains(w))
                sub.graph.add_edge(local[static_cast<std::size_t>(v)], local[static_cast<std::size_t>(w)]);
    return sub;
}

/// Ball of radius radius2/2 around a center.
///
/// Radius (2k+1)/2 is taken as the vertices at distance <= k with every host
/// edge among them, so odd balls coincide with the next smaller even ball.
struct Ball {
    Vertex center = 0;
    int radius2 = 0;
    VertexSet members;  ///< host vertices
    Subgraph subgraph;
};

inline Ball ball(const Graph& g, Vertex v, int radius2) {
    g.check_vertex(v);
    if (radius2 < 0) fail(ErrorCode::InvalidInput, "negative radius");
    const int k = radius2 / 2;
    const auto dist = bfs_distances(g, v);
    VertexSet members;
    for (Vertex u = 0; u < g.order(); ++u)
        if (dist[static_cast<std::size_t>(u)] <= k) members.insert(u);
    Ball b;
    b.center = v;
    b.radius2 = radius2;
    b.members = members;
    b.subgraph = induced_subgraph(g, members);
    return b;
}

/// Open neighbourhood of a set: vertices outside it with a neighbour inside.
inline VertexSet neighborhood(const Graph& g, const VertexSet& s) {
    VertexSet n;
    for (Vertex v : s) n |= g.neighbors(v);
    return n - s;
}

/// Connected components of G[within], in canonical order of their smallest vertex.
namespace detail {

/// Component index of every vertex of `within` (-1 elsewhere), numbered by smallest vertex.
inline int label_components(const Graph& g, const VertexSet& within, std::vector<int>& label) {
    label.assign(static_cast<std::size_t>(g.order()), -2);
    for (Vertex v : within) label[static_cast<std::size_t>(v)] = -1;
    int count = 0;
    std::vector<Vertex> stack;
    for (Vertex v : within) {
        if (label[static_cast<std::size_t>(v)] != -1) continue;
        label[static_cast<std::size_t>(v)] = count;
        stack.push_back(v);
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.adjacency(u))
                if (label[static_cast<std::size_t>(w)] == -1) {
                    label[static_cast<std::size_t>(w)] = count;
                    stack.push_back(w);
                }
        }
        ++count;
    }
    for (auto& l : label)
        if (l == -2) l = -1;
    return count;
}

} // namespace detail

inline std::vector<VertexSet> components(const Graph& g, const VertexSet& within) {
    std::vector<int> label;
    const int count = detail::label_components(g, within, label);
    std::vector<VertexSet> out(static_cast<std::size_t>(count));
    for (Vertex v = 0; v < g.order(); ++v)
        if (label[static_cast<std::size_t>(v)] >= 0) out[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])].insert(v);
    return out;
}

inline bool is_connected(const Graph& g) { return components(g, g.vertices()).size() <= 1; }

struct Component {
    VertexSet vertices;
    bool full = false;  ///< N(C) equals the deleted set

    friend bool operator==(const Component&, const Component&) = default;
};

/// Components of G - X; a component C is full when N_G(C) = X.
inline std::vector<Component> components_after_deletion(const Graph& g, const VertexSet& x) {
    std::vector<int> label;
    const int count = detail::label_components(g, g.vertices() - x, label);
    std::vector<Component> out(static_cast<std::size_t>(count));
    for (Vertex v = 0; v < g.order(); ++v)
        if (label[static_cast<std::size_t>(v)] >= 0) out[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])].vertices.insert(v);
    // C is full when every vertex of X has a neighbour in C
    const int need = x.size();
    std::vector<int> hits(static_cast<std::size_t>(count), 0);
    std::vector<int> last(static_cast<std::size_t>(count), -1);
    for (Vertex u : x)
        for (Vertex w : g.adjacency(u)) {
            const int c = label[static_cast<std::size_t>(w)];
            if (c >= 0 && last[static_cast<std::size_t>(c)] != u) {
                last[static_cast<std::size_t>(c)] = u;
                ++hits[static_cast<std::size_t>(c)];
            }
        }
    for (int c = 0; c < count; ++c) out[static_cast<std::size_t>(c)].full = hits[static_cast<std::size_t>(c)] == need;
    return out;
}

inline bool is_clique(const Graph& g, const VertexSet& s) {
    for (Vertex v : s)
        if (!(s - VertexSet{v}).subset_of(g.neighbors(v))) return false;
    return true;
}

} // namespace chordtd
