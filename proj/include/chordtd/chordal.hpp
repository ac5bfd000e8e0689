#pragma once

#include "chordtd/graph.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <vector>

namespace chordtd {

/// Vertex order; position 0 is eliminated first.
struct EliminationOrdering {
    std::vector<Vertex> order;
};

/// Maximum cardinality search. Returns the visit order; its reverse is a
/// perfect elimination ordering exactly when the graph is chordal.
inline std::vector<Vertex> maximum_cardinality_search(const Graph& g) {
    const int n = g.order();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    std::vector<Vertex> visit;
    visit.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!done[static_cast<std::size_t>(v)] &&
                (best < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]))
                best = v;
        done[static_cast<std::size_t>(best)] = true;
        visit.push_back(best);
        for (Vertex w : g.adjacency(best))
            if (!done[static_cast<std::size_t>(w)]) ++weight[static_cast<std::size_t>(w)];
    }
    return visit;
}

/// Later neighbours of each vertex under an elimination ordering.
inline std::vector<VertexSet> later_neighbors(const Graph& g, const EliminationOrdering& peo) {
    std::vector<int> pos(static_cast<std::size_t>(g.order()));
    for (std::size_t i = 0; i < peo.order.size(); ++i) pos[static_cast<std::size_t>(peo.order[i])] = static_cast<int>(i);
    std::vector<VertexSet> later(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v)
        for (Vertex w : g.adjacency(v))
            if (pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)]) later[static_cast<std::size_t>(v)].insert(w);
    return later;
}

/// A violated elimination step: v's later neighbours `parent` and `other` are non-adjacent.
struct EliminationViolation {
    Vertex v;
    Vertex parent;
    Vertex other;
};

inline std::optional<EliminationViolation> check_perfect_elimination(const Graph& g, const EliminationOrdering& peo) {
    std::vector<int> pos(static_cast<std::size_t>(g.order()));
    for (std::size_t i = 0; i < peo.order.size(); ++i) pos[static_cast<std::size_t>(peo.order[i])] = static_cast<int>(i);
    const auto later = later_neighbors(g, peo);
    for (Vertex v : peo.order) {
        const auto& lv = later[static_cast<std::size_t>(v)];
        if (lv.empty()) continue;
        Vertex parent = -1;
        for (Vertex w : lv)
            if (parent < 0 || pos[static_cast<std::size_t>(w)] < pos[static_cast<std::size_t>(parent)]) parent = w;
        const VertexSet rest = lv - VertexSet{parent};
        const VertexSet missing = rest - g.neighbors(parent);
        if (!missing.empty()) return EliminationViolation{v, parent, missing.front()};
    }
    return std::nullopt;
}

inline bool is_perfect_elimination(const Graph& g, const EliminationOrdering& peo) {
    return !check_perfect_elimination(g, peo).has_value();
}

namespace detail {

// Rotates a cycle to start at its smallest vertex, heading toward the smaller neighbour.
inline std::vector<Vertex> normalize_cycle(std::vector<Vertex> cycle) {
    auto it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), it, cycle.end());
    if (cycle.size() > 2 && cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
    return cycle;
}

// Induced cycle through v, u, w (u, w non-adjacent neighbours of v) closed by a
// shortest u-w path avoiding the rest of N[v].
inline std::optional<std::vector<Vertex>> hole_through(const Graph& g, Vertex v, Vertex u, Vertex w) {
    VertexSet allowed = g.vertices() - (g.neighbors(v) | VertexSet{v});
    allowed.insert(u);
    allowed.insert(w);
    std::vector<Vertex> prev(static_cast<std::size_t>(g.order()), -1);
    std::deque<Vertex> queue{u};
    prev[static_cast<std::size_t>(u)] = u;
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        if (x == w) break;
        for (Vertex y : g.adjacency(x)) {
            if (!allowed.contains(y) || prev[static_cast<std::size_t>(y)] >= 0) continue;
            if (x == u && y == w) continue;
            prev[static_cast<std::size_t>(y)] = x;
            queue.push_back(y);
        }
    }
    if (prev[static_cast<std::size_t>(w)] < 0) return std::nullopt;
    std::vector<Vertex> cycle{v};
    std::vector<Vertex> path;
    for (Vertex x = w; x != u; x = prev[static_cast<std::size_t>(x)]) path.push_back(x);
    path.push_back(u);
    std::reverse(path.begin(), path.end());
    cycle.insert(cycle.end(), path.begin(), path.end());
    return normalize_cycle(std::move(cycle));
}

} // namespace detail

/// Some induced cycle of length >= 4, if the graph has one.
inline std::optional<std::vector<Vertex>> find_hole(const Graph& g, std::optional<EliminationViolation> hint = std::nullopt) {
    if (hint) {
        if (auto h = detail::hole_through(g, hint->v, hint->parent, hint->other)) return h;
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto& nb = g.adjacency(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (g.adjacent(nb[i], nb[j])) continue;
                if (auto h = detail::hole_through(g, v, nb[i], nb[j])) return h;
            }
    }
    return std::nullopt;
}

struct ChordalityResult {
    bool chordal = false;
    EliminationOrdering peo;   ///< set when chordal
    std::vector<Vertex> hole;  ///< induced cycle of length >= 4 when not chordal
};

inline ChordalityResult is_chordal(const Graph& g) {
    auto visit = maximum_cardinality_search(g);
    std::reverse(visit.begin(), visit.end());
    EliminationOrdering peo{std::move(visit)};
    ChordalityResult result;
    if (auto violation = check_perfect_elimination(g, peo)) {
        auto hole = find_hole(g, violation);
        if (!hole) fail(ErrorCode::InternalInvariant, "elimination failed but no hole found");
        result.hole = std::move(*hole);
        return result;
    }
    result.chordal = true;
    result.peo = std::move(peo);
    return result;
}

inline void require_chordal(const Graph& g) {
    auto res = is_chordal(g);
    if (!res.chordal) {
        std::string hole;
        for (Vertex v : res.hole) hole += (hole.empty() ? "" : ",") + g.name(v);
        fail(ErrorCode::NotChordal, "graph has the hole [" + hole + "]");
    }
}

/// Maximal cliques of a chordal graph, sorted. Raises NotChordal otherwise.
inline std::vector<VertexSet> maximal_cliques(const Graph& g) {
    auto res = is_chordal(g);
    if (!res.chordal) require_chordal(g);
    const auto later = later_neighbors(g, res.peo);
    std::vector<VertexSet> candidates;
    for (Vertex v : res.peo.order) candidates.push_back(later[static_cast<std::size_t>(v)] | VertexSet{v});
    std::vector<VertexSet> out;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < candidates.size() && !dominated; ++j)
            if (i != j && candidates[i].subset_of(candidates[j]) && (candidates[i] != candidates[j] || j < i))
                dominated = true;
        if (!dominated) out.push_back(candidates[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Maximal cliques of an arbitrary graph (Bron-Kerbosch with pivoting), sorted.
inline std::vector<VertexSet> all_maximal_cliques(const Graph& g) {
    std::vector<VertexSet> out;
    auto expand = [&](auto& self, VertexSet r, VertexSet p, VertexSet x) -> void {
        if (p.empty() && x.empty()) {
            out.push_back(r);
            return;
        }
        const VertexSet px = p | x;
        Vertex pivot = px.front();
        int best = -1;
        for (Vertex u : px) {
            int c = (p & g.neighbors(u)).size();
            if (c > best) best = c, pivot = u;
        }
        for (Vertex v : p - g.neighbors(pivot)) {
            VertexSet r2 = r;
            r2.insert(v);
            self(self, r2, p & g.neighbors(v), x & g.neighbors(v));
            p.erase(v);
            x.insert(v);
        }
    };
    if (g.order() > 0) expand(expand, VertexSet{}, g.vertices(), VertexSet{});
    std::sort(out.begin(), out.end());
    return out;
}

/// All minimal separators, sorted. A set S is listed iff G - S has at least
/// two full components.
inline std::vector<VertexSet> minimal_separators(const Graph& g) {
    std::set<VertexSet> found;
    std::deque<VertexSet> queue;
    auto consider = [&](const VertexSet& removed) {
        for (const auto& comp : components(g, g.vertices() - removed)) {
            VertexSet s = neighborhood(g, comp);
            if (found.insert(s).second) queue.push_back(s);
        }
    };
    for (Vertex v = 0; v < g.order(); ++v) consider(g.neighbors(v) | VertexSet{v});
    while (!queue.empty()) {
        VertexSet s = queue.front();
        queue.pop_front();
        for (Vertex x : s) consider(s | g.neighbors(x));
    }
    return {found.begin(), found.end()};
}

struct DiracResult {
    bool all_cliques = true;
    std::optional<VertexSet> witness;  ///< a minimal separator that is not a clique
};

/// Checks that every minimal separator is a clique.
inline DiracResult dirac_check(const Graph& g) {
    for (const auto& s : minimal_separators(g))
        if (!is_clique(g, s)) return {false, s};
    return {};
}

struct CycleWitness {
    bool holds = true;
    std::vector<Vertex> cycle;  ///< induced cycle longer than r on failure
};

/// True iff g has no induced cycle of length greater than r.
inline CycleWitness is_r_chordal(const Graph& g, int r) {
    if (r < 3) fail(ErrorCode::InvalidInput, "r must be at least 3");
    std::vector<Vertex> path;
    VertexSet on_path;
    std::optional<std::vector<Vertex>> found;
    auto extend = [&](auto& self, Vertex start) -> void {
        const Vertex last = path.back();
        for (Vertex x : g.adjacency(last)) {
            if (found) return;
            if (x <= start || on_path.contains(x)) continue;
            const VertexSet touching = (g.neighbors(x) & on_path) - VertexSet{last};
            if (touching.empty()) {
                path.push_back(x);
                on_path.insert(x);
                self(self, start);
                on_path.erase(x);
                path.pop_back();
            } else if (touching == VertexSet{start} && path.size() >= 2) {
                if (static_cast<int>(path.size()) + 1 > r) {
                    auto cycle = path;
                    cycle.push_back(x);
                    found = detail::normalize_cycle(std::move(cycle));
                }
            }
        }
    };
    for (Vertex s = 0; s < g.order() && !found; ++s) {
        path = {s};
        on_path = VertexSet{s};
        extend(extend, s);
    }
    if (found) return {false, std::move(*found)};
    return {};
}

struct LocalChordalityResult {
    bool holds = true;
    std::optional<Vertex> center;  ///< first failing ball centre
    std::vector<Vertex> hole;      ///< host vertices of a hole inside that ball
};

/// True iff every ball of radius r/2 is chordal.
inline LocalChordalityResult is_r_locally_chordal(const Graph& g, int r) {
    if (r < 0) fail(ErrorCode::InvalidInput, "r must be non-negative");
    for (Vertex v = 0; v < g.order(); ++v) {
        const Ball b = ball(g, v, r);
        auto res = is_chordal(b.subgraph.graph);
        if (!res.chordal) {
            LocalChordalityResult out;
            out.holds = false;
            out.center = v;
            for (Vertex h : res.hole) out.hole.push_back(b.subgraph.to_host[static_cast<std::size_t>(h)]);
            return out;
        }
    }
    return {};
}

} // namespace chordtd
