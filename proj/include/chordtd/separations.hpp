#pragma once

#include "chordtd/chordal.hpp"
#include "chordtd/graph.hpp"
#include "chordtd/permutation.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <span>
#include <utility>
#include <vector>

namespace chordtd {

/// Unordered separation {A, B}; the lexicographically smaller side is stored first.
class Separation {
public:
    Separation() = default;

    /// Validating constructor: A ∪ B = V and no edge between A∖B and B∖A.
    static Separation make(const Graph& g, VertexSet a, VertexSet b) {
        if ((a | b) != g.vertices()) fail(ErrorCode::NotASeparation, "sides do not cover the vertex set");
        const VertexSet a_only = a - b;
        const VertexSet b_only = b - a;
        for (Vertex v : a_only)
            if (g.neighbors(v).intersects(b_only))
                fail(ErrorCode::NotASeparation, "edge between the strict sides at '" + g.name(v) + "'");
        return unchecked(std::move(a), std::move(b));
    }

    /// No validation; only canonicalises the orientation.
    static Separation unchecked(VertexSet a, VertexSet b) {
        Separation s;
        if (b < a) std::swap(a, b);
        s.a_ = std::move(a);
        s.b_ = std::move(b);
        return s;
    }

    const VertexSet& a() const { return a_; }
    const VertexSet& b() const { return b_; }
    VertexSet separator() const { return a_ & b_; }
    int order() const { return separator().size(); }

    friend bool operator==(const Separation&, const Separation&) = default;
    friend std::strong_ordering operator<=>(const Separation& x, const Separation& y) {
        if (auto c = x.a_ <=> y.a_; c != 0) return c;
        return x.b_ <=> y.b_;
    }

private:
    VertexSet a_;
    VertexSet b_;
};

inline Separation apply(const Permutation& p, const Separation& s) {
    return Separation::unchecked(chordtd::apply(p, s.a()), chordtd::apply(p, s.b()));
}

/// (A, B) <= (C, D) in the usual partial order of oriented separations.
inline bool oriented_le(const VertexSet& a, const VertexSet& b, const VertexSet& c, const VertexSet& d) {
    return a.subset_of(c) && d.subset_of(b);
}

enum class Relation { Nested, Crossing };

inline Relation relate(const Separation& s, const Separation& t) {
    const bool nested = oriented_le(s.a(), s.b(), t.a(), t.b()) || oriented_le(s.a(), s.b(), t.b(), t.a()) ||
                        oriented_le(s.b(), s.a(), t.a(), t.b()) || oriented_le(s.b(), s.a(), t.b(), t.a());
    return nested ? Relation::Nested : Relation::Crossing;
}

inline bool nested(const Separation& s, const Separation& t) { return relate(s, t) == Relation::Nested; }

struct SeparationClassification {
    int order = 0;
    bool proper = false;
    bool tight = false;
};

inline SeparationClassification classify(const Graph& g, const Separation& s) {
    SeparationClassification c;
    const VertexSet sep = s.separator();
    c.order = sep.size();
    const VertexSet a_only = s.a() - s.b();
    const VertexSet b_only = s.b() - s.a();
    c.proper = !a_only.empty() && !b_only.empty();
    bool full_a = false;
    bool full_b = false;
    for (const auto& comp : components_after_deletion(g, sep)) {
        if (!comp.full) continue;
        full_a = full_a || comp.vertices.subset_of(a_only);
        full_b = full_b || comp.vertices.subset_of(b_only);
    }
    c.tight = full_a && full_b;
    return c;
}

enum class Side { A, B };

/// Separation with separator s; components of G - s (in canonical order) go to
/// the side named by `assignment`.
inline Separation separation_from_separator(const Graph& g, const VertexSet& s, std::span<const Side> assignment) {
    const auto comps = components(g, g.vertices() - s);
    if (comps.size() != assignment.size())
        fail(ErrorCode::InvalidInput, "expected a side for each of the " + std::to_string(comps.size()) + " components");
    VertexSet a = s;
    VertexSet b = s;
    for (std::size_t i = 0; i < comps.size(); ++i) (assignment[i] == Side::A ? a : b) |= comps[i];
    if (a == s || b == s) fail(ErrorCode::EmptySide, "one side has no vertex outside the separator");
    return Separation::make(g, std::move(a), std::move(b));
}

namespace detail {

/// Digraph in compressed adjacency form.
struct Digraph {
    std::vector<int> start{0};
    std::vector<int> target;

    static Digraph from_arcs(int nodes, const std::vector<std::pair<int, int>>& arcs) {
        Digraph d;
        d.start.assign(static_cast<std::size_t>(nodes) + 1, 0);
        for (auto [u, w] : arcs) ++d.start[static_cast<std::size_t>(u) + 1];
        for (std::size_t i = 1; i < d.start.size(); ++i) d.start[i] += d.start[i - 1];
        d.target.resize(arcs.size());
        auto fill = d.start;
        for (auto [u, w] : arcs) d.target[static_cast<std::size_t>(fill[static_cast<std::size_t>(u)]++)] = w;
        return d;
    }
    std::size_t size() const { return start.size() - 1; }
    std::span<const int> out(int u) const {
        return {target.data() + start[static_cast<std::size_t>(u)], target.data() + start[static_cast<std::size_t>(u) + 1]};
    }
};

// Unit-capacity flow on the vertex-split digraph: in(v) = 2v, out(v) = 2v+1,
// source 2n, sink 2n+1.
class SplitFlow {
public:
    SplitFlow(const Graph& g, const VertexSet& x, const VertexSet& y) : n_(g.order()) {
        const int big = n_ + 1;
        for (Vertex v = 0; v < n_; ++v) add_arc(in(v), out(v), 1);
        for (auto [u, v] : g.edges()) {
            add_arc(out(u), in(v), big);
            add_arc(out(v), in(u), big);
        }
        for (Vertex v : x) add_arc(source(), in(v), big);
        for (Vertex v : y) add_arc(out(v), sink(), big);
        std::vector<std::pair<int, int>> incidence;
        incidence.reserve(arcs_.size());
        for (std::size_t e = 0; e < arcs_.size(); ++e)
            incidence.emplace_back(arcs_[e ^ 1].to, static_cast<int>(e));
        heads_ = Digraph::from_arcs(nodes(), incidence);
    }

    int in(Vertex v) const { return 2 * v; }
    int out(Vertex v) const { return 2 * v + 1; }
    int source() const { return 2 * n_; }
    int sink() const { return 2 * n_ + 1; }
    int nodes() const { return 2 * n_ + 2; }

    int max_flow() {
        int total = 0;
        while (true) {
            std::vector<int> via(static_cast<std::size_t>(nodes()), -1);
            std::deque<int> queue{source()};
            via[static_cast<std::size_t>(source())] = -2;
            while (!queue.empty() && via[static_cast<std::size_t>(sink())] == -1) {
                int u = queue.front();
                queue.pop_front();
                for (int e : heads_.out(u)) {
                    const auto& arc = arcs_[static_cast<std::size_t>(e)];
                    if (arc.cap - arc.flow <= 0 || via[static_cast<std::size_t>(arc.to)] != -1) continue;
                    via[static_cast<std::size_t>(arc.to)] = e;
                    queue.push_back(arc.to);
                }
            }
            if (via[static_cast<std::size_t>(sink())] == -1) return total;
            for (int v = sink(); v != source();) {
                const int e = via[static_cast<std::size_t>(v)];
                arcs_[static_cast<std::size_t>(e)].flow += 1;
                arcs_[static_cast<std::size_t>(e ^ 1)].flow -= 1;
                v = arcs_[static_cast<std::size_t>(e ^ 1)].to;
            }
            ++total;
        }
    }

    /// Residual adjacency (arcs with spare capacity).
    Digraph residual() const {
        std::vector<std::pair<int, int>> spare;
        for (int u = 0; u < nodes(); ++u)
            for (int e : heads_.out(u)) {
                const auto& arc = arcs_[static_cast<std::size_t>(e)];
                if (arc.cap - arc.flow > 0) spare.emplace_back(u, arc.to);
            }
        return Digraph::from_arcs(nodes(), spare);
    }

    /// Decomposes the flow into vertex sequences from X to Y.
    std::vector<std::vector<Vertex>> flow_paths() const {
        std::vector<int> flow(arcs_.size());
        for (std::size_t e = 0; e < arcs_.size(); ++e) flow[e] = std::max(arcs_[e].flow, 0);
        std::vector<std::vector<Vertex>> paths;
        while (true) {
            std::vector<int> walk{source()};
            bool moved = true;
            while (walk.back() != sink() && moved) {
                moved = false;
                for (int e : heads_.out(walk.back())) {
                    if (flow[static_cast<std::size_t>(e)] <= 0) continue;
                    --flow[static_cast<std::size_t>(e)];
                    const int to = arcs_[static_cast<std::size_t>(e)].to;
                    auto seen = std::find(walk.begin(), walk.end(), to);
                    if (seen != walk.end()) walk.erase(seen + 1, walk.end());
                    else walk.push_back(to);
                    moved = true;
                    break;
                }
            }
            if (walk.back() != sink()) break;
            std::vector<Vertex> path;
            for (int node : walk)
                if (node < 2 * n_ && node % 2 == 0) path.push_back(node / 2);
            paths.push_back(std::move(path));
        }
        return paths;
    }

private:
    struct Arc {
        int to;
        int cap;
        int flow;
    };
    // arc e runs from arcs_[e ^ 1].to to arcs_[e].to
    void add_arc(int u, int v, int cap) {
        arcs_.push_back({v, cap, 0});
        arcs_.push_back({u, 0, 0});
    }

    int n_;
    std::vector<Arc> arcs_;
    Digraph heads_;
};

inline std::vector<bool> reachable(const Digraph& adj, int from) {
    std::vector<bool> seen(adj.size(), false);
    std::vector<int> stack{from};
    seen[static_cast<std::size_t>(from)] = true;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj.out(u))
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                stack.push_back(w);
            }
    }
    return seen;
}

inline Digraph reversed(const Digraph& adj) {
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(adj.target.size());
    for (int u = 0; u < static_cast<int>(adj.size()); ++u)
        for (int w : adj.out(u)) arcs.emplace_back(w, u);
    return Digraph::from_arcs(static_cast<int>(adj.size()), arcs);
}

// Tarjan; components are numbered in reverse topological order (sinks first).
inline std::vector<int> strongly_connected(const Digraph& adj, int& count) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0),
        comp(static_cast<std::size_t>(n), -1);
    std::vector<int> stack;
    std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
    int next = 0;
    count = 0;
    std::vector<std::pair<int, std::size_t>> call;
    for (int root = 0; root < n; ++root) {
        if (index[static_cast<std::size_t>(root)] >= 0) continue;
        call.emplace_back(root, 0);
        index[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = next++;
        stack.push_back(root);
        on_stack[static_cast<std::size_t>(root)] = true;
        while (!call.empty()) {
            auto& [u, i] = call.back();
            const auto out = adj.out(u);
            if (i < out.size()) {
                const int w = out[i++];
                if (index[static_cast<std::size_t>(w)] < 0) {
                    index[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = next++;
                    stack.push_back(w);
                    on_stack[static_cast<std::size_t>(w)] = true;
                    call.emplace_back(w, 0);
                } else if (on_stack[static_cast<std::size_t>(w)]) {
                    low[static_cast<std::size_t>(u)] =
                        std::min(low[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(w)]);
                }
                continue;
            }
            const int done = u;
            call.pop_back();
            if (low[static_cast<std::size_t>(done)] == index[static_cast<std::size_t>(done)]) {
                while (true) {
                    const int w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<std::size_t>(w)] = false;
                    comp[static_cast<std::size_t>(w)] = count;
                    if (w == done) break;
                }
                ++count;
            }
            if (!call.empty()) {
                const int parent = call.back().first;
                low[static_cast<std::size_t>(parent)] =
                    std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(done)]);
            }
        }
    }
    return comp;
}

inline bool separates(const Graph& g, const VertexSet& s, const VertexSet& x, const VertexSet& y) {
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : s) seen[static_cast<std::size_t>(v)] = 1;
    std::vector<Vertex> stack;
    for (Vertex v : x)
        if (!seen[static_cast<std::size_t>(v)]) {
            seen[static_cast<std::size_t>(v)] = 1;
            stack.push_back(v);
        }
    while (!stack.empty()) {
        const Vertex u = stack.back();
        stack.pop_back();
        if (y.contains(u)) return false;
        for (Vertex w : g.adjacency(u))
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
    }
    return true;
}

} // namespace detail

struct MinSeparatorResult {
    int k = 0;
    VertexSet separator;
    std::vector<std::vector<Vertex>> paths;  ///< vertex-disjoint X-Y paths, one per unit of k
};

/// Minimum X-Y separator (all vertices deletable) with a matching family of disjoint paths.
inline MinSeparatorResult min_clique_separator(const Graph& g, const VertexSet& x, const VertexSet& y) {
    for (Vertex v : x | y) g.check_vertex(v);
    detail::SplitFlow flow(g, x, y);
    MinSeparatorResult res;
    res.k = flow.max_flow();
    const auto seen = detail::reachable(flow.residual(), flow.source());
    for (Vertex v = 0; v < g.order(); ++v)
        if (seen[static_cast<std::size_t>(flow.in(v))] && !seen[static_cast<std::size_t>(flow.out(v))])
            res.separator.insert(v);
    for (auto& raw : flow.flow_paths()) {
        std::size_t start = 0;
        for (std::size_t i = 0; i < raw.size(); ++i)
            if (x.contains(raw[i])) start = i;
        std::size_t end = start;
        while (!y.contains(raw[end])) ++end;
        res.paths.emplace_back(raw.begin() + static_cast<std::ptrdiff_t>(start),
                               raw.begin() + static_cast<std::ptrdiff_t>(end) + 1);
    }
    if (res.separator.size() != res.k || static_cast<int>(res.paths.size()) != res.k)
        fail(ErrorCode::InternalInvariant, "flow, cut and path counts disagree");
    return res;
}

/// Every X-Y separator of minimum size, sorted.
inline std::vector<VertexSet> enumerate_min_separators(const Graph& g, const VertexSet& x, const VertexSet& y) {
    for (Vertex v : x | y) g.check_vertex(v);
    detail::SplitFlow flow(g, x, y);
    const int k = flow.max_flow();
    const auto adj = flow.residual();
    const auto from_source = detail::reachable(adj, flow.source());
    const auto to_sink = detail::reachable(detail::reversed(adj), flow.sink());

    int count = 0;
    const auto comp = detail::strongly_connected(adj, count);
    auto scc = [&](int node) { return comp[static_cast<std::size_t>(node)]; };

    // A component is forced in (reached from the source), forced out (reaches
    // the sink) or free. Only free components holding a split end matter.
    std::vector<int> state(static_cast<std::size_t>(count), 0);  // 1 in, -1 out, 0 free
    for (int u = 0; u < flow.nodes(); ++u) {
        if (from_source[static_cast<std::size_t>(u)]) state[static_cast<std::size_t>(scc(u))] = 1;
        if (to_sink[static_cast<std::size_t>(u)]) state[static_cast<std::size_t>(scc(u))] = -1;
    }
    std::vector<Vertex> candidates;
    std::vector<bool> relevant(static_cast<std::size_t>(count), false);
    for (Vertex v = 0; v < g.order(); ++v) {
        const int ci = scc(flow.in(v));
        const int co = scc(flow.out(v));
        if (ci == co || state[static_cast<std::size_t>(ci)] == -1 || state[static_cast<std::size_t>(co)] == 1) continue;
        candidates.push_back(v);
        if (state[static_cast<std::size_t>(ci)] == 0) relevant[static_cast<std::size_t>(ci)] = true;
        if (state[static_cast<std::size_t>(co)] == 0) relevant[static_cast<std::size_t>(co)] = true;
    }

    // Condensation successors restricted to relevant components (transitively).
    std::vector<std::pair<int, int>> dag_arcs;
    for (int u = 0; u < flow.nodes(); ++u)
        for (int w : adj.out(u))
            if (scc(u) != scc(w)) dag_arcs.emplace_back(scc(u), scc(w));
    const auto dag = detail::Digraph::from_arcs(count, dag_arcs);
    std::vector<int> order_rel;  // sinks first, as numbered by Tarjan
    for (int c = 0; c < count; ++c)
        if (relevant[static_cast<std::size_t>(c)]) order_rel.push_back(c);
    std::vector<std::vector<int>> needs(static_cast<std::size_t>(count));
    for (int c : order_rel) {
        std::vector<bool> seen(static_cast<std::size_t>(count), false);
        std::vector<int> stack{c};
        seen[static_cast<std::size_t>(c)] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : dag.out(u)) {
                if (seen[static_cast<std::size_t>(w)]) continue;
                seen[static_cast<std::size_t>(w)] = true;
                if (relevant[static_cast<std::size_t>(w)]) needs[static_cast<std::size_t>(c)].push_back(w);
                stack.push_back(w);
            }
        }
    }

    std::set<VertexSet> found;
    std::vector<int> chosen = state;
    auto record = [&] {
        VertexSet cut;
        for (Vertex v : candidates)
            if (chosen[static_cast<std::size_t>(scc(flow.in(v)))] == 1 && chosen[static_cast<std::size_t>(scc(flow.out(v)))] != 1)
                cut.insert(v);
        found.insert(cut);
    };
    auto descend = [&](auto& self, std::size_t i) -> void {
        if (i == order_rel.size()) {
            record();
            return;
        }
        const int c = order_rel[i];
        chosen[static_cast<std::size_t>(c)] = -1;
        self(self, i + 1);
        bool closed = true;
        for (int w : needs[static_cast<std::size_t>(c)]) closed = closed && chosen[static_cast<std::size_t>(w)] == 1;
        if (closed) {
            chosen[static_cast<std::size_t>(c)] = 1;
            self(self, i + 1);
        }
        chosen[static_cast<std::size_t>(c)] = 0;
    };
    descend(descend, 0);

    std::vector<VertexSet> out(found.begin(), found.end());
    for (const auto& s : out)
        if (s.size() != k || !detail::separates(g, s, x, y))
            fail(ErrorCode::InternalInvariant, "enumerated cut is not a minimum separator");
    return out;
}

/// β(X, Y): the separations of minimum order with X on the A side and Y on the B side.
struct Bottleneck {
    VertexSet x;
    VertexSet y;
    int order = 0;
    std::vector<Separation> separations;  ///< sorted
};

struct BetaOptions {
    bool include_nontight = false;
    int max_free_components = 20;
};

namespace detail {

/// Components of G - S, memoised per separator S.
class ComponentCache {
public:
    explicit ComponentCache(const Graph& g) : g_(&g) {}
    const std::vector<Component>& at(const VertexSet& s) {
        auto it = cache_.find(s);
        if (it == cache_.end()) it = cache_.emplace(s, components_after_deletion(*g_, s)).first;
        return it->second;
    }

private:
    const Graph* g_;
    std::map<VertexSet, std::vector<Component>> cache_;
};

inline Bottleneck beta_unchecked(const Graph& g, const VertexSet& x, const VertexSet& y, const BetaOptions& opt,
                                 ComponentCache* cache = nullptr) {
    Bottleneck out{x, y, 0, {}};
    std::set<Separation> members;
    const auto seps = enumerate_min_separators(g, x, y);
    out.order = seps.empty() ? 0 : seps.front().size();
    for (const auto& s : seps) {
        std::vector<Component> local;
        if (!cache) local = components_after_deletion(g, s);
        const auto& comps = cache ? cache->at(s) : local;
        const VertexSet xs = x - s;
        const VertexSet ys = y - s;
        if (xs.empty() || ys.empty()) fail(ErrorCode::InternalInvariant, "a clique lies inside its separator");
        const Component* cx = nullptr;
        const Component* cy = nullptr;
        std::vector<const Component*> rest;
        for (const auto& c : comps) {
            if (c.vertices.contains(xs.front())) cx = &c;
            else if (c.vertices.contains(ys.front())) cy = &c;
            else rest.push_back(&c);
        }
        if (!cx || !cy || cx == cy) fail(ErrorCode::InternalInvariant, "separator does not split the cliques");
        if (static_cast<int>(rest.size()) > opt.max_free_components)
            fail(ErrorCode::TooLarge, std::to_string(rest.size()) + " free components behind one separator");
        std::uint64_t full_rest = 0;
        for (std::size_t i = 0; i < rest.size(); ++i)
            if (rest[i]->full) full_rest |= std::uint64_t{1} << i;
        const std::uint64_t total = std::uint64_t{1} << rest.size();
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            // A side gets the components whose bit is set; tight when both strict sides hold a full one.
            const bool tight = (cx->full || (mask & full_rest) != 0) && (cy->full || (~mask & full_rest) != 0);
            if (!opt.include_nontight && !tight) continue;
            VertexSet a = s | cx->vertices;
            VertexSet b = s | cy->vertices;
            for (std::size_t i = 0; i < rest.size(); ++i) ((mask >> i) & 1U ? a : b) |= rest[i]->vertices;
            members.insert(Separation::unchecked(std::move(a), std::move(b)));
        }
    }
    out.separations.assign(members.begin(), members.end());
    return out;
}

} // namespace detail

/// β(X, Y) for distinct maximal cliques of a chordal graph.
inline Bottleneck beta(const Graph& g, const VertexSet& x, const VertexSet& y, const BetaOptions& opt = {}) {
    require_chordal(g);
    if (x == y) fail(ErrorCode::CliquesEqual, "the two cliques coincide");
    const auto cliques = maximal_cliques(g);
    for (const auto* c : {&x, &y})
        if (!std::binary_search(cliques.begin(), cliques.end(), *c))
            fail(ErrorCode::NotAClique, "argument is not a maximal clique");
    auto b = detail::beta_unchecked(g, x, y, opt);
    if (b.order >= std::min(x.size(), y.size()))
        fail(ErrorCode::InternalInvariant, "bottleneck order is not below the clique sizes");
    return b;
}

} // namespace chordtd
