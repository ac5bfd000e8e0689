#pragma once

#include "chordtd/chordal.hpp"
#include "chordtd/free_group.hpp"
#include "chordtd/graph.hpp"
#include "chordtd/graph_decomposition.hpp"
#include "chordtd/nested_set.hpp"
#include "chordtd/separations.hpp"
#include "chordtd/treedec.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace chordtd {

/// Base graph with free-group voltages on co-tree edges; presents the derived cover.
struct VoltagePresentation {
    Graph base;
    Alphabet alphabet;
    std::vector<std::pair<Vertex, Vertex>> tree_edges;  ///< (u, v), u < v, sorted
    std::map<std::pair<Vertex, Vertex>, FreeWord> voltage;  ///< both orientations of each co-tree edge

    static constexpr int kMaxRank = 2;

    /// Voltage of the directed edge u -> v (identity on tree edges).
    FreeWord volt(Vertex u, Vertex v) const {
        auto it = voltage.find({u, v});
        return it == voltage.end() ? FreeWord{} : it->second;
    }
    int rank() const { return alphabet.rank(); }
    int max_voltage_length() const {
        int m = 0;
        for (const auto& [e, w] : voltage) m = std::max(m, w.length());
        return m;
    }
};

struct VoltageAssignment {
    Vertex from;
    Vertex to;
    FreeWord word;
};

/// Validating constructor: `tree` spans the connected base and voltages sit on co-tree edges.
inline VoltagePresentation make_presentation(Graph base, std::vector<std::pair<Vertex, Vertex>> tree,
                                             const std::vector<VoltageAssignment>& voltages, Alphabet alphabet) {
    if (base.order() == 0 || !is_connected(base)) fail(ErrorCode::InvalidInput, "base graph must be connected and nonempty");
    if (alphabet.rank() > VoltagePresentation::kMaxRank)
        fail(ErrorCode::TooLarge, "deck groups of rank above 2 are not supported");
    VoltagePresentation p;
    std::set<std::pair<Vertex, Vertex>> tree_set;
    for (auto [u, v] : tree) {
        base.check_vertex(u);
        base.check_vertex(v);
        if (!base.adjacent(u, v)) fail(ErrorCode::InvalidInput, "tree edge is not a base edge");
        tree_set.emplace(std::min(u, v), std::max(u, v));
    }
    {
        Graph t;
        for (const auto& n : base.names()) t.add_vertex(n);
        for (auto [u, v] : tree_set) t.add_edge(u, v);
        if (!is_tree(t)) fail(ErrorCode::InvalidInput, "tree edges do not form a spanning tree");
    }
    for (const auto& a : voltages) {
        base.check_vertex(a.from);
        base.check_vertex(a.to);
        if (!base.adjacent(a.from, a.to)) fail(ErrorCode::InvalidInput, "voltage on a non-edge");
        if (tree_set.contains({std::min(a.from, a.to), std::max(a.from, a.to)}))
            fail(ErrorCode::InvalidInput, "voltage on a tree edge");
        if (p.voltage.contains({a.from, a.to})) fail(ErrorCode::InvalidInput, "edge carries two voltages");
        if (a.word.identity()) continue;
        p.voltage[{a.from, a.to}] = a.word;
        p.voltage[{a.to, a.from}] = a.word.inverse();
    }
    p.base = std::move(base);
    p.alphabet = std::move(alphabet);
    p.tree_edges.assign(tree_set.begin(), tree_set.end());
    return p;
}

/// Trivial voltages over a BFS spanning tree: the identity cover.
inline VoltagePresentation identity_presentation(const Graph& base) {
    if (base.order() == 0 || !is_connected(base)) fail(ErrorCode::InvalidInput, "base graph must be connected and nonempty");
    std::vector<std::pair<Vertex, Vertex>> tree;
    std::vector<bool> seen(static_cast<std::size_t>(base.order()), false);
    std::deque<Vertex> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : base.adjacency(u))
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                tree.emplace_back(std::min(u, w), std::max(u, w));
                queue.push_back(w);
            }
    }
    return make_presentation(base, tree, {}, Alphabet{});
}

/// Finite piece of the derived cover: vertices (v, w) with |w| <= L.
struct CoverWindow {
    VoltagePresentation pres;
    int L = 0;
    Graph graph;
    std::vector<Vertex> base_of;
    std::vector<FreeWord> word_of;
    std::map<std::pair<Vertex, FreeWord>, Vertex> index;
    VertexSet boundary;  ///< vertices whose cover neighbourhood may be cut off

    std::optional<Vertex> find(Vertex base_vertex, const FreeWord& w) const {
        auto it = index.find({base_vertex, w});
        if (it == index.end()) return std::nullopt;
        return it->second;
    }
    /// Deck transformation (v, w) -> (v, gamma w), when the image lies in the window.
    std::optional<Vertex> translate(const FreeWord& gamma, Vertex x) const {
        return find(base_of[static_cast<std::size_t>(x)], gamma * word_of[static_cast<std::size_t>(x)]);
    }
    /// True when every cover vertex within `depth` steps of x lies in the window.
    bool interior(Vertex x, int depth) const {
        return word_of[static_cast<std::size_t>(x)].length() + depth * pres.max_voltage_length() <= L;
    }
    VertexSet project(const VertexSet& s) const {
        VertexSet out;
        for (Vertex x : s) out.insert(base_of[static_cast<std::size_t>(x)]);
        return out;
    }
};

inline CoverWindow derive_window(const VoltagePresentation& pres, int L) {
    if (L < 0) fail(ErrorCode::InvalidInput, "window radius must be non-negative");
    CoverWindow w;
    w.pres = pres;
    w.L = L;
    for (const auto& word : words_up_to(pres.rank(), L))
        for (Vertex v = 0; v < pres.base.order(); ++v) {
            const std::string name = pres.rank() == 0
                                         ? pres.base.name(v)
                                         : "(" + pres.base.name(v) + ", " +
                                               (word.identity() ? std::string("1") : pres.alphabet.format(word)) + ")";
            const Vertex x = w.graph.add_vertex(name);
            w.base_of.push_back(v);
            w.word_of.push_back(word);
            w.index[{v, word}] = x;
        }
    for (Vertex x = 0; x < w.graph.order(); ++x) {
        const Vertex u = w.base_of[static_cast<std::size_t>(x)];
        for (Vertex v : pres.base.adjacency(u)) {
            if (auto y = w.find(v, w.word_of[static_cast<std::size_t>(x)] * pres.volt(u, v))) {
                if (*y == x) fail(ErrorCode::NotACover, "derived graph has a loop");
                w.graph.add_edge(x, *y);
            }
        }
        if (!w.interior(x, 1)) w.boundary.insert(x);
    }
    return w;
}

struct CoverReport {
    bool local_bijection = true;
    bool ball_preserved = true;
    bool free_on_cliques = true;
    bool fibers_far = true;
    std::optional<Vertex> ball_witness;   ///< window vertex whose ball is not mapped isomorphically
    std::optional<Vertex> fiber_witness;  ///< window vertex with a fibre-mate within distance 2
    std::size_t centers_checked = 0;
    std::size_t cliques_checked = 0;
    std::size_t translations_checked = 0;

    bool ok() const { return local_bijection && ball_preserved && free_on_cliques && fibers_far; }
};

/// Checks the covering map on the window: local bijectivity, r/2-ball
/// preservation, freeness of short deck words on cliques, and fibre spacing.
inline CoverReport verify_cover(const VoltagePresentation& pres, int r, int L) {
    if (r < 0) fail(ErrorCode::InvalidInput, "r must be non-negative");
    if (pres.rank() > 0 && L < r + 2) fail(ErrorCode::InvalidInput, "window radius must be at least r + 2");
    const CoverWindow w = derive_window(pres, L);
    const Graph& cover = w.graph;
    CoverReport rep;
    for (Vertex x = 0; x < cover.order(); ++x) {
        if (!w.interior(x, 1)) continue;
        VertexSet images;
        for (Vertex y : cover.adjacency(x)) images.insert(w.base_of[static_cast<std::size_t>(y)]);
        if (images.size() != cover.degree(x) || images != pres.base.neighbors(w.base_of[static_cast<std::size_t>(x)]))
            rep.local_bijection = false;
    }
    if (!rep.local_bijection) fail(ErrorCode::NotACover, "projection is not a local bijection");

    const int k = r / 2;
    for (Vertex x = 0; x < cover.order() && rep.ball_preserved; ++x) {
        if (!w.interior(x, k)) continue;
        ++rep.centers_checked;
        const Ball up = ball(cover, x, r);
        const Ball down = ball(pres.base, w.base_of[static_cast<std::size_t>(x)], r);
        bool ok = w.project(up.members) == down.members && up.members.size() == down.members.size();
        for (Vertex a : up.members)
            for (Vertex b : up.members)
                if (a < b && cover.adjacent(a, b) != pres.base.adjacent(w.base_of[static_cast<std::size_t>(a)], w.base_of[static_cast<std::size_t>(b)]))
                    ok = false;
        if (!ok) {
            rep.ball_preserved = false;
            rep.ball_witness = x;
        }
    }

    std::vector<FreeWord> gammas;
    for (auto& g : words_up_to(pres.rank(), 2))
        if (!g.identity()) gammas.push_back(g);
    for (const auto& clique : all_maximal_cliques(cover)) {
        ++rep.cliques_checked;
        for (const auto& g : gammas) {
            ++rep.translations_checked;
            for (Vertex x : clique)
                if (auto y = w.translate(g, x); y && clique.contains(*y)) rep.free_on_cliques = false;
        }
    }

    for (Vertex x = 0; x < cover.order() && rep.fibers_far; ++x) {
        if (!w.interior(x, 2)) continue;
        const auto dist = bfs_distances(cover, x);
        for (Vertex y = 0; y < cover.order(); ++y)
            if (y != x && dist[static_cast<std::size_t>(y)] <= 2 && w.base_of[static_cast<std::size_t>(y)] == w.base_of[static_cast<std::size_t>(x)]) {
                rep.fibers_far = false;
                rep.fiber_witness = x;
            }
    }
    return rep;
}

/// Image of a window clique; the restriction of the projection must be injective.
inline VertexSet project_clique(const CoverWindow& w, const VertexSet& k) {
    if (k.empty() || !is_clique(w.graph, k)) fail(ErrorCode::NotAClique, "vertex set is not a clique of the window");
    for (Vertex x : k)
        if (!w.interior(x, 1)) fail(ErrorCode::LiftCrossesBoundary, "clique touches the window boundary");
    const VertexSet image = w.project(k);
    if (image.size() != k.size() || !is_clique(w.pres.base, image))
        fail(ErrorCode::BallNotPreserved, "projection of the clique is not a clique of the same size");
    return image;
}

/// The unique lift of a base clique through the window vertex x.
inline VertexSet lift_clique(const CoverWindow& w, const VertexSet& k, Vertex x) {
    const Graph& base = w.pres.base;
    if (k.empty() || !is_clique(base, k)) fail(ErrorCode::NotAClique, "vertex set is not a clique of the base");
    const Vertex bx = w.base_of[static_cast<std::size_t>(x)];
    if (!k.contains(bx)) fail(ErrorCode::InvalidInput, "lift point does not lie over the clique");
    if (!w.interior(x, 1)) fail(ErrorCode::LiftCrossesBoundary, "lift point lies on the window boundary");
    VertexSet lift{x};
    for (Vertex y : w.graph.adjacency(x))
        if (k.contains(w.base_of[static_cast<std::size_t>(y)])) lift.insert(y);
    if (lift.size() != k.size() || !is_clique(w.graph, lift))
        fail(ErrorCode::BallNotPreserved, "clique does not lift to a clique");
    return lift;
}

/// Every lift of k through an interior vertex over its first member.
inline std::vector<VertexSet> all_lifts(const CoverWindow& w, const VertexSet& k) {
    std::vector<VertexSet> out;
    for (Vertex x = 0; x < w.graph.order(); ++x)
        if (w.base_of[static_cast<std::size_t>(x)] == k.front() && w.interior(x, 1)) out.push_back(lift_clique(w, k, x));
    return out;
}

using CoverPoint = std::pair<Vertex, FreeWord>;
using CoverKey = std::vector<CoverPoint>;

namespace detail {

inline CoverKey translated_key(const CoverWindow& w, const VertexSet& s, const FreeWord& shift) {
    CoverKey key;
    for (Vertex x : s) key.emplace_back(w.base_of[static_cast<std::size_t>(x)], shift * w.word_of[static_cast<std::size_t>(x)]);
    std::sort(key.begin(), key.end());
    return key;
}

// Shifts that move some member with the smallest base vertex to the identity word.
inline std::vector<FreeWord> normalizing_shifts(const CoverWindow& w, const VertexSet& s) {
    Vertex lowest = -1;
    for (Vertex x : s)
        if (lowest < 0 || w.base_of[static_cast<std::size_t>(x)] < lowest) lowest = w.base_of[static_cast<std::size_t>(x)];
    std::vector<FreeWord> out;
    for (Vertex x : s)
        if (w.base_of[static_cast<std::size_t>(x)] == lowest) out.push_back(w.word_of[static_cast<std::size_t>(x)].inverse());
    return out;
}

} // namespace detail

/// Deck-invariant key of a window vertex set, with the shift realising it.
struct CanonicalTranslate {
    CoverKey key;
    FreeWord shift;
};

inline CanonicalTranslate canonical_translate(const CoverWindow& w, const VertexSet& s) {
    if (s.empty()) fail(ErrorCode::InvalidInput, "cannot translate the empty set");
    std::optional<CanonicalTranslate> best;
    for (const auto& shift : detail::normalizing_shifts(w, s)) {
        auto key = detail::translated_key(w, s, shift);
        if (!best || key < best->key) best = CanonicalTranslate{std::move(key), shift};
    }
    return *best;
}

/// Deck-invariant description of a clique separation: separator plus the
/// separator's neighbours on either strict side (sides unordered).
struct SeparationSignature {
    CoverKey separator;
    CoverKey side1;
    CoverKey side2;

    friend bool operator==(const SeparationSignature&, const SeparationSignature&) = default;
    friend auto operator<=>(const SeparationSignature&, const SeparationSignature&) = default;
};

inline SeparationSignature separation_signature(const CoverWindow& w, const Separation& s) {
    const VertexSet sep = s.separator();
    if (sep.empty()) fail(ErrorCode::InternalInvariant, "separation of order zero on a connected window");
    const VertexSet nb = neighborhood(w.graph, sep);
    const VertexSet na = nb & (s.a() - s.b());
    const VertexSet nbb = nb & (s.b() - s.a());
    std::optional<SeparationSignature> best;
    for (const auto& shift : detail::normalizing_shifts(w, sep)) {
        SeparationSignature sig{detail::translated_key(w, sep, shift), detail::translated_key(w, na, shift),
                                detail::translated_key(w, nbb, shift)};
        if (sig.side2 < sig.side1) std::swap(sig.side1, sig.side2);
        if (!best || sig < *best) best = std::move(sig);
    }
    return *best;
}

struct PeriodicSeparation {
    Separation separation;  ///< in the window at radius L
    SeparationSignature signature;
    int order = 0;
    int crossings = 0;  ///< crossing count within its level's pool
};

struct PeriodicN {
    CoverWindow window;
    NestedSetLevels levels;
    std::vector<PeriodicSeparation> representatives;  ///< one per deck orbit, by signature
    bool stable = false;
    int margin = 2;
};

struct PeriodicOptions {
    int margin = 2;               ///< separators must lie at word length <= L - margin
    bool check_stability = true;  ///< recompute at L + 2 and compare
    bool require_stable = false;  ///< raise Unstable instead of reporting it
    int jobs = 1;
};

namespace detail {

inline std::vector<PeriodicSeparation> periodic_representatives(const CoverWindow& w, const NestedSetLevels& levels, int margin) {
    std::map<int, std::vector<Separation>> pools;
    for (const auto& b : levels.bottlenecks) {
        auto& pool = pools[b.order];
        pool.insert(pool.end(), b.separations.begin(), b.separations.end());
    }
    for (auto& [k, pool] : pools) {
        std::sort(pool.begin(), pool.end());
        pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    }
    std::map<SeparationSignature, PeriodicSeparation> reps;
    for (const auto& s : levels.all) {
        bool trusted = true;
        for (Vertex x : s.separator())
            trusted = trusted && (w.pres.rank() == 0 || w.word_of[static_cast<std::size_t>(x)].length() <= w.L - margin);
        if (!trusted) continue;
        PeriodicSeparation p{s, separation_signature(w, s), s.order(), crossing_count(s, pools[s.order()])};
        auto [it, inserted] = reps.emplace(p.signature, p);
        if (!inserted && it->second.crossings != p.crossings)
            fail(ErrorCode::Unstable, "translates of one separation have different crossing counts");
    }
    std::vector<PeriodicSeparation> out;
    for (auto& [sig, p] : reps) out.push_back(std::move(p));
    return out;
}

} // namespace detail

/// Orbit representatives of the canonical nested set of a periodic chordal cover,
/// computed on the window of radius L.
inline PeriodicN periodic_N(const VoltagePresentation& pres, int L, const PeriodicOptions& opt = {}) {
    auto compute = [&](int radius) {
        PeriodicN out;
        out.window = derive_window(pres, radius);
        out.margin = opt.margin;
        if (auto res = is_chordal(out.window.graph); !res.chordal)
            fail(ErrorCode::WindowNotChordal, "window of the cover is not chordal");
        if (!is_connected(out.window.graph)) fail(ErrorCode::InvalidInput, "window of the cover is not connected");
        ConstructOptions copt;
        copt.jobs = opt.jobs;
        out.levels = construct_N(out.window.graph, copt);
        out.representatives = detail::periodic_representatives(out.window, out.levels, opt.margin);
        return out;
    };
    PeriodicN result = compute(L);
    result.stable = true;
    if (opt.check_stability && pres.rank() > 0) {
        const PeriodicN wider = compute(L + 2);
        result.stable = wider.representatives.size() == result.representatives.size();
        for (std::size_t i = 0; result.stable && i < wider.representatives.size(); ++i)
            result.stable = wider.representatives[i].signature == result.representatives[i].signature &&
                            wider.representatives[i].crossings == result.representatives[i].crossings;
    }
    if (opt.require_stable && !result.stable) fail(ErrorCode::Unstable, "representatives change between L and L+2");
    return result;
}

/// Groups tree edges of a window decomposition into deck-translation classes.
inline std::vector<std::vector<int>> window_edge_orbits(const CoverWindow& w, const TreeDecomposition& td) {
    std::map<std::pair<CoverKey, CoverKey>, std::vector<int>> classes;
    const auto edges = td.edges();
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        auto [s, t] = edges[static_cast<std::size_t>(e)];
        std::optional<std::pair<CoverKey, CoverKey>> best;
        for (auto [a, b] : {std::make_pair(s, t), std::make_pair(t, s)}) {
            const auto ca = canonical_translate(w, td.bag(a));
            std::pair<CoverKey, CoverKey> key{ca.key, detail::translated_key(w, td.bag(b), ca.shift)};
            if (!best || key < *best) best = std::move(key);
        }
        classes[*best].push_back(e);
    }
    std::vector<std::vector<int>> out;
    for (auto& [k, es] : classes) out.push_back(std::move(es));
    std::sort(out.begin(), out.end());
    return out;
}

struct FoldResult {
    GraphDecomposition gd;
    std::vector<int> node_class;  ///< model node of each window tree node, -1 if untrusted
};

/// Folds a deck-canonical decomposition of the window into a graph-decomposition of the base.
inline FoldResult fold(const CoverWindow& w, const TreeDecomposition& td, int margin = 2) {
    const Graph& base = w.pres.base;
    auto trusted = [&](const VertexSet& bag) {
        if (w.pres.rank() == 0) return true;  // the window is the whole cover
        for (Vertex x : bag)
            if (w.word_of[static_cast<std::size_t>(x)].length() > w.L - margin) return false;
        return true;
    };
    std::map<VertexSet, Node> node_of_bag;
    for (Node t = 0; t < td.size(); ++t) {
        if (!trusted(td.bag(t))) continue;
        if (!node_of_bag.emplace(td.bag(t), t).second) fail(ErrorCode::ActionMismatch, "two tree nodes share a bag");
    }
    if (node_of_bag.empty()) fail(ErrorCode::LiftCrossesBoundary, "no bag lies inside the trusted window");

    // Deck generators must permute the trusted nodes and preserve tree adjacency.
    std::vector<FreeWord> letters;
    for (int g = 0; g < w.pres.rank(); ++g) {
        letters.push_back(FreeWord::generator(g));
        letters.push_back(FreeWord::generator(g, -1));
    }
    auto translate_bag = [&](const FreeWord& g, const VertexSet& bag) -> std::optional<VertexSet> {
        VertexSet out;
        for (Vertex x : bag) {
            auto y = w.translate(g, x);
            if (!y) return std::nullopt;
            out.insert(*y);
        }
        return out;
    };
    for (const auto& g : letters)
        for (const auto& [bag, t] : node_of_bag) {
            auto image = translate_bag(g, bag);
            if (!image || !trusted(*image)) continue;
            if (!node_of_bag.contains(*image)) fail(ErrorCode::ActionMismatch, "translate of a bag is not a bag");
            for (Node u : td.tree.adjacency(t)) {
                if (!trusted(td.bag(u))) continue;
                auto image_u = translate_bag(g, td.bag(u));
                if (!image_u || !trusted(*image_u)) continue;
                if (!node_of_bag.contains(*image_u) || !td.tree.adjacent(node_of_bag.at(*image), node_of_bag.at(*image_u)))
                    fail(ErrorCode::ActionMismatch, "deck translation does not preserve the tree");
            }
        }

    std::map<CoverKey, int> model_of_key;
    std::map<Node, CoverKey> key_of_node;
    for (const auto& [bag, t] : node_of_bag) {
        auto key = canonical_translate(w, bag).key;
        key_of_node[t] = key;
        model_of_key.emplace(key, 0);
    }
    int next = 0;
    for (auto& [key, id] : model_of_key) id = next++;

    FoldResult out;
    out.node_class.assign(static_cast<std::size_t>(td.size()), -1);
    for (const auto& [t, key] : key_of_node) out.node_class[static_cast<std::size_t>(t)] = model_of_key.at(key);

    std::map<std::pair<int, int>, std::pair<CoverKey, CoverKey>> model_edges;
    for (auto [s, t] : td.edges()) {
        if (!key_of_node.contains(s) || !key_of_node.contains(t)) continue;
        const int hs = out.node_class[static_cast<std::size_t>(s)];
        const int ht = out.node_class[static_cast<std::size_t>(t)];
        if (hs == ht) fail(ErrorCode::ActionMismatch, "a tree edge joins two translates of one node");
        std::optional<std::pair<CoverKey, CoverKey>> best;
        for (auto [a, b] : {std::make_pair(s, t), std::make_pair(t, s)}) {
            const auto ca = canonical_translate(w, td.bag(a));
            std::pair<CoverKey, CoverKey> key{ca.key, detail::translated_key(w, td.bag(b), ca.shift)};
            if (!best || key < *best) best = std::move(key);
        }
        const std::pair<int, int> ends{std::min(hs, ht), std::max(hs, ht)};
        auto [it, inserted] = model_edges.emplace(ends, *best);
        if (!inserted && it->second != *best) fail(ErrorCode::ActionMismatch, "folding produces parallel model edges");
    }

    GraphDecomposition& gd = out.gd;
    for (int h = 0; h < next; ++h) gd.model.add_vertex(std::to_string(h));
    for (const auto& [ends, key] : model_edges) gd.model.add_edge(ends.first, ends.second);
    gd.bags.resize(static_cast<std::size_t>(next));
    for (const auto& [key, h] : model_of_key) {
        VertexSet bag;
        for (const auto& [v, word] : key) bag.insert(v);
        if (bag.size() != static_cast<int>(key.size())) fail(ErrorCode::ActionMismatch, "bag does not project injectively");
        gd.bags[static_cast<std::size_t>(h)] = bag;
    }
    for (Vertex v = 0; v < base.order(); ++v) {
        const auto lifted = w.find(v, FreeWord{});
        Copart c;
        for (Node t = 0; t < td.size(); ++t) {
            if (!td.bag(t).contains(*lifted)) continue;
            if (out.node_class[static_cast<std::size_t>(t)] < 0)
                fail(ErrorCode::LiftCrossesBoundary, "a bag at a fundamental-domain vertex is not trusted");
            c.nodes.insert(out.node_class[static_cast<std::size_t>(t)]);
        }
        std::set<std::pair<int, int>> edges;
        for (auto [s, t] : td.edges())
            if (td.bag(s).contains(*lifted) && td.bag(t).contains(*lifted)) {
                const int a = out.node_class[static_cast<std::size_t>(s)];
                const int b = out.node_class[static_cast<std::size_t>(t)];
                edges.emplace(std::min(a, b), std::max(a, b));
            }
        c.edges.assign(edges.begin(), edges.end());
        gd.coparts.push_back(std::move(c));
    }
    return out;
}

/// Outcome of running the local pipeline on a base graph with a supplied cover.
struct LocalFoldReport {
    LocalChordalityResult local;
    CoverReport cover;
    bool window_chordal = false;
    bool folded = false;          ///< a decomposition was folded (otherwise derived directly)
    std::optional<GraphDecomposition> gd;
    std::optional<GdReport> gd_report;
    bool window_td_into_cliques = false;
    bool into_cliques = false;
    bool consistent = false;      ///< local chordality agrees with the folded verdict
};

inline LocalFoldReport theorem3_pipeline(const Graph& g, int r, const VoltagePresentation& pres, int L,
                                        const PeriodicOptions& opt = {}) {
    if (!(pres.base == g)) fail(ErrorCode::InvalidInput, "cover is not presented over this graph");
    LocalFoldReport rep;
    rep.local = is_r_locally_chordal(g, r);
    rep.cover = verify_cover(pres, r, L);
    if (!rep.cover.ball_preserved) fail(ErrorCode::BallNotPreserved, "cover does not preserve balls of radius r/2");
    const CoverWindow w = derive_window(pres, L);
    rep.window_chordal = is_chordal(w.graph).chordal;
    if (rep.window_chordal) {
        PeriodicOptions popt = opt;
        popt.check_stability = false;
        const auto pn = periodic_N(pres, L, popt);
        const auto td = build_td_from_nested(w.graph, pn.levels.all);
        rep.window_td_into_cliques = classify_td(w.graph, td).into_cliques;
        auto folded = fold(w, td, opt.margin);
        rep.gd_report = verify_graph_decomposition(g, folded.gd);
        rep.gd = std::move(folded.gd);
        rep.folded = true;
        rep.into_cliques = rep.gd_report->into_cliques;
    } else if (pres.rank() == 0) {
        const std::vector<VertexSet> bags{w.graph.vertices()};
        const auto td = make_td(bags, {});
        rep.window_td_into_cliques = classify_td(w.graph, td).into_cliques;
        auto folded = fold(w, td, opt.margin);
        rep.gd_report = verify_graph_decomposition(g, folded.gd);
        rep.gd = std::move(folded.gd);
        rep.folded = true;
        rep.into_cliques = rep.gd_report->into_cliques;
    } else {
        // A non-chordal cover has no decomposition into cliques, and folding
        // preserves that in both directions.
        rep.window_td_into_cliques = false;
        rep.into_cliques = false;
    }
    rep.consistent = rep.local.holds == rep.into_cliques;
    return rep;
}

} // namespace chordtd
