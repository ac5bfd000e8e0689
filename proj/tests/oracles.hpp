#pragma once

// Brute-force reference implementations on adjacency bitmasks. These share no
// code with the library beyond reading a Graph's adjacency.

#include "chordtd/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Mask = std::uint64_t;

struct Small {
    int n = 0;
    std::vector<Mask> adj;

    bool edge(int u, int v) const { return (adj[static_cast<std::size_t>(u)] >> v) & 1U; }
};

inline Small from(const chordtd::Graph& g) {
    Small s;
    s.n = g.order();
    s.adj.assign(static_cast<std::size_t>(s.n), 0);
    for (auto [u, v] : g.edges()) {
        s.adj[static_cast<std::size_t>(u)] |= Mask{1} << v;
        s.adj[static_cast<std::size_t>(v)] |= Mask{1} << u;
    }
    return s;
}

inline Mask to_mask(const chordtd::VertexSet& s) {
    Mask m = 0;
    for (auto v : s) m |= Mask{1} << v;
    return m;
}

inline chordtd::VertexSet to_set(Mask m) {
    chordtd::VertexSet s;
    for (int v = 0; v < 64; ++v)
        if ((m >> v) & 1U) s.insert(v);
    return s;
}

inline Mask all(const Small& g) { return g.n == 64 ? ~Mask{0} : (Mask{1} << g.n) - 1; }

inline Mask reach(const Small& g, Mask from, Mask within) {
    Mask seen = from & within, frontier = seen;
    while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) next |= g.adj[static_cast<std::size_t>(std::countr_zero(f))];
        next &= within & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

inline std::vector<Mask> components(const Small& g, Mask within) {
    std::vector<Mask> out;
    while (within) {
        const Mask c = reach(g, within & (~within + 1), within);
        out.push_back(c);
        within &= ~c;
    }
    return out;
}

inline Mask nbhd(const Small& g, Mask s) {
    Mask n = 0;
    for (Mask f = s; f; f &= f - 1) n |= g.adj[static_cast<std::size_t>(std::countr_zero(f))];
    return n & ~s;
}

inline bool clique(const Small& g, Mask s) {
    for (Mask f = s; f; f &= f - 1) {
        const int v = std::countr_zero(f);
        if ((s & ~(Mask{1} << v) & ~g.adj[static_cast<std::size_t>(v)]) != 0) return false;
    }
    return true;
}

/// Chordal iff no vertex subset induces a cycle of length at least 4.
inline bool chordal_by_cycles(const Small& g) {
    const Mask full = all(g);
    for (Mask s = 1; s <= full && s != 0; ++s) {
        if (std::popcount(s) < 4) continue;
        bool deg2 = true;
        for (Mask f = s; f && deg2; f &= f - 1)
            deg2 = std::popcount(g.adj[static_cast<std::size_t>(std::countr_zero(f))] & s) == 2;
        if (deg2 && reach(g, s & (~s + 1), s) == s) return false;
        if (s == full) break;
    }
    return true;
}

/// Sets S with at least two full components in G - S.
inline std::vector<Mask> minimal_separators(const Small& g) {
    std::vector<Mask> out;
    const Mask full = all(g);
    for (Mask s = 0;; ++s) {
        int full_comps = 0;
        for (Mask c : components(g, full & ~s))
            if (nbhd(g, c) == s) ++full_comps;
        if (full_comps >= 2) out.push_back(s);
        if (s == full) break;
    }
    return out;
}

inline std::vector<Mask> maximal_cliques(const Small& g) {
    std::vector<Mask> cl;
    const Mask full = all(g);
    for (Mask s = 1;; ++s) {
        if (clique(g, s)) {
            bool maximal = true;
            for (int v = 0; v < g.n && maximal; ++v)
                if (!((s >> v) & 1U) && (g.adj[static_cast<std::size_t>(v)] & s) == s) maximal = false;
            if (maximal) cl.push_back(s);
        }
        if (s == full) break;
    }
    return cl;
}

/// Whether every path from x to y meets s (vertices of x and y may lie in s).
inline bool separates(const Small& g, Mask s, Mask x, Mask y) {
    return (reach(g, x & ~s, all(g) & ~s) & y) == 0;
}

/// Size of a smallest X-Y separator and all separators of that size, by exhaustion.
inline std::pair<int, std::vector<Mask>> min_separators(const Small& g, Mask x, Mask y) {
    const Mask full = all(g);
    std::vector<std::vector<Mask>> by_size(static_cast<std::size_t>(g.n) + 1);
    for (Mask s = 0;; ++s) {
        if (separates(g, s, x, y)) by_size[static_cast<std::size_t>(std::popcount(s))].push_back(s);
        if (s == full) break;
    }
    for (int k = 0; k <= g.n; ++k)
        if (!by_size[static_cast<std::size_t>(k)].empty()) return {k, by_size[static_cast<std::size_t>(k)]};
    return {g.n, {}};
}

/// Perfect elimination ordering by repeatedly removing the smallest simplicial
/// vertex; empty when none exists at some step.
inline std::vector<int> simplicial_elimination(const Small& g) {
    Mask left = all(g);
    std::vector<int> order;
    while (left) {
        int pick = -1;
        for (int v = 0; v < g.n && pick < 0; ++v)
            if (((left >> v) & 1U) && clique(g, g.adj[static_cast<std::size_t>(v)] & left)) pick = v;
        if (pick < 0) return {};
        order.push_back(pick);
        left &= ~(Mask{1} << pick);
    }
    return order;
}

/// Maximal cliques of a chordal graph read off an elimination ordering: each
/// vertex with its later neighbours, keeping the inclusion-maximal sets.
inline std::vector<Mask> clique_tree_bags(const Small& g) {
    const auto order = simplicial_elimination(g);
    std::vector<Mask> cand;
    Mask later = all(g);
    for (int v : order) {
        later &= ~(Mask{1} << v);
        cand.push_back((g.adj[static_cast<std::size_t>(v)] & later) | (Mask{1} << v));
    }
    std::vector<Mask> out;
    for (Mask c : cand) {
        bool maximal = true;
        for (Mask d : cand)
            if (d != c && (c & d) == c) maximal = false;
        if (maximal) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Every automorphism, by trying all permutations (n <= 9).
inline std::vector<std::vector<int>> automorphisms(const Small& g) {
    std::vector<int> p(static_cast<std::size_t>(g.n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (int u = 0; u < g.n && ok; ++u)
            for (int v = u + 1; v < g.n && ok; ++v)
                ok = g.edge(u, v) == g.edge(p[static_cast<std::size_t>(u)], p[static_cast<std::size_t>(v)]);
        if (ok) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline std::vector<std::vector<int>> floyd_warshall(const Small& g) {
    const int inf = 1 << 20;
    std::vector<std::vector<int>> d(static_cast<std::size_t>(g.n), std::vector<int>(static_cast<std::size_t>(g.n), inf));
    for (int u = 0; u < g.n; ++u) {
        d[static_cast<std::size_t>(u)][static_cast<std::size_t>(u)] = 0;
        for (int v = 0; v < g.n; ++v)
            if (g.edge(u, v)) d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
    }
    for (int k = 0; k < g.n; ++k)
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j)
                d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    std::min(d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                             d[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] + d[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
    return d;
}

/// All separations {A, B} of G, as mask pairs with A <= B numerically, by exhaustion
/// over assignments of each vertex to A only, B only, or both (n <= 10).
inline std::vector<std::pair<Mask, Mask>> all_separations(const Small& g) {
    std::vector<std::pair<Mask, Mask>> out;
    std::uint64_t total = 1;
    for (int i = 0; i < g.n; ++i) total *= 3;
    for (std::uint64_t code = 0; code < total; ++code) {
        Mask a = 0, b = 0;
        std::uint64_t c = code;
        for (int v = 0; v < g.n; ++v, c /= 3) {
            const auto side = c % 3;
            if (side != 1) a |= Mask{1} << v;
            if (side != 0) b |= Mask{1} << v;
        }
        const Mask ao = a & ~b, bo = b & ~a;
        if (nbhd(g, ao) & bo) continue;
        if (a <= b) out.emplace_back(a, b);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace oracle
