#pragma once

#include "chordtd/covers.hpp"
#include "chordtd/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace chordtd::instances {

/// Letters a, b, ... for small graphs, v0, v1, ... otherwise.
inline std::string vertex_label(int i, int n) {
    if (n <= 26) return std::string(1, static_cast<char>('a' + i));
    return "v" + std::to_string(i);
}

/// K_{1,t}: centre "c", leaves "1".."t".
inline Graph star(int t) {
    if (t < 0) fail(ErrorCode::InvalidInput, "negative leaf count");
    Graph g;
    g.add_vertex("c");
    for (int i = 1; i <= t; ++i) g.add_edge("c", std::to_string(i));
    return g;
}

inline Graph path(int n) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(vertex_label(i, n));
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle(int n) {
    if (n < 3) fail(ErrorCode::InvalidInput, "cycles need at least 3 vertices");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline Graph complete(int n) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(vertex_label(i, n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

/// Triangles abc and bcd glued along bc.
inline Graph two_triangles() {
    return from_edge_list({{"a", "b"}, {"a", "c"}, {"b", "c"}, {"b", "d"}, {"c", "d"}});
}

/// Rim cycle on k vertices plus hub "h".
inline Graph wheel(int k) {
    Graph g = cycle(k);
    const Vertex h = g.add_vertex("h");
    for (Vertex v = 0; v < k; ++v) g.add_edge(h, v);
    return g;
}

/// Random k-tree on n >= k+1 vertices: each new vertex joins a random k-clique.
inline Graph ktree(int n, int k, std::uint64_t seed) {
    if (k < 1 || n < k + 1) fail(ErrorCode::InvalidInput, "k-trees need k >= 1 and n >= k + 1");
    std::mt19937_64 rng(seed);
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(vertex_label(i, n));
    std::vector<std::vector<Vertex>> cliques{{}};
    for (Vertex v = 0; v <= k; ++v) {
        for (Vertex u = 0; u < v; ++u) g.add_edge(u, v);
        cliques[0].push_back(v);
    }
    for (Vertex v = k + 1; v < n; ++v) {
        auto base = cliques[std::uniform_int_distribution<std::size_t>(0, cliques.size() - 1)(rng)];
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(std::uniform_int_distribution<std::size_t>(0, base.size() - 1)(rng)));
        for (Vertex u : base) g.add_edge(u, v);
        base.push_back(v);
        cliques.push_back(base);
    }
    return g;
}

/// Random connected chordal graph: each new vertex is joined to a random
/// nonempty subset of a random current maximal clique, so the reverse
/// insertion order is a perfect elimination ordering.
inline Graph random_chordal(int n, std::uint64_t seed, int max_attach = 4) {
    if (n < 1) fail(ErrorCode::InvalidInput, "need at least one vertex");
    std::mt19937_64 rng(seed);
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(vertex_label(i, n));
    std::vector<std::vector<Vertex>> cliques{{0}};
    for (Vertex v = 1; v < n; ++v) {
        const std::size_t ci = std::uniform_int_distribution<std::size_t>(0, cliques.size() - 1)(rng);
        auto clique = cliques[ci];
        std::shuffle(clique.begin(), clique.end(), rng);
        const int cap = std::min<int>(static_cast<int>(clique.size()), max_attach);
        const int size = std::uniform_int_distribution<int>(1, cap)(rng);
        std::vector<Vertex> attach(clique.begin(), clique.begin() + size);
        std::sort(attach.begin(), attach.end());
        for (Vertex u : attach) g.add_edge(u, v);
        attach.push_back(v);
        if (size == static_cast<int>(cliques[ci].size())) cliques[ci] = attach;
        else cliques.push_back(attach);
    }
    return g;
}

/// G(n, p) with letter or v-prefixed names.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(vertex_label(i, n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

// ----------------------------------------------------------- covers

/// C_n with voltage z on the closing edge: the double ray.
inline VoltagePresentation cycle_cover(int n) {
    Graph g = cycle(n);
    std::vector<std::pair<Vertex, Vertex>> tree;
    for (int i = 0; i + 1 < n; ++i) tree.emplace_back(i, i + 1);
    Alphabet al;
    const FreeWord z = al.parse("z");
    return make_presentation(g, tree, {{n - 1, 0, z}}, al);
}

/// Square of C_n (n >= 7) with voltage z on the edges wrapping around: the
/// square of the double ray.
inline VoltagePresentation square_ring_cover(int n) {
    if (n < 7) fail(ErrorCode::InvalidInput, "the ring needs at least 7 vertices");
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(vertex_label(i, n));
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
        g.add_edge(i, (i + 2) % n);
    }
    std::vector<std::pair<Vertex, Vertex>> tree;
    for (int i = 0; i + 1 < n; ++i) tree.emplace_back(i, i + 1);
    Alphabet al;
    const FreeWord z = al.parse("z");
    std::vector<VoltageAssignment> volts;
    volts.push_back({n - 1, 0, z});
    volts.push_back({n - 2, 0, z});
    volts.push_back({n - 1, 1, z});
    return make_presentation(g, tree, volts, al);
}

/// Triangle abc with pendant p at a and voltage z on c-a.
inline VoltagePresentation caterpillar_cover() {
    Graph g = from_edge_list({{"a", "b"}, {"b", "c"}, {"c", "a"}, {"a", "p"}});
    Alphabet al;
    const FreeWord z = al.parse("z");
    return make_presentation(g, {{0, 1}, {1, 2}, {0, 3}}, {{2, 0, z}}, al);
}

/// Two 4-cycles through a, with voltages x and y: a rank-2 free deck group.
inline VoltagePresentation two_squares_cover() {
    Graph g = from_edge_list({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}, {"a", "e"}, {"e", "f"}, {"f", "g"}, {"g", "a"}});
    Alphabet al;
    const FreeWord x = al.parse("x");
    const FreeWord y = al.parse("y");
    // vertices: a=0 b=1 c=2 d=3 e=4 f=5 g=6
    return make_presentation(g, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}}, {{3, 0, x}, {6, 0, y}}, al);
}

} // namespace chordtd::instances
