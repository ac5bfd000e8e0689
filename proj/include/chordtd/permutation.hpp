#pragma once

#include "chordtd/graph.hpp"

#include <vector>

namespace chordtd {

/// Vertex permutation: perm[v] is the image of v.
using Permutation = std::vector<Vertex>;

inline Permutation identity_permutation(int n) {
    Permutation p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    return p;
}

/// (a * b)(v) = a(b(v)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
    return out;
}

inline Permutation inverse(const Permutation& p) {
    Permutation out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[static_cast<std::size_t>(p[i])] = static_cast<Vertex>(i);
    return out;
}

inline VertexSet apply(const Permutation& p, const VertexSet& s) {
    VertexSet out;
    for (Vertex v : s) out.insert(p[static_cast<std::size_t>(v)]);
    return out;
}

inline bool is_automorphism(const Graph& g, const Permutation& p) {
    if (static_cast<int>(p.size()) != g.order()) return false;
    VertexSet image;
    for (Vertex v : p) {
        if (v < 0 || v >= g.order()) return false;
        image.insert(v);
    }
    if (image.size() != g.order()) return false;
    for (Vertex v = 0; v < g.order(); ++v)
        if (chordtd::apply(p, g.neighbors(v)) != g.neighbors(p[static_cast<std::size_t>(v)])) return false;
    return true;
}

} // namespace chordtd
