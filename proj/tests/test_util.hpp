#pragma once

#include "chordtd/chordtd.hpp"

#include <gtest/gtest.h>

#include <initializer_list>
#include <string_view>
#include <vector>

namespace testutil {

using namespace chordtd;

inline VertexSet S(const Graph& g, std::initializer_list<std::string_view> names) { return g.set_of(names); }

inline Separation sep(const Graph& g, std::initializer_list<std::string_view> a, std::initializer_list<std::string_view> b) {
    return Separation::make(g, g.set_of(a), g.set_of(b));
}

inline std::vector<std::string> names(const Graph& g, const std::vector<Vertex>& vs) {
    std::vector<std::string> out;
    for (auto v : vs) out.push_back(g.name(v));
    return out;
}

/// Applies a relabelling to g: vertex v of the result is p[v]'s old neighbourhood image.
inline Graph relabel(const Graph& g, const std::vector<Vertex>& p) {
    Graph h;
    for (Vertex v = 0; v < g.order(); ++v) h.add_vertex(g.name(v));
    for (auto [u, v] : g.edges()) h.add_edge(p[static_cast<std::size_t>(u)], p[static_cast<std::size_t>(v)]);
    return h;
}

template <typename F>
ErrorCode error_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InternalInvariant;
}

} // namespace testutil
