#pragma once

#include "chordtd/covers.hpp"
#include "chordtd/graph.hpp"
#include "chordtd/graph_decomposition.hpp"
#include "chordtd/permutation.hpp"
#include "chordtd/separations.hpp"
#include "chordtd/treedec.hpp"

#include <json.hpp>

#include <fstream>
#include <initializer_list>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace chordtd::io {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "v1";

namespace detail {

inline void only_fields(const json& j, std::initializer_list<const char*> allowed, const char* what) {
    if (!j.is_object()) fail(ErrorCode::InvalidInput, std::string(what) + " must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* a : allowed) known = known || it.key() == a;
        if (!known) fail(ErrorCode::InvalidInput, std::string("unknown field '") + it.key() + "' in " + what);
    }
}

inline const json& field(const json& j, const char* name, const char* what) {
    if (!j.contains(name)) fail(ErrorCode::InvalidInput, std::string("missing field '") + name + "' in " + what);
    return j.at(name);
}

inline std::string vertex_name(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    fail(ErrorCode::InvalidInput, "vertex identifiers must be strings or integers");
}

inline std::string node_id(const json& j) { return vertex_name(j); }

template <typename F>
decltype(auto) guarded(F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        fail(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
    }
}

} // namespace detail

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::InvalidInput, "cannot open '" + path + "'");
    return detail::guarded([&] { return json::parse(in); });
}

// ---------------------------------------------------------------- graphs

inline json to_json(const Graph& g) {
    json j;
    j["vertices"] = g.names();
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({g.name(u), g.name(v)});
    j["edges"] = std::move(edges);
    return j;
}

inline Graph graph_from_json(const json& j) {
    return detail::guarded([&] {
        detail::only_fields(j, {"vertices", "edges"}, "graph");
        Graph g;
        if (j.contains("vertices"))
            for (const auto& v : j.at("vertices")) g.add_vertex(detail::vertex_name(v));
        for (const auto& e : detail::field(j, "edges", "graph")) {
            if (!e.is_array() || e.size() != 2) fail(ErrorCode::InvalidInput, "edges must be pairs");
            const std::string u = detail::vertex_name(e[0]);
            const std::string v = detail::vertex_name(e[1]);
            if (u == v) fail(ErrorCode::LoopEdge, "loop at '" + u + "'");
            g.add_edge(u, v);
        }
        return g;
    });
}

inline Graph read_graph(const std::string& path) { return graph_from_json(read_json_file(path)); }

inline json names(const Graph& g, const VertexSet& s) { return g.names_of(s); }

inline VertexSet set_from_json(const Graph& g, const json& j) {
    if (!j.is_array()) fail(ErrorCode::InvalidInput, "vertex lists must be arrays");
    VertexSet s;
    for (const auto& v : j) s.insert(g.index(detail::vertex_name(v)));
    return s;
}

inline json to_json(const Graph& g, const Separation& s) {
    return json{{"A", names(g, s.a())}, {"B", names(g, s.b())}};
}

inline Separation separation_from_json(const Graph& g, const json& j) {
    return detail::guarded([&] {
        detail::only_fields(j, {"A", "B"}, "separation");
        return Separation::make(g, set_from_json(g, detail::field(j, "A", "separation")),
                                set_from_json(g, detail::field(j, "B", "separation")));
    });
}

inline json to_json(const Graph& g, const Permutation& p) {
    json j = json::object();
    for (Vertex v = 0; v < g.order(); ++v) j[g.name(v)] = g.name(p[static_cast<std::size_t>(v)]);
    return j;
}

// ---------------------------------------------------- tree-decompositions

inline json to_json(const Graph& g, const TreeDecomposition& td) {
    json nodes = json::array();
    for (Node t = 0; t < td.size(); ++t) nodes.push_back({{"id", t}, {"bag", names(g, td.bag(t))}});
    json edges = json::array();
    for (auto [s, t] : td.edges()) edges.push_back({s, t});
    return json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

inline TreeDecomposition td_from_json(const Graph& g, const json& j) {
    return detail::guarded([&] {
        detail::only_fields(j, {"nodes", "edges"}, "tree-decomposition");
        std::map<std::string, Node> ids;
        std::vector<VertexSet> bags;
        for (const auto& n : detail::field(j, "nodes", "tree-decomposition")) {
            detail::only_fields(n, {"id", "bag"}, "node");
            const std::string id = detail::node_id(detail::field(n, "id", "node"));
            if (!ids.emplace(id, static_cast<Node>(bags.size())).second) fail(ErrorCode::InvalidInput, "duplicate node id '" + id + "'");
            bags.push_back(set_from_json(g, detail::field(n, "bag", "node")));
        }
        std::vector<TreeEdge> edges;
        for (const auto& e : detail::field(j, "edges", "tree-decomposition")) {
            if (!e.is_array() || e.size() != 2) fail(ErrorCode::InvalidInput, "tree edges must be pairs");
            auto s = ids.find(detail::node_id(e[0]));
            auto t = ids.find(detail::node_id(e[1]));
            if (s == ids.end() || t == ids.end()) fail(ErrorCode::InvalidInput, "tree edge names an unknown node");
            if (s->second == t->second) fail(ErrorCode::NotATree, "tree edge is a loop");
            edges.emplace_back(s->second, t->second);
        }
        return make_td(std::move(bags), edges);
    });
}

// --------------------------------------------------- graph-decompositions

inline json to_json(const Graph& g, const GraphDecomposition& gd) {
    json nodes = json::array();
    for (int h = 0; h < gd.size(); ++h) nodes.push_back({{"id", h}, {"bag", names(g, gd.bags[static_cast<std::size_t>(h)])}});
    json edges = json::array();
    for (auto [s, t] : gd.model.edges()) edges.push_back({s, t});
    json coparts = json::array();
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto& c = gd.coparts[static_cast<std::size_t>(v)];
        json ce = json::array();
        for (auto [s, t] : c.edges) ce.push_back({s, t});
        coparts.push_back({{"vertex", g.name(v)}, {"nodes", c.nodes.to_vector()}, {"edges", std::move(ce)}});
    }
    return json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}, {"coparts", std::move(coparts)}};
}

inline GraphDecomposition gd_from_json(const Graph& g, const json& j) {
    return detail::guarded([&] {
        detail::only_fields(j, {"nodes", "edges", "coparts"}, "graph-decomposition");
        std::map<std::string, int> ids;
        GraphDecomposition gd;
        for (const auto& n : detail::field(j, "nodes", "graph-decomposition")) {
            detail::only_fields(n, {"id", "bag"}, "node");
            const std::string id = detail::node_id(detail::field(n, "id", "node"));
            if (!ids.emplace(id, gd.model.order()).second) fail(ErrorCode::InvalidInput, "duplicate node id '" + id + "'");
            gd.model.add_vertex(id);
            gd.bags.push_back(set_from_json(g, detail::field(n, "bag", "node")));
        }
        auto node = [&](const json& x) {
            auto it = ids.find(detail::node_id(x));
            if (it == ids.end()) fail(ErrorCode::InvalidInput, "reference to an unknown model node");
            return it->second;
        };
        for (const auto& e : detail::field(j, "edges", "graph-decomposition")) {
            if (!e.is_array() || e.size() != 2) fail(ErrorCode::InvalidInput, "model edges must be pairs");
            gd.model.add_edge(node(e[0]), node(e[1]));
        }
        gd.coparts.resize(static_cast<std::size_t>(g.order()));
        std::vector<bool> given(static_cast<std::size_t>(g.order()), false);
        if (j.contains("coparts")) {
            for (const auto& c : j.at("coparts")) {
                detail::only_fields(c, {"vertex", "nodes", "edges"}, "copart");
                const Vertex v = g.index(detail::vertex_name(detail::field(c, "vertex", "copart")));
                Copart cp;
                for (const auto& x : detail::field(c, "nodes", "copart")) cp.nodes.insert(node(x));
                std::set<std::pair<int, int>> es;
                for (const auto& e : detail::field(c, "edges", "copart")) {
                    if (!e.is_array() || e.size() != 2) fail(ErrorCode::InvalidInput, "copart edges must be pairs");
                    const int a = node(e[0]), b = node(e[1]);
                    es.emplace(std::min(a, b), std::max(a, b));
                }
                cp.edges.assign(es.begin(), es.end());
                gd.coparts[static_cast<std::size_t>(v)] = std::move(cp);
                given[static_cast<std::size_t>(v)] = true;
            }
        }
        // Missing coparts default to H[W_v].
        for (Vertex v = 0; v < g.order(); ++v) {
            if (given[static_cast<std::size_t>(v)]) continue;
            Copart cp;
            cp.nodes = gd.nodes_containing(v);
            for (auto [s, t] : gd.model.edges())
                if (cp.nodes.contains(s) && cp.nodes.contains(t)) cp.edges.emplace_back(s, t);
            gd.coparts[static_cast<std::size_t>(v)] = std::move(cp);
        }
        return gd;
    });
}

// ------------------------------------------------- voltage presentations

inline json to_json(const VoltagePresentation& p) {
    json tree = json::array();
    for (auto [u, v] : p.tree_edges) tree.push_back({p.base.name(u), p.base.name(v)});
    json volts = json::array();
    for (const auto& [e, w] : p.voltage)
        if (e.first < e.second)
            volts.push_back({{"edge", {p.base.name(e.first), p.base.name(e.second)}}, {"word", p.alphabet.format(w)}});
    return json{{"base", to_json(p.base)}, {"tree_edges", std::move(tree)}, {"voltages", std::move(volts)}};
}

inline VoltagePresentation presentation_from_json(const json& j) {
    return detail::guarded([&] {
        detail::only_fields(j, {"base", "tree_edges", "voltages"}, "voltage presentation");
        Graph base = graph_from_json(detail::field(j, "base", "voltage presentation"));
        std::vector<std::pair<Vertex, Vertex>> tree;
        for (const auto& e : detail::field(j, "tree_edges", "voltage presentation")) {
            if (!e.is_array() || e.size() != 2) fail(ErrorCode::InvalidInput, "tree edges must be pairs");
            tree.emplace_back(base.index(detail::vertex_name(e[0])), base.index(detail::vertex_name(e[1])));
        }
        Alphabet alphabet;
        std::vector<VoltageAssignment> volts;
        if (j.contains("voltages"))
            for (const auto& v : j.at("voltages")) {
                detail::only_fields(v, {"edge", "word"}, "voltage");
                const auto& e = detail::field(v, "edge", "voltage");
                if (!e.is_array() || e.size() != 2) fail(ErrorCode::InvalidInput, "voltage edges must be pairs");
                const auto& word = detail::field(v, "word", "voltage");
                if (!word.is_string()) fail(ErrorCode::InvalidInput, "voltage words must be strings");
                volts.push_back({base.index(detail::vertex_name(e[0])), base.index(detail::vertex_name(e[1])),
                                 alphabet.parse(word.get<std::string>())});
            }
        return make_presentation(std::move(base), std::move(tree), volts, std::move(alphabet));
    });
}

inline VoltagePresentation read_presentation(const std::string& path) { return presentation_from_json(read_json_file(path)); }

// ----------------------------------------------------------------- DOT

namespace detail {

inline std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

inline std::string bag_label(const Graph& g, const VertexSet& bag) {
    std::string out = "{";
    bool first = true;
    for (Vertex v : bag) {
        out += (first ? "" : ", ") + g.name(v);
        first = false;
    }
    return out + "}";
}

inline std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

} // namespace detail

inline std::string to_dot(const Graph& g, const std::string& name = "G") {
    std::ostringstream out;
    out << "graph " << detail::quote(name) << " {\n";
    for (Vertex v = 0; v < g.order(); ++v) out << "  " << detail::quote(g.name(v)) << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << detail::quote(g.name(u)) << " -- " << detail::quote(g.name(v)) << ";\n";
    out << "}\n";
    return out.str();
}

inline std::string to_dot(const Graph& g, const TreeDecomposition& td) {
    std::ostringstream out;
    out << "graph \"T\" {\n  node [shape=box];\n";
    for (Node t = 0; t < td.size(); ++t)
        out << "  t" << t << " [label=" << detail::quote(detail::bag_label(g, td.bag(t))) << "];\n";
    for (auto [s, t] : td.edges()) out << "  t" << s << " -- t" << t << ";\n";
    out << "}\n";
    return out.str();
}

inline std::string to_dot(const Graph& g, const GraphDecomposition& gd) {
    std::ostringstream out;
    out << "graph \"H\" {\n  node [shape=box];\n";
    for (int h = 0; h < gd.size(); ++h)
        out << "  h" << h << " [label=" << detail::quote(detail::bag_label(g, gd.bags[static_cast<std::size_t>(h)])) << "];\n";
    for (auto [s, t] : gd.model.edges()) out << "  h" << s << " -- h" << t << ";\n";
    out << "}\n";
    return out.str();
}

// -------------------------------------------------------------- GraphML

namespace detail {

inline std::string graphml(const std::vector<std::string>& ids, const std::vector<std::string>& labels,
                           const std::vector<std::pair<int, int>>& edges, bool with_bags) {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
    if (with_bags) out << "  <key id=\"bag\" for=\"node\" attr.name=\"bag\" attr.type=\"string\"/>\n";
    out << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
    for (std::size_t i = 0; i < ids.size(); ++i) {
        out << "    <node id=\"" << xml_escape(ids[i]) << "\"";
        if (with_bags) out << ">\n      <data key=\"bag\">" << xml_escape(labels[i]) << "</data>\n    </node>\n";
        else out << "/>\n";
    }
    for (auto [u, v] : edges)
        out << "    <edge source=\"" << xml_escape(ids[static_cast<std::size_t>(u)]) << "\" target=\""
            << xml_escape(ids[static_cast<std::size_t>(v)]) << "\"/>\n";
    out << "  </graph>\n</graphml>\n";
    return out.str();
}

} // namespace detail

inline std::string to_graphml(const Graph& g) {
    return detail::graphml(g.names(), {}, g.edges(), false);
}

inline std::string to_graphml(const Graph& g, const TreeDecomposition& td) {
    std::vector<std::string> ids, labels;
    for (Node t = 0; t < td.size(); ++t) {
        ids.push_back("t" + std::to_string(t));
        labels.push_back(detail::bag_label(g, td.bag(t)));
    }
    return detail::graphml(ids, labels, td.edges(), true);
}

inline std::string to_graphml(const Graph& g, const GraphDecomposition& gd) {
    std::vector<std::string> ids, labels;
    for (int h = 0; h < gd.size(); ++h) {
        ids.push_back("h" + std::to_string(h));
        labels.push_back(detail::bag_label(g, gd.bags[static_cast<std::size_t>(h)]));
    }
    return detail::graphml(ids, labels, gd.model.edges(), true);
}

} // namespace chordtd::io
