// chordtd: command-line front end for the chordtd library.
//
// Exit status: 0 success or verdict true, 1 verdict false (witness printed),
// 2 usage or input error.

#include "chordtd/chordtd.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using chordtd::io::json;
namespace ct = chordtd;

constexpr std::uint64_t kDefaultSeed = 20240917;
constexpr const char* kBallConvention = "ball(v, r) = vertices at distance <= floor(r/2) from v";

struct Options {
    std::string in;
    std::string voltage;
    std::string td_file;
    std::string gd_file;
    std::string dot;
    std::string graphml;
    std::string out;
    int r = 3;
    int L = 6;
    int margin = 2;
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t budget = 1'000'000;
    bool exhaustive = false;
    bool as_json = false;
    int jobs = 1;
    std::string orbit_order = "canonical";
    bool include_nontight = false;
    // gen
    std::string kind;
    int n = 8;
    int k = 2;
    int t = 3;
    double p = 0.3;
    // reproduce
    std::string example;
};

// ------------------------------------------------------------ rendering

std::string render(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + render(v[i]);
        return s + "]";
    }
    if (v.is_object()) {
        std::string s = "{";
        bool first = true;
        for (auto it = v.begin(); it != v.end(); ++it) {
            s += (first ? "" : ", ") + it.key() + ": " + render(it.value());
            first = false;
        }
        return s + "}";
    }
    return v.dump();
}

void print_text(const json& report, std::ostream& os) {
    if (report.contains("summary")) os << report["summary"].get<std::string>() << '\n';
    for (auto it = report.begin(); it != report.end(); ++it) {
        if (it.key() == "schema" || it.key() == "summary") continue;
        const json& v = it.value();
        const bool block = (v.is_array() && !v.empty() && (v[0].is_object() || v[0].is_array())) || v.is_object();
        if (!block) {
            os << it.key() << ": " << render(v) << '\n';
            continue;
        }
        os << it.key() << ":\n";
        if (v.is_object()) {
            for (auto jt = v.begin(); jt != v.end(); ++jt) os << "  " << jt.key() << ": " << render(jt.value()) << '\n';
        } else {
            for (const auto& e : v) os << "  " << render(e) << '\n';
        }
    }
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) ct::fail(ct::ErrorCode::InvalidInput, "cannot write '" + path + "'");
    out << text;
}

json names(const ct::Graph& g, const std::vector<ct::Vertex>& vs) {
    json j = json::array();
    for (auto v : vs) j.push_back(g.name(v));
    return j;
}

json bag_list(const ct::Graph& g, const std::vector<ct::VertexSet>& sets) {
    json j = json::array();
    for (const auto& s : sets) j.push_back(ct::io::names(g, s));
    return j;
}

json new_report(const char* command) {
    json j;
    j["schema"] = ct::io::kSchema;
    j["command"] = command;
    return j;
}

int finish(const Options& o, json report, bool verdict) {
    if (o.as_json) std::cout << report.dump(2) << '\n';
    else print_text(report, std::cout);
    return verdict ? 0 : 1;
}

ct::Graph input_graph(const Options& o) {
    if (o.in.empty()) ct::fail(ct::ErrorCode::InvalidInput, "--in is required");
    return ct::io::read_graph(o.in);
}

// Accepts either a bare decomposition or a report that embeds one under `key`.
json embedded(const std::string& path, const char* key) {
    json j = ct::io::read_json_file(path);
    if (j.is_object() && j.contains(key) && j.contains("schema")) return j.at(key);
    return j;
}

void export_td(const Options& o, const ct::Graph& g, const ct::TreeDecomposition& td) {
    if (!o.dot.empty()) write_file(o.dot, ct::io::to_dot(g, td));
    if (!o.graphml.empty()) write_file(o.graphml, ct::io::to_graphml(g, td));
    if (!o.out.empty()) write_file(o.out, ct::io::to_json(g, td).dump(2) + "\n");
}

void export_gd(const Options& o, const ct::Graph& g, const ct::GraphDecomposition& gd) {
    if (!o.dot.empty()) write_file(o.dot, ct::io::to_dot(g, gd));
    if (!o.graphml.empty()) write_file(o.graphml, ct::io::to_graphml(g, gd));
    if (!o.out.empty()) write_file(o.out, ct::io::to_json(g, gd).dump(2) + "\n");
}

json td_summary(const ct::Graph& g, const ct::TreeDecomposition& td) {
    json nodes = json::array();
    for (ct::Node t = 0; t < td.size(); ++t) nodes.push_back({{"id", t}, {"bag", ct::io::names(g, td.bag(t))}});
    json edges = json::array();
    for (auto [s, t] : td.edges()) edges.push_back({s, t});
    return json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

// ------------------------------------------------------------ commands

int cmd_check_chordal(const Options& o) {
    const auto g = input_graph(o);
    const auto res = ct::is_chordal(g);
    json rep = new_report("check-chordal");
    rep["vertices"] = g.order();
    rep["chordal"] = res.chordal;
    if (res.chordal) {
        rep["elimination_order"] = names(g, res.peo.order);
    } else {
        rep["hole"] = names(g, res.hole);
    }
    return finish(o, rep, res.chordal);
}

int cmd_max_cliques(const Options& o) {
    const auto g = input_graph(o);
    const bool chordal = ct::is_chordal(g).chordal;
    const auto cliques = chordal ? ct::maximal_cliques(g) : ct::all_maximal_cliques(g);
    json rep = new_report("max-cliques");
    rep["chordal"] = chordal;
    rep["count"] = cliques.size();
    rep["cliques"] = bag_list(g, cliques);
    return finish(o, rep, true);
}

std::string beta_variant(const Options& o) {
    return o.include_nontight ? "all efficient distinguishers" : "tight efficient distinguishers";
}

ct::ConstructOptions construct_options(const Options& o) {
    ct::ConstructOptions c;
    c.include_nontight = o.include_nontight;
    c.jobs = o.jobs;
    return c;
}

json canonical_fields(const ct::Graph& g, const ct::CanonicalTd& c) {
    json j;
    j["nodes"] = c.td.size();
    j["td"] = td_summary(g, c.td);
    json levels = json::object();
    for (const auto& [k, seps] : c.levels.levels) {
        json l = json::array();
        for (const auto& s : seps) l.push_back(ct::io::to_json(g, s));
        levels[std::to_string(k)] = std::move(l);
    }
    j["separations"] = std::move(levels);
    j["valid"] = c.td_report.ok();
    j["regular"] = c.classification.regular;
    j["into_cliques"] = c.classification.into_cliques;
    j["into_maximal_cliques"] = c.classification.into_maximal_cliques;
    j["automorphism_generators"] = c.aut.generators.size();
    if (c.aut.group_order) j["automorphism_group_order"] = *c.aut.group_order;
    j["nested_set_ok"] = c.nested_report.ok();
    if (!c.nested_report.failures.empty()) j["nested_set_failures"] = c.nested_report.failures;
    j["canonical"] = c.canonical.canonical;
    return j;
}

int cmd_canonical_td(const Options& o) {
    const auto g = input_graph(o);
    const auto c = ct::canonical_td(g, construct_options(o));
    json rep = new_report("canonical-td");
    rep.update(canonical_fields(g, c));
    rep["beta"] = beta_variant(o);
    export_td(o, g, c.td);
    return finish(o, rep, c.ok());
}

int cmd_maximal_td(const Options& o) {
    const auto g = input_graph(o);
    ct::OrbitOrder order;
    if (o.orbit_order == "canonical") order = ct::OrbitOrder::Canonical;
    else if (o.orbit_order == "input") order = ct::OrbitOrder::Input;
    else ct::fail(ct::ErrorCode::InvalidInput, "--orbit-order must be 'canonical' or 'input'");
    const auto c = ct::canonical_td(g, construct_options(o));
    if (!c.ok()) ct::fail(ct::ErrorCode::InternalInvariant, "canonical decomposition failed its own checks");
    json rep = new_report("maximal-td");
    rep["orbit_order"] = o.orbit_order;
    rep["beta"] = beta_variant(o);
    try {
        const auto td = ct::contract_to_maximal(g, c.td, ct::td_edge_orbits(c.td, c.aut), order);
        const auto cls = ct::classify_td(g, td);
        const bool canonical = ct::verify_canonical_td(td, c.aut).canonical;
        rep["nodes"] = td.size();
        rep["td"] = td_summary(g, td);
        rep["valid"] = ct::verify_td(g, td).ok();
        rep["into_maximal_cliques"] = cls.into_maximal_cliques;
        rep["canonical"] = canonical;
        export_td(o, g, td);
        return finish(o, rep, cls.into_maximal_cliques);
    } catch (const ct::Error& e) {
        if (e.code() != ct::ErrorCode::OrbitNotMatching) throw;
        rep["into_maximal_cliques"] = false;
        rep["witness"] = e.what();
        return finish(o, rep, false);
    }
}

int cmd_local_chordal(const Options& o) {
    const auto g = input_graph(o);
    const auto res = ct::is_r_locally_chordal(g, o.r);
    json rep = new_report("local-chordal");
    rep["r"] = o.r;
    rep["ball_convention"] = kBallConvention;
    rep["locally_chordal"] = res.holds;
    if (!res.holds) {
        rep["center"] = g.name(*res.center);
        rep["hole"] = names(g, res.hole);
    }
    return finish(o, rep, res.holds);
}

ct::VoltagePresentation input_presentation(const Options& o) {
    if (o.voltage.empty()) ct::fail(ct::ErrorCode::InvalidInput, "--voltage is required");
    auto pres = ct::io::read_presentation(o.voltage);
    if (!o.in.empty() && !(ct::io::read_graph(o.in) == pres.base))
        ct::fail(ct::ErrorCode::InvalidInput, "--in graph differs from the presentation's base graph");
    return pres;
}

json gd_fields(const ct::Graph& g, const ct::GraphDecomposition& gd, const ct::GdReport& r) {
    json j;
    j["model_nodes"] = gd.size();
    j["model_edges"] = gd.model.num_edges();
    j["decomposition"] = ct::io::to_json(g, gd);
    j["H1"] = r.covers;
    j["H2"] = r.connected;
    j["into_cliques"] = r.into_cliques;
    j["into_maximal_cliques"] = r.into_maximal_cliques;
    if (r.uncovered_vertex) j["uncovered_vertex"] = g.name(*r.uncovered_vertex);
    if (r.uncovered_edge) j["uncovered_edge"] = {g.name(r.uncovered_edge->first), g.name(r.uncovered_edge->second)};
    if (r.disconnected_vertex) j["disconnected_vertex"] = g.name(*r.disconnected_vertex);
    return j;
}

int cmd_fold(const Options& o) {
    const auto pres = input_presentation(o);
    ct::PeriodicOptions popt;
    popt.margin = o.margin;
    popt.jobs = o.jobs;
    const auto pn = ct::periodic_N(pres, o.L, popt);
    const auto td = ct::build_td_from_nested(pn.window.graph, pn.levels.all);
    const auto window_cls = ct::classify_td(pn.window.graph, td);
    const auto folded = ct::fold(pn.window, td, o.margin);
    const auto r = ct::verify_graph_decomposition(pres.base, folded.gd);
    json rep = new_report("fold");
    rep["L"] = o.L;
    rep["margin"] = o.margin;
    rep["window_vertices"] = pn.window.graph.order();
    rep["orbit_representatives"] = pn.representatives.size();
    rep["stable"] = pn.stable;
    rep["window_td_into_cliques"] = window_cls.into_cliques;
    rep.update(gd_fields(pres.base, folded.gd, r));
    rep["into_cliques_equivalence"] = window_cls.into_cliques == r.into_cliques;
    export_gd(o, pres.base, folded.gd);
    return finish(o, rep, r.ok() && pn.stable);
}

int cmd_local_fold(const Options& o) {
    const auto pres = input_presentation(o);
    ct::PeriodicOptions popt;
    popt.margin = o.margin;
    popt.jobs = o.jobs;
    const auto lf = ct::theorem3_pipeline(pres.base, o.r, pres, o.L, popt);
    const auto& g = pres.base;
    json rep = new_report("local-fold");
    rep["r"] = o.r;
    rep["L"] = o.L;
    rep["ball_convention"] = kBallConvention;
    rep["locally_chordal"] = lf.local.holds;
    if (!lf.local.holds) {
        rep["center"] = g.name(*lf.local.center);
        rep["hole"] = names(g, lf.local.hole);
    }
    rep["cover_verified"] = lf.cover.ok();
    rep["window_chordal"] = lf.window_chordal;
    rep["folded"] = lf.folded;
    rep["window_td_into_cliques"] = lf.window_td_into_cliques;
    rep["into_cliques"] = lf.into_cliques;
    if (lf.gd) rep.update(gd_fields(g, *lf.gd, *lf.gd_report));
    rep["consistent"] = lf.consistent;
    if (lf.gd) export_gd(o, g, *lf.gd);
    return finish(o, rep, lf.consistent);
}

int cmd_verify_cover(const Options& o) {
    const auto pres = input_presentation(o);
    const auto rep_c = ct::verify_cover(pres, o.r, o.L);
    json rep = new_report("verify-cover");
    rep["r"] = o.r;
    rep["L"] = o.L;
    rep["ball_convention"] = kBallConvention;
    rep["rank"] = pres.rank();
    rep["local_bijection"] = rep_c.local_bijection;
    rep["ball_preserved"] = rep_c.ball_preserved;
    rep["free_on_cliques"] = rep_c.free_on_cliques;
    rep["fibers_far"] = rep_c.fibers_far;
    rep["centers_checked"] = rep_c.centers_checked;
    rep["cliques_checked"] = rep_c.cliques_checked;
    const auto w = ct::derive_window(pres, o.L);
    if (rep_c.ball_witness) rep["ball_witness"] = w.graph.name(*rep_c.ball_witness);
    if (rep_c.fiber_witness) rep["fiber_witness"] = w.graph.name(*rep_c.fiber_witness);
    return finish(o, rep, rep_c.ok());
}

int cmd_verify_td(const Options& o) {
    const auto g = input_graph(o);
    if (o.td_file.empty()) ct::fail(ct::ErrorCode::InvalidInput, "--td is required");
    const auto td = ct::io::td_from_json(g, embedded(o.td_file, "td"));
    const auto r = ct::verify_td(g, td);
    json rep = new_report("verify-td");
    rep["nodes"] = td.size();
    rep["T1"] = r.covers;
    rep["T2"] = r.connected;
    if (r.uncovered_vertex) rep["uncovered_vertex"] = g.name(*r.uncovered_vertex);
    if (r.uncovered_edge) rep["uncovered_edge"] = {g.name(r.uncovered_edge->first), g.name(r.uncovered_edge->second)};
    if (r.disconnected_vertex) rep["disconnected_vertex"] = g.name(*r.disconnected_vertex);
    if (r.ok()) {
        const auto cls = ct::classify_td(g, td);
        rep["regular"] = cls.regular;
        rep["into_cliques"] = cls.into_cliques;
        rep["into_maximal_cliques"] = cls.into_maximal_cliques;
        rep["canonical"] = ct::verify_canonical_td(td, ct::automorphism_generators(g)).canonical;
    }
    rep["valid"] = r.ok();
    return finish(o, rep, r.ok());
}

ct::GraphDecomposition input_gd(const Options& o, const ct::Graph& g) {
    if (o.gd_file.empty()) ct::fail(ct::ErrorCode::InvalidInput, "--gd is required");
    return ct::io::gd_from_json(g, embedded(o.gd_file, "decomposition"));
}

int cmd_verify_gd(const Options& o) {
    const auto g = input_graph(o);
    const auto gd = input_gd(o, g);
    const auto r = ct::verify_graph_decomposition(g, gd);
    json rep = new_report("verify-gd");
    auto fields = gd_fields(g, gd, r);
    fields.erase("decomposition");
    rep.update(fields);
    rep["valid"] = r.ok();
    return finish(o, rep, r.ok());
}

int cmd_r_acyclic(const Options& o) {
    const auto g = input_graph(o);
    const auto gd = input_gd(o, g);
    ct::RAcyclicOptions opt;
    opt.budget = o.budget;
    opt.require_exhaustive = o.exhaustive;
    opt.seed = o.seed;
    const auto res = ct::r_acyclic_check(g, gd, o.r, opt);
    json rep = new_report("r-acyclic");
    rep["r"] = o.r;
    rep["seed"] = o.seed;
    rep["exhaustive"] = res.exhaustive;
    rep["sets_checked"] = res.sets_checked;
    rep["acyclic"] = res.acyclic;
    if (res.witness) {
        rep["witness_vertices"] = names(g, res.witness->vertices);
        rep["witness_cycle"] = res.witness->cycle;
    }
    return finish(o, rep, res.acyclic);
}

int cmd_reproduce(const Options& o) {
    if (o.example != "example-5.1") ct::fail(ct::ErrorCode::InvalidInput, "unknown example '" + o.example + "' (available: example-5.1)");
    const auto r = ct::reproduce_example_51(o.t);
    json rep = new_report("reproduce");
    const bool none = r.canonical == 0;
    std::ostringstream summary;
    if (none)
        summary << "no canonical tree-decomposition into maximal cliques exists (" << r.trees << " candidate trees, 0 canonical)";
    else
        summary << r.canonical << " canonical tree-decompositions into maximal cliques found (" << r.trees << " candidate trees)";
    rep["summary"] = summary.str();
    rep["t"] = r.t;
    rep["candidate_trees"] = r.trees;
    rep["valid"] = r.valid;
    rep["canonical"] = r.canonical;
    rep["centre_bag_canonical"] = r.star_canonical;
    rep["centre_bag_into_cliques"] = r.star_into_cliques;
    rep["centre_bag_into_maximal_cliques"] = r.star_into_maximal_cliques;
    return finish(o, rep, true);
}

int cmd_gen(const Options& o) {
    namespace in = ct::instances;
    ct::Graph g;
    if (o.kind == "star") g = in::star(o.t);
    else if (o.kind == "path") g = in::path(o.n);
    else if (o.kind == "cycle") g = in::cycle(o.n);
    else if (o.kind == "complete") g = in::complete(o.n);
    else if (o.kind == "ktree") g = in::ktree(o.n, o.k, o.seed);
    else if (o.kind == "random_chordal") g = in::random_chordal(o.n, o.seed);
    else if (o.kind == "random") g = in::random_graph(o.n, o.p, o.seed);
    else if (o.kind == "two_triangles") g = in::two_triangles();
    else if (o.kind == "wheel") g = in::wheel(o.n);
    else if (o.kind == "file") g = input_graph(o);
    else ct::fail(ct::ErrorCode::InvalidInput, "unknown instance kind '" + o.kind + "'");
    if (!o.dot.empty()) write_file(o.dot, ct::io::to_dot(g));
    if (!o.graphml.empty()) write_file(o.graphml, ct::io::to_graphml(g));
    const std::string text = ct::io::to_json(g).dump(2) + "\n";
    if (!o.out.empty()) write_file(o.out, text);
    else std::cout << text;
    std::cerr << "seed: " << o.seed << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"chordtd: decompositions of chordal graphs into cliques"};
    app.require_subcommand(1);
    Options o;

    auto json_flag = [&](CLI::App* c) { c->add_flag("--json", o.as_json, "Print a JSON report"); };
    auto in_opt = [&](CLI::App* c, bool required) {
        auto* opt = c->add_option("--in", o.in, "Graph JSON file");
        if (required) opt->required();
    };
    auto exports = [&](CLI::App* c) {
        c->add_option("--dot", o.dot, "Write a DOT rendering");
        c->add_option("--graphml", o.graphml, "Write a GraphML rendering");
        c->add_option("--out", o.out, "Write the decomposition as JSON");
    };
    auto construct = [&](CLI::App* c) {
        c->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
        c->add_flag("--beta-include-nontight", o.include_nontight, "Keep non-tight bottleneck separations");
    };

    auto* check = app.add_subcommand("check-chordal", "Chordality test with a hole as witness");
    in_opt(check, true);
    json_flag(check);

    auto* cliques = app.add_subcommand("max-cliques", "List the maximal cliques");
    in_opt(cliques, true);
    json_flag(cliques);

    auto* canon = app.add_subcommand("canonical-td", "Canonical tree-decomposition into cliques");
    in_opt(canon, true);
    json_flag(canon);
    exports(canon);
    construct(canon);

    auto* maximal = app.add_subcommand("maximal-td", "Contract the canonical decomposition to maximal cliques");
    in_opt(maximal, true);
    json_flag(maximal);
    exports(maximal);
    construct(maximal);
    maximal->add_option("--orbit-order", o.orbit_order, "Orbit processing order")->check(CLI::IsMember({"canonical", "input"}));

    auto* local = app.add_subcommand("local-chordal", "Chordality of every ball of radius r/2");
    in_opt(local, true);
    json_flag(local);
    local->add_option("-r", o.r, "Locality radius")->required()->check(CLI::NonNegativeNumber);

    auto* fold = app.add_subcommand("fold", "Fold the canonical decomposition of a cover window");
    in_opt(fold, false);
    fold->add_option("--voltage", o.voltage, "Voltage presentation JSON")->required();
    fold->add_option("-L", o.L, "Window radius in word length")->check(CLI::NonNegativeNumber);
    fold->add_option("--margin", o.margin, "Trusted margin below L")->check(CLI::NonNegativeNumber);
    fold->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    json_flag(fold);
    exports(fold);

    auto* lf = app.add_subcommand("local-fold", "Local chordality against the folded decomposition");
    in_opt(lf, false);
    lf->add_option("--voltage", o.voltage, "Voltage presentation JSON")->required();
    lf->add_option("-r", o.r, "Locality radius")->check(CLI::NonNegativeNumber);
    lf->add_option("-L", o.L, "Window radius in word length")->check(CLI::NonNegativeNumber);
    lf->add_option("--margin", o.margin, "Trusted margin below L")->check(CLI::NonNegativeNumber);
    lf->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    json_flag(lf);
    exports(lf);

    auto* vcover = app.add_subcommand("verify-cover", "Check a voltage presentation on a window");
    in_opt(vcover, false);
    vcover->add_option("--voltage", o.voltage, "Voltage presentation JSON")->required();
    vcover->add_option("-r", o.r, "Locality radius")->check(CLI::NonNegativeNumber);
    vcover->add_option("-L", o.L, "Window radius in word length")->check(CLI::NonNegativeNumber);
    json_flag(vcover);

    auto* vtd = app.add_subcommand("verify-td", "Check a tree-decomposition");
    in_opt(vtd, true);
    vtd->add_option("--td", o.td_file, "Tree-decomposition JSON")->required();
    json_flag(vtd);

    auto* vgd = app.add_subcommand("verify-gd", "Check a graph-decomposition");
    in_opt(vgd, true);
    vgd->add_option("--gd", o.gd_file, "Graph-decomposition JSON")->required();
    json_flag(vgd);

    auto* racyc = app.add_subcommand("r-acyclic", "Check that unions of r coparts are forests");
    in_opt(racyc, true);
    racyc->add_option("--gd", o.gd_file, "Graph-decomposition JSON")->required();
    racyc->add_option("-r", o.r, "Number of coparts")->required()->check(CLI::NonNegativeNumber);
    racyc->add_option("--budget", o.budget, "Maximum number of vertex sets examined");
    racyc->add_flag("--exhaustive", o.exhaustive, "Fail instead of sampling when over budget");
    racyc->add_option("--seed", o.seed, "Sampling seed");
    json_flag(racyc);

    auto* repro = app.add_subcommand("reproduce", "Reproduce a worked example");
    repro->add_option("example", o.example, "Example name (example-5.1)")->required();
    repro->add_option("-t", o.t, "Number of leaves")->required();
    json_flag(repro);

    auto* gen = app.add_subcommand("gen", "Generate an instance graph as JSON");
    gen->add_option("kind", o.kind, "star|path|cycle|complete|ktree|random_chordal|random|two_triangles|wheel|file")->required();
    gen->add_option("-n", o.n, "Number of vertices (rim size for wheel)");
    gen->add_option("-k", o.k, "Clique width for ktree");
    gen->add_option("-t", o.t, "Leaves for star");
    gen->add_option("-p", o.p, "Edge probability for random")->check(CLI::Range(0.0, 1.0));
    gen->add_option("--seed", o.seed, "Random seed");
    gen->add_option("--in", o.in, "Graph JSON file for kind 'file'");
    gen->add_option("--dot", o.dot, "Write a DOT rendering");
    gen->add_option("--graphml", o.graphml, "Write a GraphML rendering");
    gen->add_option("--out", o.out, "Write the JSON here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*check) return cmd_check_chordal(o);
        if (*cliques) return cmd_max_cliques(o);
        if (*canon) return cmd_canonical_td(o);
        if (*maximal) return cmd_maximal_td(o);
        if (*local) return cmd_local_chordal(o);
        if (*fold) return cmd_fold(o);
        if (*lf) return cmd_local_fold(o);
        if (*vcover) return cmd_verify_cover(o);
        if (*vtd) return cmd_verify_td(o);
        if (*vgd) return cmd_verify_gd(o);
        if (*racyc) return cmd_r_acyclic(o);
        if (*repro) return cmd_reproduce(o);
        if (*gen) return cmd_gen(o);
    } catch (const ct::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
