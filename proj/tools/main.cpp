#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "treespan/generators.hpp"
#include "treespan/io.hpp"
#include "treespan/oracle.hpp"
#include "treespan/recognizer.hpp"
#include "treespan/verifier.hpp"

using nlohmann::json;
using namespace treespan;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitUnknown = 3;

json edges_to_json(const Graph& g, const std::vector<Edge>& edges) {
    json out = json::array();
    for (const Edge& e : edges) out.push_back({g.label(e.u), g.label(e.v)});
    return out;
}

json input_summary(const Graph& g) {
    json j;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    auto gi = girth(g);
    j["girth"] = gi ? json(*gi) : json(nullptr);
    j["blocks"] = is_connected(g) ? json(blocks(g).size()) : json(nullptr);
    return j;
}

json base_report(const Graph& g, int k) {
    json j;
    j["answer"] = nullptr;
    j["k"] = k;
    j["sigma_lower"] = nullptr;
    j["sigma_upper"] = nullptr;
    j["tree"] = nullptr;
    j["witness"] = nullptr;
    j["counters"] = {{"eta", 0}, {"oracle_nodes", 0}};
    j["wall_ms"] = 0.0;
    j["input"] = input_summary(g);
    return j;
}

json trace_to_json(const Graph& g, const RecognitionTrace& trace) {
    auto label = [&](Vertex v) { return v < 0 ? json(nullptr) : json(g.label(v)); };
    json nodes = json::array();
    for (const TraceNode& n : trace.nodes) {
        json verts = json::array();
        for (Vertex v : n.vertices) verts.push_back(g.label(v));
        nodes.push_back({{"id", n.id},
                         {"parent", n.parent},
                         {"level", n.level},
                         {"vertices", verts},
                         {"status", n.status},
                         {"cut_center", label(n.cut_center)}});
    }
    json attempts = json::array();
    for (const CfeAttemptRecord& a : trace.cfe_attempts) {
        json units = json::array();
        for (const CfeAttemptUnit& u : a.units) {
            json edges = json::array();
            for (const Edge& e : u.edges) edges.push_back({g.label(e.u), g.label(e.v)});
            units.push_back({{"owner", u.owner},
                             {"anchor", u.anchor ? label(*u.anchor) : json(nullptr)},
                             {"fixed_edges", edges}});
        }
        attempts.push_back({{"node", a.node_id},
                            {"cut_center", label(a.center)},
                            {"units", units},
                            {"success", a.success},
                            {"reason", a.reason}});
    }
    json reductions = json::array();
    for (const ReductionRecord& r : trace.reductions) {
        json removed = json::array();
        for (Vertex v : r.removed) removed.push_back(g.label(v));
        reductions.push_back({{"node", r.node_id},
                              {"cut_center", label(r.center)},
                              {"attachment", label(r.attachment)},
                              {"removed", removed}});
    }
    return json{{"nodes", nodes},
                {"cfe_attempts", attempts},
                {"reductions", reductions},
                {"counters",
                 {{"eta", trace.eta},
                  {"ics_calls", trace.ics_calls},
                  {"cfe_calls", trace.cfe_calls}}},
                {"flags", trace.flags}};
}

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start)
        .count();
}

int run_gen(const std::string& name, const std::vector<int>& params,
            const std::string& out_path) {
    Graph g = generate(NamedGraphSpec{name, params});
    if (out_path.empty())
        write_edge_list(g, std::cout);
    else
        write_graph(g, out_path);
    return kExitOk;
}

int run_info(const std::string& path) {
    Graph g = read_graph(path);
    std::cout << "vertices: " << g.vertex_count() << "\n";
    std::cout << "edges: " << g.edge_count() << "\n";
    auto gi = girth(g);
    std::cout << "girth: " << (gi ? std::to_string(*gi) : "infinity") << "\n";
    if (!is_connected(g)) {
        std::cout << "connected: no\n";
        return kExitOk;
    }
    std::cout << "connected: yes\n";
    std::cout << "blocks: " << blocks(g).size() << "\n";
    std::cout << "biconnected: " << (is_biconnected(g) ? "yes" : "no") << "\n";
    std::cout << "neighbor cuts:";
    for (const auto& cut : find_neighbor_cuts(g)) std::cout << ' ' << g.label(cut.center);
    std::cout << "\n";
    return kExitOk;
}

int run_stretch(const std::string& graph_path, const std::string& tree_path) {
    Graph g = read_graph(graph_path);
    SpanningTree t = read_tree(tree_path, g);
    std::cout << stretch(t) << "\n";
    return kExitOk;
}

int run_verify(const std::string& graph_path, const std::string& tree_path,
               const std::string& condition) {
    Graph g = read_graph(graph_path);
    SpanningTree t = read_tree(tree_path, g);
    if (condition == "stretch2" || condition == "stretch3") {
        int limit = condition == "stretch2" ? 2 : 3;
        int s = stretch(t);
        std::cout << (s <= limit ? "yes" : "no") << " (stretch " << s << ")\n";
        return kExitOk;
    }
    ConditionReport report =
        condition == "thm31" ? check_theorem_31(g, t) : check_theorem_32(g, t);
    if (report.holds) {
        std::cout << "holds\n";
    } else {
        std::cout << "violated: " << report.violated_at->reason;
        if (report.violated_at->inner_edge)
            std::cout << " at edge " << g.label(report.violated_at->inner_edge->u) << "-"
                      << g.label(report.violated_at->inner_edge->v);
        if (report.violated_at->star_center)
            std::cout << " at star-set of " << g.label(*report.violated_at->star_center);
        std::cout << "\n";
    }
    return kExitOk;
}

int run_recognize(const std::string& graph_path, int k, const std::string& emit_tree,
                  const std::string& trace_path, bool as_json) {
    Graph g = read_graph(graph_path);
    auto start = std::chrono::steady_clock::now();
    RecognitionTrace trace;
    RecognitionOutcome outcome =
        k == 2 ? recognize_sigma2(g) : recognize_sigma3(g, &trace);
    double wall = ms_since(start);

    json report = base_report(g, k);
    report["answer"] = outcome.admits ? "yes" : "no";
    report["wall_ms"] = wall;
    report["counters"]["eta"] = trace.eta;
    auto gi = girth(g);
    if (outcome.admits) {
        int s = g.edge_count() > 0 ? stretch(*outcome.certificate) : 1;
        report["sigma_lower"] = gi ? std::max(1, *gi - 1) : 1;
        report["sigma_upper"] = s;
        report["tree"] = edges_to_json(g, outcome.certificate->edges());
    } else {
        report["sigma_lower"] = k + 1;
        report["witness"] = outcome.witness;
    }

    if (!emit_tree.empty() && outcome.admits) write_tree(*outcome.certificate, emit_tree);
    if (!trace_path.empty()) {
        std::ofstream out(trace_path);
        if (!out) throw std::runtime_error("cannot write file: " + trace_path);
        out << trace_to_json(g, trace).dump(2) << "\n";
    }

    if (as_json) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << (outcome.admits ? "yes" : "no") << "\n";
        if (!outcome.admits) std::cout << "witness: " << outcome.witness << "\n";
    }
    return kExitOk;
}

int run_oracle(const std::string& graph_path, std::optional<int> k, long long max_nodes,
               double time_limit, bool as_json) {
    Graph g = read_graph(graph_path);
    OracleBudget budget;
    budget.max_nodes = max_nodes;
    budget.time_limit_seconds = time_limit;
    auto start = std::chrono::steady_clock::now();
    json report = base_report(g, k ? *k : 0);
    auto gi = girth(g);
    int exit_code = kExitOk;

    if (k) {
        SigmaDecision d = decide_sigma_le(g, *k, budget);
        report["wall_ms"] = ms_since(start);
        report["counters"]["oracle_nodes"] = d.run.nodes;
        switch (d.answer) {
            case Answer::yes:
                report["answer"] = "yes";
                report["sigma_upper"] = *k;
                report["tree"] = edges_to_json(g, *d.tree);
                break;
            case Answer::no:
                report["answer"] = "no";
                report["sigma_lower"] = *k + 1;
                break;
            case Answer::unknown:
                report["answer"] = "unknown";
                exit_code = kExitUnknown;
                break;
        }
    } else {
        ExactSigmaResult r = exact_sigma(g, budget);
        report["wall_ms"] = ms_since(start);
        report["counters"]["oracle_nodes"] = r.run.nodes;
        if (r.sigma) {
            report["answer"] = "exact";
            report["sigma_lower"] = *r.sigma;
            report["sigma_upper"] = *r.sigma;
            report["tree"] = edges_to_json(g, *r.tree);
        } else {
            report["answer"] = "unknown";
            if (gi) report["sigma_lower"] = *gi - 1;
            exit_code = kExitUnknown;
        }
    }

    if (as_json) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << report["answer"].get<std::string>();
        if (!k && exit_code == kExitOk)
            std::cout << " sigma=" << report["sigma_upper"].get<int>();
        std::cout << "\n";
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tree 3-spanner recognition toolkit"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "generate a named graph");
    std::string gen_name, gen_out;
    std::vector<int> gen_params;
    gen->add_option("name", gen_name, "one of: petersen fig4 fig5 cycle complete "
                                      "complete_bipartite path two_blocks_demo")
        ->required();
    gen->add_option("params", gen_params, "integer parameters");
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    auto* info = app.add_subcommand("info", "basic facts about a graph file");
    std::string info_path;
    info->add_option("graph", info_path, "edge-list file")->required();

    auto* stretch_cmd = app.add_subcommand("stretch", "max-stretch of a tree");
    std::string st_graph, st_tree;
    stretch_cmd->add_option("graph", st_graph)->required();
    stretch_cmd->add_option("tree", st_tree)->required();

    auto* verify = app.add_subcommand("verify", "check a tree condition");
    std::string vf_graph, vf_tree, vf_condition;
    verify->add_option("graph", vf_graph)->required();
    verify->add_option("tree", vf_tree)->required();
    verify->add_option("--condition", vf_condition, "thm31 | thm32 | stretch2 | stretch3")
        ->required()
        ->check(CLI::IsMember({"thm31", "thm32", "stretch2", "stretch3"}));

    auto* recognize = app.add_subcommand("recognize", "decide sigma(G) <= k");
    std::string rc_graph, rc_emit, rc_trace;
    int rc_k = 3;
    bool rc_json = false;
    recognize->add_option("graph", rc_graph)->required();
    recognize->add_option("--k", rc_k)->check(CLI::IsMember({2, 3}));
    recognize->add_option("--emit-tree", rc_emit, "write the certificate tree");
    recognize->add_option("--trace", rc_trace, "write the decomposition trace (JSON)");
    recognize->add_flag("--json", rc_json, "machine-readable report");

    auto* oracle = app.add_subcommand("oracle", "exhaustive ground truth");
    std::string or_graph;
    int or_k = -1;
    long long or_nodes = 10'000'000;
    double or_time = 60.0;
    bool or_json = false;
    oracle->add_option("graph", or_graph)->required();
    oracle->add_option("--k", or_k, "decide sigma <= k instead of exact sigma");
    oracle->add_option("--max-nodes", or_nodes, "search node budget");
    oracle->add_option("--time-limit", or_time, "wall-clock budget in seconds");
    oracle->add_flag("--json", or_json, "machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) return run_gen(gen_name, gen_params, gen_out);
        if (info->parsed()) return run_info(info_path);
        if (stretch_cmd->parsed()) return run_stretch(st_graph, st_tree);
        if (verify->parsed()) return run_verify(vf_graph, vf_tree, vf_condition);
        if (recognize->parsed())
            return run_recognize(rc_graph, rc_k, rc_emit, rc_trace, rc_json);
        if (oracle->parsed())
            return run_oracle(or_graph, or_k < 0 ? std::nullopt : std::optional<int>(or_k),
                              or_nodes, or_time, or_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
