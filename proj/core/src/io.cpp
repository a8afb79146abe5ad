#include "treespan/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace treespan {

std::vector<std::pair<std::string, std::string>> parse_edge_list(std::istream& in) {
    std::vector<std::pair<std::string, std::string>> pairs;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::istringstream row(line);
        std::string a, b, extra;
        if (!(row >> a >> b) || (row >> extra))
            throw std::runtime_error("malformed edge list at line " +
                                     std::to_string(line_no));
        pairs.emplace_back(std::move(a), std::move(b));
    }
    return pairs;
}

Graph read_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    return Graph::from_edge_list(parse_edge_list(in));
}

void write_edge_list(const Graph& g, std::ostream& out) {
    for (const Edge& e : g.edges())
        out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
}

void write_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    write_edge_list(g, out);
}

SpanningTree read_tree(const std::string& path, const Graph& host) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::vector<Edge> edges;
    for (const auto& [a, b] : parse_edge_list(in)) {
        auto u = host.vertex_by_label(a);
        auto v = host.vertex_by_label(b);
        if (!u || !v)
            throw std::runtime_error("tree/graph mismatch: unknown vertex label " +
                                     (u ? b : a));
        edges.emplace_back(*u, *v);
    }
    return SpanningTree(host, std::move(edges));
}

void write_tree(const SpanningTree& t, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    const Graph& g = t.host();
    for (const Edge& e : t.edges()) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
}

std::string export_dot(const Graph& g, const SpanningTree* highlight) {
    if (highlight && &highlight->host() != &g)
        throw std::invalid_argument("highlight tree does not span the graph");
    std::ostringstream out;
    out << "graph {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        out << "  \"" << g.label(v) << "\";\n";
    for (const Edge& e : g.edges()) {
        out << "  \"" << g.label(e.u) << "\" -- \"" << g.label(e.v) << "\"";
        if (highlight && highlight->contains(e)) out << " [style=bold]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace treespan
