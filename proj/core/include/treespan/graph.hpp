#ifndef TREESPAN_GRAPH_HPP
#define TREESPAN_GRAPH_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace treespan {

using Vertex = int;

/// Unordered edge; always stored with the smaller endpoint first.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted sequence of distinct vertex indices.
using VertexSet = std::vector<Vertex>;

/// Immutable simple undirected graph over dense 0-based vertex indices.
/// Adjacency lists are kept sorted, so every traversal is deterministic.
/// Instances never mutate after construction and are safe to share.
class Graph {
public:
    Graph() = default;
    Graph(int vertex_count, const std::vector<Edge>& edges,
          std::vector<std::string> labels = {});

    /// Builds a graph from labelled edges; labels are mapped to dense
    /// indices in order of first appearance. Rejects self-loops,
    /// deduplicates parallel edges.
    static Graph from_edge_list(
        const std::vector<std::pair<std::string, std::string>>& pairs);

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const;
    int degree(Vertex v) const;
    bool has_edge(Vertex u, Vertex v) const;

    bool has_vertex_labels() const { return !labels_.empty(); }
    std::string label(Vertex v) const;
    std::optional<Vertex> vertex_by_label(const std::string& name) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.adjacency_.size() == b.adjacency_.size() && a.edges_ == b.edges_;
    }

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<Edge> edges_;          // sorted, deduplicated
    std::vector<std::string> labels_;  // empty => decimal indices
};

/// Induced subgraph plus the mapping back to the host graph.
/// Local vertex i corresponds to host vertex to_host[i].
struct Subgraph {
    Graph graph;
    std::vector<Vertex> to_host;

    Vertex host_vertex(Vertex local) const { return to_host[local]; }
    Edge host_edge(const Edge& local) const {
        return Edge(to_host[local.u], to_host[local.v]);
    }
};

VertexSet closed_neighborhood(const Graph& g, Vertex v);

/// Connected components of g - removed, sorted by smallest member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed = {});

/// True iff g - s has at least two components. Throws "empty remainder"
/// when s covers every vertex.
bool is_vertex_cut(const Graph& g, const VertexSet& s);

bool is_connected(const Graph& g);
bool is_biconnected(const Graph& g);

/// Biconnected components via the DFS lowpoint method. Every edge lands in
/// exactly one block; cut vertices appear in several. Requires connectivity.
std::vector<Subgraph> blocks(const Graph& g);

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

Subgraph induced_subgraph(const Graph& g, const VertexSet& s);

}  // namespace treespan

#endif
