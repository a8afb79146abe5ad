#ifndef TREESPAN_SPANNING_TREE_HPP
#define TREESPAN_SPANNING_TREE_HPP

#include "treespan/graph.hpp"

namespace treespan {

/// Spanning tree of a host graph, rooted at vertex 0 for distance queries.
/// The host must outlive the tree. Immutable after construction.
class SpanningTree {
public:
    /// Validates the three invariants: n-1 edges, every edge in the host,
    /// connected (hence acyclic).
    SpanningTree(const Graph& host, std::vector<Edge> edges);

    const Graph& host() const { return *host_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool contains(const Edge& e) const;
    std::span<const Vertex> neighbors(Vertex v) const;
    int degree(Vertex v) const;

    /// d_T(u, v): length of the unique tree path.
    int distance(Vertex u, Vertex v) const;

private:
    const Graph* host_;
    std::vector<Edge> edges_;  // sorted
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<Vertex> parent_;
    std::vector<int> depth_;
};

/// Max over host edges uv of d_T(u, v); 1 iff the host is itself a tree.
int stretch(const SpanningTree& t);

int tree_diameter(const SpanningTree& t);

/// Cycle closed by a cotree edge, as a vertex sequence starting at the
/// smaller endpoint of e and following the tree path to the other.
std::vector<Vertex> fundamental_cycle(const SpanningTree& t, const Edge& e);

/// All host edges crossing the two components of T - e, for a tree edge e.
std::vector<Edge> fundamental_cut(const SpanningTree& t, const Edge& e);

/// Star-set {v} u N_T(v) of a non-pendant vertex v. A contact is a member
/// other than v that is itself non-pendant in T. Outer: at most one contact;
/// inner: two or more.
struct StarSet {
    Vertex center = 0;
    VertexSet members;
    VertexSet contacts;

    bool outer() const { return contacts.size() <= 1; }
    bool inner() const { return contacts.size() >= 2; }
};

/// One star-set per non-pendant vertex, in ascending center order.
std::vector<StarSet> star_sets(const SpanningTree& t);

/// Vertex sets of the subtrees of T - S.members, sorted by smallest member.
std::vector<VertexSet> s_branches(const SpanningTree& t, const StarSet& s);

}  // namespace treespan

#endif
