#ifndef TREESPAN_RECOGNIZER_HPP
#define TREESPAN_RECOGNIZER_HPP

#include <optional>
#include <string>

#include "treespan/ics.hpp"
#include "treespan/spanning_tree.hpp"
#include "treespan/verifier.hpp"

namespace treespan {

/// Closed neighborhood X = N[v] that disconnects the graph, together with
/// the component vertex sets of g - X and the induced X-components
/// G[X u V_i].
struct NeighborCutDecomposition {
    Vertex center = -1;
    VertexSet x;
    std::vector<VertexSet> parts;        // >= 2 entries, sorted by min member
    std::vector<Subgraph> x_components;  // one per part, each contains all of x
};

/// Double-star test: a spanning tree of diameter <= 3 rooted on a dominating
/// edge, or nothing. Edges are tried in sorted order; uncovered vertices are
/// visited in index order and attach to the smaller endpoint when possible.
std::optional<SpanningTree> basic_procedure(const Graph& g);

/// All neighbor cuts of g in ascending center order.
std::vector<NeighborCutDecomposition> find_neighbor_cuts(const Graph& g);

/// When the cut splits g into exactly two sides and one side hangs entirely
/// off a single neighbor u of the center (so that side has a double-star
/// tree: the spanning star of G[X] at the center plus the star of that side
/// at u), the decision reduces to the other side. Returns g with the covered
/// side deleted, or nullopt when no side matches.
std::optional<Graph> apply_reduction(const Graph& g, const NeighborCutDecomposition& cut);

/// The part of a child tree inside G[X] that its outside portion cannot do
/// without: either a single connecting vertex (anchor) or a minimal edge set
/// within G[X] - v joining the outside pieces. `support_edges` is the child
/// subtree realizing the unit's internal distances (the outside part plus the
/// fixed edges); `vertices` are the X-side vertices of the unit.
struct FixedSubtree {
    int owner_index = -1;
    std::vector<Edge> edges;       // fixed edges, sorted; empty for anchors
    std::optional<Vertex> anchor;  // set when edges is empty and one attachment
    VertexSet vertices;
    VertexSet attachments;         // X-vertices incident to outside tree edges
    std::vector<Edge> support_edges;
};

/// Extracts the fixed subtree of t_i relative to the cut x centered at v.
/// Throws "disconnected-fixed-subtree" when the outside portion of t_i spans
/// several branches at v, so no connector inside G[X] - v exists.
FixedSubtree fixed_subtree(const Graph& g_i, const SpanningTree& t_i,
                           const VertexSet& x, Vertex v);

struct CfeSolution {
    std::vector<Vertex> contacts;  // one per subtree, -1 for constraint-free units
    bool used_ics = false;
};

/// Consistency of the fixed subtrees: one contact vertex per subtree so that
/// vertices hanging deeper than the contacts stay nonadjacent across units.
/// Units of radius three or more fail outright; radius-two units put the
/// contact at their center; multi-edge stars force the center; single fixed
/// edges go through the independent-cover solver. `remainder_forbidden[w]`
/// bans host vertex w from any non-contact position. On failure, `fail_reason`
/// (when given) receives "radius", "ics", "conflict" or "choices".
std::optional<CfeSolution> solve_cfe(const Graph& g, const VertexSet& x, Vertex v,
                                     const std::vector<FixedSubtree>& subtrees,
                                     const std::vector<char>& remainder_forbidden = {},
                                     std::string* fail_reason = nullptr);

/// Joins verified child trees across a neighbor cut: keeps every child edge
/// outside G[X], keeps all fixed-subtree edges, connects each contact to the
/// center, and stars the remaining X-vertices on the center. The result is
/// re-verified to stretch <= 3; failure throws "assembly-verification-failed".
SpanningTree assemble_tree(const Graph& g, const NeighborCutDecomposition& cut,
                           const std::vector<SpanningTree>& child_trees,
                           const std::vector<FixedSubtree>& subtrees,
                           const CfeSolution& contacts);

struct TraceNode {
    int id = 0;
    int parent = -1;
    int level = 0;
    VertexSet vertices;      // in the coordinates of the graph handed to recognize
    std::string status;      // pending | terminal | internal | failed | block
    Vertex cut_center = -1;  // center of the winning cut, when internal
};

struct CfeAttemptUnit {
    int owner = -1;
    std::optional<Vertex> anchor;
    std::vector<Edge> edges;
};

struct CfeAttemptRecord {
    int node_id = -1;
    Vertex center = -1;
    std::vector<CfeAttemptUnit> units;
    bool success = false;
    std::string reason;  // empty | "ics" | "radius" | "conflict" | ...
};

struct ReductionRecord {
    int node_id = -1;
    Vertex center = -1;
    Vertex attachment = -1;
    VertexSet removed;
};

/// Machine-readable account of one recognition run.
struct RecognitionTrace {
    std::vector<TraceNode> nodes;
    std::vector<CfeAttemptRecord> cfe_attempts;
    std::vector<ReductionRecord> reductions;
    long long eta = 0;  // X-components created while decomposing
    long long ics_calls = 0;
    long long cfe_calls = 0;
    std::vector<std::string> flags;
};

/// Decides sigma(g) <= 3 for a connected graph with at least two vertices.
/// Works per block; inside a block runs the double-star test, then applies
/// reductions and tries every neighbor cut in ascending center order,
/// recursing on X-components and assembling child trees through the
/// consistency solver. A yes always carries a certificate re-verified to
/// stretch <= 3; a no names the failing step. Fully deterministic.
RecognitionOutcome recognize_sigma3(const Graph& g, RecognitionTrace* trace = nullptr);

}  // namespace treespan

#endif
