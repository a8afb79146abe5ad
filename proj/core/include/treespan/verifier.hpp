#ifndef TREESPAN_VERIFIER_HPP
#define TREESPAN_VERIFIER_HPP

#include <optional>
#include <string>

#include "treespan/spanning_tree.hpp"

namespace treespan {

enum class ConditionId { T31a, T31b, T32I, T32II };

/// Minimal re-checkable evidence for a failed condition: the inner edge or
/// star-set under test plus what went wrong where.
struct ConditionWitness {
    std::optional<Edge> inner_edge;       // 2-spanner condition
    std::optional<Vertex> star_center;    // 3-spanner condition
    VertexSet set_members;                // the candidate separator
    std::string reason;                   // "not-a-cut" | "not-outer-in-component"
                                          // | "branch-adjacency"
    VertexSet component;                  // offending component, when relevant
    std::optional<Edge> cross_edge;       // branch-joining edge, when relevant
};

struct ConditionReport {
    bool holds = false;
    ConditionId condition = ConditionId::T31a;
    std::optional<ConditionWitness> violated_at;
};

/// Tree 2-spanner condition for a fixed tree of a 2-connected graph:
/// either T is a star, or every inner edge uv of T is a 2-vertex cut of g
/// and uv is outer in T restricted to each {u,v}-component.
/// Holds exactly when stretch(t) <= 2.
ConditionReport check_theorem_31(const Graph& g, const SpanningTree& t);

/// Tree 3-spanner condition for a fixed tree of a 2-connected graph:
/// either T has diameter at most three, or every inner star-set is a vertex
/// cut of g and no graph edge joins two different S-branches.
/// Holds exactly when stretch(t) <= 3.
ConditionReport check_theorem_32(const Graph& g, const SpanningTree& t);

/// Self-test of the three equivalent phrasings of the separator condition on
/// one inner cut star-set: outer in every S-component / tree-neighborhoods of
/// contacts in different components / no edge between different S-branches.
/// Returns true when all three evaluate identically.
bool check_prop_33_equivalence(const Graph& g, const SpanningTree& t, const StarSet& s);

struct RecognitionOutcome {
    bool admits = false;
    std::optional<SpanningTree> certificate;  // verified when admits
    std::string witness;                      // failing step id otherwise
};

/// Decides sigma(g) <= 2 per block: a block without 2-vertex cuts needs a
/// dominating vertex; a block with 2-vertex cuts is split recursively on
/// them, every cut pair must be an edge of the block, and each cut-free
/// piece needs a spanning star centered at an endpoint of its separating
/// edge. Yes answers carry an assembled tree re-verified to stretch <= 2.
RecognitionOutcome recognize_sigma2(const Graph& g);

}  // namespace treespan

#endif
