#ifndef TREESPAN_ORACLE_HPP
#define TREESPAN_ORACLE_HPP

#include <functional>
#include <optional>

#include "treespan/graph.hpp"
#include "treespan/ics.hpp"

namespace treespan {

/// Search limits for the exhaustive solvers. A result produced within the
/// budget is exact; once the budget trips, the answer is "unknown", never a
/// guess.
struct OracleBudget {
    long long max_nodes = 10'000'000;
    double time_limit_seconds = 60.0;
};

struct OracleRun {
    long long nodes = 0;
    long long trees_seen = 0;
    bool exhausted = false;
};

struct ExactSigmaResult {
    std::optional<int> sigma;               // nullopt when the budget ran out
    std::optional<std::vector<Edge>> tree;  // an optimal tree when exact
    OracleRun run;
};

/// Exact tree-stretch by depth-first edge inclusion/exclusion over spanning
/// trees. Prunes on finalized cotree distances (a cotree edge whose endpoints
/// are already connected in the partial forest has its final tree distance)
/// and starts from a breadth-first-search tree incumbent.
ExactSigmaResult exact_sigma(const Graph& g, const OracleBudget& budget = {});

enum class Answer { yes, no, unknown };

struct SigmaDecision {
    Answer answer = Answer::unknown;
    std::optional<std::vector<Edge>> tree;  // witness when yes, re-verified
    OracleRun run;
};

/// Decides sigma(g) <= k exhaustively. A yes carries a witness tree; a no is
/// exhaustive over all spanning trees.
SigmaDecision decide_sigma_le(const Graph& g, int k, const OracleBudget& budget = {});

/// Enumerates every spanning tree of g in a fixed deterministic order.
/// Stops early when the visitor returns false; returns false in that case.
bool for_each_spanning_tree(const Graph& g,
                            const std::function<bool(const std::vector<Edge>&)>& visit);

/// Tries all 2^r endpoint selections. Ground truth for solve_ics; returns
/// the lexicographically smallest cover. Requires r <= 20.
std::optional<std::vector<Vertex>> ics_bruteforce(const IcsInstance& inst);

/// Breadth-first-search spanning tree from vertex 0; the pruning incumbent.
std::vector<Edge> bfs_tree(const Graph& g);

}  // namespace treespan

#endif
