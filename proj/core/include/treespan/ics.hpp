#ifndef TREESPAN_ICS_HPP
#define TREESPAN_ICS_HPP

#include <optional>

#include "treespan/graph.hpp"

namespace treespan {

/// Independent-cover instance: a matching of fixed edges plus the conflict
/// adjacency among their endpoints. A cover picks one endpoint per fixed
/// edge such that the picked set is independent in the conflict graph.
struct IcsInstance {
    std::vector<Edge> fixed_edges;  // endpoints pairwise distinct
    Graph conflicts;                // conflict adjacency over the same ids

    /// Throws if the fixed edges do not form a matching or an endpoint is
    /// outside the conflict graph's vertex range.
    void validate() const;
};

/// Polynomial independent-cover solver. Proceeds by the usual reductions:
/// endpoints conflicting with both ends of another edge are deleted and the
/// partner end forced (deletions propagate); parallel edge pairs are merged
/// along their two independent diagonals; unrelated edges separate; the
/// remaining serial relations are solved by implication closure. Returns the
/// lexicographically smallest cover, one chosen endpoint per fixed edge in
/// input order, or nullopt.
std::optional<std::vector<Vertex>> solve_ics(const IcsInstance& inst);

namespace detail {

/// Binary-choice core shared by solve_ics and the consistency solver:
/// k units, two options each, option conflicts given as a symmetric matrix
/// (indexed 2*unit + option). `dead` marks options that are forbidden
/// up front. Returns an option per unit, preferring option 0, or nullopt.
std::optional<std::vector<int>> solve_binary_choices(
    int unit_count, const std::vector<std::vector<char>>& conflict,
    const std::vector<char>& dead);

}  // namespace detail

}  // namespace treespan

#endif
