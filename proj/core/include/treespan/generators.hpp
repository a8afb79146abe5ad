#ifndef TREESPAN_GENERATORS_HPP
#define TREESPAN_GENERATORS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "treespan/graph.hpp"

namespace treespan {

/// Named corpus graph plus integer parameters where applicable.
struct NamedGraphSpec {
    std::string name;  // petersen | fig4 | fig5 | cycle | complete |
                       // complete_bipartite | path | two_blocks_demo
    std::vector<int> params;
};

/// Builds a corpus graph. fig4 is the 18-vertex, 42-edge example (a clique on
/// v1..v6 with three attached paths); fig5 is fig4 minus the edge v4-v5.
/// Throws on unknown names or bad parameters.
Graph generate(const NamedGraphSpec& spec);

const std::vector<std::string>& generator_names();

/// Seeded random Hamiltonian cycle plus `extra_edges` distinct random chords.
/// 2-connected by construction and bitwise reproducible for a fixed seed.
Graph random_2connected(int n, int extra_edges, std::uint64_t seed);

}  // namespace treespan

#endif
