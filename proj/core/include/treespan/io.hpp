#ifndef TREESPAN_IO_HPP
#define TREESPAN_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "treespan/spanning_tree.hpp"

namespace treespan {

/// Edge-list text format shared repo-wide: two whitespace-separated vertex
/// labels per line, '#' lines are comments, blank lines ignored.
std::vector<std::pair<std::string, std::string>> parse_edge_list(std::istream& in);

Graph read_graph(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);
void write_graph(const Graph& g, const std::string& path);

/// Tree files use the same edge-list format; the loader resolves labels
/// against the host and validates the spanning-tree invariants.
SpanningTree read_tree(const std::string& path, const Graph& host);
void write_tree(const SpanningTree& t, const std::string& path);

/// DOT text with stable ordering; tree edges are attributed bold when a
/// highlight tree is given.
std::string export_dot(const Graph& g, const SpanningTree* highlight = nullptr);

}  // namespace treespan

#endif
