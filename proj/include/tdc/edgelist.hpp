#pragma once

#include "tdc/graph.hpp"

#include <iosfwd>
#include <string>

namespace tdc {

// Edge-list text format: one "u v" pair per line, '#' starts a comment,
// blank lines are ignored. An optional "order N" header fixes the vertex
// count (needed for isolated vertices). With one_indexed, vertices are
// read/written as 1..N instead of 0..N-1.
Graph parse_edge_list(std::istream& in, bool one_indexed = false);
Graph parse_edge_list_file(const std::string& path, bool one_indexed = false);

void write_edge_list(std::ostream& out, const Graph& g, bool one_indexed = false);
void write_edge_list_file(const std::string& path, const Graph& g,
                          bool one_indexed = false);

} // namespace tdc
