#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "shortcut_forge/graph.hpp"

namespace shortcut_forge {

// Edge-list text: `#` comment lines, then `n m`, then m lines `u v`.
DiGraph read_graph(std::istream& in);
DiGraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const DiGraph& g);

// Edge files without a header: one `u v` per line.
EdgeList read_edges(std::istream& in);
EdgeList read_edges_file(const std::string& path);
void write_edges(std::ostream& out, const EdgeList& edges);

// Sidecar `index name` lines.
void write_names(std::ostream& out, const std::vector<std::string>& names);

void write_file(const std::string& path, const std::string& contents);

}  // namespace shortcut_forge
