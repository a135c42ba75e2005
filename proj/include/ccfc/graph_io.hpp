#pragma once

#include <iosfwd>
#include <string>

#include "ccfc/graph.hpp"

namespace ccfc {

// Graph JSON, format tag "ccfc-graph/1":
//   {"format":"ccfc-graph/1","n":<int>,"edges":[[u,v],...],"landmarks":{"x":0,...}}
// Edges are written sorted; the reader tolerates any order.

std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

Graph load_graph_file(const std::string& path);
void save_graph_file(const Graph& g, const std::string& path);

/// Undirected DOT export; landmark names become node labels.
std::string graph_to_dot(const Graph& g, const std::string& name = "G");

std::string fnv1a_graph_hash(const Graph& g);

}  // namespace ccfc
