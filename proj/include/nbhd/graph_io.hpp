#pragma once

#include <string>

#include "nbhd/graph.hpp"

namespace nbhd {

/// {"n":N,"edges":[[u,v],...],"labels":{"0":"...",...}}; labels omitted when empty.
std::string graph_to_json(const Graph & g);
Graph graph_from_json(const std::string & text);

/// "n <count>" then one "e <u> <v>" per edge. Blank lines and '#' comments are skipped.
std::string graph_to_edge_list(const Graph & g);
Graph graph_from_edge_list(const std::string & text);

/// JSON if the first non-blank character is '{', edge list otherwise.
Graph parse_graph(const std::string & text);

std::string read_text_file(const std::string & path);
Graph read_graph_file(const std::string & path);

} // namespace nbhd
