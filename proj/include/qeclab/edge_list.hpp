//
// qeclab - quadratic embedding constants of graphs
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <string>
#include <string_view>

#include "qeclab/graph.hpp"

namespace qeclab {

// Edge-list text: header "n m", then m lines "u v" with 0-based vertex ids.
// Whitespace separated, LF line endings; '#' starts a comment running to the
// end of the line; blank lines are ignored. Throws ParseError.
Graph parse_edge_list(std::string_view text);

// Canonical form: "n m\n" followed by the edges, u < v, sorted.
std::string serialize_edge_list(const Graph &g);

std::string canonicalize_edge_list(std::string_view text);

Graph read_edge_list_file(const std::string &path);

} // namespace qeclab
