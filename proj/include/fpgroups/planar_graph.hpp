#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "fpgroups/tree_diagram.hpp"

namespace fpgroups {

/// Multigraph on the black regions of the strip picture of an F_3 diagram;
/// vertex j sits at x = -1/2 + 2j. Parallel edges are kept; loops are
/// representable but never produced for valid inputs.
struct PlanarGraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // each (min,max)
};

/// Builds the planar graph of a ternary diagram: leaves at 0..m-1 split the
/// axis into gaps with left endpoints -1..m-1, a gap is black iff its left
/// endpoint is odd, and every internal node of either tree contributes one
/// edge between the two black gaps among its four corner gaps
/// {L-1, r1, r2, R}. Throws WrongArity unless d.p == 3.
PlanarGraph planar_graph(const TreeDiagram& d);

/// Chromatic polynomial evaluated at 2: the number of proper 2-colorings,
/// which is 2 for a connected bipartite graph and 0 otherwise. Throws
/// NotConnected on a disconnected input (a planar_graph bug).
int chromatic_at_two(const PlanarGraph& g);

/// Undirected DOT text; x-coordinates appear as comments.
std::string to_dot(const PlanarGraph& g);

}  // namespace fpgroups
