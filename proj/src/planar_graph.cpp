#include "fpgroups/planar_graph.hpp"

#include <queue>
#include <sstream>
#include <stdexcept>

#include "fpgroups/errors.hpp"

namespace fpgroups {

namespace {

// Gaps between leaves carry their left endpoint, -1..m-1; black gaps are the
// odd ones (the unbounded left region, gap -1, is black by convention) and
// gap a hosts vertex (a+1)/2. Each internal node is a 4-valent vertex of
// the strip picture whose corner gaps are {L-1, r1, r2, R}; the parities
// alternate because ternary subtrees have odd leaf counts, so exactly two
// corners are black and they get joined by an edge.
std::size_t emit_edges(const TreePtr& t, long long offset, PlanarGraph& g) {
  if (t->is_leaf()) return 1;
  std::size_t consumed = 0;
  std::vector<long long> right_boundaries;
  for (const TreePtr& c : t->children) {
    consumed += emit_edges(c, offset + static_cast<long long>(consumed), g);
    right_boundaries.push_back(offset + static_cast<long long>(consumed) - 1);
  }
  std::vector<long long> corners{offset - 1};
  corners.insert(corners.end(), right_boundaries.begin(),
                 right_boundaries.end());  // {L-1, r1, r2, R}
  std::vector<long long> black;
  for (long long a : corners)
    if (a % 2 != 0) black.push_back(a);
  if (black.size() != 2)
    throw Error("corner parity violated; not a ternary diagram?");
  auto vertex = [](long long a) { return static_cast<std::size_t>((a + 1) / 2); };
  std::size_t u = vertex(black[0]), v = vertex(black[1]);
  g.edges.emplace_back(std::min(u, v), std::max(u, v));
  return consumed;
}

}  // namespace

PlanarGraph planar_graph(const TreeDiagram& d) {
  if (d.p != 3)
    throw WrongArity("planar graphs are built from F_3 diagrams; embed via iota");
  std::size_t m = leaf_count(d.top);
  if (m != leaf_count(d.bottom))
    throw std::invalid_argument("tree diagram with mismatched leaf counts");
  PlanarGraph g;
  g.vertex_count = (m + 1) / 2;
  emit_edges(d.top, 0, g);
  emit_edges(d.bottom, 0, g);
  return g;
}

int chromatic_at_two(const PlanarGraph& g) {
  if (g.vertex_count == 0)
    throw std::invalid_argument("graph must have at least one vertex");
  std::vector<std::vector<std::size_t>> adjacency(g.vertex_count);
  bool loop = false;
  for (const auto& [u, v] : g.edges) {
    if (u >= g.vertex_count || v >= g.vertex_count)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) {
      loop = true;
      continue;
    }
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }

  std::vector<int> color(g.vertex_count, 0);  // 0 unvisited, +1/-1 colored
  std::queue<std::size_t> frontier;
  color[0] = 1;  // leftmost vertex gets +
  frontier.push(0);
  std::size_t visited = 1;
  bool bipartite = true;
  while (!frontier.empty()) {
    std::size_t u = frontier.front();
    frontier.pop();
    for (std::size_t v : adjacency[u]) {
      if (color[v] == 0) {
        color[v] = -color[u];
        ++visited;
        frontier.push(v);
      } else if (color[v] == color[u]) {
        bipartite = false;
      }
    }
  }
  if (visited != g.vertex_count)
    throw NotConnected("planar graph is not connected");
  return (bipartite && !loop) ? 2 : 0;
}

std::string to_dot(const PlanarGraph& g) {
  std::ostringstream out;
  out << "graph gamma {\n";
  for (std::size_t v = 0; v < g.vertex_count; ++v)
    out << "  v" << v << ";  // x = " << (2.0 * static_cast<double>(v) - 0.5)
        << "\n";
  for (const auto& [u, v] : g.edges)
    out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace fpgroups
