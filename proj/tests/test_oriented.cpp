#include <doctest.h>

#include <algorithm>

#include "fpgroups/errors.hpp"
#include "fpgroups/oriented.hpp"
#include "fpgroups/planar_graph.hpp"

using namespace fpgroups;

namespace {

std::vector<std::pair<std::size_t, std::size_t>> sorted_edges(
    const PlanarGraph& g) {
  auto edges = g.edges;
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

TEST_CASE("the planar graph of x_0 in F_3 is the expected multigraph") {
  PlanarGraph g = planar_graph(generator_diagram(0, 3));
  CHECK(g.vertex_count == 3);
  std::vector<std::pair<std::size_t, std::size_t>> expected{
      {0, 1}, {0, 1}, {0, 2}, {1, 2}};
  CHECK(sorted_edges(g) == expected);
  CHECK(chromatic_at_two(g) == 0);  // odd cycle
}

TEST_CASE("planar graph basics") {
  PlanarGraph trivial = planar_graph(trivial_diagram(3));
  CHECK(trivial.vertex_count == 1);
  CHECK(trivial.edges.empty());
  CHECK(chromatic_at_two(trivial) == 2);

  CHECK_THROWS_AS(planar_graph(trivial_diagram(2)), WrongArity);

  // k internal nodes per tree give k+1 vertices and 2k edges
  TreeDiagram g = eval_word(iota_word(parse_word("y0 y1 y2^-1", 2)));
  PlanarGraph graph = planar_graph(g);
  std::size_t k = internal_count(g.top);
  CHECK(graph.vertex_count == k + 1);
  CHECK(graph.edges.size() == 2 * k);
}

TEST_CASE("two-coloring handles loops, odd cycles and disconnection") {
  PlanarGraph triangle{3, {{0, 1}, {1, 2}, {0, 2}}};
  CHECK(chromatic_at_two(triangle) == 0);

  PlanarGraph path{3, {{0, 1}, {1, 2}, {0, 1}}};  // parallel edges harmless
  CHECK(chromatic_at_two(path) == 2);

  PlanarGraph looped{2, {{0, 1}, {1, 1}}};
  CHECK(chromatic_at_two(looped) == 0);

  PlanarGraph split{3, {{0, 1}}};
  CHECK_THROWS_AS(chromatic_at_two(split), NotConnected);
}

TEST_CASE("theta anchors") {
  CHECK(theta(Word(2)) == 1);
  CHECK(theta(parse_word("y0 y1", 2)) == 1);
  CHECK(theta(parse_word("y0", 2)) == 0);
  CHECK(theta(parse_word("y0 y0^-1", 2)) == 1);
  CHECK(theta(parse_word("y1 y2", 2)) == 1);
  CHECK(theta(parse_word("y2 y1", 2)) == 0);
}

TEST_CASE("parity stabilizer test") {
  CHECK(parity_membership(trivial_diagram(2)));
  CHECK_FALSE(parity_membership(generator_diagram(0, 2)));
  CHECK(parity_membership(eval_word(parse_word("y0 y1", 2))));
  CHECK_THROWS_AS(parity_membership(trivial_diagram(3)), WrongArity);
}

namespace {

// Replace leaf `at` (left-to-right numbering) with a ternary caret.
TreePtr graft_caret(const TreePtr& t, std::size_t at, std::size_t& cursor) {
  if (t->is_leaf()) {
    if (cursor++ == at)
      return make_internal({make_leaf(), make_leaf(), make_leaf()});
    return t;
  }
  std::vector<TreePtr> children;
  for (const TreePtr& c : t->children)
    children.push_back(graft_caret(c, at, cursor));
  return make_internal(std::move(children));
}

}  // namespace

TEST_CASE("bipartiteness verdict is representative independent") {
  for (const char* text : {"y0 y1", "y0", "y1 y0 y2^-1"}) {
    TreeDiagram g = eval_word(iota_word(parse_word(text, 2)));
    int verdict = chromatic_at_two(planar_graph(g));
    for (std::size_t at = 0; at < leaf_count(g.top); ++at) {
      std::size_t cursor = 0;
      TreePtr top = graft_caret(g.top, at, cursor);
      cursor = 0;
      TreePtr bottom = graft_caret(g.bottom, at, cursor);
      TreeDiagram inflated{3, top, bottom};
      CHECK_FALSE(diagram_equal(inflated, g));
      CHECK(diagram_equal(reduce(inflated), g));
      CHECK(chromatic_at_two(planar_graph(inflated)) == verdict);
    }
  }
}

TEST_CASE("DOT export names vertices with coordinates") {
  std::string dot = to_dot(planar_graph(generator_diagram(0, 3)));
  CHECK(dot.find("graph gamma {") != std::string::npos);
  CHECK(dot.find("v0 -- v2;") != std::string::npos);
  CHECK(dot.find("// x = -0.5") != std::string::npos);
}
