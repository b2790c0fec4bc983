#include "fpgroups/oriented.hpp"

#include <vector>

#include "fpgroups/errors.hpp"
#include "fpgroups/planar_graph.hpp"

namespace fpgroups {

int theta(const Word& w) {
  return chromatic_at_two(planar_graph(eval_word(iota_word(w)))) / 2;
}

namespace {

void leaf_parities(const TreePtr& t, int parity, std::vector<int>& out) {
  if (t->is_leaf()) {
    out.push_back(parity);
    return;
  }
  leaf_parities(t->children[0], parity, out);
  leaf_parities(t->children[1], parity ^ 1, out);
}

}  // namespace

bool parity_membership(const TreeDiagram& d) {
  if (d.p != 2) throw WrongArity("parity test applies to F_2 diagrams");
  TreeDiagram r = reduce(d);
  std::vector<int> top, bottom;
  leaf_parities(r.top, 0, top);
  leaf_parities(r.bottom, 0, bottom);
  return top == bottom;
}

}  // namespace fpgroups
