#pragma once

#include "fpgroups/tree_diagram.hpp"
#include "fpgroups/word.hpp"

namespace fpgroups {

/// State of the oriented subgroup on a word over the F_2 generators:
/// 1 if the evaluation lies in it (its planar graph is bipartite), else 0.
int theta(const Word& w);

/// Independent membership test: the oriented subgroup is the stabilizer of
/// the even-digit-sum dyadics, so an element belongs iff for every leaf the
/// parity of right edges on the root-to-leaf path agrees between top and
/// bottom tree. Requires p = 2 (throws WrongArity).
bool parity_membership(const TreeDiagram& d);

}  // namespace fpgroups
