#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "fpgroups/word.hpp"

namespace fpgroups {

/// Immutable p-ary tree; a node either has no children (leaf) or exactly p.
struct TreeNode;
using TreePtr = std::shared_ptr<const TreeNode>;

struct TreeNode {
  std::vector<TreePtr> children;
  bool is_leaf() const { return children.empty(); }
};

TreePtr make_leaf();
TreePtr make_internal(std::vector<TreePtr> children);

std::size_t leaf_count(const TreePtr& t);
std::size_t internal_count(const TreePtr& t);
bool tree_equal(const TreePtr& a, const TreePtr& b);

/// Preorder text form: '*' for a leaf, '(' children ')' for an internal node.
std::string serialize_tree(const TreePtr& t);
TreePtr parse_tree(std::string_view text, int p);  // throws ParseError

/// Pair of p-ary trees with equal leaf counts; top is the domain tree T+,
/// bottom the range tree T-.
struct TreeDiagram {
  int p = 2;
  TreePtr top;
  TreePtr bottom;
};

/// Single-leaf pair: the identity element.
TreeDiagram trivial_diagram(int p);

bool is_trivial(const TreeDiagram& d);

/// Structural equality of the (already reduced) diagrams.
bool diagram_equal(const TreeDiagram& a, const TreeDiagram& b);

/// Removes opposing caret pairs (an all-leaf internal node present in both
/// trees over the same leaf interval) until none remain. The result is the
/// unique reduced representative.
TreeDiagram reduce(const TreeDiagram& d);

/// Swap top and bottom.
TreeDiagram inverse(const TreeDiagram& d);

/// Group product "a then b" (the composition convention that makes
/// x_n x_k = x_k x_{n+p-1} hold for k < n): glues along the minimal common
/// refinement of a.bottom and b.top and reduces. Throws WrongArity on
/// mismatched p.
TreeDiagram multiply(const TreeDiagram& a, const TreeDiagram& b);

/// Reduced diagram of the generator x_i. Throws BudgetExceeded for indices
/// too large to materialize.
TreeDiagram generator_diagram(const Index& i, int p);

/// Endomorphisms adding a root node with the argument as last (right shift)
/// or first (left shift) child and leaves elsewhere; shift_right(x_i) =
/// x_{i+1}.
TreeDiagram shift_right(const TreeDiagram& d);
TreeDiagram shift_left(const TreeDiagram& d);

/// Image in the abelianization Z + Z of F_2: slopes at the endpoints,
/// left = log2 f'(0), right = log2 f'(1), read off as leaf-depth
/// differences. Requires p = 2 (throws WrongArity).
struct AbelianImage {
  std::int64_t left = 0;
  std::int64_t right = 0;
  friend bool operator==(const AbelianImage&, const AbelianImage&) = default;
};

AbelianImage abelianization(const TreeDiagram& d);

/// Membership in the rectangular subgroup K_(a,b) = pi^-1(aZ + bZ); p = 2.
bool rect_membership(const TreeDiagram& d, int a, int b);

/// Reduced diagram of the product of a word's letters (identity for the
/// empty word). This is the equality/neutrality oracle for the rewriting
/// module.
TreeDiagram eval_word(const Word& w);

/// Letterwise embedding F_2 -> F_3, y_i^e -> x_{2i}^e. Input must have p=2.
Word iota_word(const Word& w);

/// Letterwise isomorphism F_3 -> oriented subgroup of F_2:
/// x_i -> y_i y_{i+1} and x_i^-1 -> y_{i+1}^-1 y_i^-1. Input must have p=3.
Word alpha_word(const Word& w);

/// "top|bottom" in the preorder text form.
std::string serialize_diagram(const TreeDiagram& d);
TreeDiagram parse_diagram(std::string_view text, int p);

/// Compact byte key (bit-packed preorder of both trees); canonical for
/// reduced diagrams of a fixed p. Used as the hash key by the counting
/// engines.
std::string compact_key(const TreeDiagram& d);

/// {"p": p, "top": "...", "bottom": "..."}
std::string to_json(const TreeDiagram& d);

}  // namespace fpgroups
