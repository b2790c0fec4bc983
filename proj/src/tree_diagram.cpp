#include "fpgroups/tree_diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "fpgroups/errors.hpp"

namespace fpgroups {

namespace {
const TreePtr kLeaf = std::make_shared<TreeNode>();
}

TreePtr make_leaf() { return kLeaf; }

TreePtr make_internal(std::vector<TreePtr> children) {
  auto node = std::make_shared<TreeNode>();
  node->children = std::move(children);
  return node;
}

std::size_t leaf_count(const TreePtr& t) {
  if (t->is_leaf()) return 1;
  std::size_t total = 0;
  for (const TreePtr& c : t->children) total += leaf_count(c);
  return total;
}

std::size_t internal_count(const TreePtr& t) {
  if (t->is_leaf()) return 0;
  std::size_t total = 1;
  for (const TreePtr& c : t->children) total += internal_count(c);
  return total;
}

bool tree_equal(const TreePtr& a, const TreePtr& b) {
  if (a.get() == b.get()) return true;
  if (a->children.size() != b->children.size()) return false;
  for (std::size_t k = 0; k < a->children.size(); ++k)
    if (!tree_equal(a->children[k], b->children[k])) return false;
  return true;
}

std::string serialize_tree(const TreePtr& t) {
  if (t->is_leaf()) return "*";
  std::string out = "(";
  for (const TreePtr& c : t->children) out += serialize_tree(c);
  out += ')';
  return out;
}

namespace {

TreePtr parse_tree_at(std::string_view text, int p, std::size_t& k) {
  if (k >= text.size())
    throw ParseError("unexpected end of tree text", k);
  if (text[k] == '*') {
    ++k;
    return make_leaf();
  }
  if (text[k] != '(')
    throw ParseError("expected '*' or '(' in tree text", k);
  ++k;
  std::vector<TreePtr> children;
  for (int c = 0; c < p; ++c) children.push_back(parse_tree_at(text, p, k));
  if (k >= text.size() || text[k] != ')')
    throw ParseError("internal node must have exactly p children", k);
  ++k;
  return make_internal(std::move(children));
}

}  // namespace

TreePtr parse_tree(std::string_view text, int p) {
  std::size_t k = 0;
  TreePtr t = parse_tree_at(text, p, k);
  if (k != text.size()) throw ParseError("trailing characters after tree", k);
  return t;
}

TreeDiagram trivial_diagram(int p) {
  if (p < 2) throw std::invalid_argument("p must be >= 2");
  return {p, make_leaf(), make_leaf()};
}

bool is_trivial(const TreeDiagram& d) {
  return d.top->is_leaf() && d.bottom->is_leaf();
}

bool diagram_equal(const TreeDiagram& a, const TreeDiagram& b) {
  return a.p == b.p && tree_equal(a.top, b.top) &&
         tree_equal(a.bottom, b.bottom);
}

namespace {

// Leaf offsets (in the shared left-to-right numbering) of every internal
// node whose children are all leaves. Returns the subtree's leaf count.
std::size_t exposed_carets(const TreePtr& t, std::size_t offset,
                           std::set<std::size_t>& out) {
  if (t->is_leaf()) return 1;
  bool all_leaves = true;
  std::size_t consumed = 0;
  for (const TreePtr& c : t->children) {
    if (!c->is_leaf()) all_leaves = false;
    consumed += exposed_carets(c, offset + consumed, out);
  }
  if (all_leaves) out.insert(offset);
  return consumed;
}

TreePtr drop_carets(const TreePtr& t, std::size_t offset,
                    const std::set<std::size_t>& doomed,
                    std::size_t& consumed) {
  if (t->is_leaf()) {
    consumed = 1;
    return t;
  }
  bool all_leaves =
      std::all_of(t->children.begin(), t->children.end(),
                  [](const TreePtr& c) { return c->is_leaf(); });
  if (all_leaves && doomed.count(offset)) {
    consumed = t->children.size();
    return make_leaf();
  }
  std::vector<TreePtr> children;
  children.reserve(t->children.size());
  consumed = 0;
  for (const TreePtr& c : t->children) {
    std::size_t child_consumed = 0;
    children.push_back(drop_carets(c, offset + consumed, doomed, child_consumed));
    consumed += child_consumed;
  }
  return make_internal(std::move(children));
}

}  // namespace

TreeDiagram reduce(const TreeDiagram& d) {
  TreeDiagram current = d;
  for (;;) {
    std::set<std::size_t> top_carets, bottom_carets;
    exposed_carets(current.top, 0, top_carets);
    exposed_carets(current.bottom, 0, bottom_carets);
    std::set<std::size_t> matched;
    std::set_intersection(top_carets.begin(), top_carets.end(),
                          bottom_carets.begin(), bottom_carets.end(),
                          std::inserter(matched, matched.begin()));
    if (matched.empty()) return current;
    // Matched carets span disjoint leaf intervals at identical positions in
    // both trees, so removing them all at once keeps the numbering aligned.
    std::size_t consumed = 0;
    current.top = drop_carets(current.top, 0, matched, consumed);
    current.bottom = drop_carets(current.bottom, 0, matched, consumed);
  }
}

TreeDiagram inverse(const TreeDiagram& d) { return {d.p, d.bottom, d.top}; }

namespace {

TreePtr refine_pair(const TreePtr& x, const TreePtr& y) {
  if (x->is_leaf()) return y;
  if (y->is_leaf()) return x;
  std::vector<TreePtr> children;
  children.reserve(x->children.size());
  for (std::size_t k = 0; k < x->children.size(); ++k)
    children.push_back(refine_pair(x->children[k], y->children[k]));
  return make_internal(std::move(children));
}

// Subtree of `refined` hanging under each leaf of `base`, left to right.
void excess_per_leaf(const TreePtr& base, const TreePtr& refined,
                     std::vector<TreePtr>& out) {
  if (base->is_leaf()) {
    out.push_back(refined);
    return;
  }
  for (std::size_t k = 0; k < base->children.size(); ++k)
    excess_per_leaf(base->children[k], refined->children[k], out);
}

TreePtr graft_leaves(const TreePtr& t, const std::vector<TreePtr>& grafts,
                     std::size_t& cursor) {
  if (t->is_leaf()) return grafts[cursor++];
  std::vector<TreePtr> children;
  children.reserve(t->children.size());
  for (const TreePtr& c : t->children)
    children.push_back(graft_leaves(c, grafts, cursor));
  return make_internal(std::move(children));
}

}  // namespace

TreeDiagram multiply(const TreeDiagram& a, const TreeDiagram& b) {
  if (a.p != b.p) throw WrongArity("multiplying diagrams over different p");
  TreePtr refined = refine_pair(a.bottom, b.top);

  std::vector<TreePtr> into_top;
  excess_per_leaf(a.bottom, refined, into_top);
  std::size_t cursor = 0;
  TreePtr top = graft_leaves(a.top, into_top, cursor);

  std::vector<TreePtr> into_bottom;
  excess_per_leaf(b.top, refined, into_bottom);
  cursor = 0;
  TreePtr bottom = graft_leaves(b.bottom, into_bottom, cursor);

  return reduce({a.p, top, bottom});
}

TreeDiagram generator_diagram(const Index& i, int p) {
  if (p < 2) throw std::invalid_argument("p must be >= 2");
  if (i < 0) throw std::invalid_argument("generator index must be >= 0");
  if (i > 1'000'000)
    throw BudgetExceeded("generator index too large to materialize");

  // x_i for i = q(p-1) + r, r in [0, p-2], is the q-fold right shift of the
  // seed whose top caret hangs at child r and whose bottom caret hangs at
  // the last child. For p = 2 this is the familiar x_{i+1} = shift(x_i)
  // chain; in general the shift advances indices by p-1, which is what the
  // relations x_n x_k = x_k x_{n+p-1} demand.
  Index shifts = i / (p - 1);
  int r = (i % (p - 1)).convert_to<int>();

  std::vector<TreePtr> top_children, bottom_children;
  for (int k = 0; k < p; ++k) {
    top_children.push_back(
        k == r ? make_internal(std::vector<TreePtr>(p, make_leaf()))
               : make_leaf());
    bottom_children.push_back(
        k == p - 1 ? make_internal(std::vector<TreePtr>(p, make_leaf()))
                   : make_leaf());
  }
  TreeDiagram g{p, make_internal(std::move(top_children)),
                make_internal(std::move(bottom_children))};

  for (Index k = 0; k < shifts; ++k) g = shift_right(g);
  return g;
}

TreeDiagram shift_right(const TreeDiagram& d) {
  std::vector<TreePtr> top(d.p - 1, make_leaf());
  std::vector<TreePtr> bottom(d.p - 1, make_leaf());
  top.push_back(d.top);
  bottom.push_back(d.bottom);
  return reduce({d.p, make_internal(std::move(top)),
                 make_internal(std::move(bottom))});
}

TreeDiagram shift_left(const TreeDiagram& d) {
  std::vector<TreePtr> top{d.top};
  std::vector<TreePtr> bottom{d.bottom};
  for (int k = 1; k < d.p; ++k) {
    top.push_back(make_leaf());
    bottom.push_back(make_leaf());
  }
  return reduce({d.p, make_internal(std::move(top)),
                 make_internal(std::move(bottom))});
}

namespace {

std::int64_t first_leaf_depth(const TreePtr& t) {
  return t->is_leaf() ? 0 : 1 + first_leaf_depth(t->children.front());
}

std::int64_t last_leaf_depth(const TreePtr& t) {
  return t->is_leaf() ? 0 : 1 + last_leaf_depth(t->children.back());
}

}  // namespace

AbelianImage abelianization(const TreeDiagram& d) {
  if (d.p != 2)
    throw WrongArity("abelianization uses the F_2 normalization, p must be 2");
  TreeDiagram r = reduce(d);
  return {first_leaf_depth(r.top) - first_leaf_depth(r.bottom),
          last_leaf_depth(r.top) - last_leaf_depth(r.bottom)};
}

bool rect_membership(const TreeDiagram& d, int a, int b) {
  if (a <= 0 || b <= 0) throw std::invalid_argument("a, b must be positive");
  AbelianImage image = abelianization(d);
  return image.left % a == 0 && image.right % b == 0;
}

namespace {

// Generators get rebuilt constantly by the enumeration engines; memoize per
// thread so the pure-function contract stays lock-free.
const TreeDiagram& cached_generator(const Index& i, int p) {
  thread_local std::map<std::pair<int, Index>, TreeDiagram> cache;
  auto key = std::make_pair(p, i);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, generator_diagram(i, p)).first;
  return it->second;
}

}  // namespace

TreeDiagram eval_word(const Word& w) {
  TreeDiagram result = trivial_diagram(w.p());
  for (const Letter& l : w.letters()) {
    const TreeDiagram& g = cached_generator(l.index, w.p());
    result = multiply(result, l.exponent == 1 ? g : inverse(g));
  }
  return result;
}

Word iota_word(const Word& w) {
  if (w.p() != 2) throw WrongArity("iota embeds F_2 words only");
  Word out(3);
  for (const Letter& l : w.letters())
    out.append(Letter(l.index * 2, l.exponent));
  return out;
}

Word alpha_word(const Word& w) {
  if (w.p() != 3) throw WrongArity("alpha maps F_3 words only");
  Word out(2);
  for (const Letter& l : w.letters()) {
    if (l.exponent == 1) {
      out.append(Letter(l.index, 1));
      out.append(Letter(l.index + 1, 1));
    } else {
      out.append(Letter(l.index + 1, -1));
      out.append(Letter(l.index, -1));
    }
  }
  return out;
}

std::string serialize_diagram(const TreeDiagram& d) {
  return serialize_tree(d.top) + "|" + serialize_tree(d.bottom);
}

TreeDiagram parse_diagram(std::string_view text, int p) {
  std::size_t bar = text.find('|');
  if (bar == std::string_view::npos)
    throw ParseError("diagram text must be top|bottom", 0);
  return {p, parse_tree(text.substr(0, bar), p),
          parse_tree(text.substr(bar + 1), p)};
}

namespace {

void pack_preorder(const TreePtr& t, std::string& bytes, int& bit) {
  if (bit == 8) {
    bytes.push_back('\0');
    bit = 0;
  }
  if (!t->is_leaf()) {
    bytes.back() |= static_cast<char>(1 << bit);
    ++bit;
    for (const TreePtr& c : t->children) pack_preorder(c, bytes, bit);
  } else {
    ++bit;
  }
}

std::string pack_tree(const TreePtr& t) {
  std::string bytes;
  int bit = 8;
  pack_preorder(t, bytes, bit);
  return bytes;
}

}  // namespace

std::string compact_key(const TreeDiagram& d) {
  std::string top = pack_tree(d.top);
  std::string key;
  key.reserve(4 + top.size() + 8);
  std::uint32_t len = static_cast<std::uint32_t>(top.size());
  for (int k = 0; k < 4; ++k)
    key.push_back(static_cast<char>((len >> (8 * k)) & 0xff));
  key += top;
  key += pack_tree(d.bottom);
  return key;
}

std::string to_json(const TreeDiagram& d) {
  nlohmann::json j;
  j["p"] = d.p;
  j["top"] = serialize_tree(d.top);
  j["bottom"] = serialize_tree(d.bottom);
  return j.dump();
}

}  // namespace fpgroups
