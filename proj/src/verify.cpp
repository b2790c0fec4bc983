#include "fpgroups/verify.hpp"

#include <random>
#include <sstream>

#include "fpgroups/completion.hpp"
#include "fpgroups/enumerate.hpp"
#include "fpgroups/errors.hpp"
#include "fpgroups/moments.hpp"
#include "fpgroups/oriented.hpp"
#include "fpgroups/planar_graph.hpp"
#include "fpgroups/rewriting.hpp"
#include "fpgroups/tree_diagram.hpp"

namespace fpgroups {

namespace {

using Rng = std::mt19937_64;

Word random_word(Rng& rng, std::size_t max_d, std::size_t max_index, int p) {
  std::uniform_int_distribution<std::size_t> length(1, max_d);
  std::uniform_int_distribution<std::size_t> index(0, max_index - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  Word w(p);
  std::size_t d = length(rng);
  for (std::size_t k = 0; k < d; ++k)
    w.append(Letter(Index(index(rng)), sign(rng) ? 1 : -1));
  return w;
}

// Normal form under a random redex choice; the composite structure (sign
// sort to fixpoint, then index sort) is kept, only the redex picked at each
// step varies.
Word normalize_random_strategy(const Word& w, Rng& rng) {
  std::vector<Letter> letters(w.letters());
  auto phase = [&](auto&& rule) {
    for (;;) {
      std::vector<std::size_t> redexes;
      for (std::size_t k = 0; k + 1 < letters.size(); ++k)
        if (rule(letters[k], letters[k + 1], w.p())) redexes.push_back(k);
      if (redexes.empty()) return;
      std::uniform_int_distribution<std::size_t> pick(0, redexes.size() - 1);
      std::size_t k = redexes[pick(rng)];
      auto rewritten = rule(letters[k], letters[k + 1], w.p());
      letters[k] = rewritten->first;
      letters[k + 1] = rewritten->second;
    }
  };
  phase([](const Letter& a, const Letter& b, int p) {
    return sign_sort_step(a, b, p);
  });
  phase([](const Letter& a, const Letter& b, int p) {
    return index_sort_step(a, b, p);
  });
  return Word(w.p(), std::move(letters));
}

bool normal_shape_ok(const Word& normal, int p) {
  std::size_t d = normal.size();
  std::size_t r = 0;
  while (r < d && normal.at(r + 1).exponent == 1) ++r;
  for (std::size_t l = r + 1; l <= d; ++l)
    if (normal.at(l).exponent != -1) return false;
  for (std::size_t l = 1; l + 1 <= r; ++l)
    if (!(normal.at(l).index + (p - 1) >= normal.at(l + 1).index)) return false;
  for (std::size_t l = r + 1; l + 1 <= d; ++l)
    if (!(normal.at(l).index <= normal.at(l + 1).index + (p - 1))) return false;
  return true;
}

// Length preservation, the d^2 step budget, the normal-form shape, and the
// index-drift bounds (d(p-1), halved for balanced words), for one word.
std::string check_trace(const Word& w) {
  NormalizationTrace trace = normalize(w);
  std::size_t d = w.size();
  if (trace.normal.size() != d) return "length not preserved: " + format_word(w);
  if (trace.steps > d * d)
    return "step budget exceeded on " + format_word(w) + " (" +
           std::to_string(trace.steps) + " steps)";
  if (!normal_shape_ok(trace.normal, w.p()))
    return "not in normal form: " + format_word(w) + " -> " +
           format_word(trace.normal);
  long long balance = 0;
  for (const Letter& l : w.letters()) balance += l.exponent;
  Index bound = Index(d) * (w.p() - 1);
  if (balance == 0) bound /= 2;
  for (std::size_t l = 1; l <= d; ++l) {
    Index drift =
        trace.normal.at(trace.tau(l)).index - w.at(l).index;
    if (drift > bound || -drift > bound)
      return "index drift out of bounds on " + format_word(w);
  }
  return "";
}

CheckResult make_result(const std::string& name, const std::string& failure,
                        const std::string& ok_detail) {
  return {name, failure.empty(), failure.empty() ? ok_detail : failure};
}

}  // namespace

std::vector<CheckResult> verify_rewrite(std::uint64_t seed) {
  std::vector<CheckResult> results;
  Rng rng(seed);

  {  // exhaustive small words + random deep words
    std::string failure;
    std::size_t tested = 0;
    for (int p : {2, 3}) {
      for_each_word_up_to(4, 3, p, [&](const Word& w) {
        if (failure.empty()) {
          ++tested;
          failure = check_trace(w);
        }
      });
    }
    for (int k = 0; k < 1500 && failure.empty(); ++k) {
      int p = std::vector<int>{2, 3, 5}[k % 3];
      ++tested;
      failure = check_trace(random_word(rng, 8, 10, p));
    }
    results.push_back(make_result(
        "normalize: length, step budget <= d^2, shape, index drift", failure,
        std::to_string(tested) + " words"));
  }

  {  // confluence spot-check
    std::string failure;
    for (int k = 0; k < 1000 && failure.empty(); ++k) {
      int p = std::vector<int>{2, 3, 5}[k % 3];
      Word w = random_word(rng, 8, 10, p);
      Word canonical = normalize(w).normal;
      for (int s = 0; s < 5; ++s) {
        if (normalize_random_strategy(w, rng) != canonical) {
          failure = "strategies disagree on " + format_word(w);
          break;
        }
      }
    }
    results.push_back(make_result(
        "normalize: confluent under 5 random redex strategies x 1000 words",
        failure, "1000 words"));
  }

  {  // evaluation preservation against the diagram oracle
    std::string failure;
    for (int p : {2, 3}) {
      for_each_word_up_to(4, 3, p, [&](const Word& w) {
        if (!failure.empty()) return;
        if (!diagram_equal(eval_word(w), eval_word(normalize(w).normal)))
          failure = "evaluation changed: " + format_word(w);
      });
    }
    results.push_back(make_result(
        "normalize: evaluation preserved (d <= 4, indices < 3, p in {2,3})",
        failure, "exhaustive"));
  }

  {  // palindrome criterion vs oracle, plus the neutral-word invariants
    std::string failure;
    std::size_t neutral_count = 0;
    for (int p : {2, 3}) {
      for_each_word_up_to(6, 3, p, [&](const Word& w) {
        if (!failure.empty()) return;
        bool neutral = is_neutral(w);
        if (neutral != is_trivial(eval_word(w))) {
          failure = "neutrality disagreement: " + format_word(w);
          return;
        }
        if (!neutral || w.empty()) return;
        ++neutral_count;
        std::size_t d = w.size();

        PairPartition partition = pair_partition(w);
        Index min_index = w.at(1).index;
        for (const Letter& l : w.letters())
          min_index = std::min(min_index, l.index);
        for (const auto& [a, b] : partition.pairs()) {
          if ((w.at(a).index == min_index) != (w.at(b).index == min_index)) {
            failure = "minimal-index pairing violated: " + format_word(w);
            return;
          }
        }

        Permutation inv = normalize(w).tau.inverse();
        Index gap = Index(d) * (w.p() - 1);
        for (std::size_t k = 1; k <= d / 2; ++k) {
          Index diff = w.at(inv(k)).index - w.at(inv(d - k + 1)).index;
          if (diff > gap || -diff > gap) {
            failure = "mirror-slot index gap violated: " + format_word(w);
            return;
          }
        }

        auto completed = complete_from_positives(skeleton_of(w));
        if (!completed || *completed != w)
          failure = "skeleton round-trip failed: " + format_word(w);
      });
    }
    results.push_back(make_result(
        "neutrality <=> trivial diagram; pairing, index gap and skeleton "
        "round-trip on every neutral word (d <= 6, indices < 3, p in {2,3})",
        failure, std::to_string(neutral_count) + " neutral words"));
  }

  return results;
}

std::vector<CheckResult> verify_trees(std::uint64_t seed) {
  std::vector<CheckResult> results;
  Rng rng(seed);

  {  // group laws on short products
    std::string failure;
    for (int p : {2, 3}) {
      std::vector<TreeDiagram> gens;
      for (int i = 0; i <= 4; ++i) {
        gens.push_back(generator_diagram(Index(i), p));
        gens.push_back(inverse(gens.back()));
      }
      TreeDiagram e = trivial_diagram(p);
      for (const TreeDiagram& a : gens) {
        if (!diagram_equal(multiply(a, e), reduce(a)) ||
            !diagram_equal(multiply(e, a), reduce(a)))
          failure = "identity law failed";
        if (!is_trivial(multiply(a, inverse(a))))
          failure = "inverse law failed";
      }
      for (std::size_t i = 0; i < gens.size() && failure.empty(); i += 3)
        for (std::size_t j = 0; j < gens.size() && failure.empty(); j += 2)
          for (std::size_t k = 0; k < gens.size() && failure.empty(); ++k) {
            TreeDiagram left = multiply(multiply(gens[i], gens[j]), gens[k]);
            TreeDiagram right = multiply(gens[i], multiply(gens[j], gens[k]));
            if (!diagram_equal(left, right)) failure = "associativity failed";
          }
    }
    results.push_back(
        make_result("diagrams: identity, inverse, associativity", failure,
                    "generators with indices <= 4, p in {2,3}"));
  }

  {  // defining relations
    std::string failure;
    for (int p : {2, 3, 4}) {
      for (int n = 1; n <= 6 && failure.empty(); ++n)
        for (int k = 0; k < n && failure.empty(); ++k) {
          TreeDiagram lhs = multiply(generator_diagram(Index(n), p),
                                     generator_diagram(Index(k), p));
          TreeDiagram rhs = multiply(generator_diagram(Index(k), p),
                                     generator_diagram(Index(n + p - 1), p));
          if (!diagram_equal(lhs, rhs)) {
            std::ostringstream msg;
            msg << "x_" << n << " x_" << k << " != x_" << k << " x_"
                << n + p - 1 << " at p=" << p;
            failure = msg.str();
          }
        }
    }
    results.push_back(make_result(
        "diagrams: x_n x_k = x_k x_{n+p-1} for k < n <= 6, p in {2,3,4}",
        failure, "exhaustive"));
  }

  {  // abelianization anchors and homomorphism
    std::string failure;
    if (abelianization(generator_diagram(Index(0), 2)) != AbelianImage{1, -1})
      failure = "pi(y_0) != (1,-1)";
    for (int k = 1; k <= 5 && failure.empty(); ++k)
      if (abelianization(generator_diagram(Index(k), 2)) !=
          AbelianImage{0, -1})
        failure = "pi(y_k) != (0,-1)";
    for (int trial = 0; trial < 200 && failure.empty(); ++trial) {
      Word a = random_word(rng, 6, 6, 2);
      Word b = random_word(rng, 6, 6, 2);
      AbelianImage im_a = abelianization(eval_word(a));
      AbelianImage im_b = abelianization(eval_word(b));
      AbelianImage im_ab = abelianization(eval_word(a * b));
      if (im_ab.left != im_a.left + im_b.left ||
          im_ab.right != im_a.right + im_b.right)
        failure = "pi not additive on " + format_word(a) + " | " +
                  format_word(b);
    }
    results.push_back(make_result(
        "abelianization: anchors pi(y_0)=(1,-1), pi(y_k)=(0,-1); additive",
        failure, "anchors k <= 5 plus 200 random products"));
  }

  {  // shifts
    std::string failure;
    for (int i = 0; i <= 5 && failure.empty(); ++i) {
      if (!diagram_equal(shift_right(generator_diagram(Index(i), 2)),
                         generator_diagram(Index(i + 1), 2)))
        failure = "shift_right(y_i) != y_{i+1}";
    }
    if (failure.empty() && !is_trivial(shift_left(trivial_diagram(2))))
      failure = "shift_left(e) != e";
    if (failure.empty() && !is_trivial(shift_right(trivial_diagram(3))))
      failure = "shift_right(e) != e in F_3";
    results.push_back(make_result(
        "shifts: shift_right(y_i) = y_{i+1} (i <= 5), shifts fix e", failure,
        "exhaustive"));
  }

  {  // iota is a homomorphism: neutral words stay neutral in F_3
    std::string failure;
    for_each_word_up_to(4, 3, 2, [&](const Word& w) {
      if (!failure.empty()) return;
      if (is_trivial(eval_word(w)) != is_trivial(eval_word(iota_word(w))))
        failure = "iota broke neutrality of " + format_word(w);
    });
    results.push_back(make_result(
        "iota: F_2 words are neutral iff their F_3 images are (d <= 4)",
        failure, "exhaustive, indices < 3"));
  }

  {  // alpha lands in the oriented subgroup
    std::string failure;
    std::size_t count = 0;
    for_each_word_up_to(3, 3, 3, [&](const Word& w) {
      if (!failure.empty()) return;
      ++count;
      if (theta(alpha_word(w)) != 1)
        failure = "alpha image not oriented: " + format_word(w);
    });
    results.push_back(make_result(
        "alpha: every F_3 word maps into the oriented subgroup (d <= 3)",
        failure, std::to_string(count) + " words"));
  }

  {  // reduction: idempotent and order-independent
    std::string failure;
    for (int trial = 0; trial < 100 && failure.empty(); ++trial) {
      int p = trial % 2 == 0 ? 2 : 3;
      Word w = random_word(rng, 5, 4, p);
      TreeDiagram g = eval_word(w);
      if (!diagram_equal(reduce(g), g)) {
        failure = "reduce not idempotent";
        break;
      }
      // Random single-caret removal must land on the same reduced diagram.
      TreeDiagram current = g;
      std::uniform_int_distribution<std::size_t> leaf_pick;
      for (int round = 0; round < 4; ++round) {
        std::size_t m = leaf_count(current.top);
        std::size_t at = leaf_pick(rng) % m;
        auto graft = [&](const TreePtr& t) {
          // replace leaf `at` with a caret
          std::size_t cursor = 0;
          auto rec = [&](auto&& self, const TreePtr& node) -> TreePtr {
            if (node->is_leaf()) {
              if (cursor++ == at)
                return make_internal(
                    std::vector<TreePtr>(static_cast<std::size_t>(p),
                                         make_leaf()));
              return node;
            }
            std::vector<TreePtr> children;
            for (const TreePtr& c : node->children)
              children.push_back(self(self, c));
            return make_internal(std::move(children));
          };
          return rec(rec, t);
        };
        current = TreeDiagram{p, graft(current.top), graft(current.bottom)};
      }
      if (!diagram_equal(reduce(current), g))
        failure = "inflated representative reduced differently";
    }
    results.push_back(make_result(
        "reduce: idempotent; inflated representatives reduce back", failure,
        "100 random diagrams"));
  }

  return results;
}

std::vector<CheckResult> verify_oriented(std::uint64_t seed) {
  std::vector<CheckResult> results;
  Rng rng(seed);

  {  // theta (graph route) agrees with the parity stabilizer test, and both
     // respect inverses and shifts
    std::string failure;
    std::size_t count = 0;
    for_each_word_up_to(4, 4, 2, [&](const Word& w) {
      if (!failure.empty()) return;
      ++count;
      int t = theta(w);
      TreeDiagram g = eval_word(w);
      if ((t == 1) != parity_membership(g)) {
        failure = "theta vs parity disagreement on " + format_word(w);
        return;
      }
      if (t != theta(w.inverse())) {
        failure = "theta not inverse-closed on " + format_word(w);
        return;
      }
      // phi_R at word level: y_i -> y_{i+1}
      Word shifted(2);
      for (const Letter& l : w.letters())
        shifted.append(Letter(l.index + 1, l.exponent));
      if (t != theta(shifted)) {
        failure = "theta not invariant under the right shift of " +
                  format_word(w);
        return;
      }
      if (parity_membership(shift_right(g)) != (t == 1) ||
          parity_membership(shift_left(g)) != (t == 1))
        failure = "membership not shift-invariant on " + format_word(w);
    });
    results.push_back(make_result(
        "theta <=> parity stabilizer, inverse- and shift-invariant "
        "(all words over {y_0..y_3}^± with d <= 4)",
        failure, std::to_string(count) + " words"));
  }

  {  // length-two characterization
    std::string failure;
    for (int i = 0; i <= 6 && failure.empty(); ++i)
      for (int j = 0; j <= 6 && failure.empty(); ++j)
        for (int m : {1, -1})
          for (int n : {1, -1}) {
            Word w(2);
            w.append(Letter(Index(i), m));
            w.append(Letter(Index(j), n));
            bool value = theta(w) == 1;
            bool neutral = i == j && m == -n;
            bool expected =
                (j == i + 1 && m == 1 && n == 1) ||
                (i == j + 1 && m == -1 && n == -1) || neutral;
            if (value != expected) {
              std::ostringstream msg;
              msg << "length-two characterization off at i=" << i
                  << " j=" << j << " m=" << m << " n=" << n;
              failure = msg.str();
            }
          }
    results.push_back(make_result(
        "theta(y_i^m y_j^n) = 1 iff j=i+1,m=n=1 or i=j+1,m=n=-1 "
        "(or the word cancels), i,j <= 6",
        failure, "exhaustive"));
  }

  {  // graph shape and representative independence
    std::string failure;
    for (int trial = 0; trial < 150 && failure.empty(); ++trial) {
      Word w = random_word(rng, 5, 4, 2);
      TreeDiagram g = eval_word(iota_word(w));
      PlanarGraph graph = planar_graph(g);
      std::size_t k = internal_count(g.top);
      if (graph.vertex_count != k + 1 || graph.edges.size() != 2 * k) {
        failure = "graph shape (k+1 vertices, 2k edges) violated";
        break;
      }
      int verdict = chromatic_at_two(graph);  // also asserts connectivity
      // inflate with 3 random opposing carets; verdict must not move
      TreeDiagram inflated = g;
      for (int round = 0; round < 3; ++round) {
        std::size_t m = leaf_count(inflated.top);
        std::uniform_int_distribution<std::size_t> pick(0, m - 1);
        std::size_t at = pick(rng);
        std::size_t cursor = 0;
        auto rec = [&](auto&& self, const TreePtr& node) -> TreePtr {
          if (node->is_leaf()) {
            if (cursor++ == at)
              return make_internal(
                  std::vector<TreePtr>(3, make_leaf()));
            return node;
          }
          std::vector<TreePtr> children;
          for (const TreePtr& c : node->children)
            children.push_back(self(self, c));
          return make_internal(std::move(children));
        };
        TreePtr top = rec(rec, inflated.top);
        cursor = 0;
        TreePtr bottom = rec(rec, inflated.bottom);
        inflated = TreeDiagram{3, top, bottom};
      }
      if (chromatic_at_two(planar_graph(inflated)) != verdict)
        failure = "bipartiteness verdict changed on an unreduced diagram";
    }
    results.push_back(make_result(
        "planar graph: k+1 vertices / 2k edges, connected; verdict stable "
        "under caret inflation",
        failure, "150 random diagrams"));
  }

  return results;
}

std::vector<CheckResult> verify_moments(std::uint64_t /*seed*/) {
  std::vector<CheckResult> results;

  {  // engine equivalence
    std::string failure;
    for (int p : {2, 3})
      for (std::size_t d : {2u, 4u, 6u})
        for (std::size_t n : {1u, 2u}) {
          if (count_neutral_brute(d, n, p) != count_neutral_mitm(d, n, p))
            failure = "gamma engines disagree";
        }
    for (std::size_t d : {2u, 3u, 4u})
      for (std::size_t n : {1u, 2u})
        if (theta_moment_unnormalized(d, n, Engine::brute) !=
            theta_moment_unnormalized(d, n, Engine::mitm))
          failure = "theta engines disagree";
    results.push_back(make_result(
        "engines agree: brute = mitm (gamma, d <= 6), brute = folded (theta)",
        failure, "exhaustive grid"));
  }

  {  // odd moments vanish (by direct enumeration, no parity shortcut)
    std::string failure;
    for (int p : {2, 3})
      for (std::size_t d : {1u, 3u, 5u})
        for (std::size_t n : {1u, 2u, 3u}) {
          Count neutral = 0;
          for_each_word(d, n, p, [&](const Word& w) {
            if (is_neutral(w)) ++neutral;
          });
          if (neutral != 0) failure = "odd gamma moment nonzero";
        }
    for (std::size_t d : {1u, 3u, 5u})
      for (std::size_t n : {1u, 2u, 3u})
        if (theta_moment_unnormalized(d, n) != 0)
          failure = "odd theta moment nonzero";
    results.push_back(make_result("odd moments vanish (d in {1,3,5}, n <= 3)",
                                  failure, "enumerated directly"));
  }

  {  // second-order theta row and the n=1 column
    std::string failure;
    for (std::size_t n = 1; n <= 9; ++n)
      if (theta_moment_unnormalized(2, n) != Count(4 * n - 2))
        failure = "c_n^2 != 4n-2 at n=" + std::to_string(n);
    for (std::size_t d : {2u, 4u, 6u, 8u, 10u})
      if (theta_moment_unnormalized(d, 1, Engine::mitm) !=
          binomial(Count(d), Count(d / 2)))
        failure = "c_1^d != C(d, d/2) at d=" + std::to_string(d);
    results.push_back(make_result(
        "c_n^2 = 4n-2 (n <= 9); c_1^d = C(d,d/2) (d <= 10)", failure,
        "exact"));
  }

  {  // tau census: totals and bounds
    std::string failure;
    for (std::size_t n : {1u, 2u, 3u, 4u}) {
      TauHistogram hist = tau_histogram(2, n, 2);
      if (hist.counts.size() != 2)
        failure = "d=2 must realize exactly two permutations";
      for (const auto& [tau, c] : hist.counts)
        if (c != Count(n)) failure = "N(2,n,tau) != n";
    }
    if (failure.empty()) {
      BoundReport report = bound_report(tau_histogram(2, 10, 2));
      if (!report.totals_match) failure = "totals mismatch at d=2, n=10";
      for (const TauBoundRow& row : report.rows) {
        if (row.printed_skipped || row.printed_ok)
          failure = "printed bound unexpectedly holds at d=2, n=10";
        if (!row.corrected_ok) failure = "corrected bound fails at d=2, n=10";
      }
      report = bound_report(tau_histogram(2, 20, 2));
      for (const TauBoundRow& row : report.rows)
        if (!row.lower_applicable || !row.lower_ok)
          failure = "lower bound fails at d=2, n=20";
    }
    results.push_back(make_result(
        "tau census: N(2,n,tau)=n; printed upper bound fails at n=10 "
        "(erratum) while corrected holds; lower bound holds at n=20",
        failure, "d=2 grid"));
  }

  {  // divergence trend of the fourth theta moment
    std::string failure;
    Rational previous = 0;
    for (std::size_t n = 1; n <= 7; ++n) {
      Rational value = theta_moment(4, n, Engine::mitm);
      if (!(value > previous)) failure = "theta(s_n^4) not increasing";
      previous = value;
    }
    results.push_back(make_result(
        "theta(s_n^4) strictly increases for n = 1..7", failure,
        "folded engine"));
  }

  {  // rainbow census
    std::string failure;
    for (std::size_t d : {2u, 4u, 6u}) {
      Count expected = double_factorial(d);
      for (const auto& [partition, c] : rainbow_count(d))
        if (c != expected)
          failure = "rainbow count != d!! at d=" + std::to_string(d);
    }
    results.push_back(make_result(
        "every pair partition maps to the rainbow under exactly d!! "
        "permutations (d in {2,4,6})",
        failure, "exhaustive"));
  }

  {  // worker-count determinism
    std::string failure;
    MomentRequest req;
    req.p = 2;
    req.d = 4;
    req.n_values = {1, 2, 3};
    req.state = State::gamma;
    req.engine = Engine::brute;
    req.workers = 1;
    std::string serial = to_csv(moment_table(req));
    req.workers = 3;
    if (to_csv(moment_table(req)) != serial)
      failure = "worker count changed the table";
    results.push_back(
        make_result("moment tables identical for any worker count", failure,
                    "workers 1 vs 3"));
  }

  return results;
}

}  // namespace fpgroups
