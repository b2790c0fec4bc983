#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fpgroups/permutation.hpp"
#include "fpgroups/word.hpp"

namespace fpgroups {

/// Partition of {1..d} into d/2 unordered pairs of original word positions.
class PairPartition {
 public:
  PairPartition() = default;

  /// Pairs may come in any order/orientation; they are canonicalized
  /// (each pair (a,b) with a < b, pairs sorted). Throws std::invalid_argument
  /// unless the pairs are disjoint and cover {1..d}.
  explicit PairPartition(std::vector<std::pair<std::size_t, std::size_t>> pairs);

  std::size_t d() const { return 2 * pairs_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const {
    return pairs_;
  }

  /// Rainbow partition {1,d}, {2,d-1}, ...
  static PairPartition rainbow(std::size_t d);

  /// Image under a permutation of positions: {a,b} -> {tau(a), tau(b)}.
  PairPartition map(const Permutation& tau) const;

  /// Position of the partner of l.
  std::size_t partner(std::size_t l) const;

  friend bool operator==(const PairPartition&, const PairPartition&) = default;
  friend auto operator<=>(const PairPartition& a, const PairPartition& b) {
    return a.pairs_ <=> b.pairs_;
  }

  std::string to_string() const;  // "{{1,4},{2,3}}"

 private:
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

/// Result of rewriting a word to its normal form: positive letters first,
/// then negative, with the index-gap conditions on each part. tau sends each
/// letter's original position to its final slot.
struct NormalizationTrace {
  Word normal;
  Permutation tau;
  std::size_t steps = 0;

  NormalizationTrace() : normal(2) {}
};

/// Rewrites an adjacent (x_a^{-1}, x_b) pair so the positive letter comes
/// first, shifting one index by p-1 according to which of a > b, a < b,
/// a = b holds. Returns nothing when the pair has any other sign pattern.
std::optional<std::pair<Letter, Letter>> sign_sort_step(const Letter& a,
                                                        const Letter& b, int p);

/// Rewrites an adjacent same-sign pair whose indices violate the normal-form
/// gap condition: (x_a, x_b) with b-p+1 > a becomes (x_{b-p+1}, x_a), and
/// (x_a^{-1}, x_b^{-1}) with a-p+1 > b becomes (x_b^{-1}, x_{a-p+1}^{-1}).
/// Returns nothing when inapplicable.
std::optional<std::pair<Letter, Letter>> index_sort_step(const Letter& a,
                                                         const Letter& b, int p);

/// Unique normal form, with letter tracking. Canonical strategy: leftmost
/// applicable rule, sign-sort phase run to fixpoint before the index-sort
/// phase. By confluence the normal word does not depend on this choice.
NormalizationTrace normalize(const Word& w);

/// True iff the normal form is palindromic (x_{j(1)} .. x_{j(d/2)}
/// x_{j(d/2)}^{-1} .. x_{j(1)}^{-1}), i.e. iff the word evaluates to the
/// group identity.
bool is_neutral(const Word& w);

/// Original positions of the letters that cancel in the palindromic normal
/// form: { {tau^-1(k), tau^-1(d-k+1)} : k <= d/2 }. Throws NotNeutral.
PairPartition pair_partition(const Word& w);

/// Normal form under the push system that moves every letter of minimal
/// index i0 to the boundary: w ->* x_{i0}^r core x_{i0}^{-r'}, where crossed
/// letters gain p-1 per crossing and core contains no letter of index i0.
struct PeelResult {
  std::size_t r = 0;        // positive occurrences of the minimal index
  std::size_t r_prime = 0;  // negative occurrences
  Index min_index;
  Word core;

  PeelResult() : core(2) {}
};

/// Throws EmptyWord.
PeelResult peel_min_index(const Word& w);

/// {"normal": "...", "tau": [...], "steps": n} (tau 1-indexed).
std::string to_json(const NormalizationTrace& trace);

}  // namespace fpgroups
