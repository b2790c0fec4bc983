#pragma once

#include <map>
#include <optional>
#include <vector>

#include "fpgroups/rewriting.hpp"
#include "fpgroups/word.hpp"

namespace fpgroups {

/// A neutral word with the negative indices forgotten: exponents, the
/// indices of the positive letters, and the pair partition.
struct WordSkeleton {
  int p = 2;
  std::size_t d = 0;
  std::vector<int> exponents;             // size d, entries +1/-1
  std::map<std::size_t, Index> known;     // positive position -> index
  PairPartition partition;

  /// Throws std::invalid_argument when malformed (unbalanced pairs, knowns
  /// not matching the positive positions, ...).
  void validate() const;
};

/// Skeleton of a neutral word (throws NotNeutral otherwise).
WordSkeleton skeleton_of(const Word& w);

/// The unique neutral word agreeing with the skeleton, obtained by
/// recursively peeling the minimal known index and undoing the
/// position-determined (p-1)-shifts. Returns nothing when no completion
/// exists (a forced index is negative or the result fails to verify).
std::optional<Word> complete_from_positives(const WordSkeleton& s);

/// Reconstructs the unique neutral word with normalization permutation tau
/// from the indices of the positive half. half[l-1] = i(tau^-1(l)) for
/// l in [d/2]; eps must put +1 exactly on the positions tau maps into the
/// first half. The symbolic normal form is computed by resolving every
/// index comparison from the pair ids alone, which inequality (gap
/// condition) i(tau^-1(l)) < i(tau^-1(l-1)) - (4p-4)d guarantees sound; the
/// result is always re-verified by normalize. When the gap condition fails
/// the verification path still serves inputs whose completion happens to
/// exist, and PreconditionViolated is thrown otherwise. VerificationFailed
/// signals a bug (gap held, verification failed).
Word complete_from_tau(const Permutation& tau, const std::vector<int>& eps,
                       const std::vector<Index>& half, int p);

/// True iff the gap condition above holds for the given half indices.
bool tau_gap_condition(const std::vector<Index>& half, std::size_t d, int p);

}  // namespace fpgroups
