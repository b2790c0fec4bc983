#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fpgroups/numeric.hpp"
#include "fpgroups/permutation.hpp"
#include "fpgroups/rewriting.hpp"

namespace fpgroups {

/// Word-count guard for the enumeration engines.
struct EnumerationBudget {
  std::uint64_t max_words = 50'000'000;
};

enum class Engine { brute, mitm };
enum class State { gamma, theta };

struct MomentRequest {
  int p = 2;
  std::size_t d = 0;
  std::vector<std::size_t> n_values;
  State state = State::gamma;
  Engine engine = Engine::brute;
  EnumerationBudget budget;
  unsigned workers = 1;
};

/// |W_0(d,n)|: neutral words of length d over the first n generators,
/// counted by exhaustive DFS (odd d is 0 without enumeration).
Count count_neutral_brute(std::size_t d, std::size_t n, int p,
                          const EnumerationBudget& budget = {},
                          unsigned workers = 1);

/// Same quantity via meet-in-the-middle: half words are bucketed by the
/// reduced diagram of their evaluation and joined on inverse keys.
Count count_neutral_mitm(std::size_t d, std::size_t n, int p,
                         const EnumerationBudget& budget = {},
                         unsigned workers = 1);

/// gamma(s_n^d) = |W_0(d,n)| / (2n)^{d/2}, exact.
Rational gamma_moment(std::size_t d, std::size_t n, int p,
                      Engine engine = Engine::brute,
                      const EnumerationBudget& budget = {},
                      unsigned workers = 1);

/// Un-normalized theta moment c_n^d = (sqrt(2n))^d theta(s_n^d): the number
/// of length-d words over {y_0..y_{n-1}}^{+-1} landing in the oriented
/// subgroup. Engine::brute walks the words; Engine::mitm folds letter by
/// letter over a map reduced-diagram -> count and applies theta at the end.
/// p = 2 always.
Count theta_moment_unnormalized(std::size_t d, std::size_t n,
                                Engine engine = Engine::brute,
                                const EnumerationBudget& budget = {},
                                unsigned workers = 1);

/// theta(s_n^d) = c_n^d / (2n)^{d/2}, exact.
Rational theta_moment(std::size_t d, std::size_t n,
                      Engine engine = Engine::brute,
                      const EnumerationBudget& budget = {},
                      unsigned workers = 1);

/// N(d,n,tau) for every permutation realized by a neutral word.
struct TauHistogram {
  std::size_t d = 0, n = 0;
  int p = 2;
  std::map<Permutation, Count> counts;
  Count total = 0;  // equals |W_0(d,n)|
};

TauHistogram tau_histogram(std::size_t d, std::size_t n, int p,
                           Engine engine = Engine::brute,
                           const EnumerationBudget& budget = {});

/// Bound check for one tau. The bound printed in the source,
/// C(n - d(d+1)(p-1), d/2), fails already at d = 2; the injection in its
/// proof gives C(n + d(d+1)(p-1), d/2), which is what `corrected` holds.
/// Rows where the printed binomial is empty (upper argument < d/2) are
/// marked skipped rather than failed. The lower bound
/// C(n - d(p-1) - d(4p-4) - (d^2/2)(4p-4), d/2) applies once n clears its
/// threshold.
struct TauBoundRow {
  Permutation tau;
  Count n_words;
  Count lower;
  bool lower_applicable = false;
  bool lower_ok = true;
  Count upper_printed;
  bool printed_skipped = false;
  bool printed_ok = true;
  Count upper_corrected;
  bool corrected_ok = true;
  Rational normalized;    // 2^{d/2} N(d,n,tau) / (2n)^{d/2}
  Rational trend_target;  // its n -> infinity limit, 1/(d/2)!
};

struct BoundReport {
  std::size_t d = 0, n = 0;
  int p = 2;
  std::vector<TauBoundRow> rows;
  bool totals_match = false;  // sum over tau of N == |W_0(d,n)|
};

/// Checks the rows for every balanced tau in S_d (d <= 8), using the
/// histogram's counts (absent taus have N = 0).
BoundReport bound_report(const TauHistogram& hist);

std::string to_json(const BoundReport& report);

/// For each pair partition of [d], the number of tau in S_d mapping it to
/// the rainbow partition; each value equals d!!. d <= 8.
std::map<PairPartition, Count> rainbow_count(std::size_t d);

/// One batch cell. Budget overruns are recorded in-row.
struct MomentRow {
  State state;
  int p;
  std::size_t d, n;
  std::optional<Count> count;         // |W_0(d,n)| or c_n^d
  std::optional<Rational> normalized; // gamma(s_n^d) or theta(s_n^d)
  std::string error;                  // empty when ok
};

struct MomentTable {
  std::vector<MomentRow> rows;
};

/// Deterministic for fixed request regardless of worker count.
MomentTable moment_table(const MomentRequest& req);

std::string to_csv(const MomentTable& table);
std::string to_json(const MomentTable& table);

}  // namespace fpgroups
