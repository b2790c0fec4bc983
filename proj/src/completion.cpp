#include "fpgroups/completion.hpp"

#include <algorithm>
#include <stdexcept>

#include "fpgroups/errors.hpp"

namespace fpgroups {

void WordSkeleton::validate() const {
  if (p < 2) throw std::invalid_argument("skeleton: p must be >= 2");
  if (d % 2 != 0 || exponents.size() != d)
    throw std::invalid_argument("skeleton: d must be even and match exponents");
  if (partition.d() != d)
    throw std::invalid_argument("skeleton: partition does not cover {1..d}");
  for (int e : exponents)
    if (e != 1 && e != -1)
      throw std::invalid_argument("skeleton: exponents must be +1/-1");
  for (const auto& [a, b] : partition.pairs())
    if (exponents[a - 1] + exponents[b - 1] != 0)
      throw std::invalid_argument(
          "skeleton: every pair needs one positive and one negative position");
  for (std::size_t l = 1; l <= d; ++l) {
    bool positive = exponents[l - 1] == 1;
    if (positive != (known.count(l) > 0))
      throw std::invalid_argument(
          "skeleton: known indices must cover exactly the positive positions");
  }
  for (const auto& [pos, idx] : known)
    if (idx < 0) throw std::invalid_argument("skeleton: indices must be >= 0");
}

WordSkeleton skeleton_of(const Word& w) {
  WordSkeleton s;
  s.p = w.p();
  s.d = w.size();
  s.partition = pair_partition(w);  // throws NotNeutral
  for (std::size_t l = 1; l <= w.size(); ++l) {
    s.exponents.push_back(w.at(l).exponent);
    if (w.at(l).exponent == 1) s.known[l] = w.at(l).index;
  }
  return s;
}

std::optional<Word> complete_from_positives(const WordSkeleton& s) {
  s.validate();
  const int p = s.p;
  const Index shift_unit = p - 1;

  struct Entry {
    std::size_t pos;  // original 1-based position
    int exponent;
    Index value;       // original index, once determined
    bool determined;
    Index shift;       // accumulated push-system shift at the current level
  };
  std::vector<Entry> active;
  for (std::size_t l = 1; l <= s.d; ++l) {
    Entry e{l, s.exponents[l - 1], Index(0), false, Index(0)};
    if (auto it = s.known.find(l); it != s.known.end()) {
      e.value = it->second;
      e.determined = true;
    }
    active.push_back(std::move(e));
  }
  std::vector<Index> solution(s.d);

  while (!active.empty()) {
    // Minimal shifted index among the (all determined) positive letters.
    bool have_min = false;
    Index level_min = 0;
    for (const Entry& e : active) {
      if (e.exponent != 1) continue;
      Index current = e.value + e.shift;
      if (!have_min || current < level_min) {
        level_min = current;
        have_min = true;
      }
    }
    if (!have_min) return std::nullopt;  // cannot happen for valid skeletons

    // The partners of the minimal letters sit at the same level index
    // (a letter can only cancel against an equal-index inverse).
    std::vector<std::size_t> peel_positive, peel_negative;
    for (const Entry& e : active)
      if (e.exponent == 1 && e.value + e.shift == level_min)
        peel_positive.push_back(e.pos);
    for (std::size_t pos : peel_positive)
      peel_negative.push_back(s.partition.partner(pos));

    for (std::size_t pos : peel_negative) {
      auto it = std::find_if(active.begin(), active.end(),
                             [&](const Entry& e) { return e.pos == pos; });
      if (it == active.end() || it->exponent != -1 || it->determined)
        return std::nullopt;
      Index original = level_min - it->shift;
      if (original < 0) return std::nullopt;
      it->value = original;
      it->determined = true;
    }

    // Every remaining letter gains p-1 per minimal letter it is crossed by:
    // positives travel to the left boundary, negatives to the right.
    auto is_peeled = [&](std::size_t pos) {
      return std::find(peel_positive.begin(), peel_positive.end(), pos) !=
                 peel_positive.end() ||
             std::find(peel_negative.begin(), peel_negative.end(), pos) !=
                 peel_negative.end();
    };
    for (Entry& e : active) {
      if (is_peeled(e.pos)) continue;
      Index crossings = 0;
      for (std::size_t pos : peel_positive)
        if (pos > e.pos) ++crossings;
      for (std::size_t pos : peel_negative)
        if (pos < e.pos) ++crossings;
      e.shift += shift_unit * crossings;
    }

    for (auto it = active.begin(); it != active.end();) {
      if (is_peeled(it->pos)) {
        solution[it->pos - 1] = it->value;
        it = active.erase(it);
      } else {
        ++it;
      }
    }
  }

  std::vector<Letter> letters;
  letters.reserve(s.d);
  for (std::size_t l = 1; l <= s.d; ++l)
    letters.emplace_back(solution[l - 1], s.exponents[l - 1]);
  Word candidate(p, std::move(letters));

  // The construction found the only possible completion; accept it only if
  // it is genuinely neutral with the requested pairing.
  if (!is_neutral(candidate)) return std::nullopt;
  if (pair_partition(candidate) != s.partition) return std::nullopt;
  return candidate;
}

bool tau_gap_condition(const std::vector<Index>& half, std::size_t d, int p) {
  const Index gap = Index(4 * p - 4) * Index(d);
  for (std::size_t l = 2; l <= half.size(); ++l)
    if (!(half[l - 1] < half[l - 2] - gap)) return false;
  return true;
}

namespace {

struct Token {
  std::size_t pair;  // 1..d/2
  int exponent;
  Index offset;      // accumulated index change, may be negative
};

}  // namespace

Word complete_from_tau(const Permutation& tau, const std::vector<int>& eps,
                       const std::vector<Index>& half, int p) {
  const std::size_t d = tau.size();
  if (p < 2) throw std::invalid_argument("p must be >= 2");
  if (d == 0 || d % 2 != 0) throw std::invalid_argument("d must be even, > 0");
  if (eps.size() != d || half.size() != d / 2)
    throw std::invalid_argument("eps must have size d, half size d/2");
  Permutation inv = tau.inverse();
  for (std::size_t l = 1; l <= d; ++l) {
    int expected = l <= d / 2 ? 1 : -1;
    if (eps[inv(l) - 1] != expected)
      throw std::invalid_argument(
          "eps must be +1 exactly on positions tau maps into the first half");
  }
  for (const Index& i : half)
    if (i < 0) throw std::invalid_argument("half indices must be >= 0");

  const bool gap_ok = tau_gap_condition(half, d, p);
  const Index unit = p - 1;

  // Symbolic normalization: letters are tracked as (pair id, offset) and
  // every comparison the rules need is resolved from the pair ids, which is
  // what the gap condition licenses. Positive letter at position l belongs
  // to pair tau(l); negative letter at position l to pair d - tau(l) + 1.
  std::vector<Token> tokens;
  for (std::size_t l = 1; l <= d; ++l) {
    if (eps[l - 1] == 1)
      tokens.push_back({tau(l), 1, Index(0)});
    else
      tokens.push_back({d - tau(l) + 1, -1, Index(0)});
  }

  auto run = [&](auto&& applies) {
    std::size_t k = 0;
    while (k + 1 < tokens.size()) {
      if (applies(tokens[k], tokens[k + 1])) {
        std::swap(tokens[k], tokens[k + 1]);
        k = k > 0 ? k - 1 : 0;
      } else {
        ++k;
      }
    }
  };

  // Sign-sort phase: adjacent (negative of pair m, positive of pair k).
  // Pair ids order the true indices reversely (pair 1 holds the largest),
  // so m > k means the positive letter has the larger index.
  run([&](Token& a, Token& b) {
    if (a.exponent != -1 || b.exponent != 1) return false;
    if (a.pair > b.pair)
      b.offset += unit;
    else if (a.pair < b.pair)
      a.offset += unit;
    return true;
  });
  // Index-sort phase, positives: out of order when left pair id exceeds
  // right pair id; the right (larger-index) letter moves left losing p-1.
  run([&](Token& a, Token& b) {
    if (a.exponent != 1 || b.exponent != 1 || a.pair <= b.pair) return false;
    b.offset -= unit;
    return true;
  });
  // Negatives: normal order is descending pair id; the left letter of an
  // out-of-order pair moves right losing p-1.
  run([&](Token& a, Token& b) {
    if (a.exponent != -1 || b.exponent != -1 || a.pair >= b.pair) return false;
    a.offset -= unit;
    return true;
  });

  auto fail = [&](const std::string& why) -> Word {
    if (!gap_ok)
      throw PreconditionViolated("gap condition fails and " + why);
    throw VerificationFailed(why);
  };

  // Expected slot layout: pair l at slot l and at slot d-l+1.
  std::vector<Index> positive_offset(d / 2), negative_offset(d / 2);
  for (std::size_t slot = 1; slot <= d; ++slot) {
    const Token& t = tokens[slot - 1];
    std::size_t expected_pair = slot <= d / 2 ? slot : d - slot + 1;
    int expected_exp = slot <= d / 2 ? 1 : -1;
    if (t.pair != expected_pair || t.exponent != expected_exp)
      return fail("symbolic normal form has unexpected slot layout");
    (expected_exp == 1 ? positive_offset : negative_offset)[expected_pair - 1] =
        t.offset;
  }

  // Palindromic normal form forces the unknown half:
  // i(tau^-1(d-k+1)) = i(tau^-1(k)) + q_k - r_k.
  std::vector<Index> full(d);
  for (std::size_t k = 1; k <= d / 2; ++k) {
    full[inv(k) - 1] = half[k - 1];
    Index forced = half[k - 1] + positive_offset[k - 1] - negative_offset[k - 1];
    if (forced < 0) return fail("forced index is negative");
    full[inv(d - k + 1) - 1] = forced;
  }
  std::vector<Letter> letters;
  for (std::size_t l = 1; l <= d; ++l) letters.emplace_back(full[l - 1], eps[l - 1]);
  Word candidate(p, std::move(letters));

  NormalizationTrace trace = normalize(candidate);
  bool neutral = is_neutral(candidate);
  if (!neutral || trace.tau != tau)
    return fail("completed word does not normalize back to the given tau");
  return candidate;
}

}  // namespace fpgroups
