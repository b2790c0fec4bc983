#include "fpgroups/rewriting.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "fpgroups/errors.hpp"

namespace fpgroups {

PairPartition::PairPartition(
    std::vector<std::pair<std::size_t, std::size_t>> pairs)
    : pairs_(std::move(pairs)) {
  for (auto& [a, b] : pairs_)
    if (a > b) std::swap(a, b);
  std::sort(pairs_.begin(), pairs_.end());
  std::size_t d = 2 * pairs_.size();
  std::vector<bool> seen(d, false);
  for (const auto& [a, b] : pairs_) {
    if (a < 1 || b > d || a == b || seen[a - 1] || seen[b - 1])
      throw std::invalid_argument("pairs must partition {1..d}");
    seen[a - 1] = seen[b - 1] = true;
  }
}

PairPartition PairPartition::rainbow(std::size_t d) {
  if (d % 2 != 0) throw std::invalid_argument("d must be even");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t k = 1; k <= d / 2; ++k) pairs.emplace_back(k, d - k + 1);
  return PairPartition(std::move(pairs));
}

PairPartition PairPartition::map(const Permutation& tau) const {
  std::vector<std::pair<std::size_t, std::size_t>> mapped;
  mapped.reserve(pairs_.size());
  for (const auto& [a, b] : pairs_) mapped.emplace_back(tau(a), tau(b));
  return PairPartition(std::move(mapped));
}

std::size_t PairPartition::partner(std::size_t l) const {
  for (const auto& [a, b] : pairs_) {
    if (a == l) return b;
    if (b == l) return a;
  }
  throw std::invalid_argument("position not covered by partition");
}

std::string PairPartition::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    if (k) out << ',';
    out << '{' << pairs_[k].first << ',' << pairs_[k].second << '}';
  }
  out << '}';
  return out.str();
}

std::optional<std::pair<Letter, Letter>> sign_sort_step(const Letter& a,
                                                        const Letter& b,
                                                        int p) {
  if (a.exponent != -1 || b.exponent != 1) return std::nullopt;
  if (a.index > b.index)
    return std::pair{Letter(b.index, 1), Letter(a.index + (p - 1), -1)};
  if (a.index < b.index)
    return std::pair{Letter(b.index + (p - 1), 1), Letter(a.index, -1)};
  return std::pair{Letter(b.index, 1), Letter(a.index, -1)};
}

std::optional<std::pair<Letter, Letter>> index_sort_step(const Letter& a,
                                                         const Letter& b,
                                                         int p) {
  if (a.exponent == 1 && b.exponent == 1 && b.index - (p - 1) > a.index)
    return std::pair{Letter(b.index - (p - 1), 1), Letter(a.index, 1)};
  if (a.exponent == -1 && b.exponent == -1 && a.index - (p - 1) > b.index)
    return std::pair{Letter(b.index, -1), Letter(a.index - (p - 1), -1)};
  return std::nullopt;
}

namespace {

struct TaggedLetter {
  Letter letter;
  std::size_t origin;  // 1-based original position
};

// Runs one rule to fixpoint with the leftmost-redex strategy. A rewrite at
// position k can only create new redexes at k-1 or k, so the scan resumes
// at k-1 instead of the front.
template <typename Rule>
std::size_t run_phase(std::vector<TaggedLetter>& letters, int p, Rule rule) {
  std::size_t steps = 0;
  std::size_t k = 0;
  while (letters.size() >= 2 && k + 1 < letters.size()) {
    auto rewritten = rule(letters[k].letter, letters[k + 1].letter, p);
    if (!rewritten) {
      ++k;
      continue;
    }
    letters[k].letter = rewritten->first;
    letters[k + 1].letter = rewritten->second;
    std::swap(letters[k].origin, letters[k + 1].origin);
    ++steps;
    k = k > 0 ? k - 1 : 0;
  }
  return steps;
}

}  // namespace

NormalizationTrace normalize(const Word& w) {
  std::vector<TaggedLetter> letters;
  letters.reserve(w.size());
  for (std::size_t l = 1; l <= w.size(); ++l)
    letters.push_back({w.at(l), l});

  NormalizationTrace trace;
  trace.steps = run_phase(letters, w.p(), sign_sort_step);
  trace.steps += run_phase(letters, w.p(), index_sort_step);

  Word normal(w.p());
  std::vector<std::size_t> tau(w.size());
  for (std::size_t slot = 1; slot <= letters.size(); ++slot) {
    normal.append(letters[slot - 1].letter);
    tau[letters[slot - 1].origin - 1] = slot;
  }
  trace.normal = std::move(normal);
  trace.tau = Permutation(std::move(tau));
  return trace;
}

namespace {

bool is_palindromic_normal(const Word& normal) {
  std::size_t d = normal.size();
  if (d % 2 != 0) return false;
  for (std::size_t l = 1; l <= d / 2; ++l) {
    if (normal.at(l).exponent != 1) return false;
    if (normal.at(d - l + 1).exponent != -1) return false;
    if (normal.at(l).index != normal.at(d - l + 1).index) return false;
  }
  return true;
}

}  // namespace

bool is_neutral(const Word& w) {
  if (w.size() % 2 != 0) return false;
  long long balance = 0;
  for (const Letter& l : w.letters()) balance += l.exponent;
  if (balance != 0) return false;
  return is_palindromic_normal(normalize(w).normal);
}

PairPartition pair_partition(const Word& w) {
  NormalizationTrace trace = normalize(w);
  if (!is_palindromic_normal(trace.normal))
    throw NotNeutral("pair_partition requires a neutral word");
  Permutation inv = trace.tau.inverse();
  std::size_t d = w.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t k = 1; k <= d / 2; ++k)
    pairs.emplace_back(inv(k), inv(d - k + 1));
  return PairPartition(std::move(pairs));
}

PeelResult peel_min_index(const Word& w) {
  if (w.empty()) throw EmptyWord("peel_min_index requires a nonempty word");
  const int p = w.p();
  Index min_index = w.at(1).index;
  for (const Letter& l : w.letters()) min_index = std::min(min_index, l.index);

  std::vector<Letter> letters(w.letters());
  // Push system: x_{i0} occurrences travel left, x_{i0}^{-1} right; every
  // crossed letter gains p-1.
  std::size_t k = 0;
  while (k + 1 < letters.size()) {
    Letter& a = letters[k];
    Letter& b = letters[k + 1];
    bool rewrote = false;
    if (b.index == min_index && b.exponent == 1 && a.index > min_index) {
      Letter moved = b;
      a.index += p - 1;
      b = a;
      a = moved;
      rewrote = true;
    } else if (a.index == min_index && a.exponent == -1 &&
               b.index > min_index) {
      Letter moved = a;
      b.index += p - 1;
      a = b;
      b = moved;
      rewrote = true;
    } else if (a.index == min_index && a.exponent == -1 &&
               b.index == min_index && b.exponent == 1) {
      std::swap(a, b);
      rewrote = true;
    }
    k = rewrote ? (k > 0 ? k - 1 : 0) : k + 1;
  }

  PeelResult result;
  result.min_index = min_index;
  result.core = Word(p);
  std::size_t front = 0;
  while (front < letters.size() && letters[front].index == min_index &&
         letters[front].exponent == 1)
    ++front;
  std::size_t back = letters.size();
  while (back > front && letters[back - 1].index == min_index &&
         letters[back - 1].exponent == -1)
    --back;
  result.r = front;
  result.r_prime = letters.size() - back;
  for (std::size_t i = front; i < back; ++i) {
    if (letters[i].index == min_index)
      throw Error("push system left a minimal-index letter in the core");
    result.core.append(letters[i]);
  }
  return result;
}

std::string to_json(const NormalizationTrace& trace) {
  nlohmann::json j;
  j["normal"] = format_word(trace.normal);
  j["tau"] = trace.tau.one_line();
  j["steps"] = trace.steps;
  return j.dump();
}

}  // namespace fpgroups
