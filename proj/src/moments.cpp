#include "fpgroups/moments.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "fpgroups/enumerate.hpp"
#include "fpgroups/errors.hpp"
#include "fpgroups/oriented.hpp"
#include "fpgroups/planar_graph.hpp"
#include "fpgroups/tree_diagram.hpp"

namespace fpgroups {

namespace {

Count pow_count(std::size_t base, std::size_t exp) {
  Count result = 1;
  for (std::size_t k = 0; k < exp; ++k) result *= base;
  return result;
}

void check_budget(std::size_t base, std::size_t exp,
                  const EnumerationBudget& budget) {
  if (pow_count(base, exp) > Count(budget.max_words))
    throw BudgetExceeded("enumeration of " + std::to_string(base) + "^" +
                         std::to_string(exp) + " words exceeds the budget");
}

Letter letter_for(std::size_t slot, std::size_t /*n*/) {
  return Letter(Index(slot / 2), slot % 2 == 0 ? 1 : -1);
}

// Runs fn(task) for task in [0, count) on the requested number of threads.
// Callers keep one result slot per task, so output never depends on the
// scheduling.
void run_tasks(unsigned workers, std::size_t count,
               const std::function<void(std::size_t)>& fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t t = 0; t < count; ++t) fn(t);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t t = next.fetch_add(1);
      if (t >= count) return;
      fn(t);
    }
  };
  std::vector<std::thread> pool;
  unsigned spawn = std::min<unsigned>(workers, static_cast<unsigned>(count));
  pool.reserve(spawn);
  for (unsigned k = 0; k < spawn; ++k) pool.emplace_back(worker);
  for (std::thread& th : pool) th.join();
}

template <typename Fn>
void enumerate_suffix(Word& w, std::size_t remaining, std::size_t n, Fn&& fn) {
  if (remaining == 0) {
    fn(static_cast<const Word&>(w));
    return;
  }
  for (std::size_t slot = 0; slot < 2 * n; ++slot) {
    w.append(letter_for(slot, n));
    enumerate_suffix(w, remaining - 1, n, fn);
    w.pop_back();
  }
}

// key layout from compact_key: 4-byte top length, top bits, bottom bits.
std::string inverse_of_key(const std::string& key) {
  std::uint32_t top_len = 0;
  for (int k = 0; k < 4; ++k)
    top_len |= static_cast<std::uint32_t>(static_cast<unsigned char>(key[k]))
               << (8 * k);
  std::string top = key.substr(4, top_len);
  std::string bottom = key.substr(4 + top_len);
  std::string out;
  std::uint32_t len = static_cast<std::uint32_t>(bottom.size());
  for (int k = 0; k < 4; ++k)
    out.push_back(static_cast<char>((len >> (8 * k)) & 0xff));
  out += bottom;
  out += top;
  return out;
}

using KeyCounts = std::unordered_map<std::string, std::uint64_t>;

// Distribution of eval over all (2n)^half words of the given length.
KeyCounts half_word_distribution(std::size_t half, std::size_t n, int p,
                                 unsigned workers) {
  if (half == 0) {
    KeyCounts out;
    out[compact_key(trivial_diagram(p))] = 1;
    return out;
  }
  std::size_t tasks = 2 * n;
  std::vector<KeyCounts> shards(tasks);
  run_tasks(workers, tasks, [&](std::size_t t) {
    Word w(p);
    w.append(letter_for(t, n));
    enumerate_suffix(w, half - 1, n, [&](const Word& word) {
      ++shards[t][compact_key(eval_word(word))];
    });
    w.pop_back();
  });
  KeyCounts merged;
  for (const KeyCounts& shard : shards)
    for (const auto& [key, c] : shard) merged[key] += c;
  return merged;
}

bool balanced(const Word& w) {
  long long sum = 0;
  for (const Letter& l : w.letters()) sum += l.exponent;
  return sum == 0;
}

}  // namespace

Count count_neutral_brute(std::size_t d, std::size_t n, int p,
                          const EnumerationBudget& budget, unsigned workers) {
  if (p < 2 || n == 0) throw std::invalid_argument("need p >= 2 and n >= 1");
  if (d == 0) return 1;
  if (d % 2 != 0) return 0;
  check_budget(2 * n, d, budget);

  std::size_t tasks = 2 * n;
  std::vector<Count> partial(tasks, Count(0));
  run_tasks(workers, tasks, [&](std::size_t t) {
    Count local = 0;
    Word w(p);
    w.append(letter_for(t, n));
    enumerate_suffix(w, d - 1, n, [&](const Word& word) {
      if (is_neutral(word)) ++local;
    });
    partial[t] = local;
  });
  Count total = 0;
  for (const Count& c : partial) total += c;
  return total;
}

Count count_neutral_mitm(std::size_t d, std::size_t n, int p,
                         const EnumerationBudget& budget, unsigned workers) {
  if (p < 2 || n == 0) throw std::invalid_argument("need p >= 2 and n >= 1");
  if (d == 0) return 1;
  if (d % 2 != 0) return 0;
  std::size_t half = d / 2;
  check_budget(2 * n, half, budget);

  KeyCounts distribution = half_word_distribution(half, n, p, workers);
  Count total = 0;
  for (const auto& [key, c] : distribution) {
    auto other = distribution.find(inverse_of_key(key));
    if (other != distribution.end()) total += Count(c) * Count(other->second);
  }
  return total;
}

Rational gamma_moment(std::size_t d, std::size_t n, int p, Engine engine,
                      const EnumerationBudget& budget, unsigned workers) {
  Count words = engine == Engine::brute
                    ? count_neutral_brute(d, n, p, budget, workers)
                    : count_neutral_mitm(d, n, p, budget, workers);
  if (d % 2 != 0) {
    if (words != 0) throw Error("odd-length neutral count must vanish");
    return 0;
  }
  return Rational(words, pow_count(2 * n, d / 2));
}

namespace {

// theta on the F_3 evaluation, memoized on the reduced diagram.
struct ThetaCache {
  std::unordered_map<std::string, int> values;

  int of(const TreeDiagram& g) {
    std::string key = compact_key(g);
    auto it = values.find(key);
    if (it != values.end()) return it->second;
    int value = chromatic_at_two(planar_graph(g)) / 2;
    values.emplace(std::move(key), value);
    return value;
  }
};

// Carries the running product while walking the word tree, so each letter
// costs one diagram multiplication instead of re-evaluating whole words.
std::uint64_t theta_count_from(const TreeDiagram& g, std::size_t remaining,
                               std::size_t n, ThetaCache& cache) {
  if (remaining == 0) return cache.of(g) == 1 ? 1 : 0;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const TreeDiagram gen = generator_diagram(Index(2 * i), 3);
    total += theta_count_from(multiply(g, gen), remaining - 1, n, cache);
    total +=
        theta_count_from(multiply(g, inverse(gen)), remaining - 1, n, cache);
  }
  return total;
}

Count theta_count_brute(std::size_t d, std::size_t n,
                        const EnumerationBudget& budget, unsigned workers) {
  check_budget(2 * n, d, budget);
  if (d == 0) return 1;
  std::size_t tasks = 2 * n;
  std::vector<std::uint64_t> partial(tasks, 0);
  run_tasks(workers, tasks, [&](std::size_t t) {
    ThetaCache cache;
    Letter first = letter_for(t, n);
    TreeDiagram gen = generator_diagram(first.index * 2, 3);
    partial[t] = theta_count_from(first.exponent == 1 ? gen : inverse(gen),
                                  d - 1, n, cache);
  });
  Count total = 0;
  for (std::uint64_t c : partial) total += c;
  return total;
}

// Letter-by-letter fold over a map reduced-diagram -> count; theta is
// applied once per distinct endpoint element.
Count theta_count_folded(std::size_t d, std::size_t n,
                         const EnumerationBudget& budget) {
  check_budget(2 * n, d, budget);
  struct Slot {
    TreeDiagram diagram;
    std::uint64_t count;
  };
  std::unordered_map<std::string, Slot> level;
  TreeDiagram e = trivial_diagram(3);
  level.emplace(compact_key(e), Slot{e, 1});

  std::vector<TreeDiagram> steps;
  for (std::size_t i = 0; i < n; ++i) {
    TreeDiagram gen = generator_diagram(Index(2 * i), 3);
    steps.push_back(gen);
    steps.push_back(inverse(gen));
  }
  for (std::size_t t = 0; t < d; ++t) {
    std::unordered_map<std::string, Slot> next;
    for (const auto& [key, slot] : level) {
      for (const TreeDiagram& step : steps) {
        TreeDiagram g = multiply(slot.diagram, step);
        std::string gkey = compact_key(g);
        auto it = next.find(gkey);
        if (it == next.end())
          next.emplace(std::move(gkey), Slot{std::move(g), slot.count});
        else
          it->second.count += slot.count;
      }
    }
    level = std::move(next);
  }

  ThetaCache cache;
  Count total = 0;
  for (const auto& [key, slot] : level)
    if (cache.of(slot.diagram) == 1) total += slot.count;
  return total;
}

}  // namespace

Count theta_moment_unnormalized(std::size_t d, std::size_t n, Engine engine,
                                const EnumerationBudget& budget,
                                unsigned workers) {
  if (n == 0) throw std::invalid_argument("need n >= 1");
  return engine == Engine::brute ? theta_count_brute(d, n, budget, workers)
                                 : theta_count_folded(d, n, budget);
}

Rational theta_moment(std::size_t d, std::size_t n, Engine engine,
                      const EnumerationBudget& budget, unsigned workers) {
  Count c = theta_moment_unnormalized(d, n, engine, budget, workers);
  if (d % 2 != 0) {
    if (c != 0) throw Error("odd theta moments must vanish");
    return 0;
  }
  return Rational(c, pow_count(2 * n, d / 2));
}

TauHistogram tau_histogram(std::size_t d, std::size_t n, int p, Engine engine,
                           const EnumerationBudget& budget) {
  if (p < 2 || n == 0) throw std::invalid_argument("need p >= 2 and n >= 1");
  TauHistogram hist;
  hist.d = d;
  hist.n = n;
  hist.p = p;
  if (d == 0 || d % 2 != 0) {
    hist.total = d == 0 ? 1 : 0;
    return hist;
  }

  auto record = [&](const Word& w) {
    NormalizationTrace trace = normalize(w);
    const Word& normal = trace.normal;
    for (std::size_t l = 1; l <= d / 2; ++l) {
      if (normal.at(l).exponent != 1 ||
          normal.at(d - l + 1).exponent != -1 ||
          normal.at(l).index != normal.at(d - l + 1).index)
        return;
    }
    hist.counts[trace.tau] += 1;
    hist.total += 1;
  };

  if (engine == Engine::brute) {
    check_budget(2 * n, d, budget);
    for_each_word(d, n, p, [&](const Word& w) {
      if (balanced(w)) record(w);
    });
    return hist;
  }

  // Meet in the middle: bucket half words by evaluation and join each
  // bucket with the bucket of the inverse element.
  std::size_t half = d / 2;
  check_budget(2 * n, half, budget);
  std::unordered_map<std::string, std::vector<Word>> buckets;
  for_each_word(half, n, p, [&](const Word& w) {
    buckets[compact_key(eval_word(w))].push_back(w);
  });
  for (const auto& [key, first_halves] : buckets) {
    auto other = buckets.find(inverse_of_key(key));
    if (other == buckets.end()) continue;
    for (const Word& w1 : first_halves)
      for (const Word& w2 : other->second) record(w1 * w2);
  }
  return hist;
}

BoundReport bound_report(const TauHistogram& hist) {
  const std::size_t d = hist.d;
  const std::size_t n = hist.n;
  const int p = hist.p;
  if (d > 8) throw BudgetExceeded("bound report enumerates S_d; d <= 8 only");
  if (d == 0 || d % 2 != 0)
    throw std::invalid_argument("bound report needs even d >= 2");

  BoundReport report;
  report.d = d;
  report.n = n;
  report.p = p;

  const Count printed_arg = Count(n) - Count(d) * Count(d + 1) * Count(p - 1);
  const Count corrected_arg = Count(n) + Count(d) * Count(d + 1) * Count(p - 1);
  const Count lower_threshold = Count(d) * Count(p - 1) +
                                Count(d) * Count(4 * p - 4) +
                                Count(d) * Count(d) * Count(4 * p - 4) / 2 +
                                Count(d) / 2;
  const Count lower_arg = Count(n) - Count(d) * Count(p - 1) -
                          Count(d) * Count(4 * p - 4) -
                          Count(d) * Count(d) * Count(4 * p - 4) / 2;
  const Count half = Count(d / 2);

  std::vector<std::size_t> image(d);
  for (std::size_t k = 0; k < d; ++k) image[k] = k + 1;
  do {
    Permutation tau{image};
    TauBoundRow row;
    row.tau = tau;
    auto it = hist.counts.find(tau);
    row.n_words = it == hist.counts.end() ? Count(0) : it->second;

    row.lower = binomial(lower_arg, half);
    row.lower_applicable = Count(n) > lower_threshold;
    row.lower_ok = !row.lower_applicable || row.n_words >= row.lower;

    row.upper_printed = binomial(printed_arg, half);
    row.printed_skipped = printed_arg < half;
    row.printed_ok = row.printed_skipped || row.n_words <= row.upper_printed;

    row.upper_corrected = binomial(corrected_arg, half);
    row.corrected_ok = row.n_words <= row.upper_corrected;

    Count two_half = 1;
    for (std::size_t k = 0; k < d / 2; ++k) two_half *= 2;
    row.normalized = Rational(row.n_words * two_half, pow_count(2 * n, d / 2));
    row.trend_target = Rational(1, factorial(d / 2));

    report.rows.push_back(std::move(row));
  } while (std::next_permutation(image.begin(), image.end()));

  Count histogram_total = 0;
  for (const auto& [tau, c] : hist.counts) histogram_total += c;
  report.totals_match = histogram_total == hist.total &&
                        hist.total == count_neutral_mitm(d, n, p);
  return report;
}

std::string to_json(const BoundReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const TauBoundRow& row : report.rows) {
    nlohmann::json j;
    j["d"] = report.d;
    j["n"] = report.n;
    j["p"] = report.p;
    j["tau"] = row.tau.one_line();
    j["N"] = row.n_words.str();
    j["lower"] = row.lower.str();
    j["upper_printed"] = row.upper_printed.str();
    j["upper_corrected"] = row.upper_corrected.str();
    j["normalized_scaled"] = {
        {"num", boost::multiprecision::numerator(row.normalized).str()},
        {"den", boost::multiprecision::denominator(row.normalized).str()},
        {"limit_num", boost::multiprecision::numerator(row.trend_target).str()},
        {"limit_den",
         boost::multiprecision::denominator(row.trend_target).str()}};
    j["verdicts"] = {{"lower_applicable", row.lower_applicable},
                     {"lower_ok", row.lower_ok},
                     {"printed_skipped", row.printed_skipped},
                     {"printed_ok", row.printed_ok},
                     {"corrected_ok", row.corrected_ok}};
    rows.push_back(std::move(j));
  }
  nlohmann::json out;
  out["rows"] = std::move(rows);
  out["totals_match"] = report.totals_match;
  return out.dump(2);
}

namespace {

void all_pair_partitions(std::size_t d,
                         std::vector<std::pair<std::size_t, std::size_t>>& acc,
                         std::vector<bool>& used,
                         std::vector<PairPartition>& out) {
  std::size_t first = 0;
  while (first < d && used[first]) ++first;
  if (first == d) {
    out.push_back(PairPartition(acc));
    return;
  }
  used[first] = true;
  for (std::size_t second = first + 1; second < d; ++second) {
    if (used[second]) continue;
    used[second] = true;
    acc.emplace_back(first + 1, second + 1);
    all_pair_partitions(d, acc, used, out);
    acc.pop_back();
    used[second] = false;
  }
  used[first] = false;
}

}  // namespace

std::map<PairPartition, Count> rainbow_count(std::size_t d) {
  if (d % 2 != 0) throw std::invalid_argument("d must be even");
  if (d > 8) throw BudgetExceeded("rainbow census enumerates S_d; d <= 8 only");

  std::vector<PairPartition> partitions;
  std::vector<std::pair<std::size_t, std::size_t>> acc;
  std::vector<bool> used(d, false);
  all_pair_partitions(d, acc, used, partitions);

  PairPartition rainbow = PairPartition::rainbow(d);
  std::map<PairPartition, Count> counts;
  for (const PairPartition& partition : partitions) counts[partition] = 0;

  std::vector<std::size_t> image(d);
  for (std::size_t k = 0; k < d; ++k) image[k] = k + 1;
  do {
    Permutation tau{image};
    for (const PairPartition& partition : partitions)
      if (partition.map(tau) == rainbow) counts[partition] += 1;
  } while (std::next_permutation(image.begin(), image.end()));
  return counts;
}

MomentTable moment_table(const MomentRequest& req) {
  if (req.state == State::theta && req.p != 2)
    throw std::invalid_argument("theta moments require p = 2");
  if (req.p < 2) throw std::invalid_argument("p must be >= 2");

  MomentTable table;
  for (std::size_t n : req.n_values) {
    MomentRow row;
    row.state = req.state;
    row.p = req.p;
    row.d = req.d;
    row.n = n;
    try {
      if (req.state == State::gamma) {
        Count c = req.engine == Engine::brute
                      ? count_neutral_brute(req.d, n, req.p, req.budget,
                                            req.workers)
                      : count_neutral_mitm(req.d, n, req.p, req.budget,
                                           req.workers);
        row.count = c;
        row.normalized = req.d % 2 == 0
                             ? Rational(c, pow_count(2 * n, req.d / 2))
                             : Rational(0);
      } else {
        Count c = theta_moment_unnormalized(req.d, n, req.engine, req.budget,
                                            req.workers);
        row.count = c;
        row.normalized = req.d % 2 == 0
                             ? Rational(c, pow_count(2 * n, req.d / 2))
                             : Rational(0);
      }
    } catch (const BudgetExceeded& e) {
      row.error = e.what();
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string to_csv(const MomentTable& table) {
  std::ostringstream out;
  out << "state,p,d,n,count,normalized_value_num,normalized_value_den\n";
  for (const MomentRow& row : table.rows) {
    out << (row.state == State::gamma ? "gamma" : "theta") << ',' << row.p
        << ',' << row.d << ',' << row.n << ',';
    if (row.count) {
      out << *row.count << ','
          << boost::multiprecision::numerator(*row.normalized) << ','
          << boost::multiprecision::denominator(*row.normalized);
    } else {
      out << "NA,NA,NA";
    }
    out << '\n';
  }
  return out.str();
}

std::string to_json(const MomentTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const MomentRow& row : table.rows) {
    nlohmann::json j;
    j["state"] = row.state == State::gamma ? "gamma" : "theta";
    j["p"] = row.p;
    j["d"] = row.d;
    j["n"] = row.n;
    if (row.count) {
      j["count"] = row.count->str();
      j["normalized_value_num"] =
          boost::multiprecision::numerator(*row.normalized).str();
      j["normalized_value_den"] =
          boost::multiprecision::denominator(*row.normalized).str();
    } else {
      j["error"] = row.error;
    }
    rows.push_back(std::move(j));
  }
  return nlohmann::json{{"rows", std::move(rows)}}.dump(2);
}

}  // namespace fpgroups
