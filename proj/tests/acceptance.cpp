// Acceptance suite: prints one PASS/FAIL line per criterion and exits with
// the number of failures. Set FPG_EXTENDED=1 to also reproduce the costlier
// published theta cells (d=8 n=2..3, d=6 n=3..4).

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "fpgroups/completion.hpp"
#include "fpgroups/enumerate.hpp"
#include "fpgroups/errors.hpp"
#include "fpgroups/moments.hpp"
#include "fpgroups/oriented.hpp"
#include "fpgroups/planar_graph.hpp"
#include "fpgroups/rewriting.hpp"
#include "fpgroups/tree_diagram.hpp"

using namespace fpgroups;

namespace {

int failures = 0;

class Criterion {
 public:
  Criterion(int id, std::string name)
      : id_(id), name_(std::move(name)),
        start_(std::chrono::steady_clock::now()) {}

  void require(bool condition, const std::string& what) {
    if (!condition && problem_.empty()) problem_ = what;
  }

  void note(const std::string& line) { notes_.push_back(line); }

  ~Criterion() {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start_).count();
    bool pass = problem_.empty();
    if (!pass) ++failures;
    std::cout << (pass ? "PASS" : "FAIL") << "  " << id_ << ". " << name_
              << "  [" << ms << " ms]";
    if (!pass) std::cout << "  <- " << problem_;
    std::cout << "\n";
    for (const std::string& line : notes_)
      std::cout << "      " << line << "\n";
  }

 private:
  int id_;
  std::string name_;
  std::string problem_;
  std::vector<std::string> notes_;
  std::chrono::steady_clock::time_point start_;
};

bool extended_run() {
  const char* env = std::getenv("FPG_EXTENDED");
  return env != nullptr && std::string(env) != "0";
}

void criterion_table1() {
  Criterion c(1, "Table reproduction: un-normalized theta moments, exact");
  struct Cell {
    std::size_t d, n;
    long long expected;
    bool extended;
  };
  const std::vector<Cell> cells = {
      {2, 1, 2, false},    {2, 2, 6, false},    {2, 3, 10, false},
      {2, 4, 14, false},   {2, 5, 18, false},   {2, 6, 22, false},
      {2, 7, 26, false},   {2, 8, 30, false},   {2, 9, 34, false},
      {4, 1, 6, false},    {4, 2, 52, false},   {4, 3, 176, false},
      {4, 4, 394, false},  {4, 5, 708, false},  {4, 6, 1118, false},
      {4, 7, 1624, false}, {6, 1, 20, false},   {6, 2, 506, false},
      {8, 1, 70, false},   {10, 1, 252, false}, {6, 3, 3594, true},
      {6, 4, 13442, true}, {8, 2, 5240, true},  {8, 3, 78962, true},
  };
  std::size_t checked = 0;
  for (const Cell& cell : cells) {
    if (cell.extended && !extended_run()) continue;
    // folded engine everywhere; literal enumeration cross-checks the cells
    // that stay cheap
    Count folded = theta_moment_unnormalized(cell.d, cell.n, Engine::mitm);
    std::ostringstream label;
    label << "c_" << cell.n << "^" << cell.d;
    c.require(folded == Count(cell.expected),
              label.str() + " = " + folded.str() + ", expected " +
                  std::to_string(cell.expected));
    Count words = 1;
    for (std::size_t k = 0; k < cell.d; ++k) words *= 2 * cell.n;
    if (words <= 70000) {
      Count brute = theta_moment_unnormalized(cell.d, cell.n, Engine::brute);
      c.require(brute == folded, label.str() + ": engines disagree");
    }
    ++checked;
  }
  c.note(std::to_string(checked) + " cells" +
         (extended_run() ? " (incl. extended)" : "; FPG_EXTENDED=1 adds d=6 "
                                                 "n<=4, d=8 n<=3"));
}

void criterion_second_moment_formula() {
  Criterion c(2, "c_n^2 = 4n-2 for n = 1..9, exact");
  for (std::size_t n = 1; n <= 9; ++n) {
    Count value = theta_moment_unnormalized(2, n);
    c.require(value == Count(4 * n - 2),
              "c_" + std::to_string(n) + "^2 = " + value.str());
  }
}

void criterion_odd_moments() {
  Criterion c(3, "odd moments vanish: gamma and theta, d in {1,3,5}, n <= 3");
  for (int p : {2, 3})
    for (std::size_t d : {1u, 3u, 5u})
      for (std::size_t n = 1; n <= 3; ++n) {
        Count neutral = 0;
        for_each_word(d, n, p, [&](const Word& w) {
          if (is_neutral(w)) ++neutral;
        });
        c.require(neutral == 0, "neutral words of odd length exist");
        c.require(gamma_moment(d, n, p) == Rational(0), "gamma nonzero");
      }
  for (std::size_t d : {1u, 3u, 5u})
    for (std::size_t n = 1; n <= 3; ++n)
      c.require(theta_moment_unnormalized(d, n) == 0, "theta count nonzero");
}

void criterion_clt() {
  Criterion c(4, "CLT suite: gamma moments approach (d-1)!!");
  for (std::size_t n = 1; n <= 9; ++n)
    c.require(gamma_moment(2, n, 2) == Rational(1),
              "gamma(s_n^2) != 1 at n=" + std::to_string(n));
  c.require(gamma_moment(4, 1, 2) == Rational(3, 2), "gamma(s_1^4) != 3/2");
  c.require(gamma_moment(4, 2, 2) == Rational(7, 4), "gamma(s_2^4) != 7/4");
  c.require(gamma_moment(4, 2, 2, Engine::mitm) == Rational(7, 4),
            "mitm disagrees at n=2");

  Rational previous = 0, at16 = 0, at256 = 0;
  std::ostringstream trail;
  for (std::size_t n = 1; n <= 256; n *= 2) {
    Rational value = gamma_moment(4, n, 2, Engine::mitm, {}, 4);
    c.require(value >= previous,
              "gamma(s_n^4) decreased at n=" + std::to_string(n));
    previous = value;
    if (n == 16) at16 = value;
    if (n == 256) at256 = value;
    trail << (n > 1 ? ", " : "") << value.convert_to<double>();
  }
  c.require(at256 > Rational(5, 2), "gamma(s_256^4) <= 5/2");
  c.require(3 - at256 < 3 - at16, "n=256 not closer to 3 than n=16");
  c.note("gamma(s_n^4) for n = 1,2,4,...,256: " + trail.str());
}

void criterion_rainbow() {
  Criterion c(5, "each pair partition reaches the rainbow under d!! permutations");
  const Count expected[] = {2, 8, 48};
  std::size_t k = 0;
  for (std::size_t d : {2u, 4u, 6u}) {
    auto counts = rainbow_count(d);
    c.require(counts.size() ==
                  double_factorial(d - 1).convert_to<std::size_t>(),
              "partition census size wrong at d=" + std::to_string(d));
    for (const auto& [partition, count] : counts)
      c.require(count == expected[k],
                "count != " + expected[k].str() + " at d=" + std::to_string(d));
    ++k;
  }
}

void criterion_bounds() {
  Criterion c(6, "tau counting bounds: totals, corrected upper, lower, erratum");
  std::vector<std::string> errata;
  auto run_cell = [&](std::size_t d, std::size_t n) {
    TauHistogram hist = tau_histogram(d, n, 2, Engine::brute);
    BoundReport report = bound_report(hist);
    c.require(report.totals_match,
              "sum over tau != |W_0| at d=" + std::to_string(d) +
                  ", n=" + std::to_string(n));
    bool printed_failed_somewhere = false;
    for (const TauBoundRow& row : report.rows) {
      c.require(row.corrected_ok, "corrected upper bound failed at d=" +
                                      std::to_string(d) +
                                      ", n=" + std::to_string(n));
      if (row.lower_applicable)
        c.require(row.lower_ok, "lower bound failed at d=" +
                                    std::to_string(d) +
                                    ", n=" + std::to_string(n));
      if (!row.printed_skipped && !row.printed_ok)
        printed_failed_somewhere = true;
    }
    if (printed_failed_somewhere) {
      std::ostringstream line;
      line << "erratum reproduced at d=" << d << ", n=" << n
           << ": printed bound C(n-d(d+1)(p-1), d/2) undercounts";
      errata.push_back(line.str());
    }
    return report;
  };

  for (std::size_t n = 1; n <= 12; ++n) run_cell(2, n);
  for (std::size_t n = 1; n <= 6; ++n) run_cell(4, n);

  // lower-bound regime via mitm histograms
  for (std::size_t n = 20; n <= 24; ++n) {
    TauHistogram hist = tau_histogram(2, n, 2, Engine::mitm);
    BoundReport report = bound_report(hist);
    for (const TauBoundRow& row : report.rows) {
      c.require(row.lower_applicable,
                "threshold not met at n=" + std::to_string(n));
      c.require(row.lower_ok, "lower bound failed at n=" + std::to_string(n));
    }
  }

  c.require(!errata.empty(), "printed-bound failure not reproduced");
  c.note(errata.empty() ? "" : errata.front() + " (and " +
                                   std::to_string(errata.size() - 1) +
                                   " further cells)");
}

void criterion_neutrality_oracle() {
  Criterion c(7, "palindromic normal form <=> trivial reduced diagram");
  std::size_t words = 0, disagreements = 0;
  for (int p : {2, 3}) {
    for_each_word_up_to(6, 3, p, [&](const Word& w) {
      ++words;
      if (is_neutral(w) != is_trivial(eval_word(w))) ++disagreements;
    });
  }
  c.require(disagreements == 0,
            std::to_string(disagreements) + " disagreements");
  c.note(std::to_string(words) + " words (d <= 6, indices < 3, p in {2,3})");
}

void criterion_oriented_equivalence() {
  Criterion c(8, "theta (graph) <=> parity stabilizer; length-two law");
  std::size_t words = 0, disagreements = 0;
  for_each_word_up_to(4, 4, 2, [&](const Word& w) {
    ++words;
    if ((theta(w) == 1) != parity_membership(eval_word(w))) ++disagreements;
  });
  c.require(disagreements == 0,
            std::to_string(disagreements) + " disagreements");

  for (int i = 0; i <= 6; ++i)
    for (int j = 0; j <= 6; ++j)
      for (int m : {1, -1})
        for (int n : {1, -1}) {
          Word w(2, {Letter(i, m), Letter(j, n)});
          bool cancels = i == j && m == -n;
          bool expected = (j == i + 1 && m == 1 && n == 1) ||
                          (i == j + 1 && m == -1 && n == -1) || cancels;
          c.require((theta(w) == 1) == expected,
                    "length-two law off at " + format_word(w));
        }
  c.note(std::to_string(words) + " words over {y_0..y_3}^± with d <= 4");
}

void criterion_structural() {
  Criterion c(9, "relations, abelianization anchors, shifts, alpha images");
  for (int p : {2, 3, 4})
    for (int n = 1; n <= 6; ++n)
      for (int k = 0; k < n; ++k)
        c.require(
            diagram_equal(multiply(generator_diagram(n, p),
                                   generator_diagram(k, p)),
                          multiply(generator_diagram(k, p),
                                   generator_diagram(n + p - 1, p))),
            "relation x_n x_k = x_k x_{n+p-1} fails");

  c.require(abelianization(generator_diagram(0, 2)) == AbelianImage{1, -1},
            "pi(y_0) != (1,-1)");
  for (int k = 1; k <= 5; ++k)
    c.require(abelianization(generator_diagram(k, 2)) == AbelianImage{0, -1},
              "pi(y_k) != (0,-1)");
  for (int i = 0; i <= 5; ++i)
    c.require(diagram_equal(shift_right(generator_diagram(i, 2)),
                            generator_diagram(i + 1, 2)),
              "shift_right(y_i) != y_{i+1}");

  std::size_t alpha_words = 0;
  for_each_word_up_to(3, 3, 3, [&](const Word& w) {
    ++alpha_words;
    Word image = alpha_word(w);
    c.require(theta(image) == 1, "alpha image not oriented: " + format_word(w));
    c.require(rect_membership(eval_word(image), 1, 2),
              "alpha image leaves K_(1,2): " + format_word(w));
  });
  c.note(std::to_string(alpha_words) + " alpha images checked");
}

void criterion_completion() {
  Criterion c(10, "completions: skeleton round-trip, worked pairings, tau");
  std::size_t neutral = 0;
  for (int p : {2, 3}) {
    for_each_word_up_to(6, 3, p, [&](const Word& w) {
      if (w.empty() || !is_neutral(w)) return;
      ++neutral;
      auto completed = complete_from_positives(skeleton_of(w));
      c.require(completed.has_value() && *completed == w,
                "round-trip failed on " + format_word(w));
    });
  }

  for (int p : {2, 3, 5}) {
    WordSkeleton s;
    s.p = p;
    s.d = 6;
    s.exponents = {-1, -1, -1, 1, 1, 1};
    s.known = {{4, Index(3)}, {5, Index(0)}, {6, Index(1)}};
    s.partition = PairPartition({{3, 5}, {2, 6}, {1, 4}});
    auto completed = complete_from_positives(s);
    Word expected(p, {Letter(2 * p + 1, -1), Letter(1, -1), Letter(0, -1),
                      Letter(3, 1), Letter(0, 1), Letter(1, 1)});
    c.require(completed.has_value() && *completed == expected,
              "worked completion (i1 = 2p+1) failed at p=" + std::to_string(p));

    s.partition = PairPartition({{1, 5}, {2, 4}, {3, 6}});
    c.require(!complete_from_positives(s).has_value(),
              "crossed pairing unexpectedly completed at p=" +
                  std::to_string(p));
  }

  std::mt19937_64 rng(2024);
  for (std::size_t d : {2u, 4u}) {
    for (int p : {2, 3, 5}) {
      for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::size_t> image(d);
        for (std::size_t k = 0; k < d; ++k) image[k] = k + 1;
        std::shuffle(image.begin(), image.end(), rng);
        Permutation tau{image};
        Permutation inv = tau.inverse();
        std::vector<int> eps(d);
        for (std::size_t l = 1; l <= d; ++l)
          eps[inv(l) - 1] = l <= d / 2 ? 1 : -1;
        Index gap = Index(4 * p - 4) * Index(d);
        std::uniform_int_distribution<int> base(2 * p * static_cast<int>(d),
                                                2 * p * static_cast<int>(d) + 50);
        std::uniform_int_distribution<int> extra(1, 40);
        std::vector<Index> half(d / 2);
        Index value = base(rng);
        for (std::size_t l = d / 2; l >= 1; --l) {
          half[l - 1] = value;
          value += gap + extra(rng);
        }
        try {
          Word w = complete_from_tau(tau, eps, half, p);
          c.require(is_neutral(w) && normalize(w).tau == tau,
                    "tau completion does not verify");
        } catch (const Error& e) {
          c.require(false, std::string("tau completion threw: ") + e.what());
        }
      }
    }
  }
  c.note(std::to_string(neutral) +
         " neutral words round-tripped; 600 random tau instances");
}

}  // namespace

int main() {
  criterion_table1();
  criterion_second_moment_formula();
  criterion_odd_moments();
  criterion_clt();
  criterion_rainbow();
  criterion_bounds();
  criterion_neutrality_oracle();
  criterion_oriented_equivalence();
  criterion_structural();
  criterion_completion();
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures;
}
