#include <doctest.h>

#include <random>

#include "fpgroups/completion.hpp"
#include "fpgroups/enumerate.hpp"
#include "fpgroups/errors.hpp"
#include "fpgroups/tree_diagram.hpp"

using namespace fpgroups;

namespace {

WordSkeleton six_letter_skeleton(int p, PairPartition partition) {
  WordSkeleton s;
  s.p = p;
  s.d = 6;
  s.exponents = {-1, -1, -1, 1, 1, 1};
  s.known = {{4, Index(3)}, {5, Index(0)}, {6, Index(1)}};
  s.partition = std::move(partition);
  return s;
}

}  // namespace

TEST_CASE("the worked six-letter completion has i1 = 2p+1") {
  for (int p : {2, 3, 5, 7}) {
    auto completed = complete_from_positives(
        six_letter_skeleton(p, PairPartition({{3, 5}, {2, 6}, {1, 4}})));
    REQUIRE(completed.has_value());
    Word expected(p, {Letter(2 * p + 1, -1), Letter(1, -1), Letter(0, -1),
                      Letter(3, 1), Letter(0, 1), Letter(1, 1)});
    CHECK(*completed == expected);
  }
}

TEST_CASE("the crossed pairing admits no completion") {
  // The second worked pairing forces a negative index for p > 2 and an
  // index clash with the minimal letter at p = 2.
  for (int p : {2, 3, 5})
    CHECK_FALSE(complete_from_positives(
        six_letter_skeleton(p, PairPartition({{1, 5}, {2, 4}, {3, 6}}))));
}

TEST_CASE("a single pair copies the known index to its partner") {
  WordSkeleton s;
  s.p = 3;
  s.d = 2;
  s.exponents = {1, -1};
  s.known = {{1, Index(7)}};
  s.partition = PairPartition({{1, 2}});
  auto completed = complete_from_positives(s);
  REQUIRE(completed.has_value());
  CHECK(*completed == Word(3, {Letter(7, 1), Letter(7, -1)}));
}

TEST_CASE("skeletons of enumerated neutral words round-trip") {
  for (int p : {2, 3}) {
    for_each_word_up_to(4, 3, p, [&](const Word& w) {
      if (w.empty() || !is_neutral(w)) return;
      auto completed = complete_from_positives(skeleton_of(w));
      REQUIRE(completed.has_value());
      CHECK(*completed == w);
    });
  }
}

TEST_CASE("malformed skeletons are rejected up front") {
  WordSkeleton s;
  s.p = 2;
  s.d = 2;
  s.exponents = {1, 1};  // a pair needs opposite exponents
  s.known = {{1, Index(0)}, {2, Index(0)}};
  s.partition = PairPartition({{1, 2}});
  CHECK_THROWS_AS(complete_from_positives(s), std::invalid_argument);

  WordSkeleton t;
  t.p = 2;
  t.d = 2;
  t.exponents = {1, -1};
  t.known = {};  // positive position left unknown
  t.partition = PairPartition({{1, 2}});
  CHECK_THROWS_AS(complete_from_positives(t), std::invalid_argument);
}

TEST_CASE("tau completion: forced by neutrality at d = 2") {
  for (int p : {2, 3, 5}) {
    Word w = complete_from_tau(Permutation::identity(2), {1, -1}, {Index(9)}, p);
    CHECK(w == Word(p, {Letter(9, 1), Letter(9, -1)}));
  }
}

TEST_CASE("tau completion agrees with the brute-force search at d = 4") {
  Word w = complete_from_tau(Permutation::identity(4), {1, 1, -1, -1},
                             {Index(100), Index(20)}, 2);
  CHECK(format_word(w) == "x100 x20 x20^-1 x100^-1");

  int hits = 0;
  for (int a = 0; a <= 200; ++a)
    for (int b = 0; b <= 200; ++b) {
      Word candidate(2, {Letter(100, 1), Letter(20, 1), Letter(a, -1),
                         Letter(b, -1)});
      if (!is_neutral(candidate)) continue;
      if (!normalize(candidate).tau.is_identity()) continue;
      ++hits;
      CHECK(candidate == w);
    }
  CHECK(hits == 1);
}

TEST_CASE("tau completion serves the worked p=5 instance through verification") {
  Permutation tau({3, 6, 2, 4, 1, 5});  // cycle (1 3 2 6 5)
  std::vector<Index> half = {Index(100), Index(50), Index(1)};
  CHECK_FALSE(tau_gap_condition(half, 6, 5));
  Word w = complete_from_tau(tau, {1, -1, 1, -1, 1, -1}, half, 5);
  CHECK(format_word(w) == "x1 x100^-1 x50 x1^-1 x100 x46^-1");
}

TEST_CASE("tau completion rejects impossible inputs without the gap") {
  // With tau = id the positive half must already satisfy the normal-form
  // gap condition; (0, 5) at p = 2 cannot, and no word verifies.
  CHECK_THROWS_AS(complete_from_tau(Permutation::identity(4), {1, 1, -1, -1},
                                    {Index(0), Index(5)}, 2),
                  PreconditionViolated);
}

TEST_CASE("random gap-condition instances verify under normalize") {
  std::mt19937_64 rng(11);
  for (std::size_t d : {2u, 4u}) {
    for (int p : {2, 3, 5}) {
      for (int trial = 0; trial < 25; ++trial) {
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
                                                2 * p * static_cast<int>(d) + 40);
        std::uniform_int_distribution<int> extra(1, 30);
        std::vector<Index> half(d / 2);
        Index value = base(rng);
        for (std::size_t l = d / 2; l >= 1; --l) {
          half[l - 1] = value;
          value += gap + extra(rng);
        }
        REQUIRE(tau_gap_condition(half, d, p));

        Word w = complete_from_tau(tau, eps, half, p);
        NormalizationTrace trace = normalize(w);
        CHECK(is_neutral(w));
        CHECK(trace.tau == tau);
        for (std::size_t l = 1; l <= d / 2; ++l)
          CHECK(w.at(inv(l)).index == half[l - 1]);
      }
    }
  }
}
