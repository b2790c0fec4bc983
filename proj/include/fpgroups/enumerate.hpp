#pragma once

#include <cstddef>

#include "fpgroups/word.hpp"

namespace fpgroups {

/// Visits all (2n)^d words of length d over {x_0..x_{n-1}}^{+-1} in
/// lexicographic letter order. fn receives a const Word& valid only during
/// the call.
template <typename Fn>
void for_each_word(std::size_t d, std::size_t n, int p, Fn&& fn) {
  Word w(p);
  auto rec = [&](auto&& self, std::size_t remaining) -> void {
    if (remaining == 0) {
      fn(static_cast<const Word&>(w));
      return;
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (int e : {+1, -1}) {
        w.append(Letter(Index(i), e));
        self(self, remaining - 1);
        w.pop_back();
      }
    }
  };
  rec(rec, d);
}

/// Visits all words of every length 0..dmax.
template <typename Fn>
void for_each_word_up_to(std::size_t dmax, std::size_t n, int p, Fn&& fn) {
  for (std::size_t d = 0; d <= dmax; ++d) for_each_word(d, n, p, fn);
}

}  // namespace fpgroups
