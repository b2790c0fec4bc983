#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fpgroups/numeric.hpp"

namespace fpgroups {

/// One generator occurrence x_i^e with i >= 0 and e in {+1, -1}.
struct Letter {
  Index index;
  int exponent = 1;

  Letter() = default;
  Letter(Index index, int exponent);

  Letter inverse() const { return Letter(index, -exponent); }

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Finite sequence of letters over the generators of F_p.
class Word {
 public:
  /// Empty word. p must be >= 2.
  explicit Word(int p);
  Word(int p, std::vector<Letter> letters);

  int p() const { return p_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& at(std::size_t k) const { return letters_[k - 1]; }  // 1-based
  const std::vector<Letter>& letters() const { return letters_; }

  void append(Letter l);
  void pop_back();

  /// Concatenation; both factors must share p.
  friend Word operator*(const Word& a, const Word& b);

  /// Reversed word with all exponents flipped.
  Word inverse() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  int p_;
  std::vector<Letter> letters_;
};

/// Parses "x0 x2^-1 ..." (whitespace separated). The symbol y is accepted as
/// an alias for x when p = 2. Throws ParseError with the offending token's
/// 0-based position.
Word parse_word(std::string_view text, int p);

/// Inverse of parse_word; empty word formats as "".
std::string format_word(const Word& w);

}  // namespace fpgroups
