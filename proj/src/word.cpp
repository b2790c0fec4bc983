#include "fpgroups/word.hpp"

#include <sstream>
#include <stdexcept>

#include "fpgroups/errors.hpp"

namespace fpgroups {

Letter::Letter(Index index, int exponent)
    : index(std::move(index)), exponent(exponent) {
  if (this->index < 0) throw std::invalid_argument("letter index must be >= 0");
  if (exponent != 1 && exponent != -1)
    throw std::invalid_argument("letter exponent must be +1 or -1");
}

Word::Word(int p) : p_(p) {
  if (p < 2) throw std::invalid_argument("p must be >= 2");
}

Word::Word(int p, std::vector<Letter> letters) : Word(p) {
  letters_ = std::move(letters);
}

void Word::append(Letter l) { letters_.push_back(std::move(l)); }

void Word::pop_back() { letters_.pop_back(); }

Word operator*(const Word& a, const Word& b) {
  if (a.p() != b.p()) throw WrongArity("concatenating words over different p");
  Word out = a;
  for (const Letter& l : b.letters()) out.append(l);
  return out;
}

Word Word::inverse() const {
  Word out(p_);
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.append(it->inverse());
  return out;
}

Word parse_word(std::string_view text, int p) {
  Word out(p);
  std::istringstream in{std::string(text)};
  std::string token;
  std::size_t position = 0;
  while (in >> token) {
    char symbol = token[0];
    bool symbol_ok = symbol == 'x' || (symbol == 'y' && p == 2);
    if (!symbol_ok)
      throw ParseError("expected generator symbol 'x" +
                           std::string(p == 2 ? "' or 'y'" : "'") +
                           " in token '" + token + "'",
                       position);
    std::size_t k = 1;
    std::string digits;
    while (k < token.size() && std::isdigit(static_cast<unsigned char>(token[k])))
      digits += token[k++];
    if (digits.empty())
      throw ParseError("missing generator index in token '" + token + "'",
                       position);
    int exponent = 1;
    if (k < token.size()) {
      if (token.substr(k) != "^-1")
        throw ParseError("bad exponent in token '" + token + "'", position);
      exponent = -1;
    }
    out.append(Letter(Index(digits), exponent));
    ++position;
  }
  return out;
}

std::string format_word(const Word& w) {
  std::ostringstream out;
  bool first = true;
  for (const Letter& l : w.letters()) {
    if (!first) out << ' ';
    first = false;
    out << 'x' << l.index;
    if (l.exponent < 0) out << "^-1";
  }
  return out.str();
}

}  // namespace fpgroups
