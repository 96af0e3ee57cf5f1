#pragma once

// Line-based text formats for automata and word lists.
//
//   alphabet a b
//   states 4
//   initial 0
//   finals 1 2
//   trans 0 a 3
//   ...
//
// '#' starts a comment. Word files hold one word per line; "@eps" is the
// empty word.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ids/dfa.hpp"

namespace ids {

/// Malformed input file. `line()` is 1-based, 0 when not line-specific.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string &what);
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// Bijection between single-character tokens and dense symbol ids.
class Alphabet {
public:
  Alphabet() = default;
  explicit Alphabet(std::vector<char> letters);

  /// 'a', 'b', ... then 'A'.. and '0'..; at most 62 symbols.
  static Alphabet standard(std::size_t size);

  [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
  [[nodiscard]] char letter(Symbol s) const { return letters_.at(s); }
  /// Throws InputError for characters outside the alphabet.
  [[nodiscard]] Symbol symbol(char c) const;
  [[nodiscard]] bool contains(char c) const noexcept;

  [[nodiscard]] Word parse_word(std::string_view text) const;
  [[nodiscard]] std::string format_word(const Word &w) const;

  friend bool operator==(const Alphabet &, const Alphabet &) = default;

private:
  std::vector<char> letters_;
};

struct LabeledDfa {
  Alphabet alphabet;
  Dfa dfa;
};

LabeledDfa read_dfa(std::istream &in);
LabeledDfa read_dfa_file(const std::string &path);
void write_dfa(std::ostream &out, const Alphabet &alphabet, const Dfa &dfa);

std::vector<Word> read_words(std::istream &in, const Alphabet &alphabet);
std::vector<Word> read_words_file(const std::string &path, const Alphabet &alphabet);
void write_words(std::ostream &out, const Alphabet &alphabet, const std::vector<Word> &words);

} // namespace ids
