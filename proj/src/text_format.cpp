#include "ids/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace ids {

namespace {

constexpr std::string_view kEpsilonToken = "@eps";

std::vector<std::string> tokenize(const std::string &line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream in(body);
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;)
    tokens.push_back(std::move(tok));
  return tokens;
}

std::size_t parse_index(const std::string &tok, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected a non-negative integer, got '" + tok + "'");
  return value;
}

std::ifstream open_input(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError(0, "cannot open '" + path + "'");
  return in;
}

} // namespace

ParseError::ParseError(std::size_t line, const std::string &what)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

Alphabet::Alphabet(std::vector<char> letters) : letters_(std::move(letters)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    char c = letters_[i];
    if (c == '#' || c == '@' || std::isspace(static_cast<unsigned char>(c)))
      throw InputError(std::string("alphabet: reserved character '") + c + "'");
    if (std::find(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(i), c) !=
        letters_.begin() + static_cast<std::ptrdiff_t>(i))
      throw InputError(std::string("alphabet: duplicate symbol '") + c + "'");
  }
}

Alphabet Alphabet::standard(std::size_t size) {
  static constexpr std::string_view pool =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
  if (size == 0 || size > pool.size())
    throw InputError("alphabet size must be in 1.." + std::to_string(pool.size()));
  return Alphabet(std::vector<char>(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size)));
}

Symbol Alphabet::symbol(char c) const {
  auto it = std::find(letters_.begin(), letters_.end(), c);
  if (it == letters_.end())
    throw InputError(std::string("symbol '") + c + "' is not in the alphabet");
  return static_cast<Symbol>(it - letters_.begin());
}

bool Alphabet::contains(char c) const noexcept {
  return std::find(letters_.begin(), letters_.end(), c) != letters_.end();
}

Word Alphabet::parse_word(std::string_view text) const {
  if (text == kEpsilonToken)
    return {};
  Word w;
  w.reserve(text.size());
  for (char c : text)
    w.push_back(symbol(c));
  return w;
}

std::string Alphabet::format_word(const Word &w) const {
  if (w.empty())
    return std::string(kEpsilonToken);
  std::string out;
  out.reserve(w.size());
  for (Symbol s : w)
    out.push_back(letter(s));
  return out;
}

LabeledDfa read_dfa(std::istream &in) {
  enum class Stage { Alphabet, States, Initial, Finals, Transitions };
  Stage stage = Stage::Alphabet;
  Alphabet alphabet;
  std::size_t num_states = 0;
  std::size_t initial = 0;
  std::vector<bool> finals;
  std::vector<StateIndex> transitions;
  std::vector<char> seen;

  auto expect_keyword = [](const std::vector<std::string> &tokens, std::string_view keyword,
                           std::size_t line) {
    if (tokens.front() != keyword)
      throw ParseError(line, "expected '" + std::string(keyword) + "', got '" + tokens.front() + "'");
  };

  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    auto tokens = tokenize(text);
    if (tokens.empty())
      continue;
    switch (stage) {
    case Stage::Alphabet: {
      expect_keyword(tokens, "alphabet", line);
      if (tokens.size() < 2)
        throw ParseError(line, "alphabet must list at least one symbol");
      std::vector<char> letters;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (tokens[i].size() != 1)
          throw ParseError(line, "alphabet symbols must be single characters, got '" + tokens[i] + "'");
        letters.push_back(tokens[i][0]);
      }
      try {
        alphabet = Alphabet(std::move(letters));
      } catch (const InputError &e) {
        throw ParseError(line, e.what());
      }
      stage = Stage::States;
      break;
    }
    case Stage::States:
      expect_keyword(tokens, "states", line);
      if (tokens.size() != 2)
        throw ParseError(line, "expected 'states <n>'");
      num_states = parse_index(tokens[1], line);
      if (num_states == 0)
        throw ParseError(line, "state count must be positive");
      stage = Stage::Initial;
      break;
    case Stage::Initial:
      expect_keyword(tokens, "initial", line);
      if (tokens.size() != 2)
        throw ParseError(line, "expected 'initial <state>'");
      initial = parse_index(tokens[1], line);
      if (initial >= num_states)
        throw ParseError(line, "initial state out of range");
      stage = Stage::Finals;
      break;
    case Stage::Finals:
      expect_keyword(tokens, "finals", line);
      finals.assign(num_states, false);
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        std::size_t q = parse_index(tokens[i], line);
        if (q >= num_states)
          throw ParseError(line, "final state " + tokens[i] + " out of range");
        finals[q] = true;
      }
      transitions.assign(num_states * alphabet.size(), 0);
      seen.assign(num_states * alphabet.size(), 0);
      stage = Stage::Transitions;
      break;
    case Stage::Transitions: {
      expect_keyword(tokens, "trans", line);
      if (tokens.size() != 4)
        throw ParseError(line, "expected 'trans <state> <symbol> <state>'");
      std::size_t from = parse_index(tokens[1], line);
      std::size_t to = parse_index(tokens[3], line);
      if (from >= num_states || to >= num_states)
        throw ParseError(line, "transition state out of range");
      if (tokens[2].size() != 1 || !alphabet.contains(tokens[2][0]))
        throw ParseError(line, "unknown symbol '" + tokens[2] + "'");
      std::size_t slot = from * alphabet.size() + alphabet.symbol(tokens[2][0]);
      if (seen[slot])
        throw ParseError(line, "duplicate transition for state " + tokens[1] + " on '" + tokens[2] + "'");
      seen[slot] = 1;
      transitions[slot] = to;
      break;
    }
    }
  }
  if (stage != Stage::Transitions)
    throw ParseError(line + 1, "unexpected end of file");
  for (std::size_t slot = 0; slot < seen.size(); ++slot)
    if (!seen[slot])
      throw ParseError(line + 1, "missing transition for state " +
                                     std::to_string(slot / alphabet.size()) + " on '" +
                                     alphabet.letter(static_cast<Symbol>(slot % alphabet.size())) + "'");
  const std::size_t k = alphabet.size();
  return {std::move(alphabet), Dfa(k, num_states, initial, std::move(finals), std::move(transitions))};
}

LabeledDfa read_dfa_file(const std::string &path) {
  auto in = open_input(path);
  return read_dfa(in);
}

void write_dfa(std::ostream &out, const Alphabet &alphabet, const Dfa &dfa) {
  out << "alphabet";
  for (Symbol s = 0; s < alphabet.size(); ++s)
    out << ' ' << alphabet.letter(s);
  out << "\nstates " << dfa.num_states() << "\ninitial " << dfa.initial() << "\nfinals";
  for (StateIndex q : dfa.final_states())
    out << ' ' << q;
  out << '\n';
  for (StateIndex q = 0; q < dfa.num_states(); ++q)
    for (Symbol b = 0; b < dfa.alphabet_size(); ++b)
      out << "trans " << q << ' ' << alphabet.letter(b) << ' ' << dfa.next(q, b) << '\n';
}

std::vector<Word> read_words(std::istream &in, const Alphabet &alphabet) {
  std::vector<Word> words;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    auto tokens = tokenize(text);
    if (tokens.empty())
      continue;
    if (tokens.size() != 1)
      throw ParseError(line, "expected one word per line");
    try {
      words.push_back(alphabet.parse_word(tokens[0]));
    } catch (const InputError &e) {
      throw ParseError(line, e.what());
    }
  }
  return words;
}

std::vector<Word> read_words_file(const std::string &path, const Alphabet &alphabet) {
  auto in = open_input(path);
  return read_words(in, alphabet);
}

void write_words(std::ostream &out, const Alphabet &alphabet, const std::vector<Word> &words) {
  for (const Word &w : words)
    out << alphabet.format_word(w) << '\n';
}

} // namespace ids
