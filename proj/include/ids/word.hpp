#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ids {

/// Dense alphabet index in 0..alphabet_size-1.
using Symbol = std::uint16_t;

/// A finite string over the alphabet. The empty vector is the empty word.
using Word = std::vector<Symbol>;

/// Shortlex order: shorter words first, ties broken lexicographically.
struct LengthLexLess {
  bool operator()(const Word &lhs, const Word &rhs) const noexcept {
    if (lhs.size() != rhs.size())
      return lhs.size() < rhs.size();
    return lhs < rhs;
  }
};

inline bool length_lex_less(const Word &lhs, const Word &rhs) noexcept {
  return LengthLexLess{}(lhs, rhs);
}

inline Word concat(const Word &lhs, const Word &rhs) {
  Word out;
  out.reserve(lhs.size() + rhs.size());
  out.insert(out.end(), lhs.begin(), lhs.end());
  out.insert(out.end(), rhs.begin(), rhs.end());
  return out;
}

inline Word append(Word w, Symbol b) {
  w.push_back(b);
  return w;
}

/// All prefixes of `w`, shortest first, including the empty word and `w`.
std::vector<Word> prefixes(const Word &w);

struct WordHash {
  std::size_t operator()(const Word &w) const noexcept {
    // FNV-1a over the symbol stream.
    std::uint64_t h = 1469598103934665603ULL;
    for (Symbol s : w) {
      h ^= static_cast<std::uint64_t>(s) + 1;
      h *= 1099511628211ULL;
    }
    h ^= w.size();
    return static_cast<std::size_t>(h);
  }
};

/// Element of the learner's name space: either a word or the dead-state
/// sentinel. Dead orders before every word and is unequal to all of them,
/// including the empty word.
class StateName {
public:
  StateName() = default; // Dead
  explicit StateName(Word w) : word_(std::move(w)) {}

  static StateName dead() { return StateName{}; }

  [[nodiscard]] bool is_dead() const noexcept { return !word_.has_value(); }
  /// Precondition: !is_dead().
  [[nodiscard]] const Word &word() const { return *word_; }

  friend bool operator==(const StateName &, const StateName &) = default;
  friend bool operator<(const StateName &lhs, const StateName &rhs) {
    if (lhs.is_dead() || rhs.is_dead())
      return lhs.is_dead() && !rhs.is_dead();
    return length_lex_less(*lhs.word_, *rhs.word_);
  }

private:
  std::optional<Word> word_;
};

/// Concatenation modulo the dead state: Dead absorbs every symbol.
inline StateName f_concat(const StateName &name, Symbol b) {
  if (name.is_dead())
    return StateName::dead();
  return StateName{append(name.word(), b)};
}

} // namespace ids
