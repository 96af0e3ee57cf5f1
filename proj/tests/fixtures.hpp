#pragma once

// Shared test fixtures and brute-force oracles. The oracles never call into
// the code paths they check.

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ids/dfa.hpp"
#include "ids/generators.hpp"

namespace ids::testing {

/// Words over {a, b} written as text; "" is the empty word.
inline Word w(std::string_view text) {
  Word out;
  for (char c : text)
    out.push_back(static_cast<Symbol>(c - 'a'));
  return out;
}

inline std::string str(const Word &word) {
  std::string out;
  for (Symbol s : word)
    out.push_back(static_cast<char>('a' + s));
  return out;
}

/// The running example target: over {a, b} it accepts exactly {b, bb}.
/// States: 0 initial, 1 after b, 2 after bb, 3 dead.
inline Dfa example_target() {
  constexpr StateIndex d = 3;
  return Dfa(2, 4, 0, {false, true, true, false},
             {d, 1,   // 0
              d, 2,   // 1
              d, d,   // 2
              d, d}); // 3
}

/// Words of length exactly n over k symbols in lexicographic order.
inline std::vector<Word> words_of_length(std::size_t k, std::size_t n) {
  std::vector<Word> out{Word{}};
  for (std::size_t len = 0; len < n; ++len) {
    std::vector<Word> next;
    for (const Word &p : out)
      for (Symbol b = 0; b < k; ++b) {
        Word x = p;
        x.push_back(b);
        next.push_back(std::move(x));
      }
    out = std::move(next);
  }
  return out;
}

/// All words of length <= n, shortest first.
inline std::vector<Word> words_up_to(std::size_t k, std::size_t n) {
  std::vector<Word> out;
  for (std::size_t len = 0; len <= n; ++len)
    for (Word &x : words_of_length(k, len))
      out.push_back(std::move(x));
  return out;
}

/// Independent step-by-step interpreter over the raw transition table.
inline StateIndex interpret(const Dfa &dfa, StateIndex q, const Word &word) {
  auto table = dfa.transition_table();
  for (std::size_t i = 0; i < word.size(); ++i)
    q = table[q * dfa.alphabet_size() + word[i]];
  return q;
}

inline bool interpret_accepts(const Dfa &dfa, const Word &word) {
  return dfa.is_final(interpret(dfa, dfa.initial(), word));
}

/// Live states by enumerating every word shorter than the state count.
inline std::vector<bool> brute_live(const Dfa &dfa) {
  const auto words = words_up_to(dfa.alphabet_size(), dfa.num_states() - 1);
  std::vector<bool> live(dfa.num_states(), false);
  for (StateIndex q = 0; q < dfa.num_states(); ++q)
    for (const Word &x : words)
      if (dfa.is_final(interpret(dfa, q, x))) {
        live[q] = true;
        break;
      }
  return live;
}

/// Reachable states by enumerating words shorter than the state count.
inline std::set<StateIndex> brute_reachable(const Dfa &dfa) {
  std::set<StateIndex> out;
  for (const Word &x : words_up_to(dfa.alphabet_size(), dfa.num_states() - 1))
    out.insert(interpret(dfa, dfa.initial(), x));
  return out;
}

/// Number of Myhill-Nerode classes among reachable states, distinguishing
/// by every suffix of length <= max_len.
inline std::size_t brute_nerode_classes(const Dfa &dfa, std::size_t max_len) {
  const auto suffixes = words_up_to(dfa.alphabet_size(), max_len);
  std::set<std::vector<bool>> signatures;
  for (StateIndex q : brute_reachable(dfa)) {
    std::vector<bool> sig;
    sig.reserve(suffixes.size());
    for (const Word &x : suffixes)
      sig.push_back(dfa.is_final(interpret(dfa, q, x)));
    signatures.insert(std::move(sig));
  }
  return signatures.size();
}

/// Random automaton with state count uniform in [lo, hi].
inline Dfa random_target(Seed seed, std::size_t lo, std::size_t hi, std::size_t alphabet = 2) {
  Rng rng(derive_seed(seed, 0xabc));
  return random_dfa({static_cast<std::size_t>(rng.between(lo, hi)), alphabet, seed});
}

} // namespace ids::testing
