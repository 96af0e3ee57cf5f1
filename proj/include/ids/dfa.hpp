#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ids/word.hpp"

namespace ids {

using StateIndex = std::size_t;

/// Raised on out-of-range symbols or states and malformed automata.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Complete deterministic automaton with states 0..num_states-1 and a total,
/// row-major transition table (state * alphabet_size + symbol).
class Dfa {
public:
  /// Throws InputError unless every index is in range and the table is total.
  Dfa(std::size_t alphabet_size, std::size_t num_states, StateIndex initial,
      std::vector<bool> finals, std::vector<StateIndex> transitions);

  [[nodiscard]] std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  [[nodiscard]] std::size_t num_states() const noexcept { return num_states_; }
  [[nodiscard]] StateIndex initial() const noexcept { return initial_; }

  [[nodiscard]] bool is_final(StateIndex q) const { return finals_[q] != 0; }
  [[nodiscard]] StateIndex next(StateIndex q, Symbol b) const noexcept {
    return transitions_[q * alphabet_size_ + b];
  }
  [[nodiscard]] std::vector<StateIndex> final_states() const;
  [[nodiscard]] std::span<const StateIndex> transition_table() const noexcept {
    return transitions_;
  }

  friend bool operator==(const Dfa &, const Dfa &) = default;

private:
  std::size_t alphabet_size_;
  std::size_t num_states_;
  StateIndex initial_;
  std::vector<char> finals_;
  std::vector<StateIndex> transitions_;
};

/// Throws InputError if any symbol of `w` is outside the alphabet.
void check_word(const Dfa &dfa, const Word &w);

StateIndex delta_star(const Dfa &dfa, StateIndex from, const Word &w);
bool accepts(const Dfa &dfa, const Word &w);

/// States from which some word reaches a final state.
std::vector<bool> live_states(const Dfa &dfa);

/// States reachable from the initial state.
std::vector<bool> reachable_states(const Dfa &dfa);

/// Canonical automaton: unreachable states removed, then Moore partition
/// refinement. The result has at most one dead state. States are numbered
/// in breadth-first order from the initial state (symbols ascending), so
/// isomorphic inputs produce identical outputs.
Dfa minimize(const Dfa &dfa);

/// Single-state automata over `alphabet_size` symbols.
Dfa universal_dfa(std::size_t alphabet_size);
Dfa empty_dfa(std::size_t alphabet_size);

} // namespace ids
