#pragma once

#include <optional>

#include "ids/dfa.hpp"

namespace ids {

struct EquivalenceResult {
  bool equivalent = false;
  /// Present iff not equivalent; accepted by exactly one of the automata.
  std::optional<Word> witness;
};

/// Union-find equivalence test (Hopcroft-Karp). Near-linear in the total
/// number of transitions. Throws InputError on alphabet mismatch.
EquivalenceResult check_equiv(const Dfa &a, const Dfa &b);

/// Breadth-first search over the product automaton. Quadratic; returns a
/// shortest witness.
EquivalenceResult check_equiv_bruteforce(const Dfa &a, const Dfa &b);

} // namespace ids
