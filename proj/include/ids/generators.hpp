#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ids/dfa.hpp"

namespace ids {

using Seed = std::uint64_t;

/// Mixes a base seed with stream coordinates (splitmix64 finaliser), so
/// parallel trials draw from disjoint, reproducible streams.
Seed derive_seed(Seed base, std::uint64_t a, std::uint64_t b = 0);

/// Seeded generator with a portable bounded draw; identical sequences on
/// every platform for the same seed.
class Rng {
public:
  explicit Rng(Seed seed) : engine_(seed) {}

  /// Uniform integer in [0, bound). bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform integer in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

private:
  std::mt19937_64 engine_;
};

struct DfaGenSpec {
  std::size_t num_states = 1;
  std::size_t alphabet_size = 2;
  Seed seed = 0;
};

/// |F| uniform in 0..n, F a uniform |F|-subset, initial uniform, every
/// transition target uniform. Dead states are kept.
Dfa random_dfa(const DfaGenSpec &spec);

/// Endless source of non-empty words with length uniform in 1..max_len and
/// uniform symbols.
class WordGenerator {
public:
  WordGenerator(std::size_t alphabet_size, std::size_t max_len, Seed seed);
  Word next();

private:
  std::size_t alphabet_size_;
  std::size_t max_len_;
  Rng rng_;
};

std::vector<Word> random_words(std::size_t alphabet_size, std::size_t max_len, std::size_t count,
                               Seed seed);

/// The empty word plus a shortest (then length-lex least) access word for
/// every reachable live state, sorted length-lex. Unreachable live states
/// have no access word and contribute nothing.
std::vector<Word> live_complete_set(const Dfa &dfa);

} // namespace ids
