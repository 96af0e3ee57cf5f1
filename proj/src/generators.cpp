#include "ids/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace ids {

Seed derive_seed(Seed base, std::uint64_t a, std::uint64_t b) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(base) ^ a) ^ (b * 0xd6e8feb86659fd93ULL));
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection sampling keeps the draw unbiased and implementation-independent.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

Dfa random_dfa(const DfaGenSpec &spec) {
  if (spec.num_states == 0 || spec.alphabet_size == 0)
    throw InputError("random_dfa: state count and alphabet size must be positive");
  const std::size_t n = spec.num_states;
  const std::size_t k = spec.alphabet_size;
  Rng rng(spec.seed);

  const std::size_t num_finals = rng.below(n + 1);
  std::vector<StateIndex> pool(n);
  std::iota(pool.begin(), pool.end(), StateIndex{0});
  std::vector<bool> finals(n, false);
  for (std::size_t i = 0; i < num_finals; ++i) {
    std::size_t j = i + rng.below(n - i);
    std::swap(pool[i], pool[j]);
    finals[pool[i]] = true;
  }
  const StateIndex initial = rng.below(n);
  std::vector<StateIndex> transitions(n * k);
  for (StateIndex &t : transitions)
    t = rng.below(n);
  return Dfa(k, n, initial, std::move(finals), std::move(transitions));
}

WordGenerator::WordGenerator(std::size_t alphabet_size, std::size_t max_len, Seed seed)
    : alphabet_size_(alphabet_size), max_len_(max_len), rng_(seed) {
  if (alphabet_size_ == 0)
    throw InputError("random words: alphabet must not be empty");
  if (max_len_ == 0)
    throw InputError("random words: max length must be at least 1");
}

Word WordGenerator::next() {
  Word w(rng_.between(1, max_len_));
  for (Symbol &s : w)
    s = static_cast<Symbol>(rng_.below(alphabet_size_));
  return w;
}

std::vector<Word> random_words(std::size_t alphabet_size, std::size_t max_len, std::size_t count,
                               Seed seed) {
  WordGenerator gen(alphabet_size, max_len, seed);
  std::vector<Word> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(gen.next());
  return out;
}

std::vector<Word> live_complete_set(const Dfa &dfa) {
  const auto live = live_states(dfa);
  std::vector<Word> access(dfa.num_states());
  std::vector<bool> seen(dfa.num_states(), false);
  std::vector<StateIndex> queue{dfa.initial()};
  seen[dfa.initial()] = true;
  // BFS with ascending symbols reaches each state first by its shortlex-least word.
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const StateIndex q = queue[head];
    for (Symbol b = 0; b < dfa.alphabet_size(); ++b) {
      StateIndex r = dfa.next(q, b);
      if (seen[r])
        continue;
      seen[r] = true;
      access[r] = append(access[q], b);
      queue.push_back(r);
    }
  }
  std::vector<Word> out{Word{}};
  for (StateIndex q : queue)
    if (live[q] && !access[q].empty())
      out.push_back(access[q]);
  std::sort(out.begin(), out.end(), LengthLexLess{});
  return out;
}

} // namespace ids
