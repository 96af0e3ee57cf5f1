#include "ids/equivalence.hpp"

#include <numeric>
#include <string>
#include <vector>

namespace ids {

namespace {

void check_alphabets(const Dfa &a, const Dfa &b) {
  if (a.alphabet_size() != b.alphabet_size())
    throw InputError("equivalence: alphabet sizes differ (" + std::to_string(a.alphabet_size()) +
                     " vs " + std::to_string(b.alphabet_size()) + ")");
}

class DisjointSets {
public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    std::size_t root = x;
    while (parent_[root] != root)
      root = parent_[root];
    while (parent_[x] != root) {
      std::size_t next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  /// False if already in the same set.
  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y)
      return false;
    if (rank_[x] < rank_[y])
      std::swap(x, y);
    parent_[y] = x;
    if (rank_[x] == rank_[y])
      ++rank_[x];
    return true;
  }

private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned char> rank_;
};

// Pair discovered during propagation, linked to the pair it came from.
struct Trail {
  StateIndex left;
  StateIndex right;
  std::size_t parent;
  Symbol symbol;
};

Word trace_back(const std::vector<Trail> &trail, std::size_t at) {
  Word w;
  while (at != 0) {
    w.push_back(trail[at].symbol);
    at = trail[at].parent;
  }
  return Word(w.rbegin(), w.rend());
}

} // namespace

EquivalenceResult check_equiv(const Dfa &a, const Dfa &b) {
  check_alphabets(a, b);
  const std::size_t offset = a.num_states();
  DisjointSets sets(a.num_states() + b.num_states());

  std::vector<Trail> trail{{a.initial(), b.initial(), 0, 0}};
  if (a.is_final(a.initial()) != b.is_final(b.initial()))
    return {false, Word{}};
  sets.unite(a.initial(), offset + b.initial());

  // Every merged pair agrees on finality, so each class is uniform.
  for (std::size_t head = 0; head < trail.size(); ++head) {
    const Trail cur = trail[head];
    for (Symbol s = 0; s < a.alphabet_size(); ++s) {
      StateIndex p = a.next(cur.left, s);
      StateIndex q = b.next(cur.right, s);
      if (!sets.unite(p, offset + q))
        continue;
      trail.push_back({p, q, head, s});
      if (a.is_final(p) != b.is_final(q))
        return {false, trace_back(trail, trail.size() - 1)};
    }
  }
  return {true, std::nullopt};
}

EquivalenceResult check_equiv_bruteforce(const Dfa &a, const Dfa &b) {
  check_alphabets(a, b);
  const std::size_t nb = b.num_states();
  std::vector<bool> seen(a.num_states() * nb, false);
  std::vector<Trail> trail{{a.initial(), b.initial(), 0, 0}};
  seen[a.initial() * nb + b.initial()] = true;
  for (std::size_t head = 0; head < trail.size(); ++head) {
    const Trail cur = trail[head];
    if (a.is_final(cur.left) != b.is_final(cur.right))
      return {false, trace_back(trail, head)};
    for (Symbol s = 0; s < a.alphabet_size(); ++s) {
      StateIndex p = a.next(cur.left, s);
      StateIndex q = b.next(cur.right, s);
      if (seen[p * nb + q])
        continue;
      seen[p * nb + q] = true;
      trail.push_back({p, q, head, s});
    }
  }
  return {true, std::nullopt};
}

} // namespace ids
