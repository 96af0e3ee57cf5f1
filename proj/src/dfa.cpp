#include "ids/dfa.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>

namespace ids {

std::vector<Word> prefixes(const Word &w) {
  std::vector<Word> out;
  out.reserve(w.size() + 1);
  for (std::size_t n = 0; n <= w.size(); ++n)
    out.emplace_back(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n));
  return out;
}

Dfa::Dfa(std::size_t alphabet_size, std::size_t num_states, StateIndex initial,
         std::vector<bool> finals, std::vector<StateIndex> transitions)
    : alphabet_size_(alphabet_size), num_states_(num_states), initial_(initial),
      finals_(finals.begin(), finals.end()), transitions_(std::move(transitions)) {
  if (alphabet_size_ == 0)
    throw InputError("dfa: alphabet must not be empty");
  if (num_states_ == 0)
    throw InputError("dfa: state set must not be empty");
  if (initial_ >= num_states_)
    throw InputError("dfa: initial state " + std::to_string(initial_) + " out of range");
  if (finals_.size() != num_states_)
    throw InputError("dfa: finality vector has wrong size");
  if (transitions_.size() != num_states_ * alphabet_size_)
    throw InputError("dfa: transition table is not total");
  for (StateIndex target : transitions_)
    if (target >= num_states_)
      throw InputError("dfa: transition target " + std::to_string(target) + " out of range");
}

std::vector<StateIndex> Dfa::final_states() const {
  std::vector<StateIndex> out;
  for (StateIndex q = 0; q < num_states_; ++q)
    if (finals_[q])
      out.push_back(q);
  return out;
}

void check_word(const Dfa &dfa, const Word &w) {
  for (Symbol b : w)
    if (b >= dfa.alphabet_size())
      throw InputError("symbol " + std::to_string(b) + " outside alphabet of size " +
                       std::to_string(dfa.alphabet_size()));
}

StateIndex delta_star(const Dfa &dfa, StateIndex from, const Word &w) {
  if (from >= dfa.num_states())
    throw InputError("state " + std::to_string(from) + " out of range");
  check_word(dfa, w);
  StateIndex q = from;
  for (Symbol b : w)
    q = dfa.next(q, b);
  return q;
}

bool accepts(const Dfa &dfa, const Word &w) {
  return dfa.is_final(delta_star(dfa, dfa.initial(), w));
}

std::vector<bool> live_states(const Dfa &dfa) {
  const std::size_t n = dfa.num_states();
  const std::size_t k = dfa.alphabet_size();
  // Reverse adjacency in CSR form.
  std::vector<std::size_t> offsets(n + 1, 0);
  for (StateIndex q = 0; q < n; ++q)
    for (Symbol b = 0; b < k; ++b)
      ++offsets[dfa.next(q, b) + 1];
  for (std::size_t q = 0; q < n; ++q)
    offsets[q + 1] += offsets[q];
  std::vector<StateIndex> sources(n * k);
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  for (StateIndex q = 0; q < n; ++q)
    for (Symbol b = 0; b < k; ++b)
      sources[fill[dfa.next(q, b)]++] = q;

  std::vector<bool> live(n, false);
  std::vector<StateIndex> stack;
  for (StateIndex q = 0; q < n; ++q)
    if (dfa.is_final(q)) {
      live[q] = true;
      stack.push_back(q);
    }
  while (!stack.empty()) {
    StateIndex q = stack.back();
    stack.pop_back();
    for (std::size_t e = offsets[q]; e < offsets[q + 1]; ++e)
      if (!live[sources[e]]) {
        live[sources[e]] = true;
        stack.push_back(sources[e]);
      }
  }
  return live;
}

std::vector<bool> reachable_states(const Dfa &dfa) {
  std::vector<bool> seen(dfa.num_states(), false);
  std::vector<StateIndex> stack{dfa.initial()};
  seen[dfa.initial()] = true;
  while (!stack.empty()) {
    StateIndex q = stack.back();
    stack.pop_back();
    for (Symbol b = 0; b < dfa.alphabet_size(); ++b) {
      StateIndex r = dfa.next(q, b);
      if (!seen[r]) {
        seen[r] = true;
        stack.push_back(r);
      }
    }
  }
  return seen;
}

Dfa minimize(const Dfa &dfa) {
  const std::size_t k = dfa.alphabet_size();

  // Restrict to reachable states, numbered in BFS order.
  std::vector<StateIndex> order;
  std::vector<std::size_t> index(dfa.num_states(), SIZE_MAX);
  index[dfa.initial()] = 0;
  order.push_back(dfa.initial());
  for (std::size_t head = 0; head < order.size(); ++head)
    for (Symbol b = 0; b < k; ++b) {
      StateIndex r = dfa.next(order[head], b);
      if (index[r] == SIZE_MAX) {
        index[r] = order.size();
        order.push_back(r);
      }
    }
  const std::size_t n = order.size();

  // Moore refinement: split by (class, successor classes) until stable.
  std::vector<std::size_t> block(n);
  for (std::size_t s = 0; s < n; ++s)
    block[s] = dfa.is_final(order[s]) ? 1 : 0;
  std::size_t num_blocks = 0;
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> signatures;
    std::vector<std::size_t> refined(n);
    std::vector<std::size_t> sig(k + 1);
    for (std::size_t s = 0; s < n; ++s) {
      sig[0] = block[s];
      for (Symbol b = 0; b < k; ++b)
        sig[b + 1] = block[index[dfa.next(order[s], b)]];
      auto [it, inserted] = signatures.try_emplace(sig, signatures.size());
      refined[s] = it->second;
    }
    const std::size_t count = signatures.size();
    block = std::move(refined);
    if (count == num_blocks)
      break;
    num_blocks = count;
  }

  // Renumber blocks in BFS order over the quotient.
  std::vector<std::size_t> renumber(num_blocks, SIZE_MAX);
  std::vector<std::size_t> representative;
  renumber[block[0]] = 0;
  representative.push_back(0);
  for (std::size_t head = 0; head < representative.size(); ++head)
    for (Symbol b = 0; b < k; ++b) {
      std::size_t target = index[dfa.next(order[representative[head]], b)];
      if (renumber[block[target]] == SIZE_MAX) {
        renumber[block[target]] = representative.size();
        representative.push_back(target);
      }
    }

  std::vector<bool> finals(num_blocks, false);
  std::vector<StateIndex> transitions(num_blocks * k);
  for (std::size_t c = 0; c < num_blocks; ++c) {
    StateIndex q = order[representative[c]];
    finals[c] = dfa.is_final(q);
    for (Symbol b = 0; b < k; ++b)
      transitions[c * k + b] = renumber[block[index[dfa.next(q, b)]]];
  }
  return Dfa(k, num_blocks, 0, std::move(finals), std::move(transitions));
}

Dfa universal_dfa(std::size_t alphabet_size) {
  return Dfa(alphabet_size, 1, 0, {true}, std::vector<StateIndex>(alphabet_size, 0));
}

Dfa empty_dfa(std::size_t alphabet_size) {
  return Dfa(alphabet_size, 1, 0, {false}, std::vector<StateIndex>(alphabet_size, 0));
}

} // namespace ids
