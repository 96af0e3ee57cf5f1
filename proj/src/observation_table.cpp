#include "ids/observation_table.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace ids {

bool RowBits::none() const noexcept {
  return std::all_of(blocks_.begin(), blocks_.end(), [](std::uint64_t b) { return b == 0; });
}

void RowBits::push_back(bool bit) {
  if (size_ % 64 == 0)
    blocks_.push_back(0);
  if (bit)
    blocks_.back() |= std::uint64_t{1} << (size_ % 64);
  ++size_;
}

std::vector<std::size_t> RowBits::symmetric_difference(const RowBits &other) const {
  std::vector<std::size_t> out;
  const std::size_t n = std::min(blocks_.size(), other.blocks_.size());
  for (std::size_t blk = 0; blk < n; ++blk) {
    std::uint64_t diff = blocks_[blk] ^ other.blocks_[blk];
    while (diff != 0) {
      out.push_back(blk * 64 + static_cast<std::size_t>(std::countr_zero(diff)));
      diff &= diff - 1;
    }
  }
  return out;
}

std::size_t RowBits::hash() const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ size_;
  for (std::uint64_t b : blocks_) {
    h ^= b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

ObservationTable::ObservationTable(std::size_t alphabet_size)
    : alphabet_size_(alphabet_size), distinguishers_{Word{}} {
  if (alphabet_size_ == 0)
    throw InputError("observation table: empty alphabet");
  Entry dead;
  dead.row.push_back(false);
  dead.in_p = true;
  dead.successors.assign(alphabet_size_, kDead);
  entries_.push_back(std::move(dead));
  p_order_.push_back(kDead);
}

ObservationTable::NameId ObservationTable::successor(NameId id, Symbol b) const {
  const Entry &e = entries_[id];
  if (!e.in_p)
    throw std::logic_error("successor requested for a name outside P'");
  return e.successors[b];
}

std::optional<ObservationTable::NameId> ObservationTable::find(const Word &w) const {
  auto it = index_.find(w);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

std::optional<ObservationTable::NameId> ObservationTable::find(const StateName &name) const {
  if (name.is_dead())
    return kDead;
  return find(name.word());
}

bool ObservationTable::in_p(const Word &w) const {
  auto id = find(w);
  return id && entries_[*id].in_p;
}

std::pair<ObservationTable::NameId, bool> ObservationTable::add_name(const Word &w,
                                                                     const Teacher &teacher) {
  if (auto id = find(w))
    return {*id, false};
  Entry e;
  e.name = StateName{w};
  for (const Word &v : distinguishers_)
    e.row.push_back(teacher.member(w, v));
  const NameId id = entries_.size();
  entries_.push_back(std::move(e));
  index_.emplace(w, id);
  ++version_;
  return {id, true};
}

void ObservationTable::promote(NameId id) {
  Entry &e = entries_[id];
  if (e.in_p)
    return;
  std::vector<NameId> successors(alphabet_size_);
  for (Symbol b = 0; b < alphabet_size_; ++b) {
    auto next = find(append(e.name.word(), b));
    if (!next)
      throw std::logic_error("promote: one-symbol extension missing from T");
    successors[b] = *next;
  }
  e.successors = std::move(successors);
  e.in_p = true;
  auto pos = std::upper_bound(p_order_.begin() + 1, p_order_.end(), id, [this](NameId a, NameId b) {
    return entries_[a].name < entries_[b].name;
  });
  p_order_.insert(pos, id);
  ++version_;
}

std::size_t ObservationTable::append_distinguisher(const Word &v, const Teacher &teacher) {
  distinguishers_.push_back(v);
  entries_[kDead].row.push_back(false);
  for (NameId id = 1; id < entries_.size(); ++id)
    entries_[id].row.push_back(teacher.member(entries_[id].name.word(), v));
  ++version_;
  return entries_.size() - 1;
}

Word Violation::distinguisher() const {
  Word v;
  v.reserve(gamma.size() + 1);
  v.push_back(symbol);
  v.insert(v.end(), gamma.begin(), gamma.end());
  return v;
}

namespace {

struct RowPtrHash {
  std::size_t operator()(const RowBits *r) const noexcept { return r->hash(); }
};
struct RowPtrEq {
  bool operator()(const RowBits *a, const RowBits *b) const noexcept { return *a == *b; }
};

} // namespace

std::optional<Violation> find_violation(const ObservationTable &table) {
  using NameId = ObservationTable::NameId;
  std::unordered_map<const RowBits *, NameId, RowPtrHash, RowPtrEq> representative;
  representative.reserve(table.p_order().size());
  for (NameId id : table.p_order()) {
    auto [it, inserted] = representative.emplace(&table.row(id), id);
    if (inserted)
      continue;
    const NameId rep = it->second;
    for (Symbol b = 0; b < table.alphabet_size(); ++b) {
      const RowBits &lhs = table.row(table.successor(rep, b));
      const RowBits &rhs = table.row(table.successor(id, b));
      if (lhs == rhs)
        continue;
      const auto &v = table.distinguishers();
      std::size_t best = SIZE_MAX;
      for (std::size_t j : lhs.symmetric_difference(rhs))
        if (best == SIZE_MAX || length_lex_less(v[j], v[best]))
          best = j;
      return Violation{rep, id, b, v[best]};
    }
  }
  return std::nullopt;
}

std::size_t refine_partition(ObservationTable &table, const Teacher &teacher, QueryStats &stats,
                             const RefineObserver &observer) {
  std::size_t added = 0;
  while (auto violation = find_violation(table)) {
    Word v = violation->distinguisher();
    // Row-exactness guarantees b.gamma is new; a repeat means a corrupt table.
    const auto &existing = table.distinguishers();
    if (std::find(existing.begin(), existing.end(), v) != existing.end())
      throw std::logic_error("refine_partition: distinguishing string repeated");
    stats.record_bquery(table.append_distinguisher(v, teacher));
    ++added;
    if (observer)
      observer(table);
  }
  return added;
}

std::optional<StateIndex> Hypothesis::class_of(const StateName &name) const {
  if (name.is_dead())
    return dead_class;
  auto it = word_class.find(name.word());
  if (it == word_class.end())
    return std::nullopt;
  return it->second;
}

namespace {

struct Quotient {
  Dfa dfa;
  std::vector<StateIndex> state_of_name; // indexed by NameId; dead entry unused
  std::optional<StateIndex> empty_state;
};

Quotient build_quotient(const ObservationTable &table) {
  using NameId = ObservationTable::NameId;
  const std::size_t k = table.alphabet_size();
  constexpr StateIndex kUnset = SIZE_MAX;

  // One state per distinct row over T, numbered by first occurrence; the
  // empty word is the first word added, so it lands in state 0.
  std::unordered_map<const RowBits *, StateIndex, RowPtrHash, RowPtrEq> state_of_row;
  std::vector<StateIndex> state_of_name(table.num_names(), kUnset);
  std::vector<bool> accepting;
  for (NameId id = 1; id < table.num_names(); ++id) {
    auto [it, inserted] = state_of_row.emplace(&table.row(id), accepting.size());
    if (inserted)
      accepting.push_back(table.row(id).test(0));
    state_of_name[id] = it->second;
  }
  if (accepting.empty())
    throw std::logic_error("construct_hypothesis: T is empty");

  auto empty_it = state_of_row.find(&table.row(ObservationTable::kDead));
  std::optional<StateIndex> empty_state;
  if (empty_it != state_of_row.end())
    empty_state = empty_it->second;

  std::vector<StateIndex> delta(accepting.size() * k, kUnset);
  std::vector<bool> has_p_member(accepting.size(), false);
  auto set_transition = [&](StateIndex from, Symbol b, StateIndex to) {
    StateIndex &slot = delta[from * k + b];
    if (slot != kUnset && slot != to)
      throw std::logic_error("construct_hypothesis: rows of P' are not a congruence");
    slot = to;
  };

  for (NameId id : table.p_order()) {
    if (id == ObservationTable::kDead)
      continue; // its class is the empty-row class, handled below
    const StateIndex from = state_of_name[id];
    has_p_member[from] = true;
    for (Symbol b = 0; b < k; ++b) {
      if (table.row(id).none())
        set_transition(from, b, from);
      else
        set_transition(from, b, state_of_name[table.successor(id, b)]);
    }
  }
  if (empty_state) {
    has_p_member[*empty_state] = true;
    for (Symbol b = 0; b < k; ++b)
      set_transition(*empty_state, b, *empty_state);
  }

  // Classes that only contain T-P' names: send everything to the empty
  // class, creating it if no word of T has an empty row.
  const std::size_t named_states = accepting.size();
  for (StateIndex s = 0; s < named_states; ++s) {
    if (has_p_member[s])
      continue;
    if (!empty_state) {
      empty_state = accepting.size();
      accepting.push_back(false);
      delta.resize(accepting.size() * k, kUnset);
      for (Symbol b = 0; b < k; ++b)
        delta[*empty_state * k + b] = *empty_state;
    }
    for (Symbol b = 0; b < k; ++b)
      set_transition(s, b, *empty_state);
  }

  const std::size_t num_states = accepting.size();
  const StateIndex initial = state_of_name[*table.find(Word{})];
  return {Dfa(k, num_states, initial, std::move(accepting), std::move(delta)),
          std::move(state_of_name), empty_state};
}

} // namespace

Dfa quotient_automaton(const ObservationTable &table) { return build_quotient(table).dfa; }

Hypothesis construct_hypothesis(const ObservationTable &table, std::size_t generation) {
  Quotient q = build_quotient(table);
  Hypothesis h{std::move(q.dfa), generation, {}, q.empty_state};
  h.word_class.reserve(table.num_names());
  for (ObservationTable::NameId id = 1; id < table.num_names(); ++id)
    h.word_class.emplace(table.name(id).word(), q.state_of_name[id]);
  return h;
}

} // namespace ids
