#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "ids/dfa.hpp"
#include "ids/teacher.hpp"

namespace ids {

/// Growable bitset indexed by position in the distinguishing-string list.
class RowBits {
public:
  [[nodiscard]] std::size_t size() const noexcept { return size_; }
  [[nodiscard]] bool test(std::size_t j) const noexcept {
    return (blocks_[j / 64] >> (j % 64)) & 1U;
  }
  [[nodiscard]] bool none() const noexcept;
  void push_back(bool bit);

  /// Positions set in exactly one of the two rows, ascending.
  [[nodiscard]] std::vector<std::size_t> symmetric_difference(const RowBits &other) const;

  [[nodiscard]] std::size_t hash() const noexcept;
  friend bool operator==(const RowBits &, const RowBits &) = default;

private:
  std::vector<std::uint64_t> blocks_;
  std::size_t size_ = 0;
};

/// The learner's state: names T' (dead sentinel plus words), the subset P',
/// the distinguishing strings V and one row E(name) per name.
///
/// Rows are always complete over V: a name's row is filled the moment it is
/// added and every new distinguishing string is queried against all names.
/// The table itself keeps no query counters; callers account bquery.
class ObservationTable {
public:
  using NameId = std::size_t;
  static constexpr NameId kDead = 0;

  explicit ObservationTable(std::size_t alphabet_size);

  [[nodiscard]] std::size_t alphabet_size() const noexcept { return alphabet_size_; }

  /// V, with V[0] the empty word.
  [[nodiscard]] const std::vector<Word> &distinguishers() const noexcept { return distinguishers_; }
  /// Index i of the newest distinguishing string.
  [[nodiscard]] std::size_t index() const noexcept { return distinguishers_.size() - 1; }

  /// Number of names including the dead sentinel.
  [[nodiscard]] std::size_t num_names() const noexcept { return entries_.size(); }
  [[nodiscard]] const StateName &name(NameId id) const { return entries_[id].name; }
  [[nodiscard]] const RowBits &row(NameId id) const { return entries_[id].row; }
  [[nodiscard]] bool in_p(NameId id) const { return entries_[id].in_p; }
  /// f(name, b) for a member of P'.
  [[nodiscard]] NameId successor(NameId id, Symbol b) const;

  [[nodiscard]] std::optional<NameId> find(const Word &w) const;
  [[nodiscard]] std::optional<NameId> find(const StateName &name) const;
  [[nodiscard]] bool in_t(const Word &w) const { return find(w).has_value(); }
  [[nodiscard]] bool in_p(const Word &w) const;

  /// P' in scan order: dead first, then words in length-lex order.
  [[nodiscard]] std::span<const NameId> p_order() const noexcept { return p_order_; }
  /// Size of P (words only) and T (words only).
  [[nodiscard]] std::size_t p_size() const noexcept { return p_order_.size() - 1; }
  [[nodiscard]] std::size_t t_size() const noexcept { return entries_.size() - 1; }

  /// Monotone counter bumped by every mutation.
  [[nodiscard]] std::uint64_t version() const noexcept { return version_; }

  /// Adds `w` to T and fills its row over the whole of V (index()+1 teacher
  /// answers). Returns the id and whether the word was new.
  std::pair<NameId, bool> add_name(const Word &w, const Teacher &teacher);

  /// Moves a member of T into P. Every one-symbol extension must already be
  /// in T.
  void promote(NameId id);

  /// Appends `v` to V and extends every row by querying name.v. Returns the
  /// number of teacher answers (|T|; the dead row is extended without one).
  std::size_t append_distinguisher(const Word &v, const Teacher &teacher);

private:
  struct Entry {
    StateName name;
    RowBits row;
    bool in_p = false;
    std::vector<NameId> successors; // filled on promotion
  };

  std::size_t alphabet_size_;
  std::vector<Word> distinguishers_;
  std::vector<Entry> entries_;
  std::unordered_map<Word, NameId, WordHash> index_;
  std::vector<NameId> p_order_;
  std::uint64_t version_ = 0;
};

/// A pair of P' names with equal rows whose b-successors have different rows.
struct Violation {
  ObservationTable::NameId first;
  ObservationTable::NameId second;
  Symbol symbol;
  /// Length-lex least element of E(f(first,b)) xor E(f(second,b)).
  Word gamma;

  /// The new distinguishing string b.gamma.
  [[nodiscard]] Word distinguisher() const;
};

/// Scans P' in order, comparing every name with the earliest name sharing
/// its row; reports the first symbol on which their successors disagree.
std::optional<Violation> find_violation(const ObservationTable &table);

/// Called after each new distinguishing string has been queried.
using RefineObserver = std::function<void(const ObservationTable &)>;

/// Refines until the row partition of P' is a congruence. Every new
/// distinguishing string costs one bquery per word in T. Returns the number
/// of distinguishing strings added.
std::size_t refine_partition(ObservationTable &table, const Teacher &teacher, QueryStats &stats,
                             const RefineObserver &observer = {});

/// Hypothesis automaton built from a table at a refinement fixpoint.
struct Hypothesis {
  Dfa dfa;
  std::size_t generation = 0;

  /// State that names a word of T, or the dead class.
  [[nodiscard]] std::optional<StateIndex> class_of(const StateName &name) const;

  std::unordered_map<Word, StateIndex, WordHash> word_class;
  std::optional<StateIndex> dead_class;
};

/// Quotient automaton over the rows of T. Classes holding a member of P'
/// take their transitions from it (self-loops when the row is empty);
/// classes with no P' member route every symbol to the empty-row class.
/// Throws std::logic_error if the table is not at a fixpoint.
Hypothesis construct_hypothesis(const ObservationTable &table, std::size_t generation);

/// The automaton construct_hypothesis would build, without the name index.
Dfa quotient_automaton(const ObservationTable &table);

} // namespace ids
