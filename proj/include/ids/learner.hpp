#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ids/observation_table.hpp"
#include "ids/teacher.hpp"

namespace ids {

enum class Variant { PrefixFree, PrefixClosed };

std::string_view to_string(Variant v) noexcept;
/// Accepts "prefix-free" and "prefix-closed"; throws InputError otherwise.
Variant parse_variant(std::string_view text);

/// When the learner replaces its hypothesis after an observation.
///
/// OnInconsistency rebuilds only when the observed word is misclassified by
/// the current hypothesis. With a length-bounded word source this can stall
/// forever on a stale hypothesis whose errors all lie on longer words, even
/// though the table already determines the target.
///
/// OnTableChange re-derives the hypothesis whenever the table changed, and
/// replaces it when the automaton differs (or when the word was
/// misclassified).
enum class RebuildPolicy { OnTableChange, OnInconsistency };

std::string_view to_string(RebuildPolicy p) noexcept;
/// Accepts "on-change" and "on-inconsistency"; throws InputError otherwise.
RebuildPolicy parse_rebuild_policy(std::string_view text);

/// Table after initialisation, before any refinement: P = {empty},
/// T = {empty} plus the alphabet, one bquery per row.
ObservationTable initial_table(const Teacher &teacher, QueryStats &stats);

struct ObserveResult {
  bool target_accepts = false;
  /// Previous hypothesis classified the word like the teacher.
  bool consistent = false;
  /// The hypothesis was replaced.
  bool rebuilt = false;
};

/// Incremental learner. Holds a reference to the teacher, which must
/// outlive it.
class IdsLearner {
public:
  IdsLearner(const Teacher &teacher, Variant variant,
             RebuildPolicy policy = RebuildPolicy::OnTableChange,
             const RefineObserver &observer = {});

  /// Processes one observation. Throws InputError on out-of-range symbols.
  ObserveResult observe(const Word &s);

  /// Builds a hypothesis from the current table, replacing the current one.
  /// Used to emit a final hypothesis when the table changed after the last
  /// rebuild.
  std::shared_ptr<const Hypothesis> rebuild();

  [[nodiscard]] const ObservationTable &table() const noexcept { return table_; }
  [[nodiscard]] const std::shared_ptr<const Hypothesis> &hypothesis() const noexcept {
    return hypothesis_;
  }
  [[nodiscard]] const QueryStats &stats() const noexcept { return stats_; }
  [[nodiscard]] Variant variant() const noexcept { return variant_; }
  [[nodiscard]] RebuildPolicy policy() const noexcept { return policy_; }
  /// Observations processed so far.
  [[nodiscard]] std::size_t k() const noexcept { return k_; }
  /// True when the hypothesis was built from the table as it is now.
  [[nodiscard]] bool hypothesis_is_current() const noexcept {
    return built_from_version_ == table_.version();
  }

private:
  void add_to_p(const Word &w);

  const Teacher *teacher_;
  Variant variant_;
  RebuildPolicy policy_;
  RefineObserver observer_;
  QueryStats stats_;
  ObservationTable table_;
  std::shared_ptr<const Hypothesis> hypothesis_;
  std::uint64_t built_from_version_ = 0;
  std::size_t k_ = 0;
};

/// Pulls the next observation; std::nullopt ends the stream.
using WordSource = std::function<std::optional<Word>()>;

struct StopRule {
  /// Evaluated on M_0 and on every rebuilt hypothesis.
  std::function<bool(const Hypothesis &)> converged;
  /// Cap on mquery + bquery, checked before each observation.
  std::optional<std::uint64_t> query_budget;
};

struct LearnOptions {
  RebuildPolicy policy = RebuildPolicy::OnTableChange;
  bool record_trace = true;
  /// Rebuild from the final table when the source runs dry and the last
  /// hypothesis is stale.
  bool finalize = true;
};

struct LearnResult {
  std::shared_ptr<const Hypothesis> hypothesis;
  QueryStats stats;
  /// M_0 followed by every rebuilt hypothesis.
  std::vector<std::shared_ptr<const Hypothesis>> trace;
  std::size_t strings_consumed = 0;
  bool converged = false;
  bool budget_exhausted = false;
};

/// Folds observe over the source. stats.elapsed_ms covers learner work only:
/// the source and the stop predicate are not timed.
LearnResult learn_stream(const Teacher &teacher, Variant variant, const WordSource &source,
                         const StopRule &stop = {}, const LearnOptions &options = {});
LearnResult learn_stream(const Teacher &teacher, Variant variant, std::span<const Word> words,
                         const StopRule &stop = {}, const LearnOptions &options = {});

struct IdResult {
  Hypothesis hypothesis;
  ObservationTable table;
};

/// Non-incremental learner over a fixed word set, which must contain the
/// empty word. The result is canonical when the set is live-complete.
IdResult id_learn(std::span<const Word> words, const Teacher &teacher,
                  const RefineObserver &observer = {});

} // namespace ids
