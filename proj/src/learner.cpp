#include "ids/learner.hpp"

#include <algorithm>
#include <chrono>
#include <string>

namespace ids {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void check_symbols(const Word &w, std::size_t alphabet_size) {
  for (Symbol b : w)
    if (b >= alphabet_size)
      throw InputError("observation uses symbol " + std::to_string(b) +
                       " outside alphabet of size " + std::to_string(alphabet_size));
}

// Adds w and its one-symbol extensions to T, then w to P.
void extend_p(ObservationTable &table, const Word &w, const Teacher &teacher,
              const std::function<void(bool fresh)> &on_row) {
  on_row(table.add_name(w, teacher).second);
  const auto id = *table.find(w);
  if (table.in_p(id))
    return;
  for (Symbol b = 0; b < table.alphabet_size(); ++b)
    on_row(table.add_name(append(w, b), teacher).second);
  table.promote(id);
}

} // namespace

std::string_view to_string(Variant v) noexcept {
  return v == Variant::PrefixFree ? "prefix-free" : "prefix-closed";
}

Variant parse_variant(std::string_view text) {
  if (text == "prefix-free")
    return Variant::PrefixFree;
  if (text == "prefix-closed")
    return Variant::PrefixClosed;
  throw InputError("unknown variant '" + std::string(text) +
                   "' (expected prefix-free or prefix-closed)");
}

std::string_view to_string(RebuildPolicy p) noexcept {
  return p == RebuildPolicy::OnTableChange ? "on-change" : "on-inconsistency";
}

RebuildPolicy parse_rebuild_policy(std::string_view text) {
  if (text == "on-change")
    return RebuildPolicy::OnTableChange;
  if (text == "on-inconsistency")
    return RebuildPolicy::OnInconsistency;
  throw InputError("unknown rebuild policy '" + std::string(text) +
                   "' (expected on-change or on-inconsistency)");
}

ObservationTable initial_table(const Teacher &teacher, QueryStats &stats) {
  ObservationTable table(teacher.alphabet_size());
  // Only v_0 exists yet, so every row costs exactly one answer.
  extend_p(table, Word{}, teacher, [&](bool fresh) {
    if (fresh)
      stats.record_bquery(1);
  });
  return table;
}

IdsLearner::IdsLearner(const Teacher &teacher, Variant variant, RebuildPolicy policy,
                       const RefineObserver &observer)
    : teacher_(&teacher), variant_(variant), policy_(policy), observer_(observer),
      table_(initial_table(teacher, stats_)) {
  refine_partition(table_, *teacher_, stats_, observer_);
  rebuild();
}

void IdsLearner::add_to_p(const Word &w) {
  extend_p(table_, w, *teacher_, [this](bool fresh) {
    if (fresh)
      stats_.record_bquery(table_.index());
  });
}

ObserveResult IdsLearner::observe(const Word &s) {
  check_symbols(s, table_.alphabet_size());
  stats_.record_mquery();
  ++k_;

  if (variant_ == Variant::PrefixFree) {
    add_to_p(s);
  } else {
    for (const Word &p : prefixes(s))
      add_to_p(p);
  }
  refine_partition(table_, *teacher_, stats_, observer_);

  ObserveResult result;
  result.target_accepts = table_.row(*table_.find(s)).test(0);
  result.consistent = accepts(hypothesis_->dfa, s) == result.target_accepts;
  if (!result.consistent) {
    rebuild();
    result.rebuilt = true;
  } else if (policy_ == RebuildPolicy::OnTableChange && !hypothesis_is_current()) {
    if (quotient_automaton(table_) == hypothesis_->dfa) {
      built_from_version_ = table_.version();
    } else {
      rebuild();
      result.rebuilt = true;
    }
  }
  return result;
}

std::shared_ptr<const Hypothesis> IdsLearner::rebuild() {
  hypothesis_ = std::make_shared<const Hypothesis>(construct_hypothesis(table_, k_));
  built_from_version_ = table_.version();
  return hypothesis_;
}

LearnResult learn_stream(const Teacher &teacher, Variant variant, const WordSource &source,
                         const StopRule &stop, const LearnOptions &options) {
  LearnResult result;
  double elapsed = 0.0;

  auto start = Clock::now();
  IdsLearner learner(teacher, variant, options.policy);
  elapsed += ms_since(start);

  auto accept_hypothesis = [&](const std::shared_ptr<const Hypothesis> &h) {
    if (options.record_trace)
      result.trace.push_back(h);
    if (stop.converged && stop.converged(*h))
      result.converged = true;
  };
  accept_hypothesis(learner.hypothesis());

  bool exhausted = false;
  while (!result.converged) {
    if (stop.query_budget && learner.stats().total() >= *stop.query_budget) {
      result.budget_exhausted = true;
      break;
    }
    std::optional<Word> next = source ? source() : std::nullopt;
    if (!next) {
      exhausted = true;
      break;
    }
    start = Clock::now();
    ObserveResult step = learner.observe(*next);
    elapsed += ms_since(start);
    ++result.strings_consumed;
    if (step.rebuilt)
      accept_hypothesis(learner.hypothesis());
  }

  if (exhausted && options.finalize && !learner.hypothesis_is_current()) {
    start = Clock::now();
    learner.rebuild();
    elapsed += ms_since(start);
    accept_hypothesis(learner.hypothesis());
  }

  result.hypothesis = learner.hypothesis();
  result.stats = learner.stats();
  result.stats.elapsed_ms = elapsed;
  return result;
}

LearnResult learn_stream(const Teacher &teacher, Variant variant, std::span<const Word> words,
                         const StopRule &stop, const LearnOptions &options) {
  std::size_t next = 0;
  WordSource source = [&]() -> std::optional<Word> {
    if (next == words.size())
      return std::nullopt;
    return words[next++];
  };
  return learn_stream(teacher, variant, source, stop, options);
}

IdResult id_learn(std::span<const Word> words, const Teacher &teacher,
                  const RefineObserver &observer) {
  if (std::find(words.begin(), words.end(), Word{}) == words.end())
    throw InputError("id_learn: the word set must contain the empty word");
  ObservationTable table(teacher.alphabet_size());
  for (const Word &w : words) {
    check_symbols(w, teacher.alphabet_size());
    extend_p(table, w, teacher, [](bool) {});
  }
  QueryStats scratch;
  refine_partition(table, teacher, scratch, observer);
  Hypothesis h = construct_hypothesis(table, 0);
  return {std::move(h), std::move(table)};
}

} // namespace ids
