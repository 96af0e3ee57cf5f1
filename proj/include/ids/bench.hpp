#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ids/generators.hpp"
#include "ids/learner.hpp"

namespace ids {

inline constexpr std::uint64_t kDefaultQueryBudget = 10'000'000;

struct TrialRecord {
  Variant variant = Variant::PrefixFree;
  std::size_t nominal_states = 0;
  std::size_t trial_index = 0;
  Seed seed = 0;
  double time_ms = 0.0;
  std::uint64_t mquery = 0;
  std::uint64_t bquery = 0;
  std::size_t strings_consumed = 0;
  std::size_t hypothesis_states = 0;
  bool converged = false;
};

/// Everything except time_ms.
bool same_outcome(const TrialRecord &a, const TrialRecord &b);

/// Learns `target` from random words (max length = target state count,
/// drawn from `seed`), checking equivalence after every rebuilt hypothesis.
/// Stops at equivalence or when mquery + bquery reaches `budget`.
TrialRecord run_trial(const Dfa &target, Variant variant, Seed seed, std::uint64_t budget,
                      RebuildPolicy policy = RebuildPolicy::OnTableChange);

struct BenchSpec {
  std::vector<std::size_t> state_sizes{5, 10, 15, 20, 25, 30, 35, 40, 45, 50};
  std::size_t trials_per_size = 10;
  std::size_t alphabet_size = 2;
  std::vector<Variant> variants{Variant::PrefixFree, Variant::PrefixClosed};
  Seed base_seed = 1;
  std::uint64_t query_budget = kDefaultQueryBudget;
  RebuildPolicy policy = RebuildPolicy::OnTableChange;
  /// Worker threads; 0 picks the hardware concurrency.
  std::size_t jobs = 1;
};

/// Throws InputError if the settings are unusable.
void validate(const BenchSpec &spec);

/// Seed logged for trial `trial` at size `size`. It seeds the shared word
/// stream directly and the target through target_seed().
Seed trial_seed(const BenchSpec &spec, std::size_t size, std::size_t trial);
Seed target_seed(Seed trial);

/// Per-trial records ordered by (size, trial, requested variant order). All
/// variants of one trial share the target and the word stream.
std::vector<TrialRecord> run_bench(const BenchSpec &spec);

struct MeanRow {
  Variant variant;
  std::size_t nominal_states;
  double time_ms;
  double mquery;
  double bquery;
  double strings_consumed;
  double hypothesis_states;
  double converged_fraction;
};

std::vector<MeanRow> mean_rows(const std::vector<TrialRecord> &records);

inline constexpr const char *kCsvHeader =
    "variant,nominal_states,trial,seed,time_ms,mquery,bquery,strings_consumed,hypothesis_states,"
    "converged";

/// Header, then for each size its trial rows followed by one mean row per
/// variant (trial column "mean", empty seed).
void write_csv(std::ostream &out, const std::vector<TrialRecord> &records);

} // namespace ids
