#include "ids/bench.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <ostream>
#include <thread>

#include "ids/equivalence.hpp"

namespace ids {

bool same_outcome(const TrialRecord &a, const TrialRecord &b) {
  return a.variant == b.variant && a.nominal_states == b.nominal_states &&
         a.trial_index == b.trial_index && a.seed == b.seed && a.mquery == b.mquery &&
         a.bquery == b.bquery && a.strings_consumed == b.strings_consumed &&
         a.hypothesis_states == b.hypothesis_states && a.converged == b.converged;
}

TrialRecord run_trial(const Dfa &target, Variant variant, Seed seed, std::uint64_t budget,
                      RebuildPolicy policy) {
  if (budget == 0)
    throw InputError("run_trial: budget must be positive");
  Teacher teacher(target);
  WordGenerator words(target.alphabet_size(), target.num_states(), seed);

  StopRule stop;
  stop.converged = [&](const Hypothesis &h) { return check_equiv(h.dfa, target).equivalent; };
  stop.query_budget = budget;
  LearnOptions options;
  options.policy = policy;
  options.record_trace = false;

  LearnResult run = learn_stream(
      teacher, variant, [&]() -> std::optional<Word> { return words.next(); }, stop, options);

  TrialRecord rec;
  rec.variant = variant;
  rec.nominal_states = target.num_states();
  rec.seed = seed;
  rec.time_ms = run.stats.elapsed_ms;
  rec.mquery = run.stats.mquery;
  rec.bquery = run.stats.bquery;
  rec.strings_consumed = run.strings_consumed;
  rec.hypothesis_states = run.hypothesis->dfa.num_states();
  rec.converged = run.converged;
  return rec;
}

void validate(const BenchSpec &spec) {
  if (spec.state_sizes.empty())
    throw InputError("bench: no state sizes");
  if (std::find(spec.state_sizes.begin(), spec.state_sizes.end(), 0) != spec.state_sizes.end())
    throw InputError("bench: state sizes must be positive");
  if (spec.trials_per_size == 0)
    throw InputError("bench: trials per size must be at least 1");
  if (spec.alphabet_size == 0)
    throw InputError("bench: alphabet size must be positive");
  if (spec.variants.empty())
    throw InputError("bench: no variants selected");
  if (spec.query_budget == 0)
    throw InputError("bench: query budget must be positive");
}

Seed trial_seed(const BenchSpec &spec, std::size_t size, std::size_t trial) {
  return derive_seed(spec.base_seed, size, trial);
}

Seed target_seed(Seed trial) { return derive_seed(trial, 0x746172676574ULL); }

std::vector<TrialRecord> run_bench(const BenchSpec &spec) {
  validate(spec);
  struct Task {
    std::size_t size;
    std::size_t trial;
  };
  std::vector<Task> tasks;
  for (std::size_t size : spec.state_sizes)
    for (std::size_t trial = 0; trial < spec.trials_per_size; ++trial)
      tasks.push_back({size, trial});

  const std::size_t nv = spec.variants.size();
  std::vector<TrialRecord> records(tasks.size() * nv);
  auto run_task = [&](std::size_t t) {
    const Task &task = tasks[t];
    const Seed seed = trial_seed(spec, task.size, task.trial);
    const Dfa target = random_dfa({task.size, spec.alphabet_size, target_seed(seed)});
    for (std::size_t v = 0; v < nv; ++v) {
      TrialRecord rec = run_trial(target, spec.variants[v], seed, spec.query_budget, spec.policy);
      rec.trial_index = task.trial;
      records[t * nv + v] = rec;
    }
  };

  std::size_t jobs = spec.jobs == 0 ? std::max(1U, std::thread::hardware_concurrency()) : spec.jobs;
  jobs = std::min(jobs, tasks.size());
  if (jobs <= 1) {
    for (std::size_t t = 0; t < tasks.size(); ++t)
      run_task(t);
    return records;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  for (std::size_t j = 0; j < jobs; ++j)
    workers.emplace_back([&] {
      for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();)
        run_task(t);
    });
  workers.clear();
  return records;
}

std::vector<MeanRow> mean_rows(const std::vector<TrialRecord> &records) {
  // Keyed by first appearance so output follows record order.
  std::vector<std::pair<std::pair<std::size_t, Variant>, std::vector<const TrialRecord *>>> groups;
  for (const TrialRecord &r : records) {
    auto key = std::make_pair(r.nominal_states, r.variant);
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto &g) { return g.first == key; });
    if (it == groups.end())
      groups.push_back({key, {&r}});
    else
      it->second.push_back(&r);
  }
  std::vector<MeanRow> out;
  for (const auto &[key, members] : groups) {
    MeanRow m{key.second, key.first, 0, 0, 0, 0, 0, 0};
    for (const TrialRecord *r : members) {
      m.time_ms += r->time_ms;
      m.mquery += static_cast<double>(r->mquery);
      m.bquery += static_cast<double>(r->bquery);
      m.strings_consumed += static_cast<double>(r->strings_consumed);
      m.hypothesis_states += static_cast<double>(r->hypothesis_states);
      m.converged_fraction += r->converged ? 1.0 : 0.0;
    }
    const double n = static_cast<double>(members.size());
    m.time_ms /= n;
    m.mquery /= n;
    m.bquery /= n;
    m.strings_consumed /= n;
    m.hypothesis_states /= n;
    m.converged_fraction /= n;
    out.push_back(m);
  }
  return out;
}

void write_csv(std::ostream &out, const std::vector<TrialRecord> &records) {
  out << kCsvHeader << '\n';
  const auto means = mean_rows(records);
  std::size_t i = 0;
  while (i < records.size()) {
    const std::size_t size = records[i].nominal_states;
    for (; i < records.size() && records[i].nominal_states == size; ++i) {
      const TrialRecord &r = records[i];
      out << to_string(r.variant) << ',' << r.nominal_states << ',' << r.trial_index << ','
          << r.seed << ',' << std::fixed << std::setprecision(3) << r.time_ms << ',' << r.mquery
          << ',' << r.bquery << ',' << r.strings_consumed << ',' << r.hypothesis_states << ','
          << (r.converged ? "true" : "false") << '\n';
    }
    for (const MeanRow &m : means) {
      if (m.nominal_states != size)
        continue;
      out << to_string(m.variant) << ',' << m.nominal_states << ",mean,," << std::fixed
          << std::setprecision(3) << m.time_ms << ',' << m.mquery << ',' << m.bquery << ','
          << m.strings_consumed << ',' << m.hypothesis_states << ',' << m.converged_fraction
          << '\n';
    }
  }
}

} // namespace ids
