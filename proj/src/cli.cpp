#include "ids/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ids/bench.hpp"
#include "ids/equivalence.hpp"
#include "ids/generators.hpp"
#include "ids/learner.hpp"
#include "ids/text_format.hpp"

namespace ids {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDifferent = 1;
constexpr int kExitUsage = 2;

// Writes to `path`, or to `fallback` when the path is empty or "-".
template <typename Fn> void with_output(const std::string &path, std::ostream &fallback, Fn &&fn) {
  if (path.empty() || path == "-") {
    fn(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file)
    throw std::runtime_error("cannot open '" + path + "' for writing");
  fn(file);
  if (!file)
    throw std::runtime_error("failed writing '" + path + "'");
}

struct LearnArgs {
  std::string target;
  std::string variant = "prefix-closed";
  std::string rebuild = "on-change";
  std::string words = "random";
  Seed seed = 1;
  std::uint64_t budget = kDefaultQueryBudget;
  std::string emit_hypothesis;
  std::string emit_stats;
};

int run_learn(const LearnArgs &args, std::ostream &out) {
  const LabeledDfa target = read_dfa_file(args.target);
  const Variant variant = parse_variant(args.variant);
  Teacher teacher(target.dfa);

  StopRule stop;
  stop.query_budget = args.budget;
  LearnOptions options;
  options.policy = parse_rebuild_policy(args.rebuild);
  options.record_trace = false;
  LearnResult run;
  if (args.words == "random") {
    stop.converged = [&](const Hypothesis &h) { return check_equiv(h.dfa, target.dfa).equivalent; };
    WordGenerator gen(target.dfa.alphabet_size(), target.dfa.num_states(), args.seed);
    run = learn_stream(
        teacher, variant, [&]() -> std::optional<Word> { return gen.next(); }, stop, options);
  } else {
    const auto words = read_words_file(args.words, target.alphabet);
    run = learn_stream(teacher, variant, std::span<const Word>(words), stop, options);
  }

  const auto verdict = check_equiv(run.hypothesis->dfa, target.dfa);
  out << "variant " << to_string(variant) << '\n'
      << "strings " << run.strings_consumed << '\n'
      << "mquery " << run.stats.mquery << '\n'
      << "bquery " << run.stats.bquery << '\n'
      << "time_ms " << run.stats.elapsed_ms << '\n'
      << "hypothesis_states " << run.hypothesis->dfa.num_states() << '\n'
      << "equivalent " << (verdict.equivalent ? "true" : "false") << '\n';
  if (run.budget_exhausted)
    out << "budget exhausted\n";

  if (!args.emit_hypothesis.empty())
    with_output(args.emit_hypothesis, out,
                [&](std::ostream &os) { write_dfa(os, target.alphabet, run.hypothesis->dfa); });
  if (!args.emit_stats.empty()) {
    nlohmann::json stats = {
        {"variant", std::string(to_string(variant))},
        {"mquery", run.stats.mquery},
        {"bquery", run.stats.bquery},
        {"time_ms", run.stats.elapsed_ms},
        {"strings_consumed", run.strings_consumed},
        {"hypothesis_states", run.hypothesis->dfa.num_states()},
        {"generation", run.hypothesis->generation},
        {"equivalent", verdict.equivalent},
        {"budget_exhausted", run.budget_exhausted},
    };
    with_output(args.emit_stats, out, [&](std::ostream &os) { os << stats.dump(2) << '\n'; });
  }
  return kExitOk;
}

int run_check_equiv(const std::string &lhs_path, const std::string &rhs_path, std::ostream &out) {
  const LabeledDfa lhs = read_dfa_file(lhs_path);
  const LabeledDfa rhs = read_dfa_file(rhs_path);
  if (!(lhs.alphabet == rhs.alphabet))
    throw InputError("automata use different alphabets");
  const auto result = check_equiv(lhs.dfa, rhs.dfa);
  if (result.equivalent) {
    out << "equivalent\n";
    return kExitOk;
  }
  out << "not equivalent\nwitness " << lhs.alphabet.format_word(*result.witness) << '\n';
  return kExitDifferent;
}

std::vector<Variant> parse_variants(const std::vector<std::string> &names) {
  std::vector<Variant> out;
  for (const auto &n : names)
    out.push_back(parse_variant(n));
  return out;
}

} // namespace

int cli_dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Incremental DFA learning with distinguishing strings"};
  app.require_subcommand(1);

  LearnArgs learn;
  auto *learn_cmd = app.add_subcommand("learn", "Learn a target automaton from observations");
  learn_cmd->add_option("--target", learn.target, "Target DFA file")->required();
  learn_cmd->add_option("--variant", learn.variant, "prefix-free or prefix-closed")
      ->check(CLI::IsMember({"prefix-free", "prefix-closed"}));
  learn_cmd->add_option("--rebuild", learn.rebuild, "Hypothesis rebuild policy")
      ->check(CLI::IsMember({"on-change", "on-inconsistency"}));
  learn_cmd->add_option("--words", learn.words, "Word file, or 'random' to stop at equivalence");
  learn_cmd->add_option("--seed", learn.seed, "Seed for random words");
  learn_cmd->add_option("--budget", learn.budget, "Cap on mquery + bquery")
      ->check(CLI::PositiveNumber);
  learn_cmd->add_option("--emit-hypothesis", learn.emit_hypothesis, "Write final hypothesis");
  learn_cmd->add_option("--emit-stats", learn.emit_stats, "Write query statistics as JSON");

  BenchSpec bench;
  std::vector<std::string> bench_variants{"prefix-free", "prefix-closed"};
  std::string bench_out;
  std::string bench_rebuild = "on-change";
  auto *bench_cmd = app.add_subcommand("bench", "Run the random-target benchmark, CSV output");
  bench_cmd->add_option("--sizes", bench.state_sizes, "State sizes")->delimiter(',');
  bench_cmd->add_option("--trials", bench.trials_per_size, "Targets per size")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--alphabet", bench.alphabet_size, "Alphabet size")
      ->check(CLI::Range(1, 62));
  bench_cmd->add_option("--variants", bench_variants, "Variants to run")->delimiter(',');
  bench_cmd->add_option("--seed", bench.base_seed, "Base seed");
  bench_cmd->add_option("--rebuild", bench_rebuild, "Hypothesis rebuild policy")
      ->check(CLI::IsMember({"on-change", "on-inconsistency"}));
  bench_cmd->add_option("--budget", bench.query_budget, "Cap on mquery + bquery per trial")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--jobs", bench.jobs, "Worker threads (0 = all cores)");
  bench_cmd->add_option("--out", bench_out, "CSV output file (default stdout)");

  DfaGenSpec gen_dfa;
  std::string gen_dfa_out;
  auto *gen_dfa_cmd = app.add_subcommand("gen-dfa", "Generate a random DFA");
  gen_dfa_cmd->add_option("--states", gen_dfa.num_states, "State count")->required()
      ->check(CLI::PositiveNumber);
  gen_dfa_cmd->add_option("--alphabet", gen_dfa.alphabet_size, "Alphabet size")
      ->check(CLI::Range(1, 62));
  gen_dfa_cmd->add_option("--seed", gen_dfa.seed, "Seed");
  gen_dfa_cmd->add_option("--out", gen_dfa_out, "Output file (default stdout)");

  std::size_t gs_alphabet = 2, gs_max_len = 5, gs_count = 10;
  Seed gs_seed = 1;
  std::string gs_out;
  auto *gen_strings_cmd = app.add_subcommand("gen-strings", "Generate random non-empty words");
  gen_strings_cmd->add_option("--alphabet", gs_alphabet, "Alphabet size")->check(CLI::Range(1, 62));
  gen_strings_cmd->add_option("--max-len", gs_max_len, "Maximum length")->check(CLI::PositiveNumber);
  gen_strings_cmd->add_option("--count", gs_count, "Number of words");
  gen_strings_cmd->add_option("--seed", gs_seed, "Seed");
  gen_strings_cmd->add_option("--out", gs_out, "Output file (default stdout)");

  std::string eq_lhs, eq_rhs;
  auto *equiv_cmd = app.add_subcommand("check-equiv", "Compare the languages of two DFA files");
  equiv_cmd->add_option("lhs", eq_lhs)->required();
  equiv_cmd->add_option("rhs", eq_rhs)->required();

  std::string min_in, min_out;
  auto *min_cmd = app.add_subcommand("minimize", "Write the canonical minimal DFA");
  min_cmd->add_option("input", min_in)->required();
  min_cmd->add_option("--out", min_out, "Output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    err << app.help();
    return kExitUsage;
  }

  try {
    if (learn_cmd->parsed())
      return run_learn(learn, out);
    if (bench_cmd->parsed()) {
      bench.variants = parse_variants(bench_variants);
      bench.policy = parse_rebuild_policy(bench_rebuild);
      const auto records = run_bench(bench);
      with_output(bench_out, out, [&](std::ostream &os) { write_csv(os, records); });
      return kExitOk;
    }
    if (gen_dfa_cmd->parsed()) {
      const Dfa dfa = random_dfa(gen_dfa);
      with_output(gen_dfa_out, out, [&](std::ostream &os) {
        write_dfa(os, Alphabet::standard(gen_dfa.alphabet_size), dfa);
      });
      return kExitOk;
    }
    if (gen_strings_cmd->parsed()) {
      const auto words = random_words(gs_alphabet, gs_max_len, gs_count, gs_seed);
      with_output(gs_out, out,
                  [&](std::ostream &os) { write_words(os, Alphabet::standard(gs_alphabet), words); });
      return kExitOk;
    }
    if (equiv_cmd->parsed())
      return run_check_equiv(eq_lhs, eq_rhs, out);
    if (min_cmd->parsed()) {
      const LabeledDfa in = read_dfa_file(min_in);
      const Dfa minimal = minimize(in.dfa);
      with_output(min_out, out, [&](std::ostream &os) { write_dfa(os, in.alphabet, minimal); });
      return kExitOk;
    }
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

} // namespace ids
