#pragma once

#include <cstdint>

#include "ids/dfa.hpp"

namespace ids {

/// Membership oracle over a hidden target automaton. Read-only; a single
/// instance may serve any number of concurrent learners.
class Teacher {
public:
  explicit Teacher(Dfa target) : target_(std::move(target)) {}

  [[nodiscard]] std::size_t alphabet_size() const noexcept { return target_.alphabet_size(); }

  /// Is prefix.suffix in the target language? Dead accepts nothing and is
  /// answered without consulting the target.
  [[nodiscard]] bool member(const StateName &name, const Word &suffix) const;
  [[nodiscard]] bool member(const Word &prefix, const Word &suffix) const;
  [[nodiscard]] bool member(const Word &w) const { return accepts(target_, w); }

private:
  Dfa target_;
};

/// Query accounting owned by one learning run.
struct QueryStats {
  std::uint64_t mquery = 0; ///< externally supplied observations
  std::uint64_t bquery = 0; ///< learner-generated table queries
  double elapsed_ms = 0.0;

  void record_bquery(std::uint64_t n) noexcept { bquery += n; }
  void record_mquery() noexcept { ++mquery; }
  [[nodiscard]] std::uint64_t total() const noexcept { return mquery + bquery; }

  friend bool operator==(const QueryStats &, const QueryStats &) = default;
};

} // namespace ids
