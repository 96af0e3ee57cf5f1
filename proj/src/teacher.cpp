#include "ids/teacher.hpp"

namespace ids {

bool Teacher::member(const StateName &name, const Word &suffix) const {
  check_word(target_, suffix);
  if (name.is_dead())
    return false;
  return member(name.word(), suffix);
}

bool Teacher::member(const Word &prefix, const Word &suffix) const {
  StateIndex q = delta_star(target_, target_.initial(), prefix);
  return target_.is_final(delta_star(target_, q, suffix));
}

} // namespace ids
