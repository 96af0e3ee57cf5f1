#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "ids/equivalence.hpp"
#include "ids/text_format.hpp"

using namespace ids;
using ids::testing::w;

TEST_CASE("delta_star: identity, example target, interpreter oracle") {
  const Dfa target = ids::testing::example_target();
  for (StateIndex q = 0; q < target.num_states(); ++q)
    CHECK(delta_star(target, q, Word{}) == q);
  CHECK(target.is_final(delta_star(target, target.initial(), w("b"))));

  for (Seed seed = 0; seed < 50; ++seed) {
    const Dfa dfa = random_dfa({8, 2, seed});
    for (const Word &x : random_words(2, 20, 20, seed + 1000))
      CHECK(delta_star(dfa, dfa.initial(), x) == ids::testing::interpret(dfa, dfa.initial(), x));
  }
}

TEST_CASE("delta_star rejects out-of-range input") {
  const Dfa target = ids::testing::example_target();
  CHECK_THROWS_AS(delta_star(target, 0, Word{2}), InputError);
  CHECK_THROWS_AS(delta_star(target, 4, Word{}), InputError);
  CHECK_THROWS_AS(accepts(target, Word{0, 7}), InputError);
}

TEST_CASE("delta_star composes over concatenation") {
  for (Seed seed = 0; seed < 30; ++seed) {
    const Dfa dfa = ids::testing::random_target(seed, 1, 10);
    const auto words = random_words(2, 8, 10, seed * 7 + 1);
    for (std::size_t i = 0; i + 1 < words.size(); ++i)
      for (StateIndex q = 0; q < dfa.num_states(); ++q)
        CHECK(delta_star(dfa, q, concat(words[i], words[i + 1])) ==
              delta_star(dfa, delta_star(dfa, q, words[i]), words[i + 1]));
  }
}

TEST_CASE("accepts on the example target") {
  const Dfa target = ids::testing::example_target();
  CHECK(accepts(target, w("b")));
  CHECK_FALSE(accepts(target, w("a")));
  CHECK_FALSE(accepts(target, w("bbb")));
  CHECK(accepts(target, w("bb")));
  CHECK_FALSE(accepts(target, w("")));
}

TEST_CASE("live_states") {
  SUBCASE("all final") {
    const Dfa dfa(2, 3, 0, {true, true, true}, {1, 2, 2, 0, 0, 1});
    for (bool live : live_states(dfa))
      CHECK(live);
  }
  SUBCASE("no final") {
    const Dfa dfa(2, 3, 0, {false, false, false}, {1, 2, 2, 0, 0, 1});
    for (bool live : live_states(dfa))
      CHECK_FALSE(live);
  }
  SUBCASE("matches word enumeration on random automata") {
    for (Seed seed = 0; seed < 40; ++seed) {
      const Dfa dfa = random_dfa({10, 2, seed});
      CHECK(live_states(dfa) == ids::testing::brute_live(dfa));
    }
  }
}

TEST_CASE("f_concat") {
  CHECK(f_concat(StateName::dead(), 0).is_dead());
  CHECK(f_concat(StateName{w("")}, 1) == StateName{w("b")});
  CHECK(f_concat(StateName{w("ba")}, 1) == StateName{w("bab")});
  CHECK_FALSE(StateName::dead() == StateName{Word{}});
  for (Symbol b = 0; b < 4; ++b)
    CHECK(f_concat(StateName::dead(), b).is_dead());
}

TEST_CASE("prefixes") {
  CHECK(prefixes(w("")) == std::vector<Word>{w("")});
  CHECK(prefixes(w("b")) == std::vector<Word>{w(""), w("b")});
  CHECK(prefixes(w("bab")) == std::vector<Word>{w(""), w("b"), w("ba"), w("bab")});
  for (const Word &x : random_words(3, 12, 20, 5))
    CHECK(prefixes(x).size() == x.size() + 1);
}

TEST_CASE("minimize") {
  SUBCASE("already minimal") {
    const Dfa target = ids::testing::example_target();
    CHECK(minimize(target).num_states() == target.num_states());
  }
  SUBCASE("duplicate dead states collapse") {
    // 0 -a-> 1 (final) ; 2 and 3 are both dead sinks.
    const Dfa dfa(2, 4, 0, {false, true, false, false}, {1, 2, 3, 2, 2, 3, 3, 2});
    const Dfa m = minimize(dfa);
    CHECK(m.num_states() == 3);
    const auto live = live_states(m);
    CHECK(std::count(live.begin(), live.end(), false) == 1);
  }
  SUBCASE("state count equals Myhill-Nerode classes") {
    for (Seed seed = 0; seed < 25; ++seed) {
      const Dfa dfa = random_dfa({12, 2, seed});
      CHECK(minimize(dfa).num_states() == ids::testing::brute_nerode_classes(dfa, 12));
    }
  }
}

TEST_CASE("minimize preserves language, is idempotent, keeps at most one dead state") {
  for (Seed seed = 0; seed < 40; ++seed) {
    const Dfa dfa = ids::testing::random_target(seed, 1, 15);
    const Dfa m = minimize(dfa);
    for (const Word &x : random_words(2, 20, 1000, seed + 77))
      REQUIRE(accepts(dfa, x) == accepts(m, x));
    const Dfa mm = minimize(m);
    CHECK(mm.num_states() == m.num_states());
    CHECK(mm == m);
    const auto live = live_states(m);
    CHECK(std::count(live.begin(), live.end(), false) <= 1);
  }
}

TEST_CASE("Dfa constructor validates") {
  CHECK_THROWS_AS(Dfa(2, 1, 1, {false}, {0, 0}), InputError);
  CHECK_THROWS_AS(Dfa(2, 1, 0, {false}, {0}), InputError);
  CHECK_THROWS_AS(Dfa(2, 1, 0, {false}, {0, 1}), InputError);
  CHECK_THROWS_AS(Dfa(0, 1, 0, {false}, {}), InputError);
}

TEST_CASE("text format round trip preserves the automaton") {
  for (Seed seed = 0; seed < 10; ++seed) {
    const Dfa dfa = ids::testing::random_target(seed, 1, 12, 3);
    std::stringstream buf;
    write_dfa(buf, Alphabet::standard(3), dfa);
    const LabeledDfa back = read_dfa(buf);
    CHECK(back.dfa == dfa);
    CHECK(back.alphabet == Alphabet::standard(3));
  }
}

TEST_CASE("text format parses comments and empty finals") {
  std::istringstream in("# empty language\n"
                        "alphabet x y\n"
                        "states 1\n"
                        "initial 0\n"
                        "finals\n"
                        "trans 0 x 0  # loop\n"
                        "trans 0 y 0\n");
  const LabeledDfa parsed = read_dfa(in);
  CHECK(parsed.dfa.num_states() == 1);
  CHECK(parsed.dfa.final_states().empty());
  CHECK(parsed.alphabet.symbol('y') == 1);
}

TEST_CASE("text format errors name the line") {
  auto line_of = [](const std::string &text) {
    std::istringstream in(text);
    try {
      read_dfa(in);
    } catch (const ParseError &e) {
      return e.line();
    }
    return std::size_t{0};
  };
  const std::string head = "alphabet a b\nstates 2\ninitial 0\nfinals 1\n";
  CHECK(line_of("alphabet ab\n") == 1);
  CHECK(line_of("alphabet a b\nstate 2\n") == 2);
  CHECK(line_of("alphabet a b\nstates 2\ninitial 5\n") == 3);
  CHECK(line_of(head + "trans 0 a 1\ntrans 0 c 1\n") == 6);
  CHECK(line_of(head + "trans 0 a 1\ntrans 0 a 1\n") == 6);
  CHECK(line_of(head + "trans 0 a 1\ntrans 0 b x\n") == 6);
  // Missing transitions are reported after the last line.
  CHECK(line_of(head + "trans 0 a 1\n") == 6);
}

TEST_CASE("word files") {
  const Alphabet ab = Alphabet::standard(2);
  std::istringstream in("b\n@eps\n\nbab # comment\n");
  const auto words = read_words(in, ab);
  CHECK(words == std::vector<Word>{w("b"), w(""), w("bab")});

  std::istringstream bad("ab\nac\n");
  try {
    read_words(bad, ab);
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(e.line() == 2);
  }
}
