#include <doctest.h>

#include <random>

#include "autoseq/error.hpp"
#include "autoseq/numeration.hpp"
#include "autoseq/operations.hpp"
#include "autoseq/pipeline.hpp"
#include "autoseq/sequences.hpp"
#include "support/oracle.hpp"

using namespace autoseq;
using testsupport::even_automaton;
using testsupport::random_dfa;
using testsupport::run_word;

namespace {

// Pairwise distinguishable states: search the pair graph for a pair that
// disagrees on acceptance.
bool all_states_distinguishable(const Dfa& a) {
  const State n = a.num_states();
  for (State p = 0; p < n; ++p)
    for (State q = p + 1; q < n; ++q) {
      std::vector<std::uint8_t> seen(std::size_t{n} * n, 0);
      std::vector<std::pair<State, State>> stack{{p, q}};
      seen[std::size_t{p} * n + q] = 1;
      bool found = false;
      while (!stack.empty() && !found) {
        auto [x, y] = stack.back();
        stack.pop_back();
        if (a.accepting(x) != a.accepting(y)) found = true;
        for (Letter c = 0; c < a.letter_count(); ++c) {
          State u = a.next(x, c), v = a.next(y, c);
          if (!seen[std::size_t{u} * n + v]) {
            seen[std::size_t{u} * n + v] = 1;
            stack.push_back({u, v});
          }
        }
      }
      if (!found) return false;
    }
  return true;
}

}  // namespace

TEST_SUITE("automata") {

TEST_CASE("alphabet letters pack digits track by track") {
  TrackAlphabet ab(3, 2);
  CHECK(ab.size() == 9);
  std::vector<unsigned> d{2, 1};
  Letter l = ab.letter(d);
  CHECK(l == 2 + 3 * 1);
  CHECK(ab.digit(l, 0) == 2);
  CHECK(ab.digit(l, 1) == 1);
  CHECK(ab.digits(l) == d);
  CHECK_THROWS_AS(TrackAlphabet(1, 1), Error);
}

TEST_CASE("dfa constructor rejects malformed input") {
  CHECK_THROWS_AS(Dfa(2, {"n"}, 2, 0, {1, 0}, {0, 1, 1}), Error);
  CHECK_THROWS_AS(Dfa(2, {"n"}, 1, 1, {1}, {0, 0}), Error);
  CHECK_THROWS_AS(Dfa(2, {"n"}, 1, 0, {1}, {0, 3}), Error);
}

TEST_CASE("product") {
  Dfa even = even_automaton();
  CHECK(equivalent(product(even, even, BoolOp::And), even));
  CHECK(is_empty(product(eq_automaton(2), lt_automaton(2), BoolOp::And)));

  Dfa lt_ni = lt_automaton(2, "n", "i");
  Dfa either = product(even, lt_ni, BoolOp::Or);
  CHECK(either.arity() == 2);
  CHECK(either.tracks() == std::vector<std::string>{"i", "n"});
  for (std::uint64_t n = 0; n < 16; ++n)
    for (std::uint64_t i = 0; i < 16; ++i)
      CHECK(run(either, {i, n}) == (run(even, {n}) || n < i));
  CHECK(run(either, {5, 2}));
}

TEST_CASE("boolean algebra on random pad-normalized automata") {
  std::mt19937 rng(7);
  for (int round = 0; round < 40; ++round) {
    Dfa a = pad_normalize(random_dfa(rng, 2, {"x"}, 4));
    Dfa b = pad_normalize(random_dfa(rng, 2, {"x", "y"}, 3));
    Dfa conj = product(a, b, BoolOp::And), disj = product(a, b, BoolOp::Or);
    Dfa x = product(a, b, BoolOp::Xor), imp = product(a, b, BoolOp::Implies), iff = product(a, b, BoolOp::Iff);
    Dfa na = complement(a);
    for (std::uint64_t u = 0; u < 20; ++u) {
      CHECK(run(na, {u}) == !run(a, {u}));
      for (std::uint64_t v = 0; v < 20; ++v) {
        bool pa = run(a, {u}), pb = run(b, {u, v});
        CHECK(run(conj, {u, v}) == (pa && pb));
        CHECK(run(disj, {u, v}) == (pa || pb));
        CHECK(run(x, {u, v}) == (pa != pb));
        CHECK(run(imp, {u, v}) == (!pa || pb));
        CHECK(run(iff, {u, v}) == (pa == pb));
      }
    }
    // De Morgan
    CHECK(equivalent(complement(conj), product(complement(cylindrify(a, {"x", "y"})), complement(b), BoolOp::Or)));
  }
}

TEST_CASE("complement") {
  Dfa lt = lt_automaton(2);
  CHECK(equivalent(complement(complement(lt)), lt));
  CHECK(equivalent(complement(empty_language(2, {"n"})), universal(2, {"n"})));
  Dfa ge = complement(lt);
  for (std::uint64_t x = 0; x < 32; ++x)
    for (std::uint64_t y = 0; y < 32; ++y) CHECK(run(ge, {x, y}) == (x >= y));
}

TEST_CASE("determinize") {
  Dfa even = even_automaton();
  CHECK(equivalent(determinize(Nfa::from_dfa(even)), even));

  // q0 loops, guesses a 1 into q1; q1 -> q2; both accept and q2 loops.
  Nfa some_one(2, {"n"}, 3, {0}, {0, 1, 1}, {{0}, {0, 1}, {2}, {2}, {2}, {2}});
  Dfa d = minimize(determinize(some_one));
  CHECK(d.num_states() == 2);
  for (std::uint64_t n = 0; n < 64; ++n) CHECK(run(d, {n}) == (n != 0));

  Dfa le = determinize(project(add_automaton(2), "y"));
  for (std::uint64_t x = 0; x < 64; ++x)
    for (std::uint64_t z = 0; z < 64; ++z) CHECK(run(le, {x, z}) == (x <= z));
}

TEST_CASE("universal subset acceptance") {
  // Ay x <= y holds only for x = 0; Ay true holds everywhere.
  Dfa zero = determinize(project(leq_automaton(2), "y", SubsetAcceptance::All));
  Dfa all = determinize(project(cylindrify(universal(2, {"y"}), {"x", "y"}), "y", SubsetAcceptance::All));
  for (std::uint64_t x = 0; x < 32; ++x) {
    CHECK(run(zero, {x}) == (x == 0));
    CHECK(run(all, {x}));
  }
  // Ay y <= x is false for every x.
  CHECK(is_empty(forall(complement(lt_automaton(2, "x", "y")), "y")));
}

TEST_CASE("minimize") {
  Dfa lt = lt_automaton(2);
  CHECK(minimize(minimize(lt)) == minimize(lt));

  // Reading MSD-first, eight states remember the last three bits; only the
  // last one matters.
  std::vector<std::uint8_t> acc(8);
  std::vector<State> delta(16);
  for (State q = 0; q < 8; ++q) {
    acc[q] = (q & 1) == 0;
    for (unsigned d = 0; d < 2; ++d) delta[2 * q + d] = ((q << 1) | d) & 7;
  }
  Dfa redundant(2, {"n"}, 8, 0, acc, delta, DigitOrder::Msd);
  Dfa m = minimize(redundant);
  CHECK(m.num_states() == 2);
  CHECK(m.order() == DigitOrder::Msd);
  for (std::uint64_t n = 0; n < 200; ++n) CHECK(run(m, {n}) == (n % 2 == 0));
  // LSD-first the same set needs a third state: the empty word must be told
  // apart from a word ending in an even low digit.
  CHECK(minimize(even_automaton()).num_states() == 3);

  std::mt19937 rng(11);
  for (int round = 0; round < 30; ++round) {
    Dfa r = random_dfa(rng, 2, {"x"}, 8);
    Dfa mr = minimize(r);
    CHECK(all_states_distinguishable(mr));
    CHECK(equivalent(mr, r));
    CHECK(mr.num_states() <= r.num_states());
  }
}

TEST_CASE("cylindrify") {
  Dfa lt = lt_automaton(2);
  CHECK(equivalent(cylindrify(lt, {"x", "y"}), lt));
  Dfa c = cylindrify(lt, {"x", "y", "z"});
  CHECK(run(c, {1, 2, 7}));
  CHECK_FALSE(run(c, {2, 1, 0}));
  Dfa swapped = cylindrify(lt, {"y", "x"});
  CHECK(run(swapped, {5, 3}));
  CHECK_THROWS_AS(cylindrify(lt, {"x", "z"}), Error);
}

TEST_CASE("bind_tracks renames and forces diagonals") {
  Dfa lt = lt_automaton(2);
  Dfa renamed = bind_tracks(lt, {"b", "a"});
  CHECK(renamed.tracks() == std::vector<std::string>{"a", "b"});
  CHECK(run(renamed, {1, 4}) == false);
  CHECK(run(renamed, {4, 1}) == true);
  CHECK(is_empty(bind_tracks(lt, {"v", "v"})));
  Dfa diag = bind_tracks(add_automaton(2), {"u", "u", "w"});
  for (std::uint64_t u = 0; u < 20; ++u)
    for (std::uint64_t w = 0; w < 40; ++w) CHECK(run(diag, {u, w}) == (2 * u == w));
}

TEST_CASE("project") {
  CHECK(equivalent(exists(eq_automaton(2), "y"), universal(2, {"x"})));
  CHECK(equivalent(exists(add_automaton(2), "z"), universal(2, {"x", "y"})));
  Dfa le = exists(add_automaton(2), "y");
  for (std::uint64_t x = 0; x < 64; ++x)
    for (std::uint64_t z = 0; z < 64; ++z) CHECK(run(le, {x, z}) == (x <= z));
  // The witness may need more digits than the free variables: Ey y > x.
  CHECK(equivalent(exists(lt_automaton(2), "y"), universal(2, {"x"})));
}

TEST_CASE("pad_normalize") {
  Dfa lt = lt_automaton(2);
  CHECK(pad_normalize(lt) == minimize(lt));

  // Accepts exactly the one-column word (1,1).
  Letter one_one = 1 + 2 * 1;
  std::vector<State> delta(3 * 4, 2);
  delta[0 * 4 + one_one] = 1;
  Dfa exact(2, {"x", "y"}, 3, 0, {0, 1, 0}, delta);
  CHECK_FALSE(run(exact, {1, 1}, 1));
  Dfa norm = pad_normalize(exact);
  for (std::size_t pad = 0; pad <= 4; ++pad) {
    CHECK(run(norm, {1, 1}, pad));
    CHECK_FALSE(run(norm, {1, 0}, pad));
    CHECK_FALSE(run(norm, {0, 0}, pad));
  }

  std::mt19937 rng(3);
  for (int round = 0; round < 30; ++round) {
    Dfa r = pad_normalize(random_dfa(rng, 3, {"x", "y"}, 5));
    for (std::uint64_t x = 0; x < 12; ++x)
      for (std::uint64_t y = 0; y < 12; ++y)
        for (std::size_t pad = 1; pad <= 4; ++pad) CHECK(run(r, {x, y}, pad) == run(r, {x, y}));
  }
}

TEST_CASE("pad invariance of the thue-morse pipeline automata") {
  PipelineReport r = run_pipeline(thue_morse(), "thue-morse");
  for (const Dfa* a : {&r.period, &r.least_period}) {
    std::mt19937 rng(5);
    for (int k = 0; k < 300; ++k) {
      std::vector<std::uint64_t> v{rng() % 64, rng() % 64, rng() % 64};
      bool base = run(*a, v);
      for (std::size_t pad = 1; pad <= 4; ++pad) CHECK(run(*a, v, pad) == base);
    }
    CHECK(run(*a, {6, 2, 3}, 0) == run(*a, {6, 2, 3}, 5));
  }
  CHECK(run(r.result, {6}) == run(r.result, {6}, 5));
}

TEST_CASE("run") {
  CHECK(run(universal(2, {"n"}), {0}));
  CHECK_FALSE(run(lt_automaton(2), {3, 3}));
  CHECK(run(add_automaton(2), {2, 3, 5}));
  CHECK_THROWS_AS(run(lt_automaton(2), {3}), Error);
}

TEST_CASE("equivalent") {
  Dfa lt = lt_automaton(2);
  CHECK(equivalent(lt, lt));
  CHECK_FALSE(equivalent(lt, complement(lt)));
  CHECK(equivalent(minimize(lt), lt));
  CHECK_THROWS_AS(equivalent(lt, lt_automaton(3)), Error);
}

TEST_CASE("is_infinite") {
  CHECK(is_infinite(universal(2, {"n"})));
  CHECK_FALSE(is_infinite(const_automaton(5, 2)));
  CHECK_FALSE(is_infinite(empty_language(2, {"n"})));
  CHECK(is_infinite(reverse_digits(even_automaton())));
  CHECK(is_infinite(complement(const_automaton(5, 2))));
}

TEST_CASE("reverse_digits round trip") {
  Dfa even = even_automaton();
  Dfa msd = reverse_digits(even);
  CHECK(msd.order() == DigitOrder::Msd);
  for (std::uint64_t n = 0; n < 200; ++n) CHECK(run(msd, {n}) == (n % 2 == 0));
  CHECK(equivalent(reverse_digits(msd), even));
  Dfa add_msd = reverse_digits(add_automaton(3));
  for (std::uint64_t x = 0; x < 20; ++x)
    for (std::uint64_t y = 0; y < 20; ++y) {
      CHECK(run(add_msd, {x, y, x + y}));
      CHECK_FALSE(run(add_msd, {x, y, x + y + 1}));
    }
  CHECK(run_word(reverse_to_msd(const_automaton(6, 2)), {1, 1, 0}));
}

}  // TEST_SUITE
