#include <doctest.h>

#include <filesystem>
#include <random>

#include "autoseq/compiler.hpp"
#include "autoseq/io.hpp"
#include "autoseq/numeration.hpp"
#include "autoseq/operations.hpp"
#include "autoseq/pipeline.hpp"
#include "autoseq/sequences.hpp"
#include "support/oracle.hpp"

using namespace autoseq;

namespace {

const PipelineReport& report(const std::string& name) {
  static std::map<std::string, PipelineReport> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, run_pipeline(find_builtin(name)->dfao, name)).first;
  return it->second;
}

}  // namespace

TEST_SUITE("pipeline") {

TEST_CASE("period predicate") {
  const auto& r = report("thue-morse");
  const Dfa& p = r.period;
  CHECK(p.tracks() == std::vector<std::string>{"i", "j", "n"});
  // (i, j, n) with j < i is an empty factor: vacuous
  for (std::uint64_t i = 1; i < 20; ++i)
    for (std::uint64_t j = 0; j < i; ++j)
      for (std::uint64_t n = 0; n < 8; ++n) CHECK(run(p, {i, j, n}));
  CHECK(run(p, {1, 2, 1}));
  CHECK_FALSE(run(p, {0, 1, 1}));
}

TEST_CASE("predicates agree with brute force on every sequence") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const auto& r = report(name);
    auto x = find_builtin(name)->oracle.at;
    std::size_t bad_p = 0, bad_lp = 0;
    for (std::int64_t i = 0; i < 32; ++i)
      for (std::int64_t j = 0; j < 32; ++j)
        for (std::int64_t n = 0; n < 32; ++n) {
          std::vector<std::uint64_t> v{std::uint64_t(i), std::uint64_t(j), std::uint64_t(n)};
          bad_p += run(r.period, v) != testsupport::has_period(x, n, i, j);
          bool lp = n == 0 ? testsupport::has_period(x, 0, i, j) : testsupport::is_least_period(x, n, i, j);
          bad_lp += run(r.least_period, v) != lp;
        }
    CHECK(bad_p == 0);
    CHECK(bad_lp == 0);
  }
}

TEST_CASE("least-period predicate") {
  const auto& r = report("thue-morse");
  for (std::uint64_t i = 0; i < 32; ++i)
    for (std::uint64_t j = 0; j < 32; ++j) CHECK(run(r.least_period, {i, j, 1}) == run(r.period, {i, j, 1}));
  CHECK(run(r.least_period, {1, 4, 3}));

  CompileEnv env;
  env.sequences.emplace("x", thue_morse());
  env.relations.emplace("LP", NamedRelation{r.least_period, {"n", "i", "j"}});
  Dfa twice = compile_predicate("Ei, j, n, m n >= 1 & m >= 1 & n != m & $LP(n, i, j) & $LP(m, i, j)", env);
  CHECK_FALSE(twice.accepting(twice.start()));
  Dfa some = compile_predicate("Ai, j i <= j => En n >= 1 & $LP(n, i, j)", env);
  CHECK(some.accepting(some.start()));

  std::mt19937 rng(1);
  for (int k = 0; k < 200; ++k) {
    std::uint64_t i = rng() % 500, j = i + rng() % 60;
    int count = 0;
    for (std::uint64_t n = 1; n <= 61; ++n) count += run(r.least_period, {i, j, n});
    CHECK(count == 1);
  }
}

TEST_CASE("negated-exists form of LP gives the same automata") {
  for (const auto& name : {"thue-morse", "paperfolding"}) {
    PipelineOptions o;
    o.lp_negated_exists = true;
    PipelineReport alt = run_pipeline(find_builtin(name)->dfao, name, o);
    CHECK(alt.least_period == report(name).least_period);
    CHECK(alt.result == report(name).result);
  }
}

TEST_CASE("least-period sets") {
  const auto& tm = report("thue-morse");
  for (std::uint64_t n = 1; n <= 10000; ++n) REQUIRE(run(tm.result, {n}));
  CHECK(tm.accepts_all_positive);
  CHECK(tm.result.num_states() == 1);

  const auto& pf = report("paperfolding");
  CHECK_FALSE(run(pf.result, {18}));
  for (std::uint64_t n = 1; n < 18; ++n) CHECK(run(pf.result, {n}));
  CHECK_FALSE(pf.accepts_all_positive);
  CHECK(pf.result_msd.num_states() == 12);

  // P(0, i, j) holds everywhere, so 0 is accepted; it is never a least
  // period of a nonempty factor.
  for (const auto& name : builtin_names()) CHECK(report(name).accepts_zero);
}

TEST_CASE("length slack") {
  Dfao seq = paperfolding();
  std::map<unsigned, Dfa> by_slack;
  for (unsigned slack : {0u, 1u, 2u}) {
    PipelineOptions o;
    o.length_slack = slack;
    by_slack.emplace(slack, run_pipeline(seq, "paperfolding", o).result);
    auto expect = factor_least_periods(paperfolding_oracle(), 1 << 14, 128, slack);
    std::vector<std::uint64_t> got;
    for (std::uint64_t n = 1; n <= 128; ++n)
      if (run(by_slack.at(slack), {n})) got.push_back(n);
    CHECK(got == expect);
  }
  // Demanding longer factors can only shrink the set.
  CHECK(is_empty(product(by_slack.at(1), complement(by_slack.at(0)), BoolOp::And)));
  CHECK(is_empty(product(by_slack.at(2), complement(by_slack.at(1)), BoolOp::And)));
  CHECK_FALSE(run(by_slack.at(2), {2}));
  CHECK(run(by_slack.at(1), {2}));
  CHECK_THROWS(least_period_set_formula(3));
}

TEST_CASE("runs are deterministic and the cache reproduces them") {
  auto dir = std::filesystem::temp_directory_path() / "autoseq-cache-test";
  std::filesystem::remove_all(dir);
  PipelineOptions o;
  o.cache_dir = dir;
  Dfao seq = rudin_shapiro();
  PipelineReport first = run_pipeline(seq, "rudin-shapiro", o);
  PipelineReport second = run_pipeline(seq, "rudin-shapiro", o);
  for (const auto& s : first.stages) CHECK_FALSE(s.cached);
  for (const auto& s : second.stages) CHECK(s.cached);
  CHECK(save_dfa(first.result) == save_dfa(second.result));
  CHECK(save_dfa(first.least_period) == save_dfa(second.least_period));
  CHECK(save_dfa(first.least_period) == save_dfa(report("rudin-shapiro").least_period));
  CHECK(to_json(report("rudin-shapiro")) == to_json(run_pipeline(seq, "rudin-shapiro")));
  std::filesystem::remove_all(dir);

  std::string text = to_text(report("paperfolding"));
  CHECK(text.find("12 states (msd)") != std::string::npos);
  CHECK(to_json(report("paperfolding")).find("\"msd_states\": 12") != std::string::npos);
}

}  // TEST_SUITE
