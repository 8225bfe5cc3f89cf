#include "autoseq/pipeline.hpp"

#include <chrono>
#include <json.hpp>
#include <sstream>

#include "autoseq/error.hpp"
#include "autoseq/io.hpp"
#include "autoseq/numeration.hpp"
#include "autoseq/operations.hpp"

namespace autoseq {

std::string period_formula() { return "At (i <= t & t <= j - n) => x[t] = x[t + n]"; }

std::string least_period_formula(bool negated_exists) {
  if (negated_exists) return "$P(n, i, j) & ~En' (1 <= n' & n' < n & $P(n', i, j))";
  return "$P(n, i, j) & An' (1 <= n' & n' < n) => ~$P(n', i, j)";
}

std::string least_period_set_formula(unsigned length_slack) {
  if (length_slack == 2) return "Ei, j i + n <= j - 1 & $LP(n, i, j)";
  if (length_slack == 1) return "Ei, j i + n <= j & $LP(n, i, j)";
  if (length_slack == 0) return "Ei, j i + n <= j + 1 & $LP(n, i, j)";
  throw Error("length slack must be 0, 1 or 2");
}

namespace {

CompileEnv env_for(const Dfao& seq) {
  CompileEnv env;
  env.base = seq.base();
  env.sequences.emplace("x", seq);
  return env;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

Dfa period_predicate(const Dfao& seq, const CompileOptions& options, CompileStats* stats) {
  return compile_predicate(period_formula(), env_for(seq), options, stats);
}

Dfa least_period_predicate(const Dfao& seq, const Dfa& period, bool negated_exists, const CompileOptions& options,
                           CompileStats* stats) {
  CompileEnv env = env_for(seq);
  env.relations.emplace("P", NamedRelation{period, {"n", "i", "j"}});
  return compile_predicate(least_period_formula(negated_exists), env, options, stats);
}

Dfa least_period_automaton(const Dfao& seq, const Dfa& least_period, unsigned length_slack,
                           const CompileOptions& options, CompileStats* stats) {
  CompileEnv env = env_for(seq);
  env.relations.emplace("LP", NamedRelation{least_period, {"n", "i", "j"}});
  return compile_predicate(least_period_set_formula(length_slack), env, options, stats);
}

PipelineReport run_pipeline(const Dfao& seq, const std::string& name, const PipelineOptions& options) {
  using clock = std::chrono::steady_clock;
  std::optional<std::filesystem::path> cache;
  if (options.cache_dir) {
    std::ostringstream key;
    key << save_dfao(seq) << "|slack=" << options.length_slack << "|negex=" << options.lp_negated_exists
        << "|eager=" << options.compile.eager_minimize << "|forallneg=" << options.compile.forall_via_negation;
    std::ostringstream dir;
    dir << std::hex << fnv1a(key.str());
    cache = *options.cache_dir / dir.str();
  }

  auto stage = [&](const std::string& stage_name, const std::string& formula, auto&& build) {
    StageReport s{stage_name, formula, 0, 0, 0.0, false};
    std::optional<Dfa> out;
    if (cache && std::filesystem::exists(*cache / (stage_name + ".aut"))) {
      out = load_dfa(read_file(*cache / (stage_name + ".aut")));
      s.cached = true;
    } else {
      CompileStats stats;
      auto t0 = clock::now();
      out = build(stats);
      s.seconds = std::chrono::duration<double>(clock::now() - t0).count();
      s.largest_intermediate = stats.largest;
      if (cache) {
        std::filesystem::create_directories(*cache);
        write_file(*cache / (stage_name + ".aut"), save_dfa(*out));
      }
    }
    s.states = out->num_states();
    return std::pair{std::move(*out), s};
  };

  auto [p, sp] = stage("P", period_formula(), [&](CompileStats& st) { return period_predicate(seq, options.compile, &st); });
  auto [lp, slp] = stage("LP", least_period_formula(options.lp_negated_exists), [&](CompileStats& st) {
    return least_period_predicate(seq, p, options.lp_negated_exists, options.compile, &st);
  });
  auto [l, sl] = stage("L", least_period_set_formula(options.length_slack), [&](CompileStats& st) {
    return least_period_automaton(seq, lp, options.length_slack, options.compile, &st);
  });

  Dfa msd = reverse_to_msd(l);
  bool zero = run(l, {0});
  bool all_positive = is_empty(minimize(product(complement(l), at_least_automaton(1, seq.base(), "n"), BoolOp::And)));
  return PipelineReport{name, options.length_slack, {sp, slp, sl}, std::move(p), std::move(lp), std::move(l),
                        std::move(msd), zero, all_positive};
}

std::string to_text(const PipelineReport& r, bool timings) {
  std::ostringstream out;
  out << "sequence: " << r.sequence << '\n';
  out << "length slack: " << r.length_slack << " (factor length >= n + " << r.length_slack << ")\n";
  for (const auto& s : r.stages) {
    out << "stage " << s.name << ": " << s.states << " states";
    if (s.cached) out << " (cached)";
    if (!s.cached) out << ", largest intermediate " << s.largest_intermediate;
    if (timings && !s.cached) out << ", " << s.seconds << " s";
    out << "\n  " << s.formula << '\n';
  }
  out << "least-period automaton: " << r.result.num_states() << " states (lsd), " << r.result_msd.num_states()
      << " states (msd)\n";
  out << "accepts 0: " << (r.accepts_zero ? "yes" : "no") << '\n';
  out << "accepts every n >= 1: " << (r.accepts_all_positive ? "yes" : "no") << '\n';
  return out.str();
}

std::string to_json(const PipelineReport& r, bool timings) {
  nlohmann::json j;
  j["sequence"] = r.sequence;
  j["length_slack"] = r.length_slack;
  for (const auto& s : r.stages) {
    nlohmann::json st{{"name", s.name},
                      {"formula", s.formula},
                      {"states", s.states},
                      {"largest_intermediate", s.largest_intermediate},
                      {"cached", s.cached}};
    if (timings) st["seconds"] = s.seconds;
    j["stages"].push_back(st);
  }
  j["result"] = {{"lsd_states", r.result.num_states()},
                 {"msd_states", r.result_msd.num_states()},
                 {"accepts_zero", r.accepts_zero},
                 {"accepts_all_positive", r.accepts_all_positive}};
  return j.dump(2) + "\n";
}

}  // namespace autoseq
