#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "autoseq/automaton.hpp"
#include "autoseq/compiler.hpp"
#include "autoseq/dfao.hpp"

namespace autoseq {

/// x[i..j] has period n: every t with i <= t <= j - n has x[t] = x[t + n].
std::string period_formula();
/// n is the least period (among 1 <= n' < n none is a period) of x[i..j].
/// With `negated_exists` the inner universal is written as ~E.
std::string least_period_formula(bool negated_exists = false);
/// Some factor of length >= n + slack has least period n.
std::string least_period_set_formula(unsigned length_slack);

struct PipelineOptions {
  /// Minimum factor length is n + length_slack (0, 1 or 2). With 0 every
  /// nonempty factor counts, since a least period never exceeds the length.
  unsigned length_slack = 0;
  bool lp_negated_exists = false;
  CompileOptions compile;
  /// Stage automata are cached here when set.
  std::optional<std::filesystem::path> cache_dir;
};

struct StageReport {
  std::string name;
  std::string formula;
  State states = 0;
  State largest_intermediate = 0;
  double seconds = 0.0;
  bool cached = false;
};

struct PipelineReport {
  std::string sequence;
  unsigned length_slack = 0;
  std::vector<StageReport> stages;
  Dfa period;          ///< tracks i, j, n
  Dfa least_period;    ///< tracks i, j, n
  Dfa result;          ///< track n, LSD-first
  Dfa result_msd;      ///< track n, MSD-first
  bool accepts_zero = false;
  bool accepts_all_positive = false;
};

Dfa period_predicate(const Dfao& seq, const CompileOptions& options = {}, CompileStats* stats = nullptr);
Dfa least_period_predicate(const Dfao& seq, const Dfa& period, bool negated_exists = false,
                           const CompileOptions& options = {}, CompileStats* stats = nullptr);
Dfa least_period_automaton(const Dfao& seq, const Dfa& least_period, unsigned length_slack,
                           const CompileOptions& options = {}, CompileStats* stats = nullptr);

/// P -> LP -> L with per-stage sizes and timings.
PipelineReport run_pipeline(const Dfao& seq, const std::string& name, const PipelineOptions& options = {});

/// Human-readable report and a JSON rendering. Timings are left out unless
/// asked for, so repeated runs give identical bytes.
std::string to_text(const PipelineReport& report, bool timings = false);
std::string to_json(const PipelineReport& report, bool timings = false);

}  // namespace autoseq
