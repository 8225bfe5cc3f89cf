#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "autoseq/dfao.hpp"

namespace autoseq {

/// Direct definition of a sequence, used as ground truth.
struct SequenceOracle {
  std::string name;
  std::string definition;
  std::function<Symbol(std::uint64_t)> at;
};

SequenceOracle thue_morse_oracle();
SequenceOracle rudin_shapiro_oracle();
SequenceOracle period_doubling_oracle();
/// Evaluated straight from the folding recurrence p' = p 0 reverse(complement(p)).
SequenceOracle paperfolding_oracle();

Dfao thue_morse();
Dfao rudin_shapiro();
/// Synthesized from the oracle through the 2-kernel and verified.
Dfao period_doubling();
Dfao paperfolding();

struct Builtin {
  SequenceOracle oracle;
  Dfao dfao;
};

/// "thue-morse", "rudin-shapiro", "period-doubling", "paperfolding".
const std::vector<std::string>& builtin_names();
std::optional<Builtin> find_builtin(const std::string& name);

struct SynthesisOptions {
  std::uint64_t probe_len = std::uint64_t{1} << 14;
  std::uint64_t verify_len = std::uint64_t{1} << 20;
  State max_states = 4096;
};

/// k-kernel construction. Kernel elements n -> x(k^e n + r) are explored
/// breadth-first and identified when their first probe_len terms agree; the
/// result is then checked against the oracle on [0, verify_len).
Dfao synthesize_dfao(const SequenceOracle& oracle, unsigned base, const SynthesisOptions& options = {});

/// Integers p <= max_n that are the least period of some factor w of the
/// length-prefix_len prefix with |w| >= p + min_extra.
std::vector<std::uint64_t> factor_least_periods(const SequenceOracle& oracle, std::uint64_t prefix_len,
                                                std::uint64_t max_n, unsigned min_extra = 1);

/// Least period of a finite word (its length minus its longest proper border).
std::size_t least_period(const std::vector<Symbol>& word);

}  // namespace autoseq
