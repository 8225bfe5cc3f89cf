// autoseq: least periods of automatic sequences from the command line.
//
// Exit status: 0 success / accept, 1 reject / mismatch, 2 usage or internal error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "autoseq/analysis.hpp"
#include "autoseq/compiler.hpp"
#include "autoseq/error.hpp"
#include "autoseq/io.hpp"
#include "autoseq/operations.hpp"
#include "autoseq/pipeline.hpp"
#include "autoseq/sequences.hpp"

namespace fs = std::filesystem;
using namespace autoseq;

namespace {

constexpr int kAccept = 0;
constexpr int kReject = 1;
constexpr int kError = 2;

struct Selected {
  std::string name;
  Dfao dfao;
  std::optional<SequenceOracle> oracle;
};

Selected select_sequence(const std::string& selector) {
  if (auto b = find_builtin(selector)) return {selector, b->dfao, b->oracle};
  if (!fs::exists(selector)) throw Error("unknown sequence '" + selector + "' (not a builtin and no such file)");
  std::string text = read_file(selector);
  if (sniff(text) != FileKind::Dfao) throw Error(selector + ": not a DFAO file");
  return {fs::path(selector).stem().string(), load_dfao(text), std::nullopt};
}

Dfa load_unary(const std::string& path) {
  Dfa a = load_dfa(read_file(path));
  if (a.arity() != 1) throw Error(path + ": expected an automaton with one track, got " + std::to_string(a.arity()));
  return a;
}

// Accepts "65536", "2^16" and "1<<16".
std::uint64_t parse_count(const std::string& s) {
  auto number = [&](const std::string& t) {
    std::size_t used = 0;
    unsigned long long v = std::stoull(t, &used);
    if (used != t.size()) throw Error("bad number '" + s + "'");
    return static_cast<std::uint64_t>(v);
  };
  try {
    if (auto p = s.find('^'); p != std::string::npos) {
      std::uint64_t b = number(s.substr(0, p)), e = number(s.substr(p + 1)), r = 1;
      for (std::uint64_t i = 0; i < e; ++i) {
        if (r > (std::uint64_t{1} << 40) / std::max<std::uint64_t>(b, 1)) throw Error("number too large '" + s + "'");
        r *= b;
      }
      return r;
    }
    if (auto p = s.find("<<"); p != std::string::npos) {
      std::uint64_t e = number(s.substr(p + 2));
      if (e > 40) throw Error("number too large '" + s + "'");
      return number(s.substr(0, p)) << e;
    }
    return number(s);
  } catch (const std::logic_error&) {
    throw Error("bad number '" + s + "'");
  }
}

PipelineOptions pipeline_options(unsigned slack, bool no_minimize, bool negated_exists) {
  PipelineOptions o;
  o.length_slack = slack;
  o.lp_negated_exists = negated_exists;
  o.compile.eager_minimize = !no_minimize;
  if (const char* dir = std::getenv("AUTOSEQ_CACHE_DIR"); dir && *dir) o.cache_dir = fs::path(dir);
  return o;
}

std::string join(const std::vector<std::uint64_t>& v, std::size_t limit = 0) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (limit && i == limit) {
      out << " ... (" << v.size() << " total)";
      break;
    }
    out << (i ? " " : "") << v[i];
  }
  return out.str();
}

int cmd_build(const std::string& selector, const std::string& out_dir, unsigned slack, bool msd, bool dot,
              bool no_minimize, bool negated_exists, bool timings) {
  Selected s = select_sequence(selector);
  PipelineReport r = run_pipeline(s.dfao, s.name, pipeline_options(slack, no_minimize, negated_exists));
  fs::path dir(out_dir);
  fs::create_directories(dir);
  write_file(dir / "P.aut", save_dfa(r.period));
  write_file(dir / "LP.aut", save_dfa(r.least_period));
  write_file(dir / "L.aut", save_dfa(r.result));
  if (msd) write_file(dir / "L.msd.aut", save_dfa(r.result_msd));
  if (dot) {
    write_file(dir / "L.dot", to_dot(r.result, "L"));
    if (msd) write_file(dir / "L.msd.dot", to_dot(r.result_msd, "L_msd"));
  }
  std::string text = to_text(r, timings);
  DensityReport d = density(r.result);
  std::string analysis = "\n" + to_text(d);
  write_file(dir / "report.txt", text + analysis);
  write_file(dir / "report.json", to_json(r, timings));
  std::cout << text << analysis;
  if (msd) std::cout << "wrote " << (dir / "L.msd.aut").string() << " (" << r.result_msd.num_states() << " states)\n";
  return kAccept;
}

int cmd_query(const std::string& file, std::uint64_t n) {
  bool ok = run(load_unary(file), {n});
  std::cout << (ok ? "accept" : "reject") << '\n';
  return ok ? kAccept : kReject;
}

int cmd_enumerate(const std::string& file, std::uint64_t from, std::uint64_t max, bool complement_set) {
  Dfa a = load_unary(file);
  for (std::uint64_t n = from; n <= max; ++n)
    if (run(a, {n}) != complement_set) std::cout << n << '\n';
  return kAccept;
}

int cmd_density(const std::string& file, std::uint64_t bound) {
  std::cout << to_text(density(load_unary(file), bound));
  return kAccept;
}

int cmd_verify(const std::string& selector, std::uint64_t max_n, std::uint64_t prefix, unsigned slack) {
  Selected s = select_sequence(selector);
  if (!s.oracle) throw Error("verify needs a builtin sequence (an oracle is required)");
  PipelineReport r = run_pipeline(s.dfao, s.name, pipeline_options(slack, false, false));
  std::vector<std::uint64_t> automaton;
  for (std::uint64_t n = 1; n <= max_n; ++n)
    if (run(r.result, {n})) automaton.push_back(n);
  auto oracle = factor_least_periods(*s.oracle, prefix, max_n, slack);
  auto shorter = factor_least_periods(*s.oracle, prefix / 2, max_n, slack);

  std::vector<std::uint64_t> only_automaton, only_oracle, omitted;
  std::set_difference(automaton.begin(), automaton.end(), oracle.begin(), oracle.end(),
                      std::back_inserter(only_automaton));
  std::set_difference(oracle.begin(), oracle.end(), automaton.begin(), automaton.end(),
                      std::back_inserter(only_oracle));
  for (std::uint64_t n = 1; n <= max_n; ++n)
    if (!std::binary_search(automaton.begin(), automaton.end(), n)) omitted.push_back(n);

  std::cout << "sequence: " << s.name << '\n';
  std::cout << "range: [1, " << max_n << "], prefix " << prefix << ", length slack " << slack << '\n';
  std::cout << "automaton accepts: " << automaton.size() << '\n';
  std::cout << "oracle finds: " << oracle.size() << " (prefix " << prefix / 2 << ": " << shorter.size() << ")\n";
  std::cout << "omissions: " << (omitted.empty() ? "none" : join(omitted, 32)) << '\n';
  if (oracle != shorter) {
    std::cout << "status: non-converged (oracle set still grows with the prefix; use a longer --prefix)\n";
    return kAccept;
  }
  if (only_automaton.empty() && only_oracle.empty()) {
    std::cout << "diff: empty\nstatus: pass\n";
    return kAccept;
  }
  std::cout << "diff: automaton only {" << join(only_automaton, 32) << "}, oracle only {" << join(only_oracle, 32)
            << "}\nstatus: fail\n";
  return kReject;
}

int cmd_eval(const std::string& predicate, const std::vector<std::string>& seqs, const std::string& free_order,
             const std::string& output, unsigned base) {
  CompileEnv env;
  env.base = base;
  for (const auto& binding : seqs) {
    auto eq = binding.find('=');
    if (eq == std::string::npos || eq == 0) throw Error("--seq expects name=sequence, got '" + binding + "'");
    Selected s = select_sequence(binding.substr(eq + 1));
    env.base = s.dfao.base();
    env.sequences.insert_or_assign(binding.substr(0, eq), s.dfao);
  }
  Dfa a = compile_predicate(predicate, env);
  if (a.arity() == 0) {
    bool value = a.accepting(a.start());
    std::cout << (value ? "true" : "false") << '\n';
    return value ? kAccept : kReject;
  }
  if (!free_order.empty()) {
    std::vector<std::string> order;
    std::stringstream in(free_order);
    for (std::string v; std::getline(in, v, ',');)
      if (!v.empty()) order.push_back(v);
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != a.tracks()) throw Error("--free must list exactly the free variables");
    a = cylindrify(a, order);
  }
  std::string text = save_dfa(a);
  if (output.empty())
    std::cout << text;
  else
    write_file(output, text);
  return kAccept;
}

int cmd_dfao(const std::string& selector, const std::string& output) {
  std::string text = save_dfao(select_sequence(selector).dfao);
  if (output.empty())
    std::cout << text;
  else
    write_file(output, text);
  return kAccept;
}

int cmd_dot(const std::string& file) {
  std::string text = read_file(file);
  switch (sniff(text)) {
    case FileKind::Automaton:
      std::cout << to_dot(load_dfa(text));
      return kAccept;
    case FileKind::Dfao:
      std::cout << to_dot(load_dfao(text));
      return kAccept;
    default:
      throw Error(file + ": neither an automaton nor a DFAO file");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Least periods of automatic sequences"};
  app.require_subcommand(1);

  std::string selector, file, out_dir = "out", output, predicate, free_order, prefix = "2^16";
  unsigned slack = 0, base = 2;
  bool msd = false, dot = false, no_minimize = false, negated_exists = false, timings = false, complement_set = false;
  std::uint64_t n = 0, max = 0, from = 1, max_n = 256, bound = std::uint64_t{1} << 20;
  std::vector<std::string> seqs;

  auto* build = app.add_subcommand("build", "Run the P -> LP -> L pipeline and write the automata");
  build->add_option("sequence", selector, "builtin name or DFAO file")->required();
  build->add_option("-o,--out", out_dir, "output directory");
  build->add_option("--slack", slack, "minimum factor length is n + slack")->check(CLI::Range(0, 2));
  build->add_flag("--msd", msd, "also export the MSD-first automaton");
  build->add_flag("--dot", dot, "also write DOT files");
  build->add_flag("--no-minimize", no_minimize, "minimize only the stage results");
  build->add_flag("--negated-exists", negated_exists, "write LP's inner quantifier as ~E");
  build->add_flag("--timings", timings, "include stage timings in the report");

  auto* query = app.add_subcommand("query", "Membership of n");
  query->add_option("automaton", file)->required()->check(CLI::ExistingFile);
  query->add_option("n", n)->required();

  auto* enumerate = app.add_subcommand("enumerate", "List accepted (or rejected) integers");
  enumerate->add_option("automaton", file)->required()->check(CLI::ExistingFile);
  enumerate->add_option("--max", max, "largest integer listed")->required();
  enumerate->add_option("--from", from, "smallest integer listed");
  enumerate->add_flag("--complement", complement_set, "list rejected integers");

  auto* dens = app.add_subcommand("density", "Exact density of the accepted set");
  dens->add_option("automaton", file)->required()->check(CLI::ExistingFile);
  dens->add_option("--omitted-bound", bound, "search bound for the least omitted n");

  auto* verify = app.add_subcommand("verify", "Compare the automaton with a brute-force oracle");
  verify->add_option("sequence", selector, "builtin name")->required();
  verify->add_option("--max-n", max_n, "compare on [1, max-n]");
  verify->add_option("--prefix", prefix, "oracle prefix length, e.g. 65536 or 2^16");
  verify->add_option("--slack", slack, "minimum factor length is n + slack")->check(CLI::Range(0, 2));

  auto* eval = app.add_subcommand("eval", "Compile a predicate");
  eval->add_option("predicate", predicate)->required();
  eval->add_option("--seq", seqs, "name=builtin|file.dfao");
  eval->add_option("--free", free_order, "track order, comma separated");
  eval->add_option("-o,--out", output, "write the automaton here instead of stdout");
  eval->add_option("--base", base, "numeration base when no sequence is bound")->check(CLI::Range(2, 64));

  auto* dfao = app.add_subcommand("dfao", "Print a builtin sequence as a DFAO file");
  dfao->add_option("sequence", selector)->required();
  dfao->add_option("-o,--out", output);

  auto* dotc = app.add_subcommand("dot", "Render an automaton or DFAO file as DOT");
  dotc->add_option("file", file)->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kError;
  }

  try {
    if (*build) return cmd_build(selector, out_dir, slack, msd, dot, no_minimize, negated_exists, timings);
    if (*query) return cmd_query(file, n);
    if (*enumerate) return cmd_enumerate(file, from, max, complement_set);
    if (*dens) return cmd_density(file, bound);
    if (*verify) return cmd_verify(selector, max_n, parse_count(prefix), slack);
    if (*eval) return cmd_eval(predicate, seqs, free_order, output, base);
    if (*dfao) return cmd_dfao(selector, output);
    if (*dotc) return cmd_dot(file);
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
