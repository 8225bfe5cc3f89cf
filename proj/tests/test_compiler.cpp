#include <doctest.h>

#include <bit>

#include "autoseq/compiler.hpp"
#include "autoseq/error.hpp"
#include "autoseq/numeration.hpp"
#include "autoseq/operations.hpp"
#include "autoseq/parser.hpp"
#include "autoseq/sequences.hpp"
#include "support/oracle.hpp"

using namespace autoseq;

namespace {

CompileEnv tm_rs_env() {
  CompileEnv env;
  env.sequences.emplace("x", thue_morse());
  env.sequences.emplace("y", rudin_shapiro());
  env.relations.emplace("R", NamedRelation{lt_automaton(2, "p", "q"), {"p", "q"}});
  return env;
}

testsupport::Model tm_rs_model() {
  testsupport::Model m;
  auto t = thue_morse_oracle(), r = rudin_shapiro_oracle();
  m.sequences["x"] = t.at;
  m.sequences["y"] = r.at;
  m.relations["R"] = [](const std::vector<std::int64_t>& a) { return a[0] < a[1]; };
  m.bound = 72;
  return m;
}

bool sentence_value(const Dfa& a) {
  REQUIRE(a.arity() == 0);
  return a.accepting(a.start());
}

// Every assignment of the free variables below `limit` agrees with the
// interpreter.
void check_against_interpreter(const std::string& text, std::int64_t limit, const CompileOptions& options = {}) {
  CAPTURE(text);
  CompileEnv env = tm_rs_env();
  testsupport::Model model = tm_rs_model();
  Dfa a = compile_predicate(text, env, options);
  FormulaPtr f = parse(text);
  std::vector<std::string> vars(a.tracks());
  REQUIRE(std::set<std::string>(vars.begin(), vars.end()) == free_variables(*f));
  std::vector<std::uint64_t> values(vars.size(), 0);
  std::size_t mismatches = 0;
  while (true) {
    testsupport::Assignment env_values;
    for (std::size_t m = 0; m < vars.size(); ++m) env_values[vars[m]] = static_cast<std::int64_t>(values[m]);
    if (run(a, values) != testsupport::holds(*f, model, env_values)) ++mismatches;
    std::size_t m = 0;
    for (; m < values.size(); ++m) {
      if (++values[m] < static_cast<std::uint64_t>(limit)) break;
      values[m] = 0;
    }
    if (m == values.size()) break;
  }
  CHECK(mismatches == 0);
}

}  // namespace

TEST_SUITE("compiler") {

TEST_CASE("sentences") {
  CompileEnv env = tm_rs_env();
  CHECK(sentence_value(compile_predicate("Et x[t]=x[t]", env)));
  CHECK(sentence_value(compile_predicate("En x[n]=1", env)));
  CHECK_FALSE(sentence_value(compile_predicate("An x[n]=1", env)));
  CHECK(sentence_value(compile_predicate("An Em m > n", env)));
  CHECK_FALSE(sentence_value(compile_predicate("Em An m > n", env)));
  // Thue-Morse is overlap-free and cube-free.
  CHECK_FALSE(sentence_value(compile_predicate(
      "Ei, p p >= 1 & At (i <= t & t < i + p + p) => x[t] = x[t + p]", env)));
  CHECK(sentence_value(compile_predicate("Ei, p p >= 1 & At (i <= t & t < i + p) => x[t] = x[t + p]", env)));
  CHECK(sentence_value(compile_predicate("true", env)));
  CHECK_FALSE(sentence_value(compile_predicate("false", env)));
}

TEST_CASE("sequence constants") {
  CompileEnv env = tm_rs_env();
  Dfa ones = compile_predicate("x[n]=1", env);
  for (std::uint64_t n = 0; n < 64; ++n) CHECK(run(ones, {n}) == (std::popcount(n) % 2 == 1));
}

TEST_CASE("period atom on thue-morse") {
  CompileEnv env = tm_rs_env();
  Dfa p = compile_predicate("At (i <= t & t <= j - n) => x[t] = x[t + n]", env);
  CHECK(p.tracks() == std::vector<std::string>{"i", "j", "n"});
  // tracks are sorted: (i, j, n)
  CHECK_FALSE(run(p, {0, 1, 1}));
  CHECK_FALSE(run(p, {0, 2, 2}));
  CHECK(run(p, {1, 4, 3}));
}

TEST_CASE("seq_atom_automaton") {
  Dfao t = thue_morse();
  Dfa eq = seq_atom_automaton(t, "u", true, t, "v");
  CHECK(run(eq, {0, 3}));
  Dfa ne = seq_atom_automaton(t, "u", false, rudin_shapiro(), "v");
  auto to = thue_morse_oracle(), ro = rudin_shapiro_oracle();
  for (std::uint64_t u = 0; u < 128; ++u) {
    CHECK(run(eq, {u, u}));
    for (std::uint64_t v = 0; v < 128; ++v) {
      CHECK(run(eq, {u, v}) == (to.at(u) == to.at(v)));
      CHECK(run(ne, {u, v}) == (to.at(u) != ro.at(v)));
    }
  }
  Dfa diag = seq_atom_automaton(t, "u", false, rudin_shapiro(), "u");
  CHECK(diag.arity() == 1);
  for (std::uint64_t u = 0; u < 256; ++u) CHECK(run(diag, {u}) == (to.at(u) != ro.at(u)));
}

TEST_CASE("agreement with the interpreter") {
  for (const char* text : {"a < b", "a <= b", "a = b", "a != b", "a > b", "a >= b", "a + 3 <= b", "a - b <= 3",
                           "a + b = b + a", "a + a = b", "Ek k + k = a", "Ek k + k + k = a & b = b",
                           "x[a] = x[b]", "x[a] != y[b]", "x[a + 1] = 0", "x[a - b] = 1", "y[a + b] = x[a]",
                           "At (a <= t & t < b) => x[t] = x[t + 1]", "~(a < b) | Ec (a < c & c < b)",
                           "Ak (k < a) => x[k] = 0", "(a < b) <=> (b > a)", "a < b => x[a] = y[b]",
                           "Ei i <= a & x[i] = 1 & ~Ej (j < i & x[j] = 1)", "$R(a, b + 1)", "$R(b - 1, a)",
                           "Ek k <= a & $R(k, b) & y[k] = 1", "a = 7 | b = 12", "a + 0 = 5"})
    check_against_interpreter(text, 32);
  for (const char* text : {"a + b = c", "a + b <= c + 1", "x[a + b] = x[c]", "Et (a <= t & t <= b - c) => x[t] = x[t + c]"})
    check_against_interpreter(text, 16);
}

TEST_CASE("options do not change the language") {
  CompileEnv env = tm_rs_env();
  for (const char* text : {"Ak (k < a) => x[k] = 0", "At (i <= t & t <= j - n) => x[t] = x[t + n]",
                           "Ei i <= a & x[i] = 1 & ~Ej (j < i & x[j] = 1)"}) {
    CAPTURE(text);
    Dfa base = compile_predicate(text, env);
    CompileOptions lazy;
    lazy.eager_minimize = false;
    CHECK(compile_predicate(text, env, lazy) == base);
    CompileOptions neg;
    neg.forall_via_negation = true;
    CHECK(compile_predicate(text, env, neg) == base);
  }
  check_against_interpreter("Ak (k < a) => x[k] = y[k + b]", 32, CompileOptions{false, true});
}

TEST_CASE("quantifier laws") {
  CompileEnv env = tm_rs_env();
  auto c = [&](const char* text) { return compile_predicate(text, env); };
  CHECK(c("Ak (k < a) => x[k] = 0") == c("~Ek ~((k < a) => x[k] = 0)"));
  CHECK(c("Ek k < a & x[k] = y[b]") == c("~Ak ~(k < a & x[k] = y[b])"));
  CHECK(c("Ei Ej (i < j & j < a & x[i] != x[j])") == c("Ej Ei (i < j & j < a & x[i] != x[j])"));
  CHECK(c("Ai Aj (i + j = a) => x[i] = x[j]") == c("Aj Ai (i + j = a) => x[i] = x[j]"));
  CHECK(c("a < b & b < c") == c("~(a >= b | b >= c)"));
}

TEST_CASE("result tracks are the sorted free variables") {
  CompileEnv env = tm_rs_env();
  CHECK(compile_predicate("z < b & a = a", env).tracks() == std::vector<std::string>{"a", "b", "z"});
  CHECK(compile_predicate("Eb z < b", env).tracks() == std::vector<std::string>{"z"});
}

TEST_CASE("compile errors") {
  CompileEnv env = tm_rs_env();
  CHECK_THROWS_AS(compile_predicate("w[n] = 1", env), Error);
  CHECK_THROWS_AS(compile_predicate("$Q(a, b)", env), Error);
  CHECK_THROWS_AS(compile_predicate("$R(a)", env), Error);
  CHECK_THROWS_AS(compile_predicate("x[n] = ", env), SyntaxError);
  CompileEnv wrong = env;
  wrong.base = 3;
  CHECK_THROWS_AS(compile_predicate("x[n] = 1", wrong), Error);
}

TEST_CASE("base 3") {
  CompileEnv env;
  env.base = 3;
  Dfa div3 = compile_predicate("Ek k + k + k = n", env);
  for (std::uint64_t n = 0; n < 200; ++n) CHECK(run(div3, {n}) == (n % 3 == 0));
}

}  // TEST_SUITE
