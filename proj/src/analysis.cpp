#include "autoseq/analysis.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "autoseq/error.hpp"
#include "autoseq/operations.hpp"

namespace autoseq {

namespace {

void require_arity_one(const Dfa& a, const char* what) {
  if (a.arity() != 1) throw Error(std::string(what) + " needs an arity-1 automaton");
}

// Solves A X = B in place by Gauss-Jordan elimination; A must be nonsingular.
RationalMatrix solve(RationalMatrix a, RationalMatrix b) {
  const std::size_t n = a.size();
  const std::size_t cols = n == 0 ? 0 : b.front().size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) throw Error("singular linear system");
    std::swap(a[pivot], a[c]);
    std::swap(b[pivot], b[c]);
    Rational inv = 1 / a[c][c];
    for (auto& v : a[c]) v *= inv;
    for (auto& v : b[c]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      for (std::size_t k = 0; k < cols; ++k) b[r][k] -= f * b[c][k];
    }
  }
  return b;
}

// Tarjan's SCC, iterative. Returns component id per vertex.
std::vector<std::size_t> strongly_connected(const std::vector<std::vector<State>>& adj, std::size_t& count) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> index(n, SIZE_MAX), low(n, 0), comp(n, SIZE_MAX);
  std::vector<State> stack;
  std::vector<std::uint8_t> on_stack(n, 0);
  std::size_t next_index = 0;
  count = 0;
  for (State root = 0; root < n; ++root) {
    if (index[root] != SIZE_MAX) continue;
    std::vector<std::pair<State, std::size_t>> call{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, i] = call.back();
      if (i < adj[v].size()) {
        State w = adj[v][i++];
        if (index[w] == SIZE_MAX) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      State done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        State w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = count;
        } while (w != done);
        ++count;
      }
    }
  }
  return comp;
}

std::uint64_t class_period(const std::vector<State>& cls, const std::vector<std::vector<State>>& adj,
                           const std::vector<std::size_t>& comp) {
  std::vector<std::int64_t> level(adj.size(), -1);
  level[cls.front()] = 0;
  std::vector<State> queue{cls.front()};
  std::uint64_t g = 0;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    State u = queue[h];
    for (State v : adj[u]) {
      if (comp[v] != comp[u]) continue;
      if (level[v] < 0) {
        level[v] = level[u] + 1;
        queue.push_back(v);
      } else {
        auto diff = level[u] + 1 - level[v];
        g = std::gcd(g, static_cast<std::uint64_t>(diff < 0 ? -diff : diff));
      }
    }
  }
  return g == 0 ? 1 : g;
}

}  // namespace

CountMatrix count_matrix(const Dfa& a) {
  require_arity_one(a, "count_matrix");
  CountMatrix m{a.base(), std::vector<std::vector<std::uint64_t>>(a.num_states(), std::vector<std::uint64_t>(a.num_states(), 0))};
  for (State q = 0; q < a.num_states(); ++q)
    for (State s : a.row(q)) ++m.entries[q][s];
  return m;
}

RationalMatrix stochastic(const CountMatrix& m) {
  RationalMatrix s(m.size(), std::vector<Rational>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) s[i][j] = Rational(m.entries[i][j], m.base);
  return s;
}

RationalMatrix multiply(const RationalMatrix& x, const RationalMatrix& y) {
  const std::size_t n = x.size(), inner = y.size(), cols = inner == 0 ? 0 : y.front().size();
  RationalMatrix out(n, std::vector<Rational>(cols));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (x[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += x[i][k] * y[k][j];
    }
  return out;
}

LimitMatrix limit_matrix(const CountMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    auto sum = std::accumulate(m.entries[i].begin(), m.entries[i].end(), std::uint64_t{0});
    if (sum != m.base) throw Error("count matrix row " + std::to_string(i) + " does not sum to the base");
  }
  const RationalMatrix s = stochastic(m);
  std::vector<std::vector<State>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m.entries[i][j]) adj[i].push_back(static_cast<State>(j));

  std::size_t comps = 0;
  auto comp = strongly_connected(adj, comps);
  std::vector<std::uint8_t> terminal(comps, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (State j : adj[i])
      if (comp[j] != comp[i]) terminal[comp[i]] = 0;

  LimitMatrix out;
  std::vector<std::size_t> class_of(n, SIZE_MAX);
  {
    std::vector<std::size_t> slot(comps, SIZE_MAX);
    for (std::size_t i = 0; i < n; ++i) {
      if (!terminal[comp[i]]) continue;
      if (slot[comp[i]] == SIZE_MAX) {
        slot[comp[i]] = out.recurrent_classes.size();
        out.recurrent_classes.emplace_back();
      }
      class_of[i] = slot[comp[i]];
      out.recurrent_classes[class_of[i]].push_back(static_cast<State>(i));
    }
  }

  // Stationary distribution of each class: pi (S_C - I) = 0, sum pi = 1.
  std::vector<Rational> pi(n);
  for (const auto& cls : out.recurrent_classes) {
    const std::size_t c = cls.size();
    RationalMatrix a(c, std::vector<Rational>(c)), b(c, std::vector<Rational>(1));
    for (std::size_t r = 0; r + 1 < c; ++r)
      for (std::size_t col = 0; col < c; ++col) a[r][col] = s[cls[col]][cls[r]] - (r == col ? 1 : 0);
    for (std::size_t col = 0; col < c; ++col) a[c - 1][col] = 1;
    b[c - 1][0] = 1;
    auto x = solve(std::move(a), std::move(b));
    for (std::size_t col = 0; col < c; ++col) pi[cls[col]] = x[col][0];
    out.periods.push_back(class_period(cls, adj, comp));
  }
  out.aperiodic = std::all_of(out.periods.begin(), out.periods.end(), [](std::uint64_t p) { return p == 1; });
  out.rank_one = out.recurrent_classes.size() == 1;

  // Absorption probabilities: (I - S_TT) H = S_TC 1.
  std::vector<State> transient;
  std::vector<std::size_t> tpos(n, SIZE_MAX);
  for (std::size_t i = 0; i < n; ++i)
    if (class_of[i] == SIZE_MAX) {
      tpos[i] = transient.size();
      transient.push_back(static_cast<State>(i));
    }
  const std::size_t t = transient.size(), classes = out.recurrent_classes.size();
  RationalMatrix absorb(t, std::vector<Rational>(classes));
  if (t > 0) {
    RationalMatrix a(t, std::vector<Rational>(t)), b(t, std::vector<Rational>(classes));
    for (std::size_t r = 0; r < t; ++r) {
      for (std::size_t col = 0; col < t; ++col) a[r][col] = (r == col ? 1 : 0) - s[transient[r]][transient[col]];
      for (std::size_t j = 0; j < n; ++j)
        if (class_of[j] != SIZE_MAX) b[r][class_of[j]] += s[transient[r]][j];
    }
    absorb = solve(std::move(a), std::move(b));
  }

  out.limit.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t q = 0; q < n; ++q) {
      if (class_of[q] == SIZE_MAX) continue;
      Rational reach = class_of[i] == SIZE_MAX ? absorb[tpos[i]][class_of[q]]
                                               : Rational(class_of[i] == class_of[q] ? 1 : 0);
      out.limit[i][q] = reach * pi[q];
    }
  return out;
}

std::optional<std::uint64_t> least_omitted(const Dfa& a, std::uint64_t bound) {
  require_arity_one(a, "least_omitted");
  for (std::uint64_t n = 1; n <= bound; ++n)
    if (!run(a, {n})) return n;
  return std::nullopt;
}

DensityReport density(const Dfa& a, std::uint64_t omitted_bound) {
  require_arity_one(a, "density");
  auto lim = limit_matrix(count_matrix(a));
  DensityReport r;
  r.stationary_row = lim.limit[a.start()];
  r.density = 0;
  for (State q = 0; q < a.num_states(); ++q)
    if (a.accepting(q)) r.density += r.stationary_row[q];
  // Only recurrent classes reachable from the start matter.
  std::vector<std::uint8_t> reach(a.num_states(), 0);
  std::vector<State> queue{a.start()};
  reach[a.start()] = 1;
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (State s : a.row(queue[h]))
      if (!reach[s]) {
        reach[s] = 1;
        queue.push_back(s);
      }
  r.natural_density_exists = true;
  std::size_t reachable_classes = 0;
  for (std::size_t c = 0; c < lim.recurrent_classes.size(); ++c) {
    if (!reach[lim.recurrent_classes[c].front()]) continue;
    ++reachable_classes;
    if (lim.periods[c] != 1) r.natural_density_exists = false;
  }
  r.rank_one = reachable_classes == 1;
  r.least_omitted = least_omitted(a, omitted_bound);
  r.complement_infinite = is_infinite(complement(a));
  return r;
}

MassSplit accepting_mass_split(const Dfa& a) {
  require_arity_one(a, "accepting_mass_split");
  auto lim = limit_matrix(count_matrix(a));
  MassSplit split;
  for (State q = 0; q < a.num_states(); ++q)
    (a.accepting(q) ? split.accepting : split.rejecting).push_back(lim.limit[a.start()][q]);
  std::sort(split.accepting.rbegin(), split.accepting.rend());
  std::sort(split.rejecting.rbegin(), split.rejecting.rend());
  return split;
}

std::uint64_t accepted_below_power(const Dfa& a, unsigned digits) {
  require_arity_one(a, "accepted_below_power");
  std::vector<std::uint64_t> v(a.num_states(), 0), next(a.num_states());
  v[a.start()] = 1;
  for (unsigned step = 0; step < digits; ++step) {
    std::fill(next.begin(), next.end(), 0);
    for (State q = 0; q < a.num_states(); ++q)
      if (v[q])
        for (State s : a.row(q)) next[s] += v[q];
    v.swap(next);
  }
  std::uint64_t total = 0;
  for (State q = 0; q < a.num_states(); ++q)
    if (a.accepting(q)) total += v[q];
  return total;
}

std::string to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_text(const DensityReport& r) {
  std::ostringstream out;
  out << "density: " << to_string(r.density) << '\n';
  out << "natural density exists: " << (r.natural_density_exists ? "yes" : "no") << '\n';
  out << "single recurrent class: " << (r.rank_one ? "yes" : "no") << '\n';
  out << "stationary row:";
  for (const auto& m : r.stationary_row) out << ' ' << to_string(m);
  out << '\n';
  out << "least omitted: " << (r.least_omitted ? std::to_string(*r.least_omitted) : std::string("none")) << '\n';
  out << "complement infinite: " << (r.complement_infinite ? "yes" : "no") << '\n';
  return out.str();
}

}  // namespace autoseq
