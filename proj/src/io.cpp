#include "autoseq/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "autoseq/error.hpp"

namespace autoseq {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> words;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.words.push_back(w);
    if (!line.words.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void fail(const Line& line, const std::string& message) {
  throw Error("line " + std::to_string(line.number) + ": " + message);
}

std::uint64_t number(const Line& line, const std::string& word) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
  if (ec != std::errc() || ptr != word.data() + word.size()) fail(line, "expected a number, got '" + word + "'");
  return v;
}

class Reader {
 public:
  explicit Reader(std::string_view text) : lines_(tokenize(text)) {}

  const Line& expect(const std::string& keyword) {
    if (pos_ >= lines_.size()) throw Error("unexpected end of file, expected '" + keyword + "'");
    const Line& line = lines_[pos_++];
    if (line.words.front() != keyword) fail(line, "expected '" + keyword + "'");
    return line;
  }
  std::uint64_t value(const std::string& keyword) {
    const Line& line = expect(keyword);
    if (line.words.size() != 2) fail(line, "'" + keyword + "' takes one value");
    return number(line, line.words[1]);
  }
  bool done() const { return pos_ >= lines_.size(); }
  const Line& take() {
    if (done()) throw Error("unexpected end of file");
    return lines_[pos_++];
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

std::string tuple_label(const TrackAlphabet& alpha, Letter c) {
  if (alpha.arity() == 1) return std::to_string(alpha.digit(c, 0));
  std::string s = "[";
  for (unsigned m = 0; m < alpha.arity(); ++m) {
    if (m) s += ",";
    s += std::to_string(alpha.digit(c, m));
  }
  return s + "]";
}

}  // namespace

std::string save_dfa(const Dfa& a) {
  std::ostringstream out;
  out << "automaton 1\nbase " << a.base() << "\norder " << to_string(a.order()) << "\ntracks";
  for (const auto& t : a.tracks()) out << ' ' << t;
  out << "\nstates " << a.num_states() << "\nstart " << a.start() << "\naccept";
  for (State q = 0; q < a.num_states(); ++q)
    if (a.accepting(q)) out << ' ' << q;
  out << '\n';
  for (State q = 0; q < a.num_states(); ++q) {
    out << q << " ->";
    for (State s : a.row(q)) out << ' ' << s;
    out << '\n';
  }
  return out.str();
}

Dfa load_dfa(std::string_view text) {
  Reader r(text);
  if (r.value("automaton") != 1) throw Error("unsupported automaton format version");
  auto base = static_cast<unsigned>(r.value("base"));
  const Line& order_line = r.expect("order");
  if (order_line.words.size() != 2 || (order_line.words[1] != "lsd" && order_line.words[1] != "msd"))
    fail(order_line, "order must be 'lsd' or 'msd'");
  DigitOrder order = order_line.words[1] == "lsd" ? DigitOrder::Lsd : DigitOrder::Msd;
  const Line& tracks_line = r.expect("tracks");
  std::vector<std::string> tracks(tracks_line.words.begin() + 1, tracks_line.words.end());
  auto n = static_cast<State>(r.value("states"));
  auto start = static_cast<State>(r.value("start"));
  const Line& acc_line = r.expect("accept");
  std::vector<std::uint8_t> acc(n, 0);
  for (std::size_t w = 1; w < acc_line.words.size(); ++w) {
    auto q = number(acc_line, acc_line.words[w]);
    if (q >= n) fail(acc_line, "accepting state out of range");
    acc[q] = 1;
  }
  TrackAlphabet alpha(base, static_cast<unsigned>(tracks.size()));
  std::vector<State> delta(std::size_t{n} * alpha.size());
  std::vector<std::uint8_t> seen(n, 0);
  for (State i = 0; i < n; ++i) {
    const Line& line = r.take();
    if (line.words.size() != alpha.size() + 2 || line.words[1] != "->")
      fail(line, "state line needs '<id> ->' and " + std::to_string(alpha.size()) + " successors");
    auto q = number(line, line.words[0]);
    if (q >= n || seen[q]) fail(line, "bad or repeated state id");
    seen[q] = 1;
    for (Letter c = 0; c < alpha.size(); ++c) delta[q * alpha.size() + c] = static_cast<State>(number(line, line.words[c + 2]));
  }
  if (!r.done()) fail(r.take(), "trailing content");
  return Dfa(base, std::move(tracks), n, start, std::move(acc), std::move(delta), order);
}

std::string save_dfao(const Dfao& a) {
  std::ostringstream out;
  out << "dfao 1\nbase " << a.base() << "\nstates " << a.num_states() << "\nstart " << a.start() << '\n';
  for (State q = 0; q < a.num_states(); ++q) {
    out << q << ' ' << a.output(q) << " ->";
    for (unsigned d = 0; d < a.base(); ++d) out << ' ' << a.next(q, d);
    out << '\n';
  }
  return out.str();
}

Dfao load_dfao(std::string_view text) {
  Reader r(text);
  if (r.value("dfao") != 1) throw Error("unsupported DFAO format version");
  auto base = static_cast<unsigned>(r.value("base"));
  auto n = static_cast<State>(r.value("states"));
  auto start = static_cast<State>(r.value("start"));
  if (base < 2) throw Error("numeration base must be at least 2");
  std::vector<State> delta(std::size_t{n} * base);
  std::vector<Symbol> out(n);
  std::vector<std::uint8_t> seen(n, 0);
  for (State i = 0; i < n; ++i) {
    const Line& line = r.take();
    if (line.words.size() != base + 3 || line.words[2] != "->")
      fail(line, "state line needs '<id> <output> ->' and " + std::to_string(base) + " successors");
    auto q = number(line, line.words[0]);
    if (q >= n || seen[q]) fail(line, "bad or repeated state id");
    seen[q] = 1;
    out[q] = static_cast<Symbol>(number(line, line.words[1]));
    for (unsigned d = 0; d < base; ++d) delta[q * base + d] = static_cast<State>(number(line, line.words[d + 3]));
  }
  if (!r.done()) fail(r.take(), "trailing content");
  return Dfao(base, n, start, std::move(delta), std::move(out));
}

std::string to_dot(const Dfa& a, const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n  rankdir=LR;\n  init [shape=point];\n";
  for (State q = 0; q < a.num_states(); ++q)
    out << "  " << q << " [shape=" << (a.accepting(q) ? "doublecircle" : "circle") << "];\n";
  out << "  init -> " << a.start() << ";\n";
  for (State q = 0; q < a.num_states(); ++q) {
    std::map<State, std::string> labels;
    for (Letter c = 0; c < a.letter_count(); ++c) {
      auto& l = labels[a.next(q, c)];
      if (!l.empty()) l += ", ";
      l += tuple_label(a.alphabet(), c);
    }
    for (const auto& [s, l] : labels) out << "  " << q << " -> " << s << " [label=\"" << l << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const Dfao& a, const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n  rankdir=LR;\n  init [shape=point];\n";
  for (State q = 0; q < a.num_states(); ++q)
    out << "  " << q << " [shape=circle, label=\"" << q << "/" << a.output(q) << "\"];\n";
  out << "  init -> " << a.start() << ";\n";
  for (State q = 0; q < a.num_states(); ++q) {
    std::map<State, std::string> labels;
    for (unsigned d = 0; d < a.base(); ++d) {
      auto& l = labels[a.next(q, d)];
      if (!l.empty()) l += ", ";
      l += std::to_string(d);
    }
    for (const auto& [s, l] : labels) out << "  " << q << " -> " << s << " [label=\"" << l << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

FileKind sniff(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) return FileKind::Unknown;
  const auto& head = lines.front().words.front();
  if (head == "automaton") return FileKind::Automaton;
  if (head == "dfao") return FileKind::Dfao;
  return FileKind::Unknown;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace autoseq
