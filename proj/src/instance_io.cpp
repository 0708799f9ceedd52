#include "mis/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace mis::io {

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view tok, int line) {
  long long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  return v;
}

template <class F>
void for_each_line(std::string_view text, F&& f) {
  int line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line;
    f(text.substr(pos, end - pos), line);
    pos = end + 1;
  }
}

struct EdgeSink {
  std::set<Edge> edges;
  void add(long long u, long long v, long long n, int line) {
    if (u < 1 || u > n || v < 1 || v > n)
      throw ParseError(line, "vertex id out of range [1, " + std::to_string(n) + "]");
    if (u == v) throw ParseError(line, "self-loop on vertex " + std::to_string(u));
    Vertex a = static_cast<Vertex>(std::min(u, v) - 1), b = static_cast<Vertex>(std::max(u, v) - 1);
    edges.emplace(a, b);
  }
};

Graph parse_dimacs(std::string_view text) {
  long long n = -1, m = -1;
  int header_line = 0;
  long long edge_lines = 0;
  EdgeSink sink;
  for_each_line(text, [&](std::string_view raw, int line) {
    auto tok = split_ws(raw);
    if (tok.empty() || tok[0] == "c" || tok[0].front() == '#') return;
    if (tok[0] == "p") {
      if (n >= 0) throw ParseError(line, "second problem line");
      if (tok.size() != 4) throw ParseError(line, "malformed header, expected 'p edge n m'");
      n = to_int(tok[2], line);
      m = to_int(tok[3], line);
      if (n < 0 || m < 0) throw ParseError(line, "negative size in header");
      header_line = line;
      return;
    }
    if (tok[0] == "e") {
      if (n < 0) throw ParseError(line, "edge before the problem line");
      if (tok.size() != 3) throw ParseError(line, "malformed edge line, expected 'e u v'");
      sink.add(to_int(tok[1], line), to_int(tok[2], line), n, line);
      ++edge_lines;
      return;
    }
    throw ParseError(line, "unknown line type '" + std::string(tok[0]) + "'");
  });
  if (n < 0) throw ParseError(1, "missing problem line");
  if (m != edge_lines && m != static_cast<long long>(sink.edges.size()))
    throw ParseError(header_line, "header declares " + std::to_string(m) + " edges, file has " +
                                      std::to_string(edge_lines));
  Graph g(static_cast<int>(n));
  for (auto [u, v] : sink.edges) g.add_edge(u, v);
  return g;
}

Graph parse_adjacency(std::string_view text) {
  std::vector<std::pair<std::pair<long long, long long>, int>> raw_edges;
  long long n = 0;
  for_each_line(text, [&](std::string_view raw, int line) {
    auto hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (split_ws(raw).empty()) return;
    auto colon = raw.find(':');
    if (colon == std::string_view::npos) throw ParseError(line, "expected 'u: v w ...'");
    auto head = split_ws(raw.substr(0, colon));
    if (head.size() != 1) throw ParseError(line, "expected a single vertex before ':'");
    long long u = to_int(head[0], line);
    if (u < 1) throw ParseError(line, "vertex ids start at 1");
    n = std::max(n, u);
    for (auto tok : split_ws(raw.substr(colon + 1))) {
      long long v = to_int(tok, line);
      if (v < 1) throw ParseError(line, "vertex ids start at 1");
      n = std::max(n, v);
      raw_edges.push_back({{u, v}, line});
    }
  });
  EdgeSink sink;
  for (auto [e, line] : raw_edges) sink.add(e.first, e.second, n, line);
  Graph g(static_cast<int>(n));
  for (auto [u, v] : sink.edges) g.add_edge(u, v);
  return g;
}

}  // namespace

Format detect_format(std::string_view text) {
  Format f = Format::Adjacency;
  bool decided = false;
  for_each_line(text, [&](std::string_view raw, int) {
    if (decided) return;
    auto tok = split_ws(raw);
    if (tok.empty() || tok[0] == "c" || tok[0].front() == '#') return;
    f = tok[0] == "p" || tok[0] == "e" ? Format::Dimacs : Format::Adjacency;
    decided = true;
  });
  return f;
}

Graph parse_instance(std::string_view text, std::optional<Format> format) {
  switch (format.value_or(detect_format(text))) {
    case Format::Dimacs: return parse_dimacs(text);
    case Format::Adjacency: return parse_adjacency(text);
  }
  throw std::logic_error("unknown instance format");
}

Graph read_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

std::string write_dimacs(const Graph& g, std::string_view comment) {
  const auto verts = g.vertices();
  std::unordered_map<Vertex, int> label;
  for (std::size_t i = 0; i < verts.size(); ++i) label.emplace(verts[i], static_cast<int>(i) + 1);
  std::ostringstream os;
  if (!comment.empty()) os << "c " << comment << '\n';
  os << "p edge " << verts.size() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) os << "e " << label.at(u) << ' ' << label.at(v) << '\n';
  return os.str();
}

std::string write_adjacency(const Graph& g) {
  const auto verts = g.vertices();
  std::unordered_map<Vertex, int> label;
  for (std::size_t i = 0; i < verts.size(); ++i) label.emplace(verts[i], static_cast<int>(i) + 1);
  std::ostringstream os;
  for (Vertex v : verts) {
    os << label.at(v) << ':';
    for (Vertex u : g.neighbors(v)) os << ' ' << label.at(u);
    os << '\n';
  }
  return os.str();
}

}  // namespace mis::io
