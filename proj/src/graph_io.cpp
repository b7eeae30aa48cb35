#include "dyncol/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace dyncol {

namespace {

// Splits text into numbered, comment-stripped, non-blank lines.
struct Line {
  std::size_t number;
  std::vector<std::string_view> fields;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Line parsed{number, {}};
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
      std::size_t end = pos;
      while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
      if (end > pos) parsed.fields.push_back(line.substr(pos, end - pos));
      pos = end;
    }
    if (!parsed.fields.empty()) out.push_back(std::move(parsed));
  }
  return out;
}

long long to_integer(std::string_view field, std::size_t line) {
  long long value = 0;
  const auto* first = field.data();
  const auto* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError("expected an integer, got '" + std::string(field) + "'", line);
  }
  return value;
}

void expect_fields(const Line& line, std::size_t count, const char* shape) {
  if (line.fields.size() != count) throw ParseError(std::string("expected \"") + shape + "\"", line.number);
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError("missing header \"n m\"", 1);
  expect_fields(lines[0], 2, "n m");
  const long long n = to_integer(lines[0].fields[0], lines[0].number);
  const long long m = to_integer(lines[0].fields[1], lines[0].number);
  if (n < 0 || m < 0) throw ParseError("negative count in header", lines[0].number);
  if (static_cast<long long>(lines.size()) - 1 != m) {
    const std::size_t where = lines.size() > static_cast<std::size_t>(m) + 1 ? lines[m + 1].number
                                                                             : lines.back().number;
    throw ParseError("header declares " + std::to_string(m) + " edges but " +
                         std::to_string(lines.size() - 1) + " edge lines follow",
                     where);
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::vector<std::size_t> line_of(static_cast<std::size_t>(m));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    expect_fields(lines[i], 2, "u v");
    const long long u = to_integer(lines[i].fields[0], lines[i].number);
    const long long v = to_integer(lines[i].fields[1], lines[i].number);
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("vertex id out of range", lines[i].number);
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    line_of[i - 1] = lines[i].number;
  }
  try {
    return Graph::from_edges(static_cast<std::size_t>(n), edges);
  } catch (const GraphError& err) {
    std::size_t where = lines[0].number;
    if (err.edge()) {
      // Report the last line carrying the offending pair.
      for (std::size_t i = 0; i < edges.size(); ++i) {
        if (canonical(edges[i]) == canonical(*err.edge())) where = line_of[i];
      }
    }
    throw ParseError(err.what(), where);
  }
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

VertexColoring parse_coloring(std::string_view text, std::size_t n, int k) {
  VertexColoring c{k, std::vector<int>(n, 0)};
  std::vector<char> given(n, 0);
  for (const Line& line : tokenize(text)) {
    expect_fields(line, 2, "vertex color");
    const long long v = to_integer(line.fields[0], line.number);
    const long long color = to_integer(line.fields[1], line.number);
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw ParseError("vertex id out of range", line.number);
    if (given[v]) throw ParseError("vertex listed twice", line.number);
    if (color < 1 || color > k) throw ColoringError("color " + std::to_string(color) + " outside 1.." + std::to_string(k));
    given[v] = 1;
    c.colors[v] = static_cast<int>(color);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!given[v]) throw ColoringError("vertex " + std::to_string(v) + " has no color");
  }
  return c;
}

std::string format_coloring(const VertexColoring& c) {
  std::ostringstream out;
  for (std::size_t v = 0; v < c.colors.size(); ++v) out << v << ' ' << c.colors[v] << '\n';
  return out.str();
}

EdgeColoring parse_edge_coloring(std::string_view text, const Graph& g, int k) {
  const auto edges = g.edges();
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    index[(static_cast<std::uint64_t>(edges[i].u) << 32) | static_cast<std::uint32_t>(edges[i].v)] = i;
  }
  EdgeColoring c{k, std::vector<int>(edges.size(), 0)};
  std::vector<char> given(edges.size(), 0);
  for (const Line& line : tokenize(text)) {
    expect_fields(line, 3, "u v color");
    const Edge e = canonical({static_cast<Vertex>(to_integer(line.fields[0], line.number)),
                              static_cast<Vertex>(to_integer(line.fields[1], line.number))});
    const auto it = index.find((static_cast<std::uint64_t>(e.u) << 32) | static_cast<std::uint32_t>(e.v));
    if (it == index.end()) throw ParseError("not an edge of the graph", line.number);
    if (given[it->second]) throw ParseError("edge listed twice", line.number);
    given[it->second] = 1;
    c.colors[it->second] = static_cast<int>(to_integer(line.fields[2], line.number));
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!given[i]) {
      throw ColoringError("edge (" + std::to_string(edges[i].u) + "," + std::to_string(edges[i].v) +
                          ") has no color");
    }
  }
  return c;
}

std::string format_edge_coloring(const Graph& g, const EdgeColoring& c) {
  std::ostringstream out;
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) out << edges[i].u << ' ' << edges[i].v << ' ' << c.colors[i] << '\n';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
}

}  // namespace dyncol
