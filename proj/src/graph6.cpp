#include "fracfactor/graph6.hpp"

namespace fracfactor {

namespace {
constexpr int kBias = 63;
constexpr int kMaxOrder = 62;
constexpr std::string_view kHeader = ">>graph6<<";
}  // namespace

Graph6Error::Graph6Error(const std::string& what, long line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

Graph from_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("empty graph6 string");
  for (char c : text) {
    const int code = static_cast<unsigned char>(c);
    if (code < kBias || code > 126) throw Graph6Error("byte out of graph6 range");
  }
  const int header = static_cast<unsigned char>(text[0]) - kBias;
  if (header > kMaxOrder) throw Graph6Error("graph order above 62 is not supported");
  const int n = header;
  if (n < 1) throw Graph6Error("graph order must be positive");

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t groups = (bits + 5) / 6;
  if (text.size() - 1 < groups) throw Graph6Error("truncated graph6 bit section");
  if (text.size() - 1 > groups) throw Graph6Error("trailing bytes after graph6 bit section");

  std::vector<Edge> edges;
  std::size_t k = 0;
  auto bit = [&](std::size_t index) {
    const int group = static_cast<unsigned char>(text[1 + index / 6]) - kBias;
    return (group >> (5 - index % 6)) & 1;
  };
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k)
      if (bit(k)) edges.emplace_back(i, j);
  for (; k < groups * 6; ++k)
    if (bit(k)) throw Graph6Error("nonzero padding bits");
  return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxOrder) throw Graph6Error("graph order above 62 is not supported");
  std::string out(1, static_cast<char>(n + kBias));
  int group = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kBias));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
  return out;
}

Graph6Reader::Graph6Reader(const std::string& path) : in_(path), path_(path) {
  if (!in_) throw Graph6Error("cannot open " + path);
}

std::optional<Graph> Graph6Reader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    try {
      return from_graph6(line);
    } catch (const Graph6Error& e) {
      throw Graph6Error(std::string(e.what()) + " in " + path_, line_);
    }
  }
  return std::nullopt;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  Graph6Reader reader(path);
  std::vector<Graph> out;
  while (auto g = reader.next()) out.push_back(std::move(*g));
  return out;
}

}  // namespace fracfactor
