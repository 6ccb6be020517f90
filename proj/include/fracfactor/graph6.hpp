#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <string_view>

#include "fracfactor/graph.hpp"

namespace fracfactor {

// graph6 encoding restricted to the single-byte size header (1 <= n <= 62).

class Graph6Error : public std::runtime_error {
 public:
  explicit Graph6Error(const std::string& what, long line = 0);
  long line() const { return line_; }

 private:
  long line_;
};

Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Streams graphs from a graph6 file, one per line. Blank lines and the
/// optional ">>graph6<<" prefix are skipped.
class Graph6Reader {
 public:
  explicit Graph6Reader(const std::string& path);

  std::optional<Graph> next();
  long line_number() const { return line_; }

 private:
  std::ifstream in_;
  std::string path_;
  long line_ = 0;
};

std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace fracfactor
