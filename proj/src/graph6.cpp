#include "egstab/graph6.hpp"

#include <fstream>
#include <istream>
#include <ostream>

namespace egstab {

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw GraphError("graph6 short form holds at most 62 vertices");
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.empty()) throw GraphError("empty graph6 record");
  const int n = static_cast<unsigned char>(text[0]) - 63;
  if (n < 0 || n > 62) throw GraphError("graph6 size byte out of range (long form unsupported)");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t groups = (bits + 5) / 6;
  if (text.size() != 1 + groups) throw GraphError("graph6 record has the wrong length");
  std::vector<int> values(groups);
  for (std::size_t i = 0; i < groups; ++i) {
    int c = static_cast<unsigned char>(text[1 + i]);
    if (c < 63 || c > 126) throw GraphError("graph6 byte out of range");
    values[i] = c - 63;
  }
  GraphBuilder b(n);
  std::size_t pos = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++pos) {
      if ((values[pos / 6] >> (5 - pos % 6)) & 1) b.add_edge(i, j);
    }
  }
  if (groups > 0) {
    int pad = static_cast<int>(groups * 6 - bits);
    if (values.back() & ((1 << pad) - 1)) throw GraphError("graph6 padding bits are not zero");
  }
  return b.build();
}

std::vector<Graph> read_graph6(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
    if (line.empty()) continue;
    out.push_back(from_graph6(line));
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph6(in);
}

void write_graph6(std::ostream& out, const std::vector<Graph>& graphs) {
  for (const auto& g : graphs) out << to_graph6(g) << '\n';
}

void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_graph6(out, graphs);
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace egstab
