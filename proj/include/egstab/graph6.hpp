#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "egstab/graph.hpp"

namespace egstab {

/// graph6 short form (n <= 62).
std::string to_graph6(const Graph& g);
/// Throws GraphError on a malformed record or nonzero padding bits.
Graph from_graph6(std::string_view text);

/// Newline-separated records; blank lines and a ">>graph6<<" header are skipped.
std::vector<Graph> read_graph6(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);
void write_graph6(std::ostream& out, const std::vector<Graph>& graphs);
void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs);

}  // namespace egstab
