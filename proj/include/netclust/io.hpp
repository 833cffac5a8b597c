#pragma once

#include <iosfwd>
#include <string>

#include "netclust/network.hpp"

namespace netclust {

// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);
// Fixed significant-digit rendering for CLI output.
std::string format_sig(double v, int digits = 9);

std::string read_file(const std::string& path);         // throws IoError
void write_file(const std::string& path, const std::string& content);

// Raw parse result of the CSV table layout, before any validation.
struct LabeledGrid {
  std::vector<std::string> labels;
  std::vector<std::vector<double>> grid;
};

// Network CSV: header row of labels, then one row per node of
// label,entry,entry,... with entry (i,j) = A(i,j).
LabeledGrid read_csv_grid(const std::string& text);
Network read_network_csv(const std::string& text);
std::string write_network_csv(const Network& n);

// Edge list: lines "src,dst,weight". Every ordered pair of distinct nodes
// must appear exactly once; self-pairs are rejected.
Network read_edge_list(const std::string& text);

// Dendrogram JSON: {"labels": [...], "merges": [{"resolution": r,
// "partition": [[label,...],...]}, ...]}.
std::string dendrogram_to_json(const Dendrogram& d);
Dendrogram dendrogram_from_json(const std::string& text);

// Newick tree with merge resolutions as node heights (branch length =
// parent height - child height).
std::string dendrogram_to_newick(const Dendrogram& d);

}  // namespace netclust
