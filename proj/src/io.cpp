#include "netclust/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace netclust {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string format_sig(double v, int digits) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::general, digits);
  return std::string(buf, ptr);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open '" + path + "' for reading");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  }
  out << content;
  if (!out) {
    throw Error(ErrorCode::IoError, "write to '" + path + "' failed");
  }
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

std::string trimmed(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

double parse_number(const std::string& cell, std::size_t lineno) {
  const std::string t = trimmed(cell);
  const char* begin = t.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(lineno) + ": '" + t + "' is not a number");
  }
  return v;
}

}  // namespace

LabeledGrid read_csv_grid(const std::string& text) {
  auto lines = split_lines(text);
  while (!lines.empty() && trimmed(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) {
    throw Error(ErrorCode::ParseError, "empty matrix file");
  }
  LabeledGrid out;
  for (const auto& cell : split_csv(lines[0])) {
    const std::string l = trimmed(cell);
    if (!l.empty()) out.labels.push_back(l);
  }
  const std::size_t n = out.labels.size();
  if (lines.size() != n + 1) {
    throw Error(ErrorCode::ParseError, "expected " + std::to_string(n) +
                                           " data rows, found " +
                                           std::to_string(lines.size() - 1));
  }
  out.grid.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto cells = split_csv(lines[i + 1]);
    if (cells.size() != n + 1) {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(i + 2) + ": expected " +
                      std::to_string(n + 1) + " cells, found " +
                      std::to_string(cells.size()));
    }
    if (trimmed(cells[0]) != out.labels[i]) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(i + 2) +
                                             ": row label '" + trimmed(cells[0]) +
                                             "' does not match header order");
    }
    for (std::size_t j = 0; j < n; ++j)
      out.grid[i].push_back(parse_number(cells[j + 1], i + 2));
  }
  return out;
}

Network read_network_csv(const std::string& text) {
  LabeledGrid raw = read_csv_grid(text);
  return validate_network(std::move(raw.labels), raw.grid);
}

std::string write_network_csv(const Network& n) {
  std::ostringstream out;
  for (std::size_t j = 0; j < n.size(); ++j) {
    if (j) out << ',';
    out << n.labels()[j];
  }
  out << '\n';
  for (std::size_t i = 0; i < n.size(); ++i) {
    out << n.labels()[i];
    for (std::size_t j = 0; j < n.size(); ++j) out << ',' << format_double(n(i, j));
    out << '\n';
  }
  return out.str();
}

Network read_edge_list(const std::string& text) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, std::size_t> index;
  auto intern = [&](const std::string& l) {
    auto [it, fresh] = index.try_emplace(l, labels.size());
    if (fresh) labels.push_back(l);
    return it->second;
  };
  struct Edge { std::size_t src, dst; double w; };
  std::vector<Edge> edges;
  auto lines = split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    if (trimmed(lines[ln]).empty()) continue;
    auto cells = split_csv(lines[ln]);
    if (cells.size() != 3) {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(ln + 1) + ": expected src,dst,weight");
    }
    const std::string src = trimmed(cells[0]), dst = trimmed(cells[1]);
    if (src == dst) {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(ln + 1) + ": self-pair '" + src + "'");
    }
    edges.push_back({intern(src), intern(dst), parse_number(cells[2], ln + 1)});
  }
  const std::size_t n = labels.size();
  if (n == 0) {
    throw Error(ErrorCode::ParseError, "empty edge list");
  }
  std::vector<std::vector<double>> grid(n, std::vector<double>(n, 0.0));
  std::vector<bool> seen(n * n, false);
  for (const auto& e : edges) {
    if (seen[e.src * n + e.dst]) {
      throw Error(ErrorCode::ParseError, "duplicate pair " + labels[e.src] + "," +
                                             labels[e.dst]);
    }
    seen[e.src * n + e.dst] = true;
    grid[e.src][e.dst] = e.w;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && !seen[i * n + j]) {
        throw Error(ErrorCode::ParseError,
                    "missing pair " + labels[i] + "," + labels[j]);
      }
    }
  }
  return validate_network(labels, grid);
}

std::string dendrogram_to_json(const Dendrogram& d) {
  nlohmann::json j;
  j["labels"] = d.labels();
  j["merges"] = nlohmann::json::array();
  for (const auto& ev : d.merges()) {
    nlohmann::json e;
    e["resolution"] = ev.resolution;
    e["partition"] = ev.partition.blocks;
    j["merges"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

Dendrogram dendrogram_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  try {
    std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
    std::vector<MergeEvent> merges;
    for (const auto& e : j.at("merges")) {
      MergeEvent ev;
      ev.resolution = e.at("resolution").get<double>();
      ev.partition.blocks = e.at("partition").get<std::vector<std::vector<std::string>>>();
      merges.push_back(std::move(ev));
    }
    return Dendrogram(std::move(labels), std::move(merges));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

namespace {

std::string newick_name(const std::string& label) {
  if (label.find_first_of(" \t(),:;'[]") == std::string::npos) return label;
  std::string quoted = "'";
  for (char c : label) {
    quoted += c;
    if (c == '\'') quoted += '\'';
  }
  return quoted + "'";
}

struct NewickNode {
  std::string label;             // leaves only
  double height = 0.0;
  std::vector<std::size_t> children;
  std::size_t min_leaf = 0;      // for deterministic child ordering
};

void render(const std::vector<NewickNode>& nodes, std::size_t id, std::ostream& out,
            double parent_height) {
  const auto& node = nodes[id];
  if (node.children.empty()) {
    out << newick_name(node.label);
  } else {
    out << '(';
    for (std::size_t c = 0; c < node.children.size(); ++c) {
      if (c) out << ',';
      render(nodes, node.children[c], out, node.height);
    }
    out << ')';
  }
  out << ':' << format_double(parent_height - node.height);
}

}  // namespace

std::string dendrogram_to_newick(const Dendrogram& d) {
  const auto& labels = d.labels();
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = i;

  std::vector<NewickNode> nodes;
  std::vector<std::size_t> cluster_of(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    nodes.push_back({labels[i], 0.0, {}, i});
    cluster_of[i] = i;
  }
  for (const auto& ev : d.merges()) {
    for (const auto& block : ev.partition.blocks) {
      std::vector<std::size_t> members;
      std::vector<std::size_t> parts;
      for (const auto& l : block) members.push_back(index.at(l));
      std::sort(members.begin(), members.end());
      for (std::size_t m : members) {
        if (std::find(parts.begin(), parts.end(), cluster_of[m]) == parts.end())
          parts.push_back(cluster_of[m]);
      }
      if (parts.size() < 2) continue;
      std::sort(parts.begin(), parts.end(),
                [&](std::size_t a, std::size_t b) { return nodes[a].min_leaf < nodes[b].min_leaf; });
      NewickNode merged;
      merged.height = ev.resolution;
      merged.children = parts;
      merged.min_leaf = nodes[parts[0]].min_leaf;
      nodes.push_back(std::move(merged));
      for (std::size_t m : members) cluster_of[m] = nodes.size() - 1;
    }
  }
  const std::size_t root = cluster_of[0];
  std::ostringstream out;
  if (nodes[root].children.empty()) {
    out << newick_name(nodes[root].label) << ";\n";
    return out.str();
  }
  out << '(';
  for (std::size_t c = 0; c < nodes[root].children.size(); ++c) {
    if (c) out << ',';
    render(nodes, nodes[root].children[c], out, nodes[root].height);
  }
  out << ");\n";
  return out.str();
}

}  // namespace netclust
