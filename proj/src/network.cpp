#include "netclust/network.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace netclust {

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  Matrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw Error(ErrorCode::ShapeMismatch,
                  "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                      " entries, expected " + std::to_string(rows.size()));
    }
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Matrix symmetric_max(const Matrix& a) {
  Matrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out(i, j) = std::max(a(i, j), a(j, i));
  return out;
}

Matrix entrywise_min(const Matrix& a, const Matrix& b) {
  Matrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out(i, j) = std::min(a(i, j), b(i, j));
  return out;
}

Matrix scaled(const Matrix& a, double factor) {
  Matrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out(i, j) = factor * a(i, j);
  return out;
}

namespace {

void check_labels(const std::vector<std::string>& labels, std::size_t n) {
  if (labels.size() != n) {
    throw Error(ErrorCode::ShapeMismatch,
                std::to_string(labels.size()) + " labels for a " + std::to_string(n) + "x" +
                    std::to_string(n) + " grid");
  }
  if (labels.empty()) {
    throw Error(ErrorCode::ShapeMismatch, "a network needs at least one node");
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw Error(ErrorCode::DuplicateLabel, "label '" + l + "' appears twice");
    }
  }
}

void check_dissimilarities(const std::vector<std::string>& labels, const Matrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      const double v = m(i, j);
      if (!std::isfinite(v)) {
        throw Error(ErrorCode::NonFinite,
                    "entry (" + labels[i] + "," + labels[j] + ") is not finite");
      }
      if (i == j && v != 0.0) {
        throw Error(ErrorCode::NonZeroDiagonal, "diagonal entry for '" + labels[i] +
                                                    "' is " + std::to_string(v));
      }
      if (i != j && v <= 0.0) {
        throw Error(ErrorCode::NonPositiveOffDiagonal,
                    "entry (" + labels[i] + "," + labels[j] + ") must be positive, got " +
                        std::to_string(v));
      }
    }
  }
}

}  // namespace

Network::Network(std::vector<std::string> labels, Matrix dissim)
    : labels_(std::move(labels)), dissim_(std::move(dissim)) {
  check_labels(labels_, dissim_.size());
  check_dissimilarities(labels_, dissim_);
}

std::size_t Network::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw Error(ErrorCode::UnknownLabel, "no node named '" + label + "'");
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

Ultrametric::Ultrametric(std::vector<std::string> labels, Matrix dist, double rel_tol)
    : labels_(std::move(labels)), dist_(std::move(dist)) {
  check_labels(labels_, dist_.size());
  check_dissimilarities(labels_, dist_);
  const std::size_t n = dist_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dist_(i, j) != dist_(j, i)) {
        throw Error(ErrorCode::NotSymmetric,
                    "entries (" + labels_[i] + "," + labels_[j] + ") differ by direction");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const double bound = std::max(dist_(i, k), dist_(k, j));
        if (dist_(i, j) > bound * (1.0 + rel_tol)) {
          throw Error(ErrorCode::NotUltrametric,
                      "strong triangle inequality fails on (" + labels_[i] + "," +
                          labels_[j] + "," + labels_[k] + ")");
        }
      }
    }
  }
}

double Ultrametric::max_value() const {
  double m = 0.0;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) m = std::max(m, dist_(i, j));
  return m;
}

namespace {

// Blocks listed by smallest member index, members in label order.
Partition canonical_partition(const std::vector<std::string>& labels,
                              const std::vector<std::size_t>& component) {
  std::map<std::size_t, std::vector<std::string>> by_root;
  for (std::size_t i = 0; i < labels.size(); ++i) by_root[component[i]].push_back(labels[i]);
  Partition p;
  for (auto& [root, block] : by_root) p.blocks.push_back(std::move(block));
  return p;
}

void check_partition(const std::vector<std::string>& labels, const Partition& p) {
  std::set<std::string> covered;
  std::size_t total = 0;
  for (const auto& block : p.blocks) {
    if (block.empty()) {
      throw Error(ErrorCode::InvalidDendrogram, "empty partition block");
    }
    total += block.size();
    covered.insert(block.begin(), block.end());
  }
  if (total != labels.size() || covered != std::set<std::string>(labels.begin(), labels.end())) {
    throw Error(ErrorCode::InvalidDendrogram,
                "partition blocks must be disjoint and cover all labels");
  }
}

// True when every block of `fine` is contained in some block of `coarse`.
bool nested_in(const Partition& fine, const Partition& coarse) {
  for (const auto& block : fine.blocks) {
    bool found = false;
    for (const auto& big : coarse.blocks) {
      std::set<std::string> bigset(big.begin(), big.end());
      if (std::all_of(block.begin(), block.end(),
                      [&](const std::string& l) { return bigset.count(l) > 0; })) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

Dendrogram::Dendrogram(std::vector<std::string> labels, std::vector<MergeEvent> merges)
    : labels_(std::move(labels)), merges_(std::move(merges)) {
  check_labels(labels_, labels_.size());
  double prev = 0.0;
  for (std::size_t e = 0; e < merges_.size(); ++e) {
    const auto& ev = merges_[e];
    if (!(ev.resolution > prev) || !std::isfinite(ev.resolution)) {
      throw Error(ErrorCode::InvalidDendrogram, "resolutions must be strictly increasing");
    }
    prev = ev.resolution;
    check_partition(labels_, ev.partition);
    if (e > 0) {
      if (!nested_in(merges_[e - 1].partition, ev.partition) ||
          ev.partition.blocks.size() >= merges_[e - 1].partition.blocks.size()) {
        throw Error(ErrorCode::InvalidDendrogram, "partitions must strictly coarsen");
      }
    } else if (ev.partition.blocks.size() >= labels_.size() && labels_.size() > 1) {
      throw Error(ErrorCode::InvalidDendrogram, "first event must merge something");
    }
  }
  const bool merged_to_one =
      labels_.size() == 1 ? merges_.empty() || merges_.back().partition.blocks.size() == 1
                          : !merges_.empty() && merges_.back().partition.blocks.size() == 1;
  if (!merged_to_one) {
    throw Error(ErrorCode::InvalidDendrogram, "last event must contain the single full block");
  }
}

Network validate_network(std::vector<std::string> labels,
                         const std::vector<std::vector<double>>& grid) {
  Matrix m = Matrix::from_rows(grid);
  if (labels.size() != grid.size()) {
    throw Error(ErrorCode::ShapeMismatch,
                std::to_string(labels.size()) + " labels for " + std::to_string(grid.size()) +
                    " rows");
  }
  return Network(std::move(labels), std::move(m));
}

Network scale_network(const Network& n, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw Error(ErrorCode::NonPositiveScale, "scale factor must be a positive real");
  }
  return Network(n.labels(), scaled(n.dissim(), alpha));
}

Network restrict_network(const Network& n, const std::vector<std::string>& subset) {
  if (subset.empty()) {
    throw Error(ErrorCode::EmptySubset, "restriction needs at least one node");
  }
  for (const auto& l : subset) n.index_of(l);  // throws UnknownLabel
  std::vector<std::size_t> keep;
  std::unordered_set<std::string> wanted(subset.begin(), subset.end());
  // label order inherited from n
  for (std::size_t i = 0; i < n.size(); ++i)
    if (wanted.count(n.labels()[i])) keep.push_back(i);
  std::vector<std::string> labels;
  Matrix m(keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a) {
    labels.push_back(n.labels()[keep[a]]);
    for (std::size_t b = 0; b < keep.size(); ++b) m(a, b) = n(keep[a], keep[b]);
  }
  return Network(std::move(labels), std::move(m));
}

double separation(const Network& n) {
  if (n.size() < 2) {
    throw Error(ErrorCode::SingletonNetwork, "separation needs at least two nodes");
  }
  double s = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n.size(); ++i)
    for (std::size_t j = 0; j < n.size(); ++j)
      if (i != j) s = std::min(s, n(i, j));
  return s;
}

Partition partition_at(const Ultrametric& u, double delta) {
  const std::size_t n = u.size();
  // union-find over the threshold graph u <= delta
  std::vector<std::size_t> root(n);
  std::iota(root.begin(), root.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (u(i, j) <= delta) {
        auto a = find(i), b = find(j);
        if (a != b) root[std::max(a, b)] = std::min(a, b);
      }
  std::vector<std::size_t> comp(n);
  for (std::size_t i = 0; i < n; ++i) comp[i] = find(i);
  return canonical_partition(u.labels(), comp);
}

Dendrogram dendrogram_from_ultrametric(const Ultrametric& u) {
  std::set<double> values;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j) values.insert(u(i, j));
  std::vector<MergeEvent> merges;
  for (double v : values) merges.push_back({v, partition_at(u, v)});
  return Dendrogram(u.labels(), std::move(merges));
}

Ultrametric ultrametric_from_dendrogram(const Dendrogram& d) {
  const auto& labels = d.labels();
  const std::size_t n = labels.size();
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[labels[i]] = i;
  Matrix m(n, 0.0);
  std::vector<bool> done(n * n, false);
  for (const auto& ev : d.merges()) {
    for (const auto& block : ev.partition.blocks) {
      for (const auto& a : block) {
        for (const auto& b : block) {
          const std::size_t i = index[a], j = index[b];
          if (i != j && !done[i * n + j]) {
            m(i, j) = ev.resolution;
            done[i * n + j] = true;
          }
        }
      }
    }
  }
  return Ultrametric(labels, std::move(m));
}

}  // namespace netclust
