#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "netclust/error.hpp"

namespace netclust {

// Dense square grid of doubles, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  Matrix transposed() const;
  bool is_symmetric() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

// Entrywise max(a(i,j), a(j,i)); min(a, b); a*x.
Matrix symmetric_max(const Matrix& a);
Matrix entrywise_min(const Matrix& a, const Matrix& b);
Matrix scaled(const Matrix& a, double factor);

// Finite node set with strictly positive off-diagonal directed dissimilarities.
// Immutable; the constructor enforces the invariants.
class Network {
 public:
  Network(std::vector<std::string> labels, Matrix dissim);

  std::size_t size() const { return dissim_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Matrix& dissim() const { return dissim_; }
  double operator()(std::size_t i, std::size_t j) const { return dissim_(i, j); }

  std::size_t index_of(const std::string& label) const;  // throws UnknownLabel

  friend bool operator==(const Network&, const Network&) = default;

 private:
  std::vector<std::string> labels_;
  Matrix dissim_;
};

// Symmetric network satisfying the strong triangle inequality
// u(i,j) <= max(u(i,k), u(k,j)). Validated on construction. Comparisons are
// exact by default; pass rel_tol = 1e-9 only when the entries went through
// division upstream (optimal multiples).
class Ultrametric {
 public:
  Ultrametric(std::vector<std::string> labels, Matrix dist, double rel_tol = 0.0);

  std::size_t size() const { return dist_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Matrix& dist() const { return dist_; }
  double operator()(std::size_t i, std::size_t j) const { return dist_(i, j); }

  Network as_network() const { return Network(labels_, dist_); }
  double max_value() const;  // largest entry (0 for a single node)

  friend bool operator==(const Ultrametric&, const Ultrametric&) = default;

 private:
  std::vector<std::string> labels_;
  Matrix dist_;
};

// Disjoint blocks of labels covering the node set.
struct Partition {
  std::vector<std::vector<std::string>> blocks;

  friend bool operator==(const Partition&, const Partition&) = default;
};

struct MergeEvent {
  double resolution = 0.0;
  Partition partition;

  friend bool operator==(const MergeEvent&, const MergeEvent&) = default;
};

// Nested partitions indexed by resolution: singletons at 0 (implicit), one
// block at the final event. Resolutions strictly increase, partitions
// strictly coarsen.
class Dendrogram {
 public:
  Dendrogram(std::vector<std::string> labels, std::vector<MergeEvent> merges);

  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<MergeEvent>& merges() const { return merges_; }

  friend bool operator==(const Dendrogram&, const Dendrogram&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<MergeEvent> merges_;
};

Network validate_network(std::vector<std::string> labels,
                         const std::vector<std::vector<double>>& grid);

Network scale_network(const Network& n, double alpha);
Network restrict_network(const Network& n, const std::vector<std::string>& subset);

double separation(const Network& n);  // min off-diagonal; throws SingletonNetwork

Partition partition_at(const Ultrametric& u, double delta);
Dendrogram dendrogram_from_ultrametric(const Ultrametric& u);
Ultrametric ultrametric_from_dendrogram(const Dendrogram& d);

}  // namespace netclust
