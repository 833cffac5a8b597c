#include "netclust/minimax.hpp"

#include <algorithm>

namespace netclust {

namespace {

// Floyd-Warshall with (min, max) in place of (min, +). Exact: every output
// entry is one of the input entries.
Matrix minimax_closure(Matrix d) {
  const std::size_t n = d.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d(i, j) = std::min(d(i, j), std::max(d(i, k), d(k, j)));
  return d;
}

}  // namespace

Matrix directed_minimax(const Network& n) { return minimax_closure(n.dissim()); }

Matrix bounded_hop_minimax(const Network& n, int t) {
  if (t < 2) {
    throw Error(ErrorCode::InvalidHopBound,
                "chains need at least 2 nodes, got t=" + std::to_string(t));
  }
  const std::size_t sz = n.size();
  // d holds the best cost over chains of at most `links` links; the diagonal
  // stays 0 (the one-node chain), which lets longer levels reuse shorter
  // chains without a separate "at most" union step.
  Matrix d = n.dissim();
  for (int links = 2; links <= t - 1; ++links) {
    Matrix next = d;
    for (std::size_t i = 0; i < sz; ++i)
      for (std::size_t k = 0; k < sz; ++k) {
        const double head = d(i, k);
        for (std::size_t j = 0; j < sz; ++j)
          next(i, j) = std::min(next(i, j), std::max(head, n(k, j)));
      }
    d = next;
  }
  return d;
}

Network max_symmetrize(const Network& n) {
  return Network(n.labels(), symmetric_max(n.dissim()));
}

Ultrametric single_linkage(const Network& s) {
  if (!s.dissim().is_symmetric()) {
    throw Error(ErrorCode::NotSymmetric, "single linkage needs a symmetric network");
  }
  return Ultrametric(s.labels(), minimax_closure(s.dissim()));
}

}  // namespace netclust
