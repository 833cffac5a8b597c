#include "netclust/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace netclust {

InputFormat parse_format(const std::string& text) {
  if (text == "matrix") return InputFormat::MatrixCsv;
  if (text == "edges") return InputFormat::EdgeList;
  if (text == "similarity") return InputFormat::SimilarityTable;
  throw Error(ErrorCode::ParseError, "unknown input format '" + text + "'");
}

Network similarity_to_network(const LabeledGrid& table, ZeroPolicy policy) {
  const std::size_t n = table.labels.size();
  if (table.grid.size() != n) {
    throw Error(ErrorCode::ShapeMismatch, "similarity table is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (table.grid[i].size() != n) {
      throw Error(ErrorCode::ShapeMismatch, "similarity table is not square");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;  // self-similarity carries no information here
      const double u = table.grid[i][j];
      if (!std::isfinite(u)) {
        throw Error(ErrorCode::ParseError, "similarity (" + table.labels[i] + "," +
                                               table.labels[j] + ") is not finite");
      }
      if (u < 0.0) {
        throw Error(ErrorCode::NegativeSimilarity,
                    "similarity (" + table.labels[i] + "," + table.labels[j] + ") is " +
                        std::to_string(u));
      }
    }
  }
  if (n == 1) {
    return Network(table.labels, Matrix(1, 0.0));
  }
  std::vector<double> col_sum(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i)
      if (i != j) col_sum[j] += table.grid[i][j];
    if (!(col_sum[j] > 0.0)) {
      throw Error(ErrorCode::ZeroColumnSum,
                  "column '" + table.labels[j] + "' has no positive similarities");
    }
  }
  // A(i,j) = (U(i,j) / colsum(j))^{-1}; zero similarity -> infinite, patched
  // below per policy.
  Matrix a(n, 0.0);
  double max_finite = 0.0;
  bool any_zero = false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double u = table.grid[i][j];
      if (u == 0.0) {
        any_zero = true;
        a(i, j) = std::numeric_limits<double>::infinity();
      } else {
        a(i, j) = col_sum[j] / u;
        max_finite = std::max(max_finite, a(i, j));
      }
    }
  }
  if (any_zero) {
    if (policy == ZeroPolicy::Error) {
      throw Error(ErrorCode::NonFinite,
                  "zero similarities map to infinite dissimilarity (policy: error)");
    }
    const double sentinel = 10.0 * max_finite;
    if (!(sentinel > 0.0)) {
      throw Error(ErrorCode::ZeroColumnSum, "no finite dissimilarities to anchor the sentinel");
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && !std::isfinite(a(i, j))) a(i, j) = sentinel;
  }
  return Network(table.labels, std::move(a));
}

Network ingest(const IngestionSpec& spec) {
  const std::string text = read_file(spec.path);
  switch (spec.format) {
    case InputFormat::MatrixCsv: return read_network_csv(text);
    case InputFormat::EdgeList: return read_edge_list(text);
    case InputFormat::SimilarityTable:
      return similarity_to_network(read_csv_grid(text), spec.zero_policy);
  }
  throw Error(ErrorCode::ParseError, "unhandled input format");
}

}  // namespace netclust
