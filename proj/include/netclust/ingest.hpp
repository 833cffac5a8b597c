#pragma once

#include <string>

#include "netclust/io.hpp"
#include "netclust/network.hpp"

namespace netclust {

enum class InputFormat { MatrixCsv, EdgeList, SimilarityTable };
enum class ZeroPolicy { Sentinel, Error };

struct IngestionSpec {
  std::string path;
  InputFormat format = InputFormat::MatrixCsv;
  ZeroPolicy zero_policy = ZeroPolicy::Sentinel;
};

InputFormat parse_format(const std::string& text);  // matrix | edges | similarity

// Similarity table -> dissimilarity network: each entry is normalized by the
// column sum of its destination (diagonal ignored), then inverted. Zero
// similarities become a sentinel of 10x the largest finite transformed
// value, or an error.
Network similarity_to_network(const LabeledGrid& table, ZeroPolicy policy);

Network ingest(const IngestionSpec& spec);

}  // namespace netclust
