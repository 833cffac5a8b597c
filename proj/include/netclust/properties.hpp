#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netclust/methods.hpp"
#include "netclust/network.hpp"

namespace netclust {

// Applied to comparisons whose operands went through division (expansion
// constants); min/max-only pipelines compare exactly.
inline constexpr double kDivisionTolerance = 1e-9;

// Everything needed to replay a violation standalone.
struct AuditWitness {
  std::optional<Network> network;
  std::map<std::string, std::string> params;
  std::string node_a, node_b;  // offending pair
  double expected = 0.0;
  double actual = 0.0;
};

struct AuditReport {
  std::string property;
  bool holds = true;
  std::size_t probes = 0;
  std::optional<AuditWitness> witness;

  std::string to_json() const;
};

AuditReport check_excisiveness(const MethodSpec& method, const Network& n);
AuditReport check_scale_preservation(const MethodSpec& method, const Network& n,
                                     const std::vector<double>& alphas);
AuditReport check_idempotency(const MethodSpec& method, const Network& n);
AuditReport check_value_axiom(const MethodSpec& method,
                              const std::vector<std::pair<double, double>>& grid);
AuditReport check_transformation_axiom(const MethodSpec& method, const Network& nx,
                                       const Network& ny,
                                       const std::vector<std::size_t>& phi);
AuditReport check_sandwich(const MethodSpec& method, const Network& n);

std::vector<double> default_alphas();                            // {0.5, 2, 10}
std::vector<std::pair<double, double>> default_value_grid();     // 5x5 over the weight set

// Seeded probe generators. Weights come from {1, 2, 3, 5, 8} so min/max
// pipelines compare exactly; indices are drawn by modulo so the stream only
// depends on the mt19937_64 output, not on a library's distribution.
Network random_network(std::size_t n, std::uint64_t seed);

struct ContractionPair {
  Network source;
  Network target;
  std::vector<std::size_t> phi;  // source index -> target index
};

// target dissimilarities are pushed at or below the source's through phi.
ContractionPair contract_network(const Network& source, std::uint64_t seed);
ContractionPair random_contraction_pair(std::size_t n, std::uint64_t seed);

}  // namespace netclust
