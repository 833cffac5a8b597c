#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "netclust/network.hpp"

namespace netclust {

struct RepresenterEdge {
  std::size_t src = 0;
  std::size_t dst = 0;
  double weight = 0.0;

  friend bool operator==(const RepresenterEdge&, const RepresenterEdge&) = default;
};

// Template network with possibly partial dissimilarities; only the listed
// ordered pairs are defined.
struct Representer {
  std::size_t k = 0;
  std::vector<RepresenterEdge> edges;
  std::string name;

  friend bool operator==(const Representer&, const Representer&) = default;
};

// Non-empty list of validated representers with the derived constants used
// by the stability bound.
class RepresenterFamily {
 public:
  explicit RepresenterFamily(std::vector<Representer> members);

  const std::vector<Representer>& members() const { return members_; }
  double sep() const { return sep_; }    // min weight across members
  double bound() const { return bound_; }  // max weight across members
  bool practical() const { return sep_ > 0.0; }
  bool unit_weights() const { return unit_weights_; }

 private:
  std::vector<Representer> members_;
  double sep_ = 0.0;
  double bound_ = 0.0;
  bool unit_weights_ = false;
};

RepresenterFamily validate_family(std::vector<Representer> raw);

// assignment[z] = network node index for representer node z
using NodeMap = std::vector<std::size_t>;

inline constexpr std::size_t kDefaultRepresenterCap = 5;

// Minimum scaling of omega that makes phi dissimilarity reducing into n:
// max over defined edges of A(phi(z), phi(z')) / weight(z, z').
double expansion_constant(const NodeMap& phi, const Representer& omega, const Network& n);

// Grid of optimal multiples: lambda(x,x') = min expansion constant over maps
// whose image contains x and x'. Enumerates all n^k maps; refuses k > cap.
Matrix optimal_multiples(const Representer& omega, const Network& n,
                         std::size_t cap = kDefaultRepresenterCap);

// Entrywise min of optimal_multiples across members. Uniform cycle members
// take an exact walk-DP route with no size cap.
Matrix family_multiples(const RepresenterFamily& family, const Network& n,
                        std::size_t cap = kDefaultRepresenterCap);

// Single linkage over the family multiples grid.
Ultrametric cluster_representable(const RepresenterFamily& family, const Network& n,
                                  std::size_t cap = kDefaultRepresenterCap);

// Directed k-cycle with the given forward weight; when backward is set, the
// reverse ring carries that weight. k=2 means one edge each way.
Representer cycle_representer(std::size_t k, double forward,
                              std::optional<double> backward = std::nullopt);

// Finite stand-in for the infinite all-ones cycle collection: cycles of
// 2..2n nodes. A loop witnessing the nonreciprocal cost concatenates two
// minimizing chains through at most 2n-2 distinct nodes, and longer cycles
// can always stall on a node at zero cost, so these lengths are exact.
std::vector<Representer> nonreciprocal_family(std::size_t n);

// Closed-form optimal multiples for the 3-cycle representer with forward
// weight 1 and backward weight c: Lambda = min(B, B^T) with
// B[i][j] = min_k max(A[i][j], A[j][k], A[k][i], A[j][i]/c, A[k][j]/c, A[i][k]/c).
Matrix three_cycle_kernel(const Network& n, double c);

// Line-based family file: "representer <name> <k>" then "edge <src> <dst>
// <weight>" lines, members separated by blank lines, "#" comments, weights
// may be rationals "p/q".
std::vector<Representer> parse_family_file(const std::string& text);

}  // namespace netclust
