#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "netclust/network.hpp"
#include "netclust/properties.hpp"
#include "netclust/representable.hpp"

namespace netclust {

inline constexpr std::size_t kDefaultDistanceCap = 5;

struct Correspondence {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (x index, y index)
};

// Max |A_X(x,x') - A_Y(y,y')| over pairs of pairs; no 1/2 factor.
double distortion(const Correspondence& r, const Network& nx, const Network& ny);

// Half the minimal distortion over correspondences. Exact: the minimum over
// all correspondences is attained on R = graph(f) ∪ graph(g) for functions
// f: X->Y, g: Y->X, because every correspondence contains such a union and
// dropping pairs cannot increase the distortion; so enumerating the
// |Y|^|X| * |X|^|Y| function pairs suffices.
double network_distance_exact(const Network& nx, const Network& ny,
                              std::size_t cap = kDefaultDistanceCap);

// Randomized function pairs plus greedy single-point improvement; an upper
// bound that equals the exact value when a sampled pair is optimal.
double network_distance_upper(const Network& nx, const Network& ny, int trials,
                              std::uint64_t seed = 0);

// Lipschitz stability certificate for a representable method:
// d_N(H(N_X), H(N_Y)) <= (1/sep(family)) * d_N(N_X, N_Y) + 1e-9.
AuditReport check_stability(const RepresenterFamily& family, const Network& nx,
                            const Network& ny, std::size_t cap = kDefaultDistanceCap);

}  // namespace netclust
