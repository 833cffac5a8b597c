#pragma once

#include "netclust/network.hpp"

namespace netclust {

// Entry (i,j) = minimum over chains from i to j of the maximum link
// dissimilarity. Triple-loop DP over the (min, max) semiring.
Matrix directed_minimax(const Network& n);

// Same cost restricted to chains of at most t nodes (t-1 links); t=2 returns
// the raw grid. Throws InvalidHopBound for t < 2.
Matrix bounded_hop_minimax(const Network& n, int t);

// Entrywise max(A(i,j), A(j,i)).
Network max_symmetrize(const Network& n);

// Minimax path closure of a symmetric network. Throws NotSymmetric.
Ultrametric single_linkage(const Network& s);

}  // namespace netclust
