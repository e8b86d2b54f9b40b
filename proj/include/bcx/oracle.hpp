#pragma once

#include "bcx/brandes.hpp"
#include "bcx/graph.hpp"

namespace bcx {

/// All-pairs reference BC. Runs a plain BFS from every vertex to get
/// distances and path counts, then sums, over ordered pairs s != t != v with
/// d(s,t) finite, sigma(s,v) * sigma(v,t) / sigma(s,t) whenever
/// d(s,t) == d(s,v) + d(v,t). O(n^3) time and O(n^2) memory: meant for small
/// graphs only (a few hundred vertices).
BcScores bc_oracle(const Graph& g);

}  // namespace bcx
