#pragma once

#include <cstdint>

#include "bcx/graph.hpp"

namespace bcx {

struct RmatParams {
  int scale = 10;
  int edge_factor = 16;
  double a = 0.57;
  double b = 0.19;
  double c = 0.19;
  double d = 0.05;
  std::uint64_t seed = 1;

  /// Throws ConfigError unless scale and edge_factor are >= 1 and the
  /// quadrant probabilities are non-negative and sum to 1 within 1e-9.
  void validate() const;
};

/// SplitMix64 stream. Small, seedable and fully specified, so an edge list
/// generated here can be regenerated by any other implementation.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  /// Uniform in [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Samples edge_factor * 2^scale directed pairs over 2^scale vertices.
///
/// For every pair and every one of the `scale` bit levels (most significant
/// first) one uniform draw r selects a quadrant: r < a -> (0,0),
/// r < a+b -> (0,1), r < a+b+c -> (1,0), else (1,1). The first bit goes to the
/// source id, the second to the destination id. No dedup or symmetrization is
/// done here; build_undirected does that.
EdgeList generate_rmat(const RmatParams& params);

}  // namespace bcx
