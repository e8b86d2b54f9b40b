#include "bcx/rmat.hpp"

#include <cmath>

#include "bcx/errors.hpp"

namespace bcx {

void RmatParams::validate() const {
  if (scale < 1 || scale > 31) throw ConfigError("R-MAT scale must be in [1, 31]");
  if (edge_factor < 1) throw ConfigError("R-MAT edge factor must be >= 1");
  if (a < 0 || b < 0 || c < 0 || d < 0) throw ConfigError("R-MAT probabilities must be >= 0");
  if (std::abs(a + b + c + d - 1.0) > 1e-9) throw ConfigError("R-MAT probabilities must sum to 1");
}

EdgeList generate_rmat(const RmatParams& params) {
  params.validate();
  const std::uint64_t n = std::uint64_t{1} << params.scale;
  const std::uint64_t count = n * static_cast<std::uint64_t>(params.edge_factor);
  const double ab = params.a + params.b;
  const double abc = ab + params.c;

  EdgeList out;
  out.n = static_cast<vid_t>(n);
  out.pairs.reserve(count);
  SplitMix64 rng(params.seed);
  for (std::uint64_t e = 0; e < count; ++e) {
    vid_t u = 0, v = 0;
    for (int level = params.scale - 1; level >= 0; --level) {
      double r = rng.uniform();
      vid_t bit = vid_t{1} << level;
      if (r < params.a) {
      } else if (r < ab) {
        v |= bit;
      } else if (r < abc) {
        u |= bit;
      } else {
        u |= bit;
        v |= bit;
      }
    }
    out.pairs.emplace_back(u, v);
  }
  return out;
}

}  // namespace bcx
