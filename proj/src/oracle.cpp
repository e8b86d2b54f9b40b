#include "bcx/oracle.hpp"

#include <deque>
#include <limits>

namespace bcx {

namespace {

constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

// Row s of the distance and path-count matrices.
void bfs_counts(const Graph& g, vid_t s, std::uint32_t* dist, double* count) {
  std::deque<vid_t> pending{s};
  dist[s] = 0;
  count[s] = 1;
  while (!pending.empty()) {
    vid_t u = pending.front();
    pending.pop_front();
    for (vid_t v : g.neighbors(u)) {
      if (dist[v] == kInf) {
        dist[v] = dist[u] + 1;
        pending.push_back(v);
      }
      if (dist[v] == dist[u] + 1) count[v] += count[u];
    }
  }
}

}  // namespace

BcScores bc_oracle(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint32_t> dist(n * n, kInf);
  std::vector<double> count(n * n, 0.0);
  for (vid_t s = 0; s < n; ++s) bfs_counts(g, s, &dist[s * n], &count[s * n]);

  BcScores bc(n, 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      const std::uint32_t dst = dist[s * n + t];
      if (t == s || dst == kInf) continue;
      const double paths = count[s * n + t];
      for (std::size_t v = 0; v < n; ++v) {
        if (v == s || v == t) continue;
        const std::uint32_t dsv = dist[s * n + v];
        const std::uint32_t dvt = dist[v * n + t];
        if (dsv == kInf || dvt == kInf || dsv + dvt != dst) continue;
        bc[v] += count[s * n + v] * count[v * n + t] / paths;
      }
    }
  }
  return bc;
}

}  // namespace bcx
