#pragma once

// Graph families and a brute-force reference shared by the unit tests and the
// acceptance suite.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "bcx/graph.hpp"
#include "bcx/rmat.hpp"

namespace bcx::testing {

inline EdgeList path(vid_t n) {
  EdgeList e{n, {}};
  for (vid_t v = 0; v + 1 < n; ++v) e.pairs.emplace_back(v, v + 1);
  return e;
}

inline EdgeList cycle(vid_t n) {
  EdgeList e = path(n);
  if (n >= 3) e.pairs.emplace_back(n - 1, 0);
  return e;
}

inline EdgeList complete(vid_t n) {
  EdgeList e{n, {}};
  for (vid_t u = 0; u < n; ++u)
    for (vid_t v = u + 1; v < n; ++v) e.pairs.emplace_back(u, v);
  return e;
}

/// K_{1,k} with center 0.
inline EdgeList star(vid_t k) {
  EdgeList e{k + 1, {}};
  for (vid_t v = 1; v <= k; ++v) e.pairs.emplace_back(0, v);
  return e;
}

/// Uniform random recursive tree: vertex v attaches to a random earlier one.
inline EdgeList random_tree(vid_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  EdgeList e{n, {}};
  for (vid_t v = 1; v < n; ++v) e.pairs.emplace_back(static_cast<vid_t>(rng() % v), v);
  return e;
}

inline EdgeList erdos_renyi(vid_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  EdgeList e{n, {}};
  for (vid_t u = 0; u < n; ++u)
    for (vid_t v = u + 1; v < n; ++v)
      if (coin(rng)) e.pairs.emplace_back(u, v);
  return e;
}

inline EdgeList rmat(int scale, int ef, std::uint64_t seed) {
  RmatParams p;
  p.scale = scale;
  p.edge_factor = ef;
  p.seed = seed;
  return generate_rmat(p);
}

/// Vertices of b are shifted past those of a.
inline EdgeList disjoint_union(const EdgeList& a, const EdgeList& b) {
  EdgeList e = a;
  e.n = a.n + b.n;
  for (auto [u, v] : b.pairs) e.pairs.emplace_back(u + a.n, v + a.n);
  return e;
}

inline EdgeList with_isolated(EdgeList e, vid_t extra) {
  e.n += extra;
  return e;
}

/// Triangle 0-1-2 with pendant 3 on vertex 0: vertex 1 and 2 have degree 2
/// and their neighbors are adjacent.
inline EdgeList triangle_pendant() { return {4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}}}; }

/// Random connected-ish graph with many degree-1 and degree-2 vertices:
/// a random tree with some paths subdivided and a few chords.
inline EdgeList sparse_mix(vid_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  EdgeList e = random_tree(n, seed);
  for (vid_t k = 0; k < n / 6; ++k) {
    const vid_t u = static_cast<vid_t>(rng() % n), v = static_cast<vid_t>(rng() % n);
    e.pairs.emplace_back(u, v);
  }
  return e;
}

inline Graph make(const EdgeList& e) { return build_undirected(e); }

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// The randomized suite: Erdos-Renyi, small R-MAT, paths, cycles, stars,
/// complete graphs, trees and multi-component unions (some with isolated
/// vertices). Deterministic.
inline std::vector<NamedGraph> suite() {
  std::vector<NamedGraph> out;
  auto add = [&](std::string name, const EdgeList& e) { out.push_back({std::move(name), make(e)}); };
  std::uint64_t seed = 1;
  for (vid_t n : {8u, 16u, 24u, 32u, 48u, 64u})
    for (double p : {0.05, 0.1, 0.3})
      for (int rep = 0; rep < 4; ++rep, ++seed)
        add("er n=" + std::to_string(n) + " p=" + std::to_string(p) + " seed=" + std::to_string(seed),
            erdos_renyi(n, p, seed));
  for (int scale = 2; scale <= 6; ++scale)
    for (int ef : {2, 8})
      for (std::uint64_t s = 1; s <= 4; ++s)
        add("rmat scale=" + std::to_string(scale) + " ef=" + std::to_string(ef) + " seed=" + std::to_string(s),
            rmat(scale, ef, s));
  for (vid_t n = 1; n <= 20; ++n) add("path " + std::to_string(n), path(n));
  for (vid_t n = 3; n <= 20; ++n) add("cycle " + std::to_string(n), cycle(n));
  for (vid_t k = 1; k <= 12; ++k) add("star " + std::to_string(k), star(k));
  for (vid_t n = 1; n <= 7; ++n) add("complete " + std::to_string(n), complete(n));
  for (vid_t n = 2; n <= 40; n += 2) add("tree " + std::to_string(n), random_tree(n, 100 + n));
  for (vid_t n = 6; n <= 48; n += 6) add("mix " + std::to_string(n), sparse_mix(n, 200 + n));
  add("triangle pendant", triangle_pendant());
  for (vid_t k = 2; k <= 9; ++k) {
    add("path u cycle " + std::to_string(k), disjoint_union(path(k + 1), cycle(k + 2)));
    add("star u er " + std::to_string(k), with_isolated(disjoint_union(star(k), erdos_renyi(12, 0.2, k)), 2));
    add("path3 u path3 u iso " + std::to_string(k), with_isolated(disjoint_union(path(3), path(3)), k));
  }
  add("empty 5", EdgeList{5, {}});
  return out;
}

/// Brute-force BC for tiny graphs, independent of every traversal in the
/// library: Floyd-Warshall distances on an adjacency matrix, then every walk
/// of length d(s,t) from s to t is enumerated (these are exactly the shortest
/// paths) and each interior vertex is credited 1 / (number of such walks).
inline std::vector<double> brute_force_bc(const EdgeList& e) {
  const vid_t n = e.n;
  constexpr std::uint32_t inf = std::numeric_limits<std::uint32_t>::max() / 4;
  std::vector<std::vector<std::uint8_t>> adj(n, std::vector<std::uint8_t>(n, 0));
  for (auto [u, v] : e.pairs)
    if (u != v) adj[u][v] = adj[v][u] = 1;
  std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, inf));
  for (vid_t u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (vid_t v = 0; v < n; ++v)
      if (adj[u][v]) d[u][v] = 1;
  }
  for (vid_t k = 0; k < n; ++k)
    for (vid_t i = 0; i < n; ++i)
      for (vid_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);

  std::vector<double> bc(n, 0.0);
  std::vector<vid_t> walk;
  std::vector<std::uint64_t> hits(n);
  for (vid_t s = 0; s < n; ++s) {
    for (vid_t t = 0; t < n; ++t) {
      if (s == t || d[s][t] >= inf) continue;
      std::fill(hits.begin(), hits.end(), 0);
      std::uint64_t paths = 0;
      std::function<void(vid_t)> extend = [&](vid_t x) {
        if (walk.size() == d[s][t]) {
          if (x != t) return;
          ++paths;
          for (std::size_t k = 0; k + 1 < walk.size(); ++k) ++hits[walk[k]];
          return;
        }
        for (vid_t y = 0; y < n; ++y) {
          if (!adj[x][y]) continue;
          walk.push_back(y);
          extend(y);
          walk.pop_back();
        }
      };
      extend(s);
      for (vid_t v = 0; v < n; ++v)
        if (v != s && v != t) bc[v] += static_cast<double>(hits[v]) / static_cast<double>(paths);
    }
  }
  return bc;
}

/// Largest |got - want| / max(1, |want|).
inline double max_rel_error(const std::vector<double>& got, const std::vector<double>& want) {
  double worst = got.size() == want.size() ? 0.0 : std::numeric_limits<double>::infinity();
  for (std::size_t v = 0; v < std::min(got.size(), want.size()); ++v) {
    const double err = std::abs(got[v] - want[v]) / std::max(1.0, std::abs(want[v]));
    if (!(err <= worst)) worst = err;
  }
  return worst;
}

inline double max_abs_error(const std::vector<double>& got, const std::vector<double>& want) {
  double worst = got.size() == want.size() ? 0.0 : std::numeric_limits<double>::infinity();
  for (std::size_t v = 0; v < std::min(got.size(), want.size()); ++v) {
    const double err = std::abs(got[v] - want[v]);
    if (!(err <= worst)) worst = err;
  }
  return worst;
}

}  // namespace bcx::testing
