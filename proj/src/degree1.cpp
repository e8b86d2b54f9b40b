#include "bcx/degree1.hpp"

#include <algorithm>
#include <chrono>

#include "bcx/errors.hpp"

namespace bcx {

PartitionReduction reduce_partition(std::vector<std::pair<vid_t, vid_t>> arcs) {
  std::sort(arcs.begin(), arcs.end());
  PartitionReduction out;
  for (std::size_t lo = 0; lo < arcs.size();) {
    std::size_t hi = lo + 1;
    while (hi < arcs.size() && arcs[hi].first == arcs[lo].first) ++hi;
    if (hi - lo == 1) {
      out.removed.push_back(arcs[lo]);
    } else {
      out.kept.insert(out.kept.end(), arcs.begin() + lo, arcs.begin() + hi);
    }
    lo = hi;
  }
  return out;
}

std::vector<std::vector<std::pair<vid_t, vid_t>>> partition_arcs_1d(const Graph& g,
                                                                    std::size_t num_partitions) {
  if (num_partitions == 0) throw ContractError("num_partitions must be >= 1");
  std::vector<std::vector<std::pair<vid_t, vid_t>>> parts(num_partitions);
  for (vid_t u = 0; u < g.num_vertices(); ++u)
    for (vid_t v : g.neighbors(u)) parts[u % num_partitions].emplace_back(u, v);
  return parts;
}

ReducedGraph merge_reductions(vid_t n, std::vector<PartitionReduction> parts) {
  ReducedGraph out;
  out.omega.omega.assign(n, 0);
  out.is_removed.assign(n, 0);
  for (auto& part : parts) {
    for (auto [child, parent] : part.removed) {
      out.omega.removed.emplace_back(child, parent);
      ++out.omega.omega[parent];
      out.is_removed[child] = 1;
    }
  }
  std::sort(out.omega.removed.begin(), out.omega.removed.end());

  // Drop the symmetric arc (parent, child) of every removed edge.
  std::vector<std::pair<vid_t, vid_t>> arcs;
  for (auto& part : parts)
    for (auto [u, v] : part.kept)
      if (!out.is_removed[v]) arcs.emplace_back(u, v);
  std::sort(arcs.begin(), arcs.end());

  std::vector<eid_t> offsets(static_cast<std::size_t>(n) + 1, 0);
  for (auto [u, v] : arcs) ++offsets[u + 1];
  for (std::size_t k = 1; k < offsets.size(); ++k) offsets[k] += offsets[k - 1];
  std::vector<vid_t> columns;
  columns.reserve(arcs.size());
  for (auto [u, v] : arcs) columns.push_back(v);
  out.graph = Graph(n, std::move(offsets), std::move(columns));
  return out;
}

ReducedGraph preprocess_1degree(const Graph& g, std::size_t num_partitions) {
  auto buckets = partition_arcs_1d(g, num_partitions);
  std::vector<PartitionReduction> parts;
  parts.reserve(buckets.size());
  for (auto& arcs : buckets) parts.push_back(reduce_partition(std::move(arcs)));
  return merge_reductions(g.num_vertices(), std::move(parts));
}

ReducedGraph preprocess_1degree(const EdgeList& edges, std::size_t num_partitions) {
  return preprocess_1degree(build_undirected(edges), num_partitions);
}

std::uint64_t accumulate_ns(const RoundState& round, std::span<const std::uint32_t> omega) {
  std::uint64_t ns = 0;
  for (vid_t v : round.queue) ns += 1 + (omega.empty() ? 0 : omega[v]);
  return ns;
}

double endpoint_contribution(std::uint64_t omega_s, std::uint64_t n_s) {
  if (n_s < omega_s + 1)
    throw ContractError("component size " + std::to_string(n_s) + " smaller than omega + 1");
  const double w = static_cast<double>(omega_s);
  const double n = static_cast<double>(n_s);
  return 2.0 * w * (n - 2.0) - w * (w - 1.0);
}

void add_dependencies(vid_t source, std::span<const vid_t> vertices, std::span<const double> delta,
                      double scale, BcScores& bc) {
  for (vid_t w : vertices)
    if (w != source) bc[w] += delta[w] * scale;
}

BcScores bc_with_1degree(const Graph& g, VertexBreakdown* breakdown) {
  const vid_t n = g.num_vertices();
  auto t0 = std::chrono::steady_clock::now();
  ReducedGraph reduced = preprocess_1degree(g);
  const double prep = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const Graph& residual = reduced.graph;
  std::span<const std::uint32_t> omega(reduced.omega.omega);

  BcScores bc(n, 0.0);
  VertexBreakdown local;
  local.preprocess_seconds = prep;
  local.one_degree = reduced.omega.removed.size();
  local.one_degree_candidates = local.one_degree;
  RoundOptions ropts;
  ropts.omega = omega;
  for (vid_t s = 0; s < n; ++s) {
    if (reduced.is_removed[s]) continue;
    if (residual.degree(s) == 0) {
      ++local.isolated;
      if (omega[s] > 0) bc[s] += endpoint_contribution(omega[s], 1 + omega[s]);
      continue;
    }
    auto t1 = std::chrono::steady_clock::now();
    RoundState round = forward_sweep(residual, s, ropts);
    auto t2 = std::chrono::steady_clock::now();
    backward_sweep(residual, round, ropts);
    local.bc.backward_seconds +=
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t2).count();
    local.bc.forward_seconds += std::chrono::duration<double>(t2 - t1).count();
    ++local.bc.rounds;
    ++local.explicit_rounds;
    add_dependencies(s, round.queue, round.delta, omega[s] + 1.0, bc);
    if (omega[s] > 0) bc[s] += endpoint_contribution(omega[s], accumulate_ns(round, omega));
  }
  if (breakdown) *breakdown = local;
  return bc;
}

}  // namespace bcx
