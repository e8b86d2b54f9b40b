#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bcx/brandes.hpp"
#include "bcx/graph.hpp"

namespace bcx {

/// omega[v] counts the 1-degree vertices removed next to v; `removed` lists
/// (child, parent) for every removal, sorted by child.
struct OmegaMap {
  std::vector<std::uint32_t> omega;
  std::vector<std::pair<vid_t, vid_t>> removed;
};

struct ReducedGraph {
  /// Same vertex ids as the input; removed vertices are left isolated.
  Graph graph;
  OmegaMap omega;
  std::vector<std::uint8_t> is_removed;
};

/// Directed arcs (u, v) of one 1-D partition, i.e. all arcs with
/// u mod num_partitions == partition index.
struct PartitionReduction {
  std::vector<std::pair<vid_t, vid_t>> kept;     // arcs of surviving sources
  std::vector<std::pair<vid_t, vid_t>> removed;  // (child, parent)
};

/// Sorts a partition's arcs by source and splits off sources with exactly one
/// arc. All arcs of a source live in one partition, so the test is global.
PartitionReduction reduce_partition(std::vector<std::pair<vid_t, vid_t>> arcs);

/// Symmetric arcs of the normalized input, bucketed by u mod num_partitions.
std::vector<std::vector<std::pair<vid_t, vid_t>>> partition_arcs_1d(const Graph& g,
                                                                    std::size_t num_partitions);

/// Merges per-partition results in partition order. The output does not
/// depend on how arcs were partitioned.
ReducedGraph merge_reductions(vid_t n, std::vector<PartitionReduction> parts);

/// Single pass 1-degree removal (no cascading). Edge lists are normalized
/// with build_undirected first.
ReducedGraph preprocess_1degree(const EdgeList& edges, std::size_t num_partitions = 1);
ReducedGraph preprocess_1degree(const Graph& g, std::size_t num_partitions = 1);

/// Input-graph size of the source's component: sum over visited residual
/// vertices of 1 + omega[v]. Call after the forward sweep.
std::uint64_t accumulate_ns(const RoundState& round, std::span<const std::uint32_t> omega);

/// BC that vertex s collects from pairs with one of its omega_s removed
/// children as an endpoint: 2*omega*(n_s - 2) - omega*(omega - 1).
/// Throws ContractError if n_s < omega_s + 1.
double endpoint_contribution(std::uint64_t omega_s, std::uint64_t n_s);

/// bc[w] += scale * delta[w] for every w in `vertices` other than `source`.
/// With 1-degree reduction the scale is omega[source] + 1.
void add_dependencies(vid_t source, std::span<const vid_t> vertices, std::span<const double> delta,
                      double scale, BcScores& bc);

/// Where each vertex's BC came from.
struct VertexBreakdown {
  std::uint64_t explicit_rounds = 0;
  std::uint64_t one_degree = 0;
  std::uint64_t two_degree = 0;
  std::uint64_t isolated = 0;
  // Candidates in the input graph, as reported next to the used counts.
  std::uint64_t one_degree_candidates = 0;
  std::uint64_t two_degree_candidates = 0;
  double preprocess_seconds = 0;
  BcStats bc;

  std::uint64_t total() const noexcept { return explicit_rounds + one_degree + two_degree + isolated; }
};

/// Exact BC via 1-degree reduction: modified rounds on the residual graph
/// plus endpoint terms. Removed vertices score 0 and never act as sources.
BcScores bc_with_1degree(const Graph& g, VertexBreakdown* breakdown = nullptr);

}  // namespace bcx
