#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bcx/graph.hpp"

namespace bcx {

/// Per-vertex betweenness scores, unnormalized, ordered-pair convention:
/// every undirected pair {s,t} contributes twice.
using BcScores = std::vector<double>;

inline constexpr std::int32_t kUnreached = -1;

/// Exclusive scan of frontier out-degrees. prefix.size() == degrees.size().
struct ActiveEdges {
  std::vector<eid_t> prefix;
  eid_t total = 0;
};

ActiveEdges enumerate_active_edges(std::span<const eid_t> degrees);

struct WorkItem {
  std::size_t frontier_slot = 0;
  eid_t local_edge = 0;
  friend bool operator==(const WorkItem&, const WorkItem&) = default;
};

/// Maps a flat work-item index onto (frontier slot, edge within that slot's
/// adjacency): the slot is the largest k with prefix[k] <= i. Zero-degree
/// slots are skipped naturally. Throws ContractError if i >= total.
WorkItem map_work_item(std::span<const eid_t> prefix, eid_t total, eid_t i);

/// Whether the backward sweep reads the per-level offsets stored by the
/// forward sweep, or scans the frontier degrees again.
enum class PrefixPolicy { kReuse, kRecompute };

struct PrefixCounters {
  std::uint64_t forward_scans = 0;
  std::uint64_t backward_scans = 0;
};

/// Traversal state of one single-source round.
struct RoundState {
  vid_t source = 0;
  std::vector<double> sigma;
  std::vector<std::int32_t> depth;
  std::vector<double> delta;
  /// Accumulated frontier: vertices in discovery order.
  std::vector<vid_t> queue;
  /// queue[q_off[k] .. q_off[k+1]) is level k.
  std::vector<std::size_t> q_off;
  /// Per level: exclusive prefix of frontier degrees with the total appended,
  /// so edge_prefix[k].size() == frontier size + 1.
  std::vector<std::vector<eid_t>> edge_prefix;
  std::vector<std::uint8_t> visited;
  PrefixCounters counters;

  std::size_t num_levels() const noexcept { return q_off.empty() ? 0 : q_off.size() - 1; }
  std::span<const vid_t> frontier(std::size_t level) const noexcept {
    return {queue.data() + q_off[level], queue.data() + q_off[level + 1]};
  }
};

struct RoundOptions {
  /// Counts of removed 1-degree children per vertex. When non-empty the
  /// backward recursion uses (1 + delta(v) + omega(v)) / sigma(v).
  std::span<const std::uint32_t> omega{};
  PrefixPolicy prefix = PrefixPolicy::kReuse;
};

/// Shortest-path counting from s with active-edge work mapping. Fills sigma,
/// depth, queue, q_off, edge_prefix and visited; delta is zeroed.
RoundState forward_sweep(const Graph& g, vid_t s, const RoundOptions& opts = {});

/// Successor-checking dependency accumulation over the stored frontiers,
/// deepest non-leaf level first, stopping above the source (delta[s] stays 0).
void backward_sweep(const Graph& g, RoundState& state, const RoundOptions& opts = {});

RoundState brandes_round(const Graph& g, vid_t s, const RoundOptions& opts = {});

struct BcStats {
  std::uint64_t rounds = 0;
  double forward_seconds = 0;
  double backward_seconds = 0;
  PrefixCounters counters;

  void merge(const BcStats& other);
};

struct BcOptions {
  /// Source rounds are split into this many contiguous chunks, each with its
  /// own score accumulator; chunks are merged in order.
  unsigned threads = 1;
  PrefixPolicy prefix = PrefixPolicy::kReuse;
  BcStats* stats = nullptr;
};

/// Exact Brandes BC. With `sources`, only those rounds run (partial scores).
/// Vertices without edges are never used as sources.
BcScores bc_exact(const Graph& g, std::optional<std::span<const vid_t>> sources = std::nullopt,
                  const BcOptions& opts = {});

/// Traversed edges per second: m * n_eff / t. Throws InputError if t <= 0.
double teps(std::uint64_t m, std::uint64_t n_eff, double seconds);

}  // namespace bcx
