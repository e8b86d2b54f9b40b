#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "bcx/brandes.hpp"
#include "bcx/degree1.hpp"
#include "bcx/graph.hpp"

namespace bcx {

/// Completed forward sweeps from the two neighbors a and b of a 2-degree
/// vertex c. Both trees must see c at level 1.
struct NeighborTrees {
  const Graph* graph = nullptr;
  vid_t c = 0;
  vid_t a = 0;
  vid_t b = 0;
  RoundState tree_a;
  RoundState tree_b;
};

/// Runs the two neighbor sweeps. Throws ContractError unless deg(c) == 2.
NeighborTrees make_neighbor_trees(const Graph& g, vid_t c, const RoundOptions& opts = {});

struct DerivedTree {
  std::vector<double> sigma;
  /// kUnreached for vertices outside c's component.
  std::vector<std::int32_t> level;
};

/// c's shortest-path tree from its neighbors' trees alone:
/// level_c(v) = min(level_a(v), level_b(v)) + 1, and sigma_c(v) is sigma_a(v),
/// sigma_b(v) or their sum depending on which neighbor is closer.
DerivedTree derive_2degree_tree(const NeighborTrees& t);

struct DmfResult {
  std::vector<double> delta_a;
  std::vector<double> delta_b;
  std::vector<double> delta_c;
  /// When requested: per CSR entry (w -> v), how many times it fed delta_c.
  std::vector<std::uint32_t> edge_hits;
};

struct DmfOptions {
  std::span<const std::uint32_t> omega{};
  bool count_edge_hits = false;
};

/// Level-synchronized backward sweeps of a and b that also accumulate c's
/// dependencies. A vertex w feeds delta_c during a's pass when
/// level_a(w) <= level_b(w) and during b's pass otherwise, so each edge of
/// c's tree is used once.
DmfResult dmf_accumulate(const NeighborTrees& t, const DmfOptions& opts = {});

struct Triple {
  vid_t c;
  vid_t a;
  vid_t b;
  friend bool operator==(const Triple&, const Triple&) = default;
};

struct SchedulePlan {
  std::vector<Triple> triples;
  /// Non-isolated vertices that are not a triple's c, ascending.
  std::vector<vid_t> explicit_sources;
};

/// Greedy ascending scan. c is taken when deg(c) == 2, its neighbors are not
/// selected c's, neither c nor its neighbors belong to an earlier triple's
/// neighbor pair.
SchedulePlan schedule_2degree(const Graph& g);

enum class HeuristicMode { H0, H1, H2, H3 };

std::string_view to_string(HeuristicMode mode);
/// Accepts "h0".."h3" in either case. Throws ConfigError otherwise.
HeuristicMode parse_mode(std::string_view text);

/// H0 plain Brandes, H1 1-degree reduction, H2 2-degree DMF, H3 both
/// (2-degree scheduling on the residual graph). All four are exact.
BcScores bc_with_heuristics(const Graph& g, HeuristicMode mode,
                            VertexBreakdown* breakdown = nullptr);

}  // namespace bcx
