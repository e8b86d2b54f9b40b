#include "bcx/degree2.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <string>

#include "bcx/errors.hpp"

namespace bcx {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Level of v in c's tree. Unreached in one neighbor tree means unreached from c
// only if the other tree misses it too.
std::int32_t level_c(const NeighborTrees& t, vid_t v) {
  if (v == t.c) return 0;
  const std::int32_t la = t.tree_a.depth[v];
  const std::int32_t lb = t.tree_b.depth[v];
  if (la == kUnreached && lb == kUnreached) return kUnreached;
  if (la == kUnreached) return lb + 1;
  if (lb == kUnreached) return la + 1;
  return std::min(la, lb) + 1;
}

double sigma_c(const NeighborTrees& t, vid_t v) {
  if (v == t.c) return 1.0;
  const std::int32_t la = t.tree_a.depth[v];
  const std::int32_t lb = t.tree_b.depth[v];
  if (la == kUnreached && lb == kUnreached) return 0.0;
  if (lb == kUnreached || (la != kUnreached && la < lb)) return t.tree_a.sigma[v];
  if (la == kUnreached || lb < la) return t.tree_b.sigma[v];
  return t.tree_a.sigma[v] + t.tree_b.sigma[v];
}

bool closer_to_a(const NeighborTrees& t, vid_t w) {
  const std::int32_t la = t.tree_a.depth[w];
  const std::int32_t lb = t.tree_b.depth[w];
  if (la == kUnreached) return false;
  return lb == kUnreached || la <= lb;
}

}  // namespace

NeighborTrees make_neighbor_trees(const Graph& g, vid_t c, const RoundOptions& opts) {
  if (c >= g.num_vertices() || g.degree(c) != 2)
    throw ContractError("vertex " + std::to_string(c) + " is not 2-degree");
  NeighborTrees t;
  t.graph = &g;
  t.c = c;
  t.a = g.neighbors(c)[0];
  t.b = g.neighbors(c)[1];
  t.tree_a = forward_sweep(g, t.a, opts);
  t.tree_b = forward_sweep(g, t.b, opts);
  return t;
}

DerivedTree derive_2degree_tree(const NeighborTrees& t) {
  if (t.graph == nullptr || t.graph->degree(t.c) != 2)
    throw ContractError("vertex " + std::to_string(t.c) + " is not 2-degree");
  if (t.tree_a.depth[t.c] != 1 || t.tree_b.depth[t.c] != 1)
    throw ContractError("neighbor trees are not rooted next to c");
  const vid_t n = t.graph->num_vertices();
  DerivedTree out;
  out.sigma.resize(n);
  out.level.resize(n);
  for (vid_t v = 0; v < n; ++v) {
    out.level[v] = level_c(t, v);
    out.sigma[v] = sigma_c(t, v);
  }
  return out;
}

DmfResult dmf_accumulate(const NeighborTrees& t, const DmfOptions& opts) {
  const Graph& g = *t.graph;
  const vid_t n = g.num_vertices();
  const RoundState& ta = t.tree_a;
  const RoundState& tb = t.tree_b;
  const bool weighted = !opts.omega.empty();
  auto term = [&](const std::vector<double>& delta, vid_t v) {
    double x = 1.0 + delta[v];
    if (weighted) x += opts.omega[v];
    return x;
  };

  DmfResult out;
  out.delta_a.assign(n, 0.0);
  out.delta_b.assign(n, 0.0);
  out.delta_c.assign(n, 0.0);
  if (opts.count_edge_hits) out.edge_hits.assign(g.columns().size(), 0);

  // One level of a neighbor's own dependency accumulation, identical to
  // backward_sweep so delta_a/delta_b match a plain round bit for bit.
  auto own_pass = [&](const RoundState& tree, std::vector<double>& delta, std::size_t level) {
    auto frontier = tree.frontier(level);
    const auto& prefix = tree.edge_prefix[level];
    const eid_t total = prefix.back();
    std::span<const eid_t> pspan(prefix.data(), prefix.size() - 1);
    const auto next = static_cast<std::int32_t>(level + 1);
    for (eid_t i = 0; i < total; ++i) {
      auto item = map_work_item(pspan, total, i);
      const vid_t w = frontier[item.frontier_slot];
      const vid_t v = g.neighbors(w)[item.local_edge];
      if (tree.depth[v] == next) delta[w] += term(delta, v) / tree.sigma[v];
    }
    for (vid_t w : frontier) delta[w] *= tree.sigma[w];
  };

  // c's share of the same frontier: vertices gated to this tree, successors
  // taken in c's tree.
  std::vector<vid_t> finished;
  auto c_pass = [&](const RoundState& tree, std::size_t level, bool is_a) {
    auto frontier = tree.frontier(level);
    const auto& prefix = tree.edge_prefix[level];
    const eid_t total = prefix.back();
    std::span<const eid_t> pspan(prefix.data(), prefix.size() - 1);
    const auto next = static_cast<std::int32_t>(level + 2);
    for (eid_t i = 0; i < total; ++i) {
      auto item = map_work_item(pspan, total, i);
      const vid_t w = frontier[item.frontier_slot];
      if (w == t.c || closer_to_a(t, w) != is_a) continue;
      const vid_t v = g.neighbors(w)[item.local_edge];
      if (v == t.c || level_c(t, v) != next) continue;
      out.delta_c[w] += term(out.delta_c, v) / sigma_c(t, v);
      if (opts.count_edge_hits) ++out.edge_hits[g.edge_begin(w) + item.local_edge];
    }
    for (vid_t w : frontier)
      if (w != t.c && closer_to_a(t, w) == is_a) finished.push_back(w);
  };

  const std::size_t depth_a = ta.num_levels() - 1;
  const std::size_t depth_b = tb.num_levels() - 1;
  for (std::size_t depth = std::max(depth_a, depth_b) + 1; depth-- > 0;) {
    finished.clear();
    if (depth <= depth_a) {
      if (depth >= 1 && depth < depth_a) own_pass(ta, out.delta_a, depth);
      c_pass(ta, depth, true);
    }
    if (depth <= depth_b) {
      if (depth >= 1 && depth < depth_b) own_pass(tb, out.delta_b, depth);
      c_pass(tb, depth, false);
    }
    for (vid_t w : finished) out.delta_c[w] *= sigma_c(t, w);
  }
  return out;
}

SchedulePlan schedule_2degree(const Graph& g) {
  const vid_t n = g.num_vertices();
  enum : std::uint8_t { kFree = 0, kCenter = 1, kNeighbor = 2 };
  std::vector<std::uint8_t> role(n, kFree);
  SchedulePlan plan;
  for (vid_t c = 0; c < n; ++c) {
    if (g.degree(c) != 2 || role[c] != kFree) continue;
    const vid_t a = g.neighbors(c)[0];
    const vid_t b = g.neighbors(c)[1];
    if (a == b || role[a] != kFree || role[b] != kFree) continue;
    role[c] = kCenter;
    role[a] = kNeighbor;
    role[b] = kNeighbor;
    plan.triples.push_back({c, a, b});
  }
  for (vid_t v = 0; v < n; ++v)
    if (g.degree(v) > 0 && role[v] != kCenter) plan.explicit_sources.push_back(v);
  return plan;
}

std::string_view to_string(HeuristicMode mode) {
  switch (mode) {
    case HeuristicMode::H0: return "h0";
    case HeuristicMode::H1: return "h1";
    case HeuristicMode::H2: return "h2";
    case HeuristicMode::H3: return "h3";
  }
  return "?";
}

HeuristicMode parse_mode(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "h0") return HeuristicMode::H0;
  if (lower == "h1") return HeuristicMode::H1;
  if (lower == "h2") return HeuristicMode::H2;
  if (lower == "h3") return HeuristicMode::H3;
  throw ConfigError("unknown mode '" + std::string(text) + "' (expected h0..h3)");
}

namespace {

std::uint64_t count_degree(const Graph& g, eid_t d) {
  std::uint64_t k = 0;
  for (vid_t v = 0; v < g.num_vertices(); ++v) k += g.degree(v) == d;
  return k;
}

// 2-degree scheduling, optionally on top of the 1-degree residual graph.
BcScores dmf_engine(const Graph& g, bool one_degree, VertexBreakdown& bd) {
  const vid_t n = g.num_vertices();
  ReducedGraph reduced;
  const Graph* work = &g;
  std::span<const std::uint32_t> omega;
  if (one_degree) {
    auto t0 = Clock::now();
    reduced = preprocess_1degree(g);
    bd.preprocess_seconds = seconds_since(t0);
    work = &reduced.graph;
    omega = reduced.omega.omega;
  }
  auto om = [&](vid_t v) -> std::uint64_t { return omega.empty() ? 0 : omega[v]; };
  RoundOptions ropts;
  ropts.omega = omega;

  auto t0 = Clock::now();
  SchedulePlan plan = schedule_2degree(*work);
  bd.preprocess_seconds += seconds_since(t0);
  bd.two_degree_candidates = count_degree(*work, 2);

  constexpr std::uint32_t kNone = ~std::uint32_t{0};
  std::vector<std::uint32_t> triple_of(n, kNone);
  std::vector<std::uint8_t> is_neighbor(n, 0);
  for (std::uint32_t k = 0; k < plan.triples.size(); ++k) {
    triple_of[plan.triples[k].c] = k;
    is_neighbor[plan.triples[k].a] = is_neighbor[plan.triples[k].b] = 1;
  }

  BcScores bc(n, 0.0);
  auto endpoint = [&](vid_t s, std::uint64_t ns) {
    if (om(s) > 0) bc[s] += endpoint_contribution(om(s), ns);
  };
  for (vid_t s = 0; s < n; ++s) {
    if (one_degree && reduced.is_removed[s]) {
      ++bd.one_degree;
      continue;
    }
    if (work->degree(s) == 0) {
      ++bd.isolated;
      endpoint(s, 1 + om(s));
      continue;
    }
    if (is_neighbor[s]) continue;  // runs with its triple
    if (triple_of[s] != kNone) {
      auto t1 = Clock::now();
      NeighborTrees trees = make_neighbor_trees(*work, s, ropts);
      auto t2 = Clock::now();
      DmfResult dmf = dmf_accumulate(trees, {omega, false});
      bd.bc.backward_seconds += seconds_since(t2);
      bd.bc.forward_seconds += std::chrono::duration<double>(t2 - t1).count();
      bd.bc.rounds += 2;
      bd.explicit_rounds += 2;
      ++bd.two_degree;

      const std::uint64_t ns = omega.empty() ? 0 : accumulate_ns(trees.tree_a, omega);
      add_dependencies(trees.a, trees.tree_a.queue, dmf.delta_a, om(trees.a) + 1.0, bc);
      add_dependencies(trees.b, trees.tree_b.queue, dmf.delta_b, om(trees.b) + 1.0, bc);
      add_dependencies(trees.c, trees.tree_a.queue, dmf.delta_c, om(trees.c) + 1.0, bc);
      endpoint(trees.a, ns);
      endpoint(trees.b, ns);
      endpoint(trees.c, ns);
      continue;
    }
    auto t1 = Clock::now();
    RoundState round = forward_sweep(*work, s, ropts);
    auto t2 = Clock::now();
    backward_sweep(*work, round, ropts);
    bd.bc.backward_seconds += seconds_since(t2);
    bd.bc.forward_seconds += std::chrono::duration<double>(t2 - t1).count();
    ++bd.bc.rounds;
    ++bd.explicit_rounds;
    add_dependencies(s, round.queue, round.delta, om(s) + 1.0, bc);
    if (om(s) > 0) endpoint(s, accumulate_ns(round, omega));
  }
  return bc;
}

}  // namespace

BcScores bc_with_heuristics(const Graph& g, HeuristicMode mode, VertexBreakdown* breakdown) {
  VertexBreakdown bd;
  BcScores bc;
  switch (mode) {
    case HeuristicMode::H0: {
      bc = bc_exact(g, std::nullopt, {1, PrefixPolicy::kReuse, &bd.bc});
      bd.isolated = count_degree(g, 0);
      bd.explicit_rounds = g.num_vertices() - bd.isolated;
      bd.two_degree_candidates = count_degree(g, 2);
      break;
    }
    case HeuristicMode::H1:
      bc = bc_with_1degree(g, &bd);
      bd.two_degree_candidates = count_degree(g, 2);
      break;
    case HeuristicMode::H2:
      bc = dmf_engine(g, false, bd);
      break;
    case HeuristicMode::H3:
      bc = dmf_engine(g, true, bd);
      break;
  }
  bd.one_degree_candidates = count_degree(g, 1);
  if (breakdown) *breakdown = bd;
  return bc;
}

}  // namespace bcx
