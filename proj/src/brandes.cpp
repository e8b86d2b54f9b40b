#include "bcx/brandes.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "bcx/errors.hpp"

namespace bcx {

ActiveEdges enumerate_active_edges(std::span<const eid_t> degrees) {
  ActiveEdges out;
  out.prefix.resize(degrees.size());
  eid_t running = 0;
  for (std::size_t k = 0; k < degrees.size(); ++k) {
    out.prefix[k] = running;
    running += degrees[k];
  }
  out.total = running;
  return out;
}

WorkItem map_work_item(std::span<const eid_t> prefix, eid_t total, eid_t i) {
  if (i >= total || prefix.empty())
    throw ContractError("work item " + std::to_string(i) + " out of range (total " +
                        std::to_string(total) + ")");
  auto it = std::upper_bound(prefix.begin(), prefix.end(), i);
  auto slot = static_cast<std::size_t>(it - prefix.begin()) - 1;
  return {slot, i - prefix[slot]};
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Offsets for one frontier, with the total appended.
std::vector<eid_t> frontier_offsets(const Graph& g, std::span<const vid_t> frontier) {
  std::vector<eid_t> degrees(frontier.size());
  for (std::size_t k = 0; k < frontier.size(); ++k) degrees[k] = g.degree(frontier[k]);
  auto scan = enumerate_active_edges(degrees);
  scan.prefix.push_back(scan.total);
  return std::move(scan.prefix);
}

}  // namespace

RoundState forward_sweep(const Graph& g, vid_t s, const RoundOptions&) {
  const vid_t n = g.num_vertices();
  if (s >= n) throw ContractError("source out of range");
  RoundState st;
  st.source = s;
  st.sigma.assign(n, 0.0);
  st.depth.assign(n, kUnreached);
  st.delta.assign(n, 0.0);
  st.visited.assign(n, 0);
  st.queue.reserve(n);

  st.sigma[s] = 1.0;
  st.depth[s] = 0;
  st.visited[s] = 1;
  st.queue.push_back(s);
  st.q_off = {0, 1};

  for (std::int32_t level = 0;; ++level) {
    const std::size_t lo = st.q_off[level];
    const std::size_t hi = st.q_off[level + 1];
    if (lo == hi) {
      st.q_off.pop_back();
      break;
    }
    auto prefix = frontier_offsets(g, {st.queue.data() + lo, hi - lo});
    ++st.counters.forward_scans;
    const eid_t total = prefix.back();
    std::span<const eid_t> pspan(prefix.data(), prefix.size() - 1);
    for (eid_t i = 0; i < total; ++i) {
      auto item = map_work_item(pspan, total, i);
      const vid_t v = st.queue[lo + item.frontier_slot];
      const vid_t w = g.neighbors(v)[item.local_edge];
      if (!st.visited[w]) {
        st.visited[w] = 1;
        st.depth[w] = level + 1;
        st.queue.push_back(w);
      }
      if (st.depth[w] == level + 1) st.sigma[w] += st.sigma[v];
    }
    st.edge_prefix.push_back(std::move(prefix));
    st.q_off.push_back(st.queue.size());
  }
  return st;
}

void backward_sweep(const Graph& g, RoundState& st, const RoundOptions& opts) {
  const std::size_t levels = st.num_levels();
  if (levels < 2) return;
  const bool weighted = !opts.omega.empty();
  std::vector<eid_t> recomputed;
  // Leaves have no successors: start one level above the deepest.
  for (std::size_t level = levels - 1; level-- > 1;) {
    auto frontier = st.frontier(level);
    const std::vector<eid_t>* prefix = &st.edge_prefix[level];
    if (opts.prefix == PrefixPolicy::kRecompute) {
      recomputed = frontier_offsets(g, frontier);
      ++st.counters.backward_scans;
      prefix = &recomputed;
    }
    const eid_t total = prefix->back();
    std::span<const eid_t> pspan(prefix->data(), prefix->size() - 1);
    const auto next = static_cast<std::int32_t>(level + 1);
    for (eid_t i = 0; i < total; ++i) {
      auto item = map_work_item(pspan, total, i);
      const vid_t w = frontier[item.frontier_slot];
      const vid_t v = g.neighbors(w)[item.local_edge];
      if (st.depth[v] == next) {
        double term = 1.0 + st.delta[v];
        if (weighted) term += opts.omega[v];
        st.delta[w] += term / st.sigma[v];
      }
    }
    for (vid_t w : frontier) st.delta[w] *= st.sigma[w];
  }
}

RoundState brandes_round(const Graph& g, vid_t s, const RoundOptions& opts) {
  RoundState st = forward_sweep(g, s, opts);
  backward_sweep(g, st, opts);
  return st;
}

void BcStats::merge(const BcStats& other) {
  rounds += other.rounds;
  forward_seconds += other.forward_seconds;
  backward_seconds += other.backward_seconds;
  counters.forward_scans += other.counters.forward_scans;
  counters.backward_scans += other.counters.backward_scans;
}

namespace {

void run_rounds(const Graph& g, std::span<const vid_t> sources, PrefixPolicy policy,
                BcScores& scores, BcStats& stats) {
  RoundOptions ropts;
  ropts.prefix = policy;
  for (vid_t s : sources) {
    if (g.degree(s) == 0) continue;
    auto t0 = Clock::now();
    RoundState st = forward_sweep(g, s, ropts);
    auto t1 = Clock::now();
    backward_sweep(g, st, ropts);
    stats.backward_seconds += seconds_since(t1);
    stats.forward_seconds += std::chrono::duration<double>(t1 - t0).count();
    stats.counters.forward_scans += st.counters.forward_scans;
    stats.counters.backward_scans += st.counters.backward_scans;
    ++stats.rounds;
    for (std::size_t k = 1; k < st.queue.size(); ++k) {
      const vid_t w = st.queue[k];
      scores[w] += st.delta[w];
    }
  }
}

}  // namespace

BcScores bc_exact(const Graph& g, std::optional<std::span<const vid_t>> sources,
                  const BcOptions& opts) {
  const vid_t n = g.num_vertices();
  std::vector<vid_t> all;
  if (!sources) {
    all.resize(n);
    for (vid_t v = 0; v < n; ++v) all[v] = v;
    sources = std::span<const vid_t>(all);
  }
  for (vid_t s : *sources)
    if (s >= n) throw InputError("source " + std::to_string(s) + " out of range");

  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(opts.threads, sources->size()));
  std::vector<BcScores> partial(chunks, BcScores(n, 0.0));
  std::vector<BcStats> stats(chunks);
  const std::size_t per = (sources->size() + chunks - 1) / std::max<std::size_t>(chunks, 1);
  auto work = [&](std::size_t c) {
    const std::size_t lo = std::min(sources->size(), c * per);
    const std::size_t hi = std::min(sources->size(), lo + per);
    run_rounds(g, sources->subspan(lo, hi - lo), opts.prefix, partial[c], stats[c]);
  };
  if (chunks == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t c = 0; c < chunks; ++c) pool.emplace_back(work, c);
  }

  BcScores scores = std::move(partial[0]);
  for (std::size_t c = 1; c < chunks; ++c)
    for (vid_t v = 0; v < n; ++v) scores[v] += partial[c][v];
  if (opts.stats)
    for (const auto& s : stats) opts.stats->merge(s);
  return scores;
}

double teps(std::uint64_t m, std::uint64_t n_eff, double seconds) {
  if (!(seconds > 0)) throw InputError("elapsed time must be positive");
  return static_cast<double>(m) * static_cast<double>(n_eff) / seconds;
}

}  // namespace bcx
