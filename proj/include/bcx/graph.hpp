#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bcx {

using vid_t = std::uint32_t;
using eid_t = std::uint64_t;

/// Undirected edge list as read from disk or produced by a generator.
/// Pairs are kept raw: duplicates, reversed repeats and self-loops are allowed.
struct EdgeList {
  vid_t n = 0;
  std::vector<std::pair<vid_t, vid_t>> pairs;
};

/// Symmetric CSR adjacency of a simple undirected unweighted graph.
///
/// Invariants (established by build_undirected and checked by validate()):
///   row_offsets.size() == n + 1, row_offsets[0] == 0, row_offsets[n] == 2m,
///   every adjacency list strictly increasing, no self-loops, u in adj(v) iff v in adj(u).
class Graph {
 public:
  Graph() : row_offsets_(1, 0) {}
  Graph(vid_t n, std::vector<eid_t> row_offsets, std::vector<vid_t> columns);

  vid_t num_vertices() const noexcept { return n_; }
  /// Undirected edge count m.
  eid_t num_edges() const noexcept { return columns_.size() / 2; }

  eid_t degree(vid_t v) const noexcept { return row_offsets_[v + 1] - row_offsets_[v]; }
  std::span<const vid_t> neighbors(vid_t v) const noexcept {
    return {columns_.data() + row_offsets_[v], columns_.data() + row_offsets_[v + 1]};
  }
  eid_t edge_begin(vid_t v) const noexcept { return row_offsets_[v]; }

  const std::vector<eid_t>& row_offsets() const noexcept { return row_offsets_; }
  const std::vector<vid_t>& columns() const noexcept { return columns_; }

  /// Each undirected edge once, as (u, v) with u < v, in CSR order.
  EdgeList to_edge_list() const;

  /// Throws InputError describing the first violated invariant.
  void validate() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  vid_t n_ = 0;
  std::vector<eid_t> row_offsets_;
  std::vector<vid_t> columns_;
};

/// Normalizes an edge list into a symmetric CSR graph. Self-loops are dropped
/// and duplicates (including (u,v)/(v,u) repeats) merged. Throws InputError if
/// a vertex id is >= n.
Graph build_undirected(const EdgeList& edges);

/// Reads whitespace-separated "u v" lines. '#' starts a comment line; a SNAP
/// style "# Nodes: k" header fixes n = k, otherwise n = 1 + max id.
EdgeList load_edge_list(std::istream& in);
EdgeList load_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const EdgeList& edges);

/// Binary cache: magic "BCX1", then little-endian u64 n, u64 m,
/// u64 row_offsets[n+1], u32 columns[2m].
void write_binary(std::ostream& out, const Graph& g);
Graph read_binary(std::istream& in);

/// Loads either format, sniffing the binary magic.
Graph load_graph_file(const std::string& path);

/// Size of the connected component containing each vertex.
std::vector<std::uint64_t> component_sizes(const Graph& g);

}  // namespace bcx
