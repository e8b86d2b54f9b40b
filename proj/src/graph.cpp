#include "bcx/graph.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstring>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "bcx/errors.hpp"

namespace bcx {

Graph::Graph(vid_t n, std::vector<eid_t> row_offsets, std::vector<vid_t> columns)
    : n_(n), row_offsets_(std::move(row_offsets)), columns_(std::move(columns)) {}

EdgeList Graph::to_edge_list() const {
  EdgeList out;
  out.n = n_;
  out.pairs.reserve(num_edges());
  for (vid_t u = 0; u < n_; ++u)
    for (vid_t v : neighbors(u))
      if (u < v) out.pairs.emplace_back(u, v);
  return out;
}

void Graph::validate() const {
  if (row_offsets_.size() != static_cast<std::size_t>(n_) + 1)
    throw InputError("row_offsets has wrong length");
  if (row_offsets_.front() != 0 || row_offsets_.back() != columns_.size())
    throw InputError("row_offsets endpoints do not match column count");
  if (columns_.size() % 2 != 0) throw InputError("odd number of adjacency entries");
  for (vid_t u = 0; u < n_; ++u) {
    if (row_offsets_[u] > row_offsets_[u + 1]) throw InputError("row_offsets decreasing");
    auto adj = neighbors(u);
    for (std::size_t k = 0; k < adj.size(); ++k) {
      vid_t v = adj[k];
      if (v >= n_) throw InputError("neighbor id out of range");
      if (v == u) throw InputError("self-loop at " + std::to_string(u));
      if (k > 0 && adj[k - 1] >= v) throw InputError("adjacency not strictly increasing");
      auto back = neighbors(v);
      if (!std::binary_search(back.begin(), back.end(), u))
        throw InputError("asymmetric edge " + std::to_string(u) + "-" + std::to_string(v));
    }
  }
}

Graph build_undirected(const EdgeList& edges) {
  const vid_t n = edges.n;
  std::vector<std::pair<vid_t, vid_t>> arcs;
  arcs.reserve(edges.pairs.size() * 2);
  for (auto [u, v] : edges.pairs) {
    if (u >= n || v >= n)
      throw InputError("vertex id " + std::to_string(std::max(u, v)) + " out of range for n=" +
                       std::to_string(n));
    if (u == v) continue;
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  std::vector<eid_t> offsets(static_cast<std::size_t>(n) + 1, 0);
  for (auto [u, v] : arcs) ++offsets[u + 1];
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  std::vector<vid_t> columns(arcs.size());
  std::transform(arcs.begin(), arcs.end(), columns.begin(), [](auto a) { return a.second; });
  return Graph(n, std::move(offsets), std::move(columns));
}

namespace {

bool parse_vertex(std::string_view tok, std::uint64_t& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

}  // namespace

EdgeList load_edge_list(std::istream& in) {
  EdgeList out;
  std::uint64_t max_id = 0;
  bool any = false;
  bool have_header = false;
  std::uint64_t header_n = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      auto pos = line.find("Nodes:");
      if (pos != std::string::npos) {
        std::istringstream hs(line.substr(pos + 6));
        std::uint64_t k = 0;
        if (hs >> k) {
          have_header = true;
          header_n = k;
        }
      }
      continue;
    }
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a >> b)) throw ParseError(lineno, "expected two vertex ids");
    std::uint64_t u = 0, v = 0;
    if (!parse_vertex(a, u)) throw ParseError(lineno, "non-integer token '" + a + "'");
    if (!parse_vertex(b, v)) throw ParseError(lineno, "non-integer token '" + b + "'");
    if (u > UINT32_MAX - 1 || v > UINT32_MAX - 1)
      throw ParseError(lineno, "vertex id exceeds 32 bits");
    out.pairs.emplace_back(static_cast<vid_t>(u), static_cast<vid_t>(v));
    max_id = std::max({max_id, u, v});
    any = true;
  }
  if (have_header) {
    if (header_n > UINT32_MAX) throw InputError("node count exceeds 32 bits");
    out.n = static_cast<vid_t>(header_n);
  } else {
    out.n = any ? static_cast<vid_t>(max_id + 1) : 0;
  }
  return out;
}

EdgeList load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return load_edge_list(in);
}

void write_edge_list(std::ostream& out, const EdgeList& edges) {
  out << "# Nodes: " << edges.n << " Edges: " << edges.pairs.size() << '\n';
  for (auto [u, v] : edges.pairs) out << u << ' ' << v << '\n';
}

namespace {

constexpr std::array<char, 4> kMagic = {'B', 'C', 'X', '1'};

template <typename T>
void put_le(std::ostream& out, T value) {
  std::array<char, sizeof(T)> buf;
  for (std::size_t i = 0; i < sizeof(T); ++i)
    buf[i] = static_cast<char>((static_cast<std::uint64_t>(value) >> (8 * i)) & 0xff);
  out.write(buf.data(), buf.size());
}

template <typename T>
T get_le(std::istream& in) {
  std::array<unsigned char, sizeof(T)> buf{};
  if (!in.read(reinterpret_cast<char*>(buf.data()), buf.size()))
    throw InputError("truncated binary graph");
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) value |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
  return static_cast<T>(value);
}

}  // namespace

void write_binary(std::ostream& out, const Graph& g) {
  out.write(kMagic.data(), kMagic.size());
  put_le<std::uint64_t>(out, g.num_vertices());
  put_le<std::uint64_t>(out, g.num_edges());
  for (eid_t off : g.row_offsets()) put_le<std::uint64_t>(out, off);
  for (vid_t c : g.columns()) put_le<std::uint32_t>(out, c);
}

Graph read_binary(std::istream& in) {
  std::array<char, 4> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic)
    throw InputError("bad binary graph magic");
  auto n = get_le<std::uint64_t>(in);
  auto m = get_le<std::uint64_t>(in);
  if (n > UINT32_MAX) throw InputError("binary graph vertex count exceeds 32 bits");
  std::vector<eid_t> offsets(n + 1);
  for (auto& off : offsets) off = get_le<std::uint64_t>(in);
  std::vector<vid_t> columns(2 * m);
  for (auto& c : columns) c = get_le<std::uint32_t>(in);
  Graph g(static_cast<vid_t>(n), std::move(offsets), std::move(columns));
  g.validate();
  return g;
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::array<char, 4> head{};
  in.read(head.data(), head.size());
  bool binary = in.gcount() == 4 && head == kMagic;
  in.clear();
  in.seekg(0);
  if (binary) return read_binary(in);
  return build_undirected(load_edge_list(in));
}

std::vector<std::uint64_t> component_sizes(const Graph& g) {
  const vid_t n = g.num_vertices();
  constexpr vid_t kNone = ~vid_t{0};
  std::vector<vid_t> label(n, kNone);
  std::vector<std::uint64_t> sizes;
  std::vector<vid_t> stack;
  for (vid_t root = 0; root < n; ++root) {
    if (label[root] != kNone) continue;
    const vid_t id = static_cast<vid_t>(sizes.size());
    std::uint64_t count = 0;
    label[root] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      vid_t u = stack.back();
      stack.pop_back();
      ++count;
      for (vid_t v : g.neighbors(u)) {
        if (label[v] == kNone) {
          label[v] = id;
          stack.push_back(v);
        }
      }
    }
    sizes.push_back(count);
  }
  std::vector<std::uint64_t> out(n);
  for (vid_t v = 0; v < n; ++v) out[v] = sizes[label[v]];
  return out;
}

}  // namespace bcx
