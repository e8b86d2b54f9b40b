#include "bcx/cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "bcx/brandes.hpp"
#include "bcx/degree1.hpp"
#include "bcx/degree2.hpp"
#include "bcx/dist/dist_bc.hpp"
#include "bcx/dist/executor.hpp"
#include "bcx/errors.hpp"
#include "bcx/graph.hpp"
#include "bcx/oracle.hpp"
#include "bcx/rmat.hpp"

namespace bcx::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct GraphSource {
  std::string input;
  RmatParams rmat;

  void add_options(CLI::App* app) {
    app->add_option("-i,--input", input, "Edge list or binary graph file");
    app->add_option("--scale", rmat.scale, "R-MAT scale (2^scale vertices)");
    app->add_option("--ef", rmat.edge_factor, "R-MAT edge factor");
    app->add_option("--seed", rmat.seed, "Random seed (R-MAT and source sampling)");
    app->add_option("-a", rmat.a, "R-MAT quadrant probability a");
    app->add_option("-b", rmat.b, "R-MAT quadrant probability b");
    app->add_option("-c", rmat.c, "R-MAT quadrant probability c");
    app->add_option("-d", rmat.d, "R-MAT quadrant probability d");
  }

  Graph load() const {
    if (!input.empty()) return load_graph_file(input);
    return build_undirected(generate_rmat(rmat));
  }
};

struct ComputeConfig {
  GraphSource graph;
  std::string mode = "h0";
  std::string mesh;
  std::uint32_t fd = 0;
  std::uint32_t fr = 1;
  std::string sources = "all";
  std::string output;
  std::string format = "txt";
  bool verify = false;
  std::size_t oracle_limit = 512;
  double tolerance = 1e-6;
  std::string report_json;
  std::string stats_csv;
  unsigned threads = 0;
};

struct VerifyConfig {
  GraphSource graph;
  std::string modes = "h0,h1,h2,h3";
  std::string scores;
  std::size_t oracle_limit = 512;
  bool force = false;
  double tolerance = 1e-6;
};

struct GenerateConfig {
  RmatParams rmat;
  std::string output;
  bool binary = false;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, sep);)
    if (!item.empty()) parts.push_back(item);
  return parts;
}

std::uint64_t parse_count(const std::string& text, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ConfigError(std::string("bad ") + what + ": '" + text + "'");
  return value;
}

std::pair<std::uint32_t, std::uint32_t> parse_mesh(const std::string& text) {
  const auto x = text.find_first_of("xX");
  if (x == std::string::npos) throw ConfigError("mesh must look like RxC, got '" + text + "'");
  const auto r = parse_count(text.substr(0, x), "mesh rows");
  const auto c = parse_count(text.substr(x + 1), "mesh columns");
  if (r == 0 || c == 0 || r > 1024 || c > 1024) throw ConfigError("mesh dimensions must be in [1, 1024]");
  return {static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c)};
}

std::vector<vid_t> non_isolated(const Graph& g) {
  std::vector<vid_t> out;
  for (vid_t v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) > 0) out.push_back(v);
  return out;
}

/// "all" -> nullopt; "k" -> k non-isolated vertices drawn with the seed;
/// "v1,v2,..." -> that list.
std::optional<std::vector<vid_t>> select_sources(const Graph& g, const std::string& spec,
                                                 std::uint64_t seed) {
  if (spec == "all") return std::nullopt;
  if (spec.find(',') != std::string::npos || spec.starts_with("=")) {
    std::vector<vid_t> list;
    for (const auto& item : split(spec.starts_with("=") ? spec.substr(1) : spec, ',')) {
      const auto v = parse_count(item, "source id");
      if (v >= g.num_vertices()) throw ConfigError("source " + item + " out of range");
      list.push_back(static_cast<vid_t>(v));
    }
    return list;
  }
  const auto k = parse_count(spec, "source count");
  auto pool = non_isolated(g);
  if (k == 0 || k > pool.size())
    throw ConfigError("--sources " + spec + " must be in [1, " + std::to_string(pool.size()) +
                      "] (non-isolated vertices)");
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.next() % (pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

void write_scores(std::ostream& out, const BcScores& bc, const std::string& format) {
  char buf[64];
  if (format == "csv") out << "vertex,bc\n";
  for (std::size_t v = 0; v < bc.size(); ++v) {
    std::snprintf(buf, sizeof buf, format == "csv" ? "%zu,%.6f\n" : "%zu %.6f\n", v, bc[v]);
    out << buf;
  }
}

/// Reads "v score" or "v,score" lines; a leading non-numeric line is a header.
BcScores read_scores(const std::string& path, vid_t n) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  BcScores bc(n, 0.0);
  std::vector<bool> seen(n, false);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ss(line);
    std::uint64_t v = 0;
    double score = 0;
    if (!(ss >> v >> score)) {
      if (line_no == 1 || line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw ParseError(line_no, "expected 'vertex score'");
    }
    if (v >= n) throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range");
    bc[v] = score;
    seen[v] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw InputError(path + " does not cover every vertex");
  return bc;
}

struct Comparison {
  bool pass = true;
  double worst_error = 0;
  vid_t worst_vertex = 0;
};

/// Per-vertex error |got - want| / max(1, |want|): relative for large
/// scores, absolute near zero where many exact scores sit.
Comparison compare(const BcScores& got, const BcScores& want, double tolerance) {
  Comparison c;
  for (std::size_t v = 0; v < want.size(); ++v) {
    const double err = std::abs(got[v] - want[v]) / std::max(1.0, std::abs(want[v]));
    if (err > c.worst_error || (std::isnan(err) && c.pass)) {
      c.worst_error = err;
      c.worst_vertex = static_cast<vid_t>(v);
    }
    if (!(err <= tolerance)) c.pass = false;
  }
  return c;
}

unsigned resolve_threads(unsigned requested) {
  unsigned threads = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  return std::min(threads, dist::threads_from_env(threads));
}

struct RunReport {
  std::string mode;
  std::string mesh;
  vid_t n = 0;
  eid_t m = 0;
  double preprocess_seconds = 0;
  std::optional<double> forward_seconds;
  std::optional<double> backward_seconds;
  std::optional<double> communication_seconds;
  double compute_seconds = 0;
  double total_seconds = 0;
  std::uint64_t rounds = 0;
  VertexBreakdown breakdown;
  std::optional<std::uint64_t> sampled;
  double teps = 0;
  double expected_seconds = 0;

  nlohmann::json to_json() const {
    auto opt = [](const std::optional<double>& x) { return x ? nlohmann::json(*x) : nlohmann::json(); };
    nlohmann::json j;
    j["mode"] = mode;
    j["mesh"] = mesh;
    j["n"] = n;
    j["m"] = m;
    j["seconds"] = {{"preprocess", preprocess_seconds},
                    {"forward", opt(forward_seconds)},
                    {"backward", opt(backward_seconds)},
                    {"communication", opt(communication_seconds)},
                    {"compute", compute_seconds},
                    {"total", total_seconds}};
    j["rounds"] = rounds;
    j["breakdown"] = {{"explicit", breakdown.explicit_rounds},
                      {"one_degree", breakdown.one_degree},
                      {"two_degree", breakdown.two_degree},
                      {"isolated", breakdown.isolated},
                      {"one_degree_candidates", breakdown.one_degree_candidates},
                      {"two_degree_candidates", breakdown.two_degree_candidates}};
    j["sampled_sources"] = sampled ? nlohmann::json(*sampled) : nlohmann::json();
    j["teps"] = teps;
    j["expected_seconds"] = expected_seconds;
    return j;
  }

  void print(std::ostream& out) const {
    char buf[256];
    auto time = [&](const char* name, std::optional<double> t) {
      if (t) std::snprintf(buf, sizeof buf, "  %-14s %.6f s\n", name, *t);
      else std::snprintf(buf, sizeof buf, "  %-14s -\n", name);
      out << buf;
    };
    out << "mode " << mode << ", mesh " << mesh << ", n " << n << ", m " << m << "\n";
    time("preprocess", preprocess_seconds);
    time("forward", forward_seconds);
    time("backward", backward_seconds);
    time("communication", communication_seconds);
    time("compute", compute_seconds);
    time("total", total_seconds);
    out << "rounds executed " << rounds;
    if (sampled) out << " (sampled " << *sampled << " sources)";
    out << "\n";
    std::snprintf(buf, sizeof buf, " (%.2f%% of n)",
                  n == 0 ? 0.0 : 100.0 * static_cast<double>(breakdown.one_degree) / n);
    out << "vertices: explicit " << breakdown.explicit_rounds << ", 1-degree " << breakdown.one_degree
        << " of " << breakdown.one_degree_candidates << buf << ", 2-degree " << breakdown.two_degree << " of "
        << breakdown.two_degree_candidates << ", isolated " << breakdown.isolated << ", total "
        << breakdown.total() << "\n";
    std::snprintf(buf, sizeof buf, "TEPS %.6e\n", teps);
    out << buf;
    if (sampled) {
      std::snprintf(buf, sizeof buf, "expected time for the whole graph %.6f s\n", expected_seconds);
      out << buf;
    }
  }
};

int cmd_generate(const GenerateConfig& cfg, std::ostream& out) {
  if (cfg.rmat.scale < 1 || cfg.rmat.scale > 31)
    throw ConfigError("--scale must be in [1, 31]");
  const EdgeList raw = generate_rmat(cfg.rmat);
  const Graph g = build_undirected(raw);
  if (cfg.binary) {
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f) throw InputError("cannot write " + cfg.output);
    write_binary(f, g);
  } else {
    std::ofstream f(cfg.output);
    if (!f) throw InputError("cannot write " + cfg.output);
    write_edge_list(f, raw);
  }
  out << "vertices " << raw.n << "\n";
  out << "raw edges " << raw.pairs.size() << "\n";
  out << "unique edges " << g.num_edges() << "\n";
  return kOk;
}

int cmd_compute(const ComputeConfig& cfg, std::ostream& out, std::ostream& err) {
  const HeuristicMode mode = parse_mode(cfg.mode);
  if (cfg.format != "txt" && cfg.format != "csv") throw ConfigError("--format must be txt or csv");
  std::optional<dist::MeshConfig> mesh;
  if (!cfg.mesh.empty()) {
    auto [r, c] = parse_mesh(cfg.mesh);
    const std::uint32_t fd = cfg.fd == 0 ? r * c : cfg.fd;
    if (cfg.fr == 0) throw ConfigError("--fr must be positive");
    mesh = dist::make_mesh(fd * cfg.fr, r, c, fd);
  } else if (cfg.fd != 0 || cfg.fr != 1 || !cfg.stats_csv.empty()) {
    throw ConfigError("--fd, --fr and --stats-csv require --mesh");
  }

  const auto t_total = Clock::now();
  const Graph g = cfg.graph.load();
  const auto sources = select_sources(g, cfg.sources, cfg.graph.rmat.seed);
  if ((sources || mesh) && mode != HeuristicMode::H0)
    throw ConfigError("--mesh and source subsets run plain rounds; use --mode h0");

  const unsigned threads = resolve_threads(cfg.threads);
  RunReport report;
  report.mode = std::string(to_string(mode));
  report.mesh = mesh ? std::to_string(mesh->rows) + "x" + std::to_string(mesh->cols) + " fd " +
                           std::to_string(mesh->fd) + " fr " + std::to_string(mesh->fr)
                     : "serial";
  report.n = g.num_vertices();
  report.m = g.num_edges();

  const auto pool = non_isolated(g);
  BcScores bc;
  const auto t_compute = Clock::now();
  std::optional<std::span<const vid_t>> src_span;
  if (sources) src_span = std::span<const vid_t>(*sources);
  if (mesh) {
    auto res = dist::run_distributed_bc(g, *mesh, src_span, {.threads = threads});
    bc = std::move(res.scores);
    report.rounds = res.rounds;
    report.communication_seconds = res.stats.seconds;
    if (!cfg.stats_csv.empty()) {
      std::ofstream f(cfg.stats_csv);
      if (!f) throw InputError("cannot write " + cfg.stats_csv);
      res.stats.write_csv(f);
    }
  } else if (mode == HeuristicMode::H0) {
    BcStats stats;
    bc = bc_exact(g, src_span, {.threads = threads, .prefix = PrefixPolicy::kReuse, .stats = &stats});
    report.rounds = stats.rounds;
    report.forward_seconds = stats.forward_seconds;
    report.backward_seconds = stats.backward_seconds;
  } else {
    VertexBreakdown bd;
    bc = bc_with_heuristics(g, mode, &bd);
    report.breakdown = bd;
    report.rounds = bd.explicit_rounds;
    report.preprocess_seconds = bd.preprocess_seconds;
    report.forward_seconds = bd.bc.forward_seconds;
    report.backward_seconds = bd.bc.backward_seconds;
  }
  const double compute_seconds = std::max(seconds_since(t_compute), 1e-9);
  report.compute_seconds = compute_seconds;

  if (mode == HeuristicMode::H0) {
    // Breakdown of the whole-graph job; sampled runs extrapolate to it.
    report.breakdown.explicit_rounds = pool.size();
    report.breakdown.isolated = g.num_vertices() - pool.size();
    for (vid_t v : pool) {
      report.breakdown.one_degree_candidates += g.degree(v) == 1;
      report.breakdown.two_degree_candidates += g.degree(v) == 2;
    }
  }
  if (sources) {
    report.sampled = sources->size();
    report.teps = teps(g.num_edges(), sources->size(), compute_seconds);
    report.expected_seconds =
        sources->empty() ? 0.0 : compute_seconds * static_cast<double>(pool.size()) / sources->size();
  } else {
    report.teps = teps(g.num_edges(), g.num_vertices(), compute_seconds);
    report.expected_seconds = compute_seconds;
  }
  report.total_seconds = seconds_since(t_total);

  if (!cfg.output.empty()) {
    std::ofstream f(cfg.output);
    if (!f) throw InputError("cannot write " + cfg.output);
    write_scores(f, bc, cfg.format);
  } else {
    write_scores(out, bc, cfg.format);
  }
  report.print(cfg.output.empty() ? err : out);
  if (!cfg.report_json.empty()) {
    std::ofstream f(cfg.report_json, std::ios::app);
    if (!f) throw InputError("cannot write " + cfg.report_json);
    f << report.to_json().dump() << "\n";
  }

  if (cfg.verify) {
    BcScores want;
    if (sources) {
      want = bc_exact(g, src_span);
    } else {
      if (g.num_vertices() > cfg.oracle_limit)
        throw ConfigError("graph has " + std::to_string(g.num_vertices()) +
                          " vertices, above --oracle-limit " + std::to_string(cfg.oracle_limit));
      want = bc_oracle(g);
    }
    const auto c = compare(bc, want, cfg.tolerance);
    char buf[160];
    std::snprintf(buf, sizeof buf, "verify %s: worst error %.3e at vertex %u\n",
                  c.pass ? "pass" : "FAIL", c.worst_error, c.worst_vertex);
    (cfg.output.empty() ? err : out) << buf;
    if (!c.pass) return kMismatch;
  }
  return kOk;
}

int cmd_verify(const VerifyConfig& cfg, std::ostream& out) {
  const Graph g = cfg.graph.load();
  if (g.num_vertices() > cfg.oracle_limit && !cfg.force)
    throw ConfigError("graph has " + std::to_string(g.num_vertices()) +
                      " vertices, above --oracle-limit " + std::to_string(cfg.oracle_limit) +
                      "; pass --force to run anyway");
  const BcScores want = bc_oracle(g);
  bool all_pass = true;
  char buf[200];
  auto report = [&](const std::string& label, const BcScores& got, const std::string& extra) {
    const auto c = compare(got, want, cfg.tolerance);
    all_pass = all_pass && c.pass;
    std::snprintf(buf, sizeof buf, "%s: %s, worst error %.3e at vertex %u (got %.9f, oracle %.9f)%s\n",
                  label.c_str(), c.pass ? "pass" : "FAIL", c.worst_error, c.worst_vertex,
                  got[c.worst_vertex], want[c.worst_vertex], extra.c_str());
    out << buf;
  };
  if (g.num_vertices() == 0) {
    out << "empty graph: pass\n";
    return kOk;
  }
  if (!cfg.scores.empty()) {
    report(cfg.scores, read_scores(cfg.scores, g.num_vertices()), "");
  } else {
    for (const auto& name : split(cfg.modes, ',')) {
      const HeuristicMode mode = parse_mode(name);
      VertexBreakdown bd;
      const BcScores got = bc_with_heuristics(g, mode, &bd);
      const std::uint64_t skipped = bd.one_degree + bd.two_degree;
      report(std::string(to_string(mode)), got, ", " + std::to_string(skipped) + " rounds skipped");
    }
  }
  return all_pass ? kOk : kMismatch;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact betweenness centrality with degree-1/degree-2 heuristics and a simulated "
               "2-D partitioned runtime"};
  app.footer(
      "Scores are unnormalized sums over ordered pairs (s, t), so every unordered pair counts twice.\n"
      "BCX_THREADS caps the number of worker threads.");
  app.require_subcommand(1);

  GenerateConfig gen;
  auto* generate = app.add_subcommand("generate", "Write an R-MAT edge list");
  generate->add_option("--scale", gen.rmat.scale, "2^scale vertices")->required();
  generate->add_option("--ef", gen.rmat.edge_factor, "Edge factor");
  generate->add_option("--seed", gen.rmat.seed, "Seed");
  generate->add_option("-a", gen.rmat.a);
  generate->add_option("-b", gen.rmat.b);
  generate->add_option("-c", gen.rmat.c);
  generate->add_option("-d", gen.rmat.d);
  generate->add_option("-o,--output", gen.output, "Output path")->required();
  generate->add_flag("--binary", gen.binary, "Write the deduplicated CSR as a binary cache");

  ComputeConfig comp;
  auto* compute = app.add_subcommand("compute", "Compute BC scores and a run report");
  comp.graph.add_options(compute);
  compute->add_option("--mode", comp.mode, "h0 | h1 | h2 | h3");
  compute->add_option("--mesh", comp.mesh, "Distributed run on an RxC mesh");
  compute->add_option("--fd", comp.fd, "Workers per sub-cluster (defaults to R*C)");
  compute->add_option("--fr", comp.fr, "Number of sub-clusters");
  compute->add_option("--sources", comp.sources, "all | k (random, seeded) | v1,v2,...");
  compute->add_option("-o,--output", comp.output, "Scores file (default stdout)");
  compute->add_option("--format", comp.format, "txt | csv");
  compute->add_flag("--verify", comp.verify, "Check the scores against the reference");
  compute->add_option("--oracle-limit", comp.oracle_limit, "Largest n accepted by the oracle");
  compute->add_option("--tolerance", comp.tolerance, "Verification tolerance");
  compute->add_option("--report-json", comp.report_json, "Append the run report as a JSON line");
  compute->add_option("--stats-csv", comp.stats_csv, "Write per-channel message counts (mesh runs)");
  compute->add_option("--threads", comp.threads, "Worker threads (0 = hardware; capped by BCX_THREADS)");

  VerifyConfig ver;
  auto* verify = app.add_subcommand("verify", "Compare modes or a scores file with the oracle");
  ver.graph.add_options(verify);
  verify->add_option("--modes", ver.modes, "Comma-separated modes");
  verify->add_option("--scores", ver.scores, "Check this scores file instead of running modes");
  verify->add_option("--oracle-limit", ver.oracle_limit, "Largest n accepted by the oracle");
  verify->add_flag("--force", ver.force, "Run the oracle above the limit");
  verify->add_option("--tolerance", ver.tolerance, "Verification tolerance");

  std::vector<std::string> argv_store{"bcx"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (generate->parsed()) return cmd_generate(gen, out);
    if (compute->parsed()) return cmd_compute(comp, out, err);
    return cmd_verify(ver, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  }
}

}  // namespace bcx::cli
