// jcenter: Jordan center and distance-to-center layering of undirected graphs.
//
//   jcenter center FILE
//   jcenter partition FILE [--format json|dot] [--no-doubling]
//   jcenter gen --nodes N --edges NA --depth P [--seed S] [--out FILE]
//   jcenter bench [--preset desk | --spec-file FILE] [--reps R] [--seeds K]
//                 [--format csv|markdown] [--out FILE]
//
// Results go to stdout (or --out), diagnostics to stderr. FILE may be "-".

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <omp.h>

#include <CLI11.hpp>

#include "jcenter/baseline.hpp"
#include "jcenter/bench.hpp"
#include "jcenter/export.hpp"
#include "jcenter/generator.hpp"
#include "jcenter/graph.hpp"
#include "jcenter/partition.hpp"

namespace {

using namespace jcenter;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

Graph load_graph(const std::string& path) {
  ParseStats stats;
  Graph g = parse_edge_list(read_input(path), &stats);
  if (stats.self_loops > 0)
    std::cerr << "warning: dropped " << stats.self_loops << " self-loop line(s)\n";
  if (stats.duplicate_edges > 0)
    std::cerr << "warning: dropped " << stats.duplicate_edges << " duplicate edge(s)\n";
  if (!check_connected(g)) throw NotConnectedError();
  return g;
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("ECC_THREADS")) {
    try {
      int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid ECC_THREADS=" << env << "\n";
  }
  return omp_get_num_procs();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jordan center and distance-to-center layering of undirected graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = 0;
  app.add_option("--threads", threads, "Worker threads (default: $ECC_THREADS, else all cores)")
      ->check(CLI::PositiveNumber);

  std::string input;
  auto* center = app.add_subcommand("center", "Print the radius and the center nodes");
  center->add_option("file", input, "Edge-list file, or - for stdin")->required();

  std::string format = "json";
  bool no_doubling = false;
  auto* part = app.add_subcommand("partition", "Print every node's layer");
  part->add_option("file", input, "Edge-list file, or - for stdin")->required();
  part->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "dot"}));
  part->add_flag("--no-doubling", no_doubling, "Step one power at a time to reach the radius");

  Morphology morph;
  std::uint64_t seed = 1;
  std::string out_path;
  auto* gen = app.add_subcommand("gen", "Write a random connected graph with a target shape");
  gen->add_option("--nodes", morph.nodes, "Node count N")->required();
  gen->add_option("--edges", morph.edges, "Edge count NA")->required();
  gen->add_option("--depth", morph.depth, "Target depth P (diameter - radius)")->required();
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--out", out_path, "Output file (default stdout)");

  std::string preset;
  std::string spec_file;
  std::string table_format = "csv";
  BenchmarkOptions bench_opts;
  auto* bench = app.add_subcommand("bench", "Time Floyd-Warshall against the matrix-power method");
  auto* preset_opt =
      bench->add_option("--preset", preset, "Built-in sweep")->check(CLI::IsMember({"desk"}));
  bench->add_option("--spec-file", spec_file, "File of \"N NA P\" lines")->excludes(preset_opt);
  bench->add_option("--reps", bench_opts.repetitions, "Timed repetitions (median)")
      ->check(CLI::PositiveNumber);
  bench->add_option("--seeds", bench_opts.seeds_per_spec, "Graphs per spec")
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_opts.base_seed, "First seed");
  bench->add_option("--format", table_format, "Table format")
      ->check(CLI::IsMember({"csv", "markdown"}));
  bench->add_option("--out", out_path, "Output file (default stdout)");
  bench->add_flag("--no-doubling", no_doubling, "Benchmark without repeated squaring");

  CLI11_PARSE(app, argc, argv);

  try {
    threads = resolve_threads(threads);
    omp_set_num_threads(threads);

    if (*center) {
      const Graph g = load_graph(input);
      const PartitionResult p = partition(g);
      std::vector<std::string> names;
      for (NodeId v : p.center()) names.push_back(g.label(v));
      std::sort(names.begin(), names.end());
      std::cout << "radius " << p.radius << "; center:";
      for (const auto& n : names) std::cout << ' ' << n;
      std::cout << '\n';
    } else if (*part) {
      const Graph g = load_graph(input);
      const PartitionResult p = partition(g, {.use_doubling = !no_doubling});
      std::cout << (format == "dot" ? export_dot(g, p) : export_json(g, p));
    } else if (*gen) {
      const Graph g = generate_morphology(morph, seed);
      const PartitionResult p = oracle_partition(g);
      std::cerr << "measured depth " << p.depth << " (target " << morph.depth << "), radius "
                << p.radius << "\n";
      write_output(out_path, to_edge_list(g));
    } else if (*bench) {
      std::vector<Morphology> specs =
          spec_file.empty() ? desk_preset() : parse_spec_file(read_input(spec_file));
      bench_opts.partition.use_doubling = !no_doubling;
      std::cerr << "threads " << threads << ", " << specs.size() << " spec(s), "
                << bench_opts.seeds_per_spec << " seed(s) each, median of "
                << bench_opts.repetitions << "\n";
      const auto records = run_benchmark(specs, bench_opts);
      write_output(out_path, emit_table(records, table_format == "markdown"
                                                     ? TableFormat::markdown
                                                     : TableFormat::csv,
                                        threads));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
