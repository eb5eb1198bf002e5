#include "jcenter/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "jcenter/baseline.hpp"

namespace jcenter {
namespace {

std::string format_ms(std::chrono::nanoseconds t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", static_cast<double>(t.count()) / 1e6);
  return buf;
}

std::string format_speedup(double s) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", s);
  return buf;
}

std::string describe_mismatch(const char* which, const PartitionResult& got,
                              const PartitionResult& want) {
  std::ostringstream os;
  os << which << " disagrees with BFS oracle: radius " << got.radius << " vs "
     << want.radius;
  for (std::size_t v = 0; v < want.layers.size() && v < got.layers.size(); ++v)
    if (got.layers[v] != want.layers[v]) {
      os << ", first differing node index " << v << " (layer " << got.layers[v] << " vs "
         << want.layers[v] << ")";
      break;
    }
  return os.str();
}

}  // namespace

std::chrono::nanoseconds median_time(const std::function<void()>& fn,
                                     std::size_t repetitions, std::size_t warmup) {
  if (repetitions == 0) throw std::invalid_argument("repetitions must be >= 1");
  using clock = std::chrono::steady_clock;
  for (std::size_t i = 0; i < warmup; ++i) fn();
  std::vector<std::chrono::nanoseconds> samples;
  samples.reserve(repetitions);
  for (std::size_t i = 0; i < repetitions; ++i) {
    const auto start = clock::now();
    fn();
    samples.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - start));
  }
  std::sort(samples.begin(), samples.end());
  const std::size_t mid = samples.size() / 2;
  auto median = samples.size() % 2 ? samples[mid] : (samples[mid - 1] + samples[mid]) / 2;
  return std::max(median, std::chrono::nanoseconds{1});
}

BenchmarkRecord benchmark_graph(const Graph& g, const Morphology& target, std::uint64_t seed,
                                const BenchmarkOptions& options) {
  const PartitionResult expected = oracle_partition(g);
  const PartitionResult fw = floyd_warshall_partition(g);
  const PartitionResult fast = partition(g, options.partition);
  if (!(fw == expected)) throw BenchmarkError(describe_mismatch("floyd-warshall", fw, expected));
  if (!(fast == expected)) throw BenchmarkError(describe_mismatch("partition", fast, expected));

  BenchmarkRecord record;
  record.target = target;
  record.measured_depth = expected.depth;
  record.seed = seed;
  record.correct = true;
  // The verification runs above already warmed both paths once.
  const std::size_t warmup = options.warmup > 0 ? options.warmup - 1 : 0;
  record.t_fw = median_time([&] { (void)floyd_warshall_partition(g); }, options.repetitions, warmup);
  record.t_new = median_time([&] { (void)partition(g, options.partition); }, options.repetitions,
                             warmup);
  return record;
}

std::vector<BenchmarkRecord> run_benchmark(std::span<const Morphology> specs,
                                           const BenchmarkOptions& options) {
  for (const auto& m : specs) validate_morphology(m);
  std::vector<BenchmarkRecord> records;
  for (const auto& m : specs)
    for (std::size_t s = 0; s < options.seeds_per_spec; ++s) {
      const std::uint64_t seed = options.base_seed + s;
      const Graph g = generate_morphology(m, seed);
      records.push_back(benchmark_graph(g, m, seed, options));
    }
  return records;
}

std::string speedup_flag(const BenchmarkRecord& r) {
  const double s = r.speedup();
  if (s < 1.0) return "slower";
  if (s >= 10.0) return "10x";
  return "";
}

std::string emit_table(std::span<const BenchmarkRecord> records, TableFormat format,
                       int threads) {
  std::string out;
  if (format == TableFormat::csv) {
    out = "N,NA,P_target,P_measured,seed,t_fw_ms,t_new_ms,speedup,flag\n";
    for (const auto& r : records) {
      if (!r.correct) continue;
      out += std::to_string(r.target.nodes) + ',' + std::to_string(r.target.edges) + ',' +
             std::to_string(r.target.depth) + ',' + std::to_string(r.measured_depth) + ',' +
             std::to_string(r.seed) + ',' + format_ms(r.t_fw) + ',' + format_ms(r.t_new) + ',' +
             format_speedup(r.speedup()) + ',' + speedup_flag(r) + '\n';
    }
    return out;
  }
  if (threads > 0) out += "Threads: " + std::to_string(threads) + "\n\n";
  out +=
      "| N | NA | P target | P measured | seed | Floyd-Warshall (ms) | New algorithm (ms) "
      "| speedup | flag |\n"
      "|---:|---:|---:|---:|---:|---:|---:|---:|:---|\n";
  for (const auto& r : records) {
    if (!r.correct) continue;
    out += "| " + std::to_string(r.target.nodes) + " | " + std::to_string(r.target.edges) +
           " | " + std::to_string(r.target.depth) + " | " + std::to_string(r.measured_depth) +
           " | " + std::to_string(r.seed) + " | " + format_ms(r.t_fw) + " | " +
           format_ms(r.t_new) + " | " + format_speedup(r.speedup()) + " | " + speedup_flag(r) +
           " |\n";
  }
  return out;
}

std::vector<Morphology> desk_preset() {
  return {
      {100, 99, 3},     {100, 400, 3},    {100, 1500, 2},  {100, 300, 12},  {100, 200, 25},
      {200, 1161, 3},   {200, 2915, 8},   {200, 6000, 2},  {200, 1473, 25}, {200, 600, 50},
      {300, 3145, 26},  {300, 13500, 3},  {300, 6000, 6},  {300, 900, 40},  {300, 600, 75},
  };
}

std::vector<Morphology> parse_spec_file(std::string_view text) {
  std::vector<Morphology> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first) || first.front() == '#') continue;
    std::istringstream all(line);
    long long n = -1, na = -1, p = -1;
    std::string extra;
    if (!(all >> n >> na >> p) || (all >> extra) || n < 1 || na < 0 || p < 0)
      throw ParseError(line_no, "expected \"N NA P\" with non-negative integers");
    Morphology m{static_cast<std::size_t>(n), static_cast<std::size_t>(na),
                 static_cast<std::size_t>(p)};
    try {
      validate_morphology(m);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    out.push_back(m);
  }
  return out;
}

}  // namespace jcenter
