#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jcenter/generator.hpp"
#include "jcenter/partition.hpp"

namespace jcenter {

/// One timed comparison of the Floyd-Warshall baseline against partition().
struct BenchmarkRecord {
  Morphology target;
  std::size_t measured_depth = 0;
  std::uint64_t seed = 0;
  std::chrono::nanoseconds t_fw{0};
  std::chrono::nanoseconds t_new{0};
  bool correct = false;

  double speedup() const {
    return static_cast<double>(t_fw.count()) / static_cast<double>(t_new.count());
  }
};

/// A benchmark run produced a result that disagrees with the BFS oracle.
class BenchmarkError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct BenchmarkOptions {
  std::size_t seeds_per_spec = 1;
  std::size_t repetitions = 3;
  std::size_t warmup = 1;
  std::uint64_t base_seed = 1;
  PartitionOptions partition;
};

/// Median wall time of `repetitions` calls after `warmup` untimed calls,
/// on the steady clock. Never returns less than 1ns.
std::chrono::nanoseconds median_time(const std::function<void()>& fn,
                                     std::size_t repetitions, std::size_t warmup = 1);

/// Verifies both algorithms on `g` against the BFS oracle, then times them.
/// Throws BenchmarkError on a mismatch.
BenchmarkRecord benchmark_graph(const Graph& g, const Morphology& target, std::uint64_t seed,
                                const BenchmarkOptions& options);

/// For each spec and each seed base_seed .. base_seed+seeds_per_spec-1:
/// generate, verify and time. Generation is excluded from the timings.
std::vector<BenchmarkRecord> run_benchmark(std::span<const Morphology> specs,
                                           const BenchmarkOptions& options);

enum class TableFormat { markdown, csv };

/// "slower" when speedup < 1, "10x" when speedup >= 10, otherwise empty.
std::string speedup_flag(const BenchmarkRecord& r);

/// CSV columns: N,NA,P_target,P_measured,seed,t_fw_ms,t_new_ms,speedup,flag.
/// The markdown variant starts with a line naming the thread count (when
/// `threads` > 0) and keeps the same column order.
std::string emit_table(std::span<const BenchmarkRecord> records, TableFormat format,
                       int threads = 0);

/// Desk-scale sweep at N in {100, 200, 300}: sparse to dense, shallow to
/// depth N/4.
std::vector<Morphology> desk_preset();

/// Spec file: one "N NA P" triple per line, '#' comments and blank lines
/// skipped. Throws ParseError with the line number on malformed lines.
std::vector<Morphology> parse_spec_file(std::string_view text);

}  // namespace jcenter
