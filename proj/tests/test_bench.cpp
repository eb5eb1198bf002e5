#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "jcenter/bench.hpp"
#include "jcenter/generator.hpp"

using namespace jcenter;
using namespace std::chrono_literals;

namespace {

// RFC 4180 reader: quoted fields, doubled quotes, CRLF tolerant.
std::vector<std::vector<std::string>> read_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      any = true;
    } else if (c == ',') {
      row.push_back(field);
      field.clear();
      any = true;
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      row.push_back(field);
      rows.push_back(row);
      row.clear();
      field.clear();
      any = false;
    } else {
      field += c;
      any = true;
    }
  }
  if (any) {
    row.push_back(field);
    rows.push_back(row);
  }
  return rows;
}

BenchmarkRecord make_record(std::size_t i) {
  BenchmarkRecord r;
  r.target = {100 + i, 300 + 7 * i, 2 + i % 4};
  r.measured_depth = 2 + i % 3;
  r.seed = 1000 + i;
  r.t_fw = std::chrono::nanoseconds(12'345'678 + 1'111 * static_cast<long long>(i));
  r.t_new = std::chrono::nanoseconds(1'000'001 * static_cast<long long>(i + 1));
  r.correct = true;
  return r;
}

const std::vector<std::string> kHeader = {"N", "NA", "P_target", "P_measured", "seed",
                                          "t_fw_ms", "t_new_ms", "speedup", "flag"};

}  // namespace

TEST(EmitTable, EmptyIsHeaderOnly) {
  const auto csv = read_csv(emit_table({}, TableFormat::csv));
  ASSERT_EQ(csv.size(), 1u);
  EXPECT_EQ(csv[0], kHeader);
  const std::string md = emit_table({}, TableFormat::markdown);
  EXPECT_EQ(std::count(md.begin(), md.end(), '\n'), 2);
}

TEST(EmitTable, OneRecordParsesBack) {
  const BenchmarkRecord r = make_record(0);
  const auto csv = read_csv(emit_table(std::vector{r}, TableFormat::csv));
  ASSERT_EQ(csv.size(), 2u);
  const auto& row = csv[1];
  ASSERT_EQ(row.size(), 9u);
  EXPECT_EQ(std::stoul(row[0]), r.target.nodes);
  EXPECT_EQ(std::stoul(row[1]), r.target.edges);
  EXPECT_EQ(std::stoul(row[2]), r.target.depth);
  EXPECT_EQ(std::stoul(row[3]), r.measured_depth);
  EXPECT_EQ(std::stoull(row[4]), r.seed);
  EXPECT_EQ(std::llround(std::stod(row[5]) * 1e6), r.t_fw.count());
  EXPECT_EQ(std::llround(std::stod(row[6]) * 1e6), r.t_new.count());
  EXPECT_NEAR(std::stod(row[7]), r.speedup(), 5e-5);
  EXPECT_EQ(row[8], "10x");
}

TEST(EmitTable, TenRecordsCsvRoundTrip) {
  std::vector<BenchmarkRecord> records;
  for (std::size_t i = 0; i < 10; ++i) records.push_back(make_record(i));
  const auto csv = read_csv(emit_table(records, TableFormat::csv));
  ASSERT_EQ(csv.size(), 11u);
  EXPECT_EQ(csv[0], kHeader);
  for (std::size_t i = 0; i < 10; ++i) {
    ASSERT_EQ(csv[i + 1].size(), 9u);
    EXPECT_EQ(std::stoull(csv[i + 1][4]), records[i].seed);
    EXPECT_EQ(std::llround(std::stod(csv[i + 1][6]) * 1e6), records[i].t_new.count());
    EXPECT_EQ(csv[i + 1][8], speedup_flag(records[i]));
  }
}

TEST(EmitTable, MarkdownHasThreadsAndFlags) {
  BenchmarkRecord slow = make_record(1);
  slow.t_new = slow.t_fw * 2;
  const std::string md = emit_table(std::vector{slow}, TableFormat::markdown, 4);
  EXPECT_EQ(md.rfind("Threads: 4\n", 0), 0u);
  EXPECT_NE(md.find("| Floyd-Warshall (ms) | New algorithm (ms) |"), std::string::npos);
  EXPECT_NE(md.find("| slower |"), std::string::npos);
}

TEST(EmitTable, SkipsIncorrectRecords) {
  BenchmarkRecord bad = make_record(2);
  bad.correct = false;
  EXPECT_EQ(read_csv(emit_table(std::vector{bad}, TableFormat::csv)).size(), 1u);
}

TEST(SpeedupFlag, Thresholds) {
  BenchmarkRecord r = make_record(0);
  r.t_fw = 100ns;
  r.t_new = 101ns;
  EXPECT_EQ(speedup_flag(r), "slower");
  r.t_new = 100ns;
  EXPECT_EQ(speedup_flag(r), "");
  r.t_new = 10ns;
  EXPECT_EQ(speedup_flag(r), "10x");
}

TEST(MedianTime, MonotoneUnderAddedSleep) {
  auto work = [] {
    volatile double x = 0;
    for (int i = 0; i < 20000; ++i) x = x + 1.0;
  };
  const auto base = median_time(work, 5, 1);
  const auto slowed = median_time(
      [&] {
        work();
        std::this_thread::sleep_for(2ms);
      },
      5, 1);
  EXPECT_GT(slowed, base);
  EXPECT_GE(slowed, 2ms);
  EXPECT_THROW(median_time(work, 0), std::invalid_argument);
}

TEST(RunBenchmark, SingleNodeAndSmallSpecs) {
  const std::vector<Morphology> specs = {{1, 0, 0}, {30, 60, 3}};
  BenchmarkOptions options;
  options.seeds_per_spec = 2;
  options.repetitions = 3;
  const auto records = run_benchmark(specs, options);
  ASSERT_EQ(records.size(), 4u);
  for (const auto& r : records) {
    EXPECT_TRUE(r.correct);
    EXPECT_GT(r.t_fw.count(), 0);
    EXPECT_GT(r.t_new.count(), 0);
  }
  EXPECT_EQ(records[0].measured_depth, 0u);
  EXPECT_EQ(records[2].measured_depth, 3u);
  EXPECT_EQ(records[3].seed, 2u);
}

TEST(RunBenchmark, InfeasibleSpecRejectedUpFront) {
  const std::vector<Morphology> specs = {{10, 3, 1}};
  EXPECT_THROW(run_benchmark(specs, {}), std::invalid_argument);
}

TEST(DeskPreset, AllFeasible) {
  const auto specs = desk_preset();
  EXPECT_GE(specs.size(), 9u);
  for (const auto& m : specs) {
    EXPECT_NO_THROW(validate_morphology(m));
    EXPECT_TRUE(m.nodes == 100 || m.nodes == 200 || m.nodes == 300);
    EXPECT_LE(m.depth, m.nodes / 4);
  }
}

TEST(ParseSpecFile, LinesAndErrors) {
  const auto specs = parse_spec_file("# N NA P\n100 200 3\n\n 50 49 10 \n");
  ASSERT_EQ(specs.size(), 2u);
  EXPECT_EQ(specs[1], (Morphology{50, 49, 10}));
  try {
    parse_spec_file("10 20 1\n10 x 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_spec_file("10 5 1\n"), ParseError);
  EXPECT_THROW(parse_spec_file("10 20 1 4\n"), ParseError);
}
