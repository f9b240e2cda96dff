#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "randlp/model.hpp"

namespace randlp {

struct BenchResult {
  std::int64_t worker_count = 0;
  double wall_time_ms = 0.0;  // median over repetitions
  double speedup = 1.0;       // baseline time / this time
  std::vector<double> samples_ms;
  GenerationStats stats;      // from the last repetition
};

struct BenchOptions {
  int repetitions = 3;
  bool validate_outputs = false;  // run validate_instance on every output
};

/// Runs generate_parallel for each worker count with the same seed and
/// records the median wall time. The speedup baseline is the 1-worker entry
/// when present, otherwise the first entry. Throws std::runtime_error when
/// validate_outputs is set and an output fails validation.
std::vector<BenchResult> run_benchmark(const GeneratorParams& p,
                                       const std::vector<std::int64_t>& worker_counts,
                                       const BenchOptions& options = {});

/// Table with columns workers, median_ms, speedup; followed by
/// `workers.<L>.wall_time_ms = ...` key/value lines.
void write_bench_table(const std::vector<BenchResult>& results, std::ostream& out);

}  // namespace randlp
