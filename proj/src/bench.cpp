#include "randlp/bench.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include "randlp/generator.hpp"
#include "randlp/instance_io.hpp"
#include "randlp/validator.hpp"

namespace randlp {

namespace {

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 ? v[mid] : (v[mid - 1] + v[mid]) / 2.0;
}

}  // namespace

std::vector<BenchResult> run_benchmark(const GeneratorParams& p,
                                       const std::vector<std::int64_t>& worker_counts,
                                       const BenchOptions& options) {
  if (options.repetitions < 1) throw std::invalid_argument("repetitions must be at least 1");
  std::vector<BenchResult> results;
  results.reserve(worker_counts.size());
  for (std::int64_t workers : worker_counts) {
    GeneratorParams run = p;
    run.workers = workers;
    require_valid(run);

    BenchResult r;
    r.worker_count = workers;
    for (int rep = 0; rep < options.repetitions; ++rep) {
      const auto start = std::chrono::steady_clock::now();
      GenerationResult out = generate_parallel(run);
      const auto stop = std::chrono::steady_clock::now();
      r.samples_ms.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
      if (options.validate_outputs) {
        const auto report = validate_instance(out.instance);
        if (!report.ok) {
          throw std::runtime_error("benchmark output with " + std::to_string(workers) +
                                   " workers failed validation:\n" + to_string(report));
        }
      }
      r.stats = out.stats;
    }
    r.wall_time_ms = median(r.samples_ms);
    results.push_back(std::move(r));
  }

  if (!results.empty()) {
    auto base = std::find_if(results.begin(), results.end(),
                             [](const BenchResult& r) { return r.worker_count == 1; });
    const double baseline = (base != results.end() ? *base : results.front()).wall_time_ms;
    for (auto& r : results) {
      r.speedup = r.wall_time_ms > 0.0 ? baseline / r.wall_time_ms : 1.0;
    }
    // Degenerate runs (d = 0) can time at zero; keep the baseline entry at exactly 1.
    if (base != results.end()) base->speedup = 1.0;
  }
  return results;
}

void write_bench_table(const std::vector<BenchResult>& results, std::ostream& out) {
  out << std::setw(8) << "workers" << std::setw(14) << "median_ms" << std::setw(10) << "speedup"
      << std::setw(8) << "rounds" << '\n';
  for (const auto& r : results) {
    out << std::setw(8) << r.worker_count << std::setw(14) << std::fixed << std::setprecision(3)
        << r.wall_time_ms << std::setw(10) << r.speedup << std::setw(8) << r.stats.rounds << '\n';
  }
  out.unsetf(std::ios::floatfield);
  for (const auto& r : results) {
    out << "workers." << r.worker_count << ".wall_time_ms = " << format_real(r.wall_time_ms)
        << '\n'
        << "workers." << r.worker_count << ".speedup = " << format_real(r.speedup) << '\n';
  }
}

}  // namespace randlp
