#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace randlp {

/// Generator knobs. Defaults are the two-dimensional demonstration setting
/// (alpha=200, theta=100, rho=50, l_max=0.35, s_min=100, a_max=1000,
/// b_max=10000) that also serves as the CLI default.
struct GeneratorParams {
  std::int64_t n = 2;            // dimension
  std::int64_t d = 0;            // number of random inequalities
  double alpha = 200.0;          // hypercube edge length
  double theta = 100.0;          // large hypersphere radius
  double rho = 50.0;             // small hypersphere radius
  double l_max = 0.35;           // near-parallelism bound
  double s_min = 100.0;          // near-concurrence bound
  double a_max = 1000.0;         // coefficient magnitude bound
  double b_max = 10000.0;        // constant-term magnitude bound
  std::uint64_t seed = 0;
  std::int64_t workers = 1;      // worker count of the parallel engine
  std::uint64_t max_attempts = 1'000'000;  // draws allowed per accepted inequality

  bool operator==(const GeneratorParams&) const = default;
};

struct ParamViolation {
  std::string constraint;  // e.g. "theta ≤ alpha/2"
  std::string detail;      // measured values

  bool operator==(const ParamViolation&) const = default;
};

/// Returns every violated parameter constraint; an empty list means valid.
std::vector<ParamViolation> validate_params(const GeneratorParams& p);

/// Joins violations into one diagnostic line.
std::string describe(const std::vector<ParamViolation>& violations);

/// Throws InvalidParams when validate_params() reports anything.
void require_valid(const GeneratorParams& p);

/// A constraint <a, x> <= b.
struct Inequality {
  std::vector<double> a;
  double b = 0.0;

  std::size_t dimension() const noexcept { return a.size(); }
  bool operator==(const Inequality&) const = default;
};

struct LPInstance {
  std::int64_t n = 0;
  std::vector<Inequality> support;  // 2n+1 rows in canonical order
  std::vector<Inequality> random;   // d rows in acceptance order
  std::vector<double> c;            // objective, maximized
  GeneratorParams params;

  std::size_t m() const noexcept { return support.size() + random.size(); }
  std::size_t d() const noexcept { return random.size(); }

  /// Support rows followed by random rows.
  std::vector<Inequality> constraints() const;

  /// Row i of constraints() without copying the full list.
  const Inequality& row(std::size_t i) const;

  bool operator==(const LPInstance&) const = default;
};

/// Rejection tallies. For the sequential engine `submitted` equals the number
/// of accepted inequalities and the coordinator counters stay zero.
struct GenerationStats {
  std::uint64_t candidates_drawn = 0;
  std::uint64_t rejected_distance = 0;
  std::uint64_t rejected_objective = 0;
  std::uint64_t rejected_similarity = 0;  // sequential engine or worker side (support list)
  std::uint64_t submitted = 0;            // survivors handed to acceptance
  std::uint64_t accepted = 0;
  std::uint64_t rejected_similarity_coordinator = 0;
  std::uint64_t discarded_after_exit = 0;
  std::uint64_t rounds = 0;
  double wall_time_ms = 0.0;

  std::uint64_t total_rejections() const noexcept {
    return rejected_distance + rejected_objective + rejected_similarity;
  }

  /// candidates_drawn = submitted + worker-side rejections, and
  /// submitted = accepted + coordinator rejections + discarded.
  bool conserved() const noexcept {
    return candidates_drawn == submitted + total_rejections() &&
           submitted == accepted + rejected_similarity_coordinator + discarded_after_exit;
  }

  GenerationStats& operator+=(const GenerationStats& o);
};

}  // namespace randlp
