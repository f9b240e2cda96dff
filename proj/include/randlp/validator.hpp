#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "randlp/model.hpp"

namespace randlp {

struct Violation {
  std::size_t constraint = 0;  // row index into LPInstance::constraints()
  std::string condition;       // e.g. "condition 11 (h feasible)"
  double measured = 0.0;
  double bound = 0.0;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;

  void add(Violation v) {
    ok = false;
    violations.push_back(std::move(v));
  }

  bool has(const std::string& condition_prefix) const;
};

std::string to_string(const ValidationReport& report);

/// Re-checks an instance against every generation condition:
/// structure (m = 2n+1+d, canonical support rows, objective), the
/// per-row feasibility of h, the distance band and the objective test for
/// random rows, and pairwise non-likeness across the whole system.
/// Strict conditions are checked exactly; non-strict ones allow 1e-9
/// relative slack.
ValidationReport validate_instance(const LPInstance& inst);

struct SupportOracleResult {
  bool unique_optimum = false;
  std::vector<double> argmax;
  double optimum = 0.0;
  std::size_t vertex_count = 0;
};

/// Brute-force vertex enumeration of the support polytope for n <= 3.
/// Every n-subset of the 2n+1 hyperplanes is solved by Gaussian elimination
/// with partial pivoting; singular subsets are skipped.
/// Throws UnsupportedDimension for n < 1 or n > 3.
SupportOracleResult enumerate_support_vertices(std::int64_t n, double alpha, double theta);

/// True iff (alpha, ..., alpha, alpha/2) is the unique maximizer.
bool verify_support_solution(std::int64_t n, double alpha, double theta);

}  // namespace randlp
