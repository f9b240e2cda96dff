#pragma once

#include <cstdint>
#include <vector>

#include "randlp/model.hpp"

namespace randlp {

/// The 2n+1 support inequalities in canonical order:
///   x_j <= alpha               for j = 1..n
///   -x_j <= 0                  for j = 1..n
///   x_1 + ... + x_n <= (n-1)*alpha + alpha/2
std::vector<Inequality> build_support(std::int64_t n, double alpha);

/// c = theta * (n, n-1, ..., 1).
std::vector<double> build_objective(std::int64_t n, double theta);

/// x = (alpha, ..., alpha, alpha/2), the unique maximizer over the support
/// polytope alone.
std::vector<double> support_only_solution(std::int64_t n, double alpha);

/// Support-only instance for the given parameters (d is ignored).
LPInstance support_only_instance(const GeneratorParams& p);

}  // namespace randlp
