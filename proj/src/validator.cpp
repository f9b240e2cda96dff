#include "randlp/validator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "randlp/errors.hpp"
#include "randlp/geometry.hpp"
#include "randlp/support.hpp"

namespace randlp {

namespace {

constexpr double kRelTol = 1e-9;

double slack(double x, double y) { return kRelTol * std::max({1.0, std::abs(x), std::abs(y)}); }

}  // namespace

bool ValidationReport::has(const std::string& condition_prefix) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) {
    return v.condition.rfind(condition_prefix, 0) == 0;
  });
}

std::string to_string(const ValidationReport& report) {
  std::ostringstream os;
  os.precision(17);
  if (report.ok) {
    os << "ok\n";
    return os.str();
  }
  for (const auto& v : report.violations) {
    os << "row " << v.constraint << ": " << v.condition << " (measured " << v.measured
       << ", bound " << v.bound << ")\n";
  }
  return os.str();
}

ValidationReport validate_instance(const LPInstance& inst) {
  ValidationReport report;
  const GeneratorParams& p = inst.params;
  const std::int64_t n = inst.n;
  if (n < 1) {
    report.add({0, "dimension n ≥ 1", static_cast<double>(n), 1.0});
    return report;
  }
  const auto dim = static_cast<std::size_t>(n);

  const double expected_m = static_cast<double>(2 * n + 1 + p.d);
  if (inst.support.size() != 2 * dim + 1 || static_cast<std::int64_t>(inst.random.size()) != p.d) {
    report.add({0, "m = 2n+1+d", static_cast<double>(inst.m()), expected_m});
  }
  if (inst.c.size() != dim) {
    report.add({0, "objective length", static_cast<double>(inst.c.size()), static_cast<double>(n)});
    return report;
  }
  for (std::size_t i = 0; i < inst.m(); ++i) {
    if (inst.row(i).a.size() != dim) {
      report.add({i, "row length", static_cast<double>(inst.row(i).a.size()),
                  static_cast<double>(n)});
      return report;
    }
  }

  const auto support = build_support(n, p.alpha);
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (i >= inst.support.size() || !(inst.support[i] == support[i])) {
      report.add({i, "support row mismatch", 0.0, 0.0});
    }
  }
  const auto c = build_objective(n, p.theta);
  if (inst.c != c) {
    for (std::size_t j = 0; j < dim; ++j) {
      if (inst.c[j] != c[j]) report.add({j, "objective coefficient mismatch", inst.c[j], c[j]});
    }
  }

  const CenterPoint h(n, p.alpha);
  const double fh = objective_value(inst.c, h.coords());

  std::vector<NormalizedInequality> normalized;
  std::vector<std::size_t> normalized_rows;
  normalized.reserve(inst.m());
  for (std::size_t i = 0; i < inst.m(); ++i) {
    const Inequality& q = inst.row(i);
    const bool is_random = i >= inst.support.size();
    const double ah = dot(q.a, h.coords());
    if (!(ah <= q.b + slack(ah, q.b))) {
      report.add({i, is_random ? "condition 11 (h feasible)" : "h feasible (support row)", ah, q.b});
    }
    if (!(norm(q.a) > 0.0)) {
      report.add({i, "zero coefficient vector", 0.0, 0.0});
      continue;
    }
    normalized.emplace_back(q);
    normalized_rows.push_back(i);
    if (!is_random) continue;

    const double dist = distance_to_center(h, q);
    if (!(p.rho < dist)) report.add({i, "condition 12 (distance > rho)", dist, p.rho});
    if (!(dist <= p.theta + slack(p.theta, dist))) {
      report.add({i, "condition 12 (distance ≤ theta)", dist, p.theta});
    }
    const double fp = objective_value(inst.c, project_center(h, q));
    if (!(fp > fh)) report.add({i, "condition 13 (objective at projection)", fp, fh});
  }

  for (std::size_t u = 1; u < normalized.size(); ++u) {
    for (std::size_t v = 0; v < u; ++v) {
      if (likeness(normalized[u], normalized[v], p.l_max, p.s_min)) {
        report.add({normalized_rows[u],
                    "condition 14 (alike with row " + std::to_string(normalized_rows[v]) + ")",
                    std::abs(normalized[u].offset - normalized[v].offset), p.s_min});
      }
    }
  }
  return report;
}

namespace {

// Solves rows * x = rhs in place; returns false when singular.
bool solve_dense(std::vector<std::vector<double>> rows, std::vector<double> rhs,
                 std::vector<double>& x) {
  const std::size_t k = rhs.size();
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < k; ++r) {
      if (std::abs(rows[r][col]) > std::abs(rows[pivot][col])) pivot = r;
    }
    if (std::abs(rows[pivot][col]) < 1e-12) return false;
    std::swap(rows[pivot], rows[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t r = col + 1; r < k; ++r) {
      const double factor = rows[r][col] / rows[col][col];
      for (std::size_t j = col; j < k; ++j) rows[r][j] -= factor * rows[col][j];
      rhs[r] -= factor * rhs[col];
    }
  }
  x.assign(k, 0.0);
  for (std::size_t i = k; i-- > 0;) {
    double s = rhs[i];
    for (std::size_t j = i + 1; j < k; ++j) s -= rows[i][j] * x[j];
    x[i] = s / rows[i][i];
  }
  return true;
}

bool same_point(const std::vector<double>& x, const std::vector<double>& y, double scale) {
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (std::abs(x[j] - y[j]) > kRelTol * std::max(1.0, scale)) return false;
  }
  return true;
}

}  // namespace

SupportOracleResult enumerate_support_vertices(std::int64_t n, double alpha, double theta) {
  if (n < 1 || n > 3) {
    throw UnsupportedDimension("vertex enumeration supports 1 ≤ n ≤ 3, got n = " +
                               std::to_string(n));
  }
  const auto rows = build_support(n, alpha);
  const auto c = build_objective(n, theta);
  const auto dim = static_cast<std::size_t>(n);
  const std::size_t m = rows.size();

  std::vector<std::vector<double>> vertices;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != dim) continue;
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (1u << i)) {
        a.push_back(rows[i].a);
        b.push_back(rows[i].b);
      }
    }
    std::vector<double> x;
    if (!solve_dense(a, b, x)) continue;
    const bool feasible = std::all_of(rows.begin(), rows.end(), [&](const Inequality& q) {
      const double ax = dot(q.a, x);
      return ax <= q.b + slack(ax, q.b);
    });
    if (!feasible) continue;
    const bool seen = std::any_of(vertices.begin(), vertices.end(),
                                  [&](const auto& v) { return same_point(v, x, alpha); });
    if (!seen) vertices.push_back(std::move(x));
  }

  SupportOracleResult result;
  result.vertex_count = vertices.size();
  if (vertices.empty()) return result;

  std::size_t best = 0;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (dot(c, vertices[i]) > dot(c, vertices[best])) best = i;
  }
  result.argmax = vertices[best];
  result.optimum = dot(c, vertices[best]);
  const double tol = slack(result.optimum, 0.0);
  std::size_t ties = 0;
  for (const auto& v : vertices) {
    if (dot(c, v) >= result.optimum - tol) ++ties;
  }
  result.unique_optimum =
      ties == 1 && same_point(result.argmax, support_only_solution(n, alpha), alpha);
  return result;
}

bool verify_support_solution(std::int64_t n, double alpha, double theta) {
  return enumerate_support_vertices(n, alpha, theta).unique_optimum;
}

}  // namespace randlp
