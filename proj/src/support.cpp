#include "randlp/support.hpp"

#include <cassert>

namespace randlp {

std::vector<Inequality> build_support(std::int64_t n, double alpha) {
  assert(n >= 1 && alpha > 0.0);
  const auto dim = static_cast<std::size_t>(n);
  std::vector<Inequality> rows;
  rows.reserve(2 * dim + 1);
  for (std::size_t j = 0; j < dim; ++j) {
    Inequality q{std::vector<double>(dim, 0.0), alpha};
    q.a[j] = 1.0;
    rows.push_back(std::move(q));
  }
  for (std::size_t j = 0; j < dim; ++j) {
    Inequality q{std::vector<double>(dim, 0.0), 0.0};
    q.a[j] = -1.0;
    rows.push_back(std::move(q));
  }
  rows.push_back({std::vector<double>(dim, 1.0),
                  static_cast<double>(n - 1) * alpha + alpha / 2.0});
  return rows;
}

std::vector<double> build_objective(std::int64_t n, double theta) {
  std::vector<double> c(static_cast<std::size_t>(n));
  for (std::size_t j = 0; j < c.size(); ++j) {
    c[j] = theta * static_cast<double>(n - static_cast<std::int64_t>(j));
  }
  return c;
}

std::vector<double> support_only_solution(std::int64_t n, double alpha) {
  std::vector<double> x(static_cast<std::size_t>(n), alpha);
  x.back() = alpha / 2.0;
  return x;
}

LPInstance support_only_instance(const GeneratorParams& p) {
  LPInstance inst;
  inst.n = p.n;
  inst.support = build_support(p.n, p.alpha);
  inst.c = build_objective(p.n, p.theta);
  inst.params = p;
  return inst;
}

}  // namespace randlp
