#include "randlp/geometry.hpp"

#include <cassert>
#include <cmath>

#include "randlp/errors.hpp"

namespace randlp {

namespace {

double checked_norm(const Inequality& q) {
  double nrm = norm(q.a);
  if (!(nrm > 0.0)) throw DomainError("inequality has a zero coefficient vector");
  return nrm;
}

}  // namespace

CenterPoint::CenterPoint(std::int64_t n, double alpha)
    : h_(static_cast<std::size_t>(n), alpha / 2.0) {}

double dot(std::span<const double> x, std::span<const double> y) {
  assert(x.size() == y.size());
  double s = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) s += x[j] * y[j];
  return s;
}

double norm(std::span<const double> x) { return std::sqrt(dot(x, x)); }

double objective_value(std::span<const double> c, std::span<const double> x) {
  return dot(c, x);
}

double distance_to_center(const CenterPoint& h, const Inequality& q) {
  double nrm = checked_norm(q);
  return std::abs(dot(q.a, h.coords()) - q.b) / nrm;
}

std::vector<double> project_center(const CenterPoint& h, const Inequality& q) {
  double nrm = checked_norm(q);
  double t = (dot(q.a, h.coords()) - q.b) / (nrm * nrm);
  auto hc = h.coords();
  std::vector<double> p(hc.begin(), hc.end());
  if (t == 0.0) return p;
  for (std::size_t j = 0; j < p.size(); ++j) p[j] -= t * q.a[j];
  return p;
}

NormalizedInequality::NormalizedInequality(const Inequality& q) : unit(q.a) {
  double nrm = checked_norm(q);
  for (double& v : unit) v /= nrm;
  offset = q.b / nrm;
}

double direction_gap(const Inequality& q1, const Inequality& q2) {
  NormalizedInequality e1(q1), e2(q2);
  double s = 0.0;
  for (std::size_t j = 0; j < e1.unit.size(); ++j) {
    double diff = e1.unit[j] - e2.unit[j];
    s += diff * diff;
  }
  return std::sqrt(s);
}

double offset_gap(const Inequality& q1, const Inequality& q2) {
  return std::abs(q1.b / checked_norm(q1) - q2.b / checked_norm(q2));
}

bool likeness(const NormalizedInequality& q1, const NormalizedInequality& q2, double l_max,
              double s_min) {
  assert(q1.unit.size() == q2.unit.size());
  if (!(std::abs(q1.offset - q2.offset) < s_min)) return false;
  double s = 0.0;
  for (std::size_t j = 0; j < q1.unit.size(); ++j) {
    double diff = q1.unit[j] - q2.unit[j];
    s += diff * diff;
  }
  return std::sqrt(s) < l_max;
}

bool likeness(const Inequality& q1, const Inequality& q2, double l_max, double s_min) {
  return likeness(NormalizedInequality(q1), NormalizedInequality(q2), l_max, s_min);
}

}  // namespace randlp
