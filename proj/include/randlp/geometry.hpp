#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "randlp/model.hpp"

namespace randlp {

/// Center h = (alpha/2, ..., alpha/2) of the bounding hypercube.
class CenterPoint {
 public:
  CenterPoint(std::int64_t n, double alpha);

  std::span<const double> coords() const noexcept { return h_; }
  std::size_t dimension() const noexcept { return h_.size(); }

 private:
  std::vector<double> h_;
};

double dot(std::span<const double> x, std::span<const double> y);
double norm(std::span<const double> x);

/// f(x) = <c, x>. Lengths must match.
double objective_value(std::span<const double> c, std::span<const double> x);

/// |<a, h> - b| / ||a||. Throws DomainError when ||a|| == 0.
double distance_to_center(const CenterPoint& h, const Inequality& q);

/// Orthogonal projection of h onto the hyperplane <a, x> = b.
/// Throws DomainError when ||a|| == 0.
std::vector<double> project_center(const CenterPoint& h, const Inequality& q);

/// Euclidean distance between the unit normals of two inequalities.
double direction_gap(const Inequality& q1, const Inequality& q2);

/// |b1/||a1|| - b2/||a2|||.
double offset_gap(const Inequality& q1, const Inequality& q2);

/// Two inequalities are alike when their hyperplanes are nearly parallel
/// (direction_gap < l_max) and nearly concurrent (offset_gap < s_min).
/// Both comparisons are strict.
bool likeness(const Inequality& q1, const Inequality& q2, double l_max, double s_min);

/// Precomputed unit normal and normalized offset of an inequality. Used on
/// hot paths where one inequality is compared against many.
struct NormalizedInequality {
  std::vector<double> unit;
  double offset = 0.0;

  explicit NormalizedInequality(const Inequality& q);
};

bool likeness(const NormalizedInequality& q1, const NormalizedInequality& q2, double l_max,
              double s_min);

}  // namespace randlp
