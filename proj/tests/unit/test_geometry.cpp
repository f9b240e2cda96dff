#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "randlp/errors.hpp"
#include "randlp/geometry.hpp"

using namespace randlp;
using doctest::Approx;

namespace {

Inequality ineq(std::vector<double> a, double b) { return {std::move(a), b}; }

double rel_err(double x, double y) { return std::abs(x - y) / std::max(1.0, std::abs(y)); }

}  // namespace

TEST_CASE("center point") {
  CenterPoint h(3, 200);
  REQUIRE(h.dimension() == 3);
  for (double v : h.coords()) CHECK(v == 100.0);
}

TEST_CASE("objective value") {
  std::vector<double> c{200, 100};
  CHECK(objective_value(c, std::vector<double>{200, 100}) == 50000.0);
  CHECK(objective_value(c, std::vector<double>{0, 0}) == 0.0);
  CHECK(objective_value(std::vector<double>{300, 200, 100}, std::vector<double>{200, 200, 100}) ==
        110000.0);
}

TEST_CASE("distance to center") {
  CenterPoint h(2, 200);
  CHECK(distance_to_center(h, ineq({3, 4}, 0)) == Approx(140.0).epsilon(1e-15));
  CHECK(distance_to_center(h, ineq({1, 0}, 200)) == 100.0);
  CHECK(distance_to_center(h, ineq({1, 1}, 300)) == Approx(100.0 / std::sqrt(2.0)));
  CHECK_THROWS_AS(distance_to_center(h, ineq({0, 0}, 1)), DomainError);
}

TEST_CASE("projection of the center") {
  CenterPoint h(2, 200);
  CHECK(project_center(h, ineq({1, 0}, 50)) == std::vector<double>{50, 100});
  CHECK(project_center(h, ineq({0, 1}, 100)) == std::vector<double>{100, 100});
  auto p = project_center(h, ineq({3, 4}, 0));
  CHECK(p[0] == Approx(16.0));
  CHECK(p[1] == Approx(-12.0));
  CHECK(std::abs(3 * p[0] + 4 * p[1]) < 1e-12);
  CHECK_THROWS_AS(project_center(h, ineq({0, 0}, 1)), DomainError);
}

TEST_CASE("likeness examples") {
  CHECK(likeness(ineq({1, 0}, 100), ineq({1, 0}, 100), 0.35, 100));
  CHECK(likeness(ineq({2, 0}, 200), ineq({1, 0}, 100), 0.35, 100));
  CHECK(likeness(ineq({2, 0}, 200), ineq({1, 0}, 100), 1e-9, 1e-9));
  CHECK_FALSE(likeness(ineq({1, 0}, 100), ineq({0, 1}, 100), 0.35, 100));
  CHECK_THROWS_AS(likeness(ineq({0, 0}, 1), ineq({1, 0}, 1), 0.35, 100), DomainError);
}

TEST_CASE("likeness thresholds are strict") {
  // Offset gap is exactly 100 = s_min: not alike.
  CHECK_FALSE(likeness(ineq({1, 0}, 200), ineq({1, 0}, 100), 0.35, 100));
  CHECK(likeness(ineq({1, 0}, 200), ineq({1, 0}, 100), 0.35, 100.5));
  // Direction gap exactly 2 = l_max for opposite normals.
  CHECK_FALSE(likeness(ineq({1, 0}, 0), ineq({-1, 0}, 0), 2.0, 1.0));
}

TEST_CASE("property: scale invariance, symmetry, projection residence") {
  std::mt19937_64 gen(1234);
  std::uniform_real_distribution<double> coef(-1000, 1000);
  std::uniform_real_distribution<double> scale(1e-3, 1e3);
  std::uniform_int_distribution<int> dim(1, 12);
  std::uniform_real_distribution<double> bounds(0.01, 1.5);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = dim(gen);
    CenterPoint h(n, 200);
    Inequality q1{std::vector<double>(n), coef(gen) * 10};
    Inequality q2{std::vector<double>(n), coef(gen) * 10};
    for (int j = 0; j < n; ++j) {
      q1.a[j] = coef(gen);
      q2.a[j] = coef(gen);
    }
    const double t = scale(gen);
    Inequality s1{q1.a, q1.b * t};
    for (auto& v : s1.a) v *= t;

    CHECK(rel_err(distance_to_center(h, s1), distance_to_center(h, q1)) < 1e-12);
    auto p = project_center(h, q1);
    auto ps = project_center(h, s1);
    for (int j = 0; j < n; ++j) CHECK(rel_err(ps[j], p[j]) < 1e-12);

    const double ap = dot(q1.a, p);
    CHECK(std::abs(ap - q1.b) <= 1e-9 * std::max({1.0, std::abs(q1.b), norm(q1.a) * norm(p)}));

    const double lmax = bounds(gen) * 0.7 / 1.5, smin = bounds(gen) * 200;
    CHECK(likeness(q1, q2, lmax, smin) == likeness(q2, q1, lmax, smin));
    // Gaps are compared, so checking the measured values is more robust than
    // the predicate right at a threshold.
    CHECK(std::abs(direction_gap(s1, q2) - direction_gap(q1, q2)) < 1e-12);
    CHECK(std::abs(offset_gap(s1, q2) - offset_gap(q1, q2)) <
          1e-12 * std::max(1.0, offset_gap(q1, q2)));
  }
}

TEST_CASE("projection fixed point") {
  CenterPoint h(4, 200);
  Inequality q{{1, -2, 3, 0.5}, 0};
  q.b = dot(q.a, h.coords());
  auto p = project_center(h, q);
  CHECK(p == std::vector<double>(h.coords().begin(), h.coords().end()));
}

TEST_CASE("property: unit-vector gap follows the cosine law") {
  std::mt19937_64 gen(99);
  std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
  std::uniform_real_distribution<double> base(0.0, 2 * std::numbers::pi);
  for (int i = 0; i < 10000; ++i) {
    const double phi = angle(gen), psi = base(gen);
    Inequality e{{std::cos(psi), std::sin(psi)}, 0};
    Inequality f{{std::cos(psi + phi), std::sin(psi + phi)}, 0};
    CHECK(std::abs(direction_gap(e, f) - std::sqrt(2 * (1 - std::cos(phi)))) < 1e-12);
  }
  const Inequality x{{1, 0}, 0};
  const double third = std::numbers::pi / 3, quarter = std::numbers::pi / 4;
  CHECK(direction_gap(x, Inequality{{std::cos(third), std::sin(third)}, 0}) ==
        Approx(1.0).epsilon(1e-12));
  CHECK(direction_gap(x, Inequality{{std::cos(quarter), std::sin(quarter)}, 0}) ==
        Approx(0.7654).epsilon(1e-4));
}
