#include <doctest.h>

#include "common/svg_probe.hpp"
#include "randlp/errors.hpp"
#include "randlp/generator.hpp"
#include "randlp/support.hpp"
#include "randlp/svg.hpp"

using namespace randlp;
using namespace randlp::testing;

namespace {

GeneratorParams params(std::int64_t n, std::int64_t d, std::uint64_t seed) {
  GeneratorParams p;
  p.n = n;
  p.d = d;
  p.seed = seed;
  return p;
}

std::size_t count_class(const std::vector<SvgElement>& v, const std::string& cls) {
  std::size_t k = 0;
  for (const auto& e : v) k += e.cls() == cls;
  return k;
}

}  // namespace

TEST_CASE("support-only polygon is a square with one corner cut") {
  auto poly = feasible_polygon(support_only_instance(params(2, 0, 0)));
  REQUIRE(poly.size() == 5);
  std::vector<Point2> expected{{0, 0}, {200, 0}, {200, 100}, {100, 200}, {0, 200}};
  for (const auto& e : expected) {
    bool found = false;
    for (const auto& p : poly) found = found || (std::abs(p[0] - e[0]) < 1e-9 && std::abs(p[1] - e[1]) < 1e-9);
    CHECK(found);
  }
}

TEST_CASE("figure setting renders all elements") {
  auto inst = generate_sequential(params(2, 5, 42)).instance;
  const auto svg = render_svg(inst);
  const auto lines = scrape(svg, "line");
  const auto circles = scrape(svg, "circle");
  const auto polys = scrape(svg, "polygon");
  CHECK(lines.size() == 11);
  CHECK(count_class(lines, "support") == 5);
  CHECK(count_class(lines, "random") == 5);
  CHECK(count_class(lines, "objective") == 1);
  REQUIRE(circles.size() == 2);
  CHECK(circles[0].num("r") == 50);
  CHECK(circles[1].num("r") == 100);
  for (const auto& c : circles) CHECK(c.attrs.count("stroke-dasharray") == 1);
  REQUIRE(polys.size() == 1);
  CHECK(polygon_points(polys[0]).size() >= 3);

  for (const auto& l : lines) {
    if (l.cls() != "random") continue;
    const double dist = center_distance(l, 100, 100);
    CHECK(dist > 50);
    CHECK(dist <= 100 * (1 + 1e-9));
  }
}

TEST_CASE("center lies inside the rendered feasible region") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto inst = generate_sequential(params(2, 5, seed)).instance;
    auto poly = feasible_polygon(inst);
    REQUIRE(poly.size() >= 3);
    // Every polygon vertex satisfies every constraint.
    for (const auto& v : poly) {
      for (std::size_t i = 0; i < inst.m(); ++i) {
        const auto& q = inst.row(i);
        CHECK(q.a[0] * v[0] + q.a[1] * v[1] <= q.b + 1e-7);
      }
    }
  }
}

TEST_CASE("non-planar instance is rejected") {
  CHECK_THROWS_AS(render_svg(support_only_instance(params(3, 0, 0))), UnsupportedDimension);
}
