#include "doctest.h"

#include <cmath>
#include <random>
#include <sstream>

#include "hyperbar/engine.hpp"
#include "hyperbar/rips.hpp"

using namespace hyperbar;

namespace {

PointCloud cloud_of(std::vector<std::vector<double>> pts) {
  PointCloud c;
  c.dim = pts.empty() ? 0 : pts[0].size();
  c.points = std::move(pts);
  return c;
}

PointCloud random_cloud(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> coord(0.0, 4.0);
  std::vector<std::vector<double>> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back({coord(rng), coord(rng)});
  return cloud_of(std::move(pts));
}

}  // namespace

TEST_CASE("point parsing") {
  std::istringstream in("# comment\n0 0\n1.5 2\n\n3 4\n");
  PointCloud cloud = parse_points(in);
  CHECK(cloud.dim == 2);
  REQUIRE(cloud.points.size() == 3);
  CHECK(cloud.points[1] == std::vector<double>{1.5, 2.0});

  std::istringstream ragged("0 0\n1\n");
  CHECK_THROWS_AS(parse_points(ragged), ParseError);
  std::istringstream junk("0 zero\n");
  CHECK_THROWS_AS(parse_points(junk), ParseError);
}

TEST_CASE("two points and one point") {
  Filtration two = rips_filtration(cloud_of({{0, 0}, {1, 0}}), 2.0, 1);
  CHECK(two.grade(Hyperedge{0}) == Grade::at(0.0));
  CHECK(two.grade(Hyperedge{0, 1}) == Grade::at(1.0));

  Filtration one = rips_filtration(cloud_of({{3, 3}}), 2.0, 1);
  CHECK(one.roster().size() == 1);
  CHECK(one.grade(Hyperedge{0}) == Grade::at(0.0));

  CHECK_THROWS(rips_filtration(cloud_of({}), 1.0, 1));
}

TEST_CASE("strict cutoff: simplices at grade >= r_max are absent") {
  // Distance exactly 1 is outside R(X, 1).
  Filtration f = rips_filtration(cloud_of({{0, 0}, {1, 0}}), 1.0, 1);
  CHECK(f.grade(Hyperedge{0, 1}) == Grade::inf());
}

TEST_CASE("rips filtrations are simplicial and hat-free") {
  std::mt19937 rng(73);
  for (int trial = 0; trial < 25; ++trial) {
    PointCloud cloud = random_cloud(rng, 2 + rng() % 6);
    const double r_max = 3.0;
    Filtration f = rips_filtration(cloud, r_max, 2);
    CHECK(f.is_simplicial());
    for (const Bar& b : compute_barcodes(f, 1)) CHECK(b.kind == BarKind::inf);

    // Strict convention: a pair belongs to the complex iff its distance is
    // below the radius, and its grade is that distance.
    for (std::size_t a = 0; a < cloud.points.size(); ++a) {
      for (std::size_t b = a + 1; b < cloud.points.size(); ++b) {
        double d = euclidean(cloud.points[a], cloud.points[b]);
        Grade g = f.grade(Hyperedge{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)});
        if (d < r_max) {
          CHECK(g == Grade::at(d));
        } else {
          CHECK(g == Grade::inf());
        }
      }
    }
  }
}

TEST_CASE("unit square") {
  Filtration f = rips_filtration(cloud_of({{0, 0}, {1, 0}, {0, 1}, {1, 1}}), 2.0, 2);
  std::vector<Bar> bars = compute_barcodes(f, 1);
  std::vector<Bar> dim1;
  for (const Bar& b : bars)
    if (b.dim == 1) dim1.push_back(b);
  REQUIRE(dim1.size() == 1);
  CHECK(dim1[0].kind == BarKind::inf);
  CHECK(dim1[0].birth == Grade::at(1.0));
  CHECK(dim1[0].death == Grade::at(std::sqrt(2.0)));
}

TEST_CASE("scaling the cloud scales the bars") {
  std::mt19937 rng(79);
  PointCloud cloud = random_cloud(rng, 6);
  const double c = 2.5;
  PointCloud scaled = cloud;
  for (auto& p : scaled.points)
    for (double& x : p) x *= c;

  std::vector<Bar> base = compute_barcodes(rips_filtration(cloud, 10.0, 2), 1);
  std::vector<Bar> big = compute_barcodes(rips_filtration(scaled, c * 10.0, 2), 1);
  REQUIRE(base.size() == big.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    CHECK(base[i].dim == big[i].dim);
    CHECK(base[i].kind == big[i].kind);
    CHECK(big[i].birth.value == doctest::Approx(c * base[i].birth.value).epsilon(1e-12));
    CHECK(base[i].death.is_finite() == big[i].death.is_finite());
    if (base[i].death.is_finite())
      CHECK(big[i].death.value == doctest::Approx(c * base[i].death.value).epsilon(1e-12));
  }
}
