#include "hyperbar/rips.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace hyperbar {

PointCloud parse_points(std::istream& in) {
  PointCloud cloud;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    if (first[0] == '#') continue;
    fields.seekg(0);
    std::vector<double> point;
    std::string token;
    while (fields >> token) {
      try {
        std::size_t pos = 0;
        point.push_back(std::stod(token, &pos));
        if (pos != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw ParseError(lineno, "bad coordinate '" + token + "'");
      }
    }
    if (cloud.points.empty())
      cloud.dim = point.size();
    else if (point.size() != cloud.dim)
      throw ParseError(lineno, "expected " + std::to_string(cloud.dim) + " coordinates");
    cloud.points.push_back(std::move(point));
  }
  return cloud;
}

double euclidean(const std::vector<double>& a, const std::vector<double>& b) {
  double sq = 0;
  for (std::size_t d = 0; d < a.size(); ++d) {
    double diff = a[d] - b[d];
    sq += diff * diff;
  }
  return std::sqrt(sq);
}

Filtration rips_filtration(const PointCloud& cloud, double r_max, int max_dim) {
  if (cloud.points.empty()) throw std::invalid_argument("empty point cloud");
  if (r_max <= 0) throw std::invalid_argument("r_max must be positive");
  if (max_dim < 0) throw std::invalid_argument("max_dim must be >= 0");

  const std::size_t n = cloud.points.size();
  std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      dist[a][b] = dist[b][a] = euclidean(cloud.points[a], cloud.points[b]);

  // Zero-padded ids keep lexicographic and numeric order identical.
  std::size_t width = std::to_string(n - 1).size();
  std::vector<std::string> roster;
  for (std::size_t i = 0; i < n; ++i) {
    std::string id = std::to_string(i);
    roster.push_back(std::string(width - id.size(), '0') + id);
  }
  Filtration f(std::move(roster));
  f.max_tracked_size = static_cast<std::size_t>(max_dim) + 1;

  // Depth-first simplex enumeration, pruning once the grade reaches r_max.
  std::vector<std::uint32_t> chosen;
  auto extend = [&](auto&& self, std::size_t start, double grade) -> void {
    if (chosen.size() >= 2) f.set_grade(Hyperedge(chosen), Grade::at(grade));
    if (chosen.size() == static_cast<std::size_t>(max_dim) + 1) return;
    for (std::size_t v = start; v < n; ++v) {
      double g = grade;
      bool ok = true;
      for (std::uint32_t u : chosen) {
        double d = dist[u][v];
        if (d >= r_max) {
          ok = false;
          break;
        }
        g = std::max(g, d);
      }
      if (!ok) continue;
      chosen.push_back(static_cast<std::uint32_t>(v));
      self(self, v + 1, g);
      chosen.pop_back();
    }
  };
  extend(extend, 0, 0.0);
  return f;
}

}  // namespace hyperbar
