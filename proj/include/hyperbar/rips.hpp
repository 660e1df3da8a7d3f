// Rips filtrations from point configurations, for exercising the engine's
// simplicial special case. A simplex enters at its largest pairwise
// distance; the strict convention (member of the complex at radius r iff
// grade < r) matches half-open bars.
#pragma once

#include <iosfwd>
#include <vector>

#include "hyperbar/filtration.hpp"

namespace hyperbar {

struct PointCloud {
  std::size_t dim = 0;
  std::vector<std::vector<double>> points;
};

// Text lines of whitespace-separated coordinates; '#' and blank lines are
// skipped; all points must share one arity.
PointCloud parse_points(std::istream& in);

double euclidean(const std::vector<double>& a, const std::vector<double>& b);

// Simplices up to dimension max_dim with grade = max pairwise distance,
// omitting those at grade >= r_max; vertex ids are zero-padded point
// indices. Throws on an empty cloud.
Filtration rips_filtration(const PointCloud& cloud, double r_max, int max_dim);

}  // namespace hyperbar
