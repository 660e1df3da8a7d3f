// Barcode statistics, file exports (CSV/JSON), and static SVG plots.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hyperbar/engine.hpp"

namespace hyperbar {

struct StatsSummary {
  int dim = 0;
  std::int64_t N = 0;      // inf bars
  std::int64_t n = 0;      // inf bars ending at infinity
  std::int64_t N_hat = 0;  // hat bars
  std::int64_t n_hat = 0;  // hat bars ending at infinity
  double prop_inf = 0.0;   // n / (N + N_hat), 0 when the total is 0
  double prop_hat = 0.0;   // n_hat / (N + N_hat)
};

StatsSummary stats(const std::vector<Bar>& bars, int dim);
// Summary straight from published counts (no bar list needed).
StatsSummary stats_from_counts(int dim, std::int64_t N, std::int64_t n, std::int64_t N_hat,
                               std::int64_t n_hat);

// `dim,kind,birth,death` with grades at 9 significant digits, death `inf`
// allowed; rows in the deterministic engine order.
void write_barcode_csv(std::ostream& out, const std::vector<Bar>& bars);
std::vector<Bar> read_barcode_csv(std::istream& in);

// JSON array of {dim, kind, birth, death}; infinite deaths as the string
// "inf". Round-trips against read_barcode_json.
void write_barcode_json(std::ostream& out, const std::vector<Bar>& bars);
std::vector<Bar> read_barcode_json(std::istream& in);

// Stats object with keys dim, N, n, N_hat, n_hat, prop_inf, prop_hat, plus a
// finite-bar length histogram and, when a query grade is given, the bar
// counts alive at that grade.
std::string stats_json(const StatsSummary& summary, const std::vector<Bar>& bars,
                       std::optional<Grade> betti_at = std::nullopt);

// Horizontal bar plot ordered by (dim, kind, birth); finite bars as
// segments, infinite bars arrow off the right margin; kinds told apart by
// color.
std::string render_svg(const std::vector<Bar>& bars);

}  // namespace hyperbar
