#include "doctest.h"

#include <cmath>
#include <sstream>

#include "fixtures.hpp"
#include "hyperbar/report.hpp"

using namespace hyperbar;

namespace {

Bar make_bar(int dim, BarKind kind, Grade birth, Grade death) {
  Bar b;
  b.dim = dim;
  b.kind = kind;
  b.birth = birth;
  b.death = death;
  return b;
}

}  // namespace

TEST_CASE("stats from published dimension-1 counts") {
  StatsSummary baboon = stats_from_counts(1, 78, 14, 0, 0);
  CHECK(baboon.prop_inf == doctest::Approx(0.1795).epsilon(5e-3));
  CHECK(baboon.prop_hat == 0.0);

  StatsSummary conference = stats_from_counts(1, 7733, 7290, 1363, 1072);
  CHECK(conference.prop_inf == doctest::Approx(7290.0 / 9096.0));
  CHECK(conference.prop_hat == doctest::Approx(1072.0 / 9096.0));

  StatsSummary nothing = stats_from_counts(1, 0, 0, 0, 0);
  CHECK(nothing.prop_inf == 0.0);
  CHECK(nothing.prop_hat == 0.0);
}

TEST_CASE("published counts reconcile with the plotted heights") {
  // Plotted heights are five times the proportions. The second dataset's
  // lower point is a known plotting slip and is left out.
  struct Row {
    std::int64_t N, n, N_hat, n_hat;
    double green, red;
    bool check_red;
  };
  const Row rows[5] = {
      {78, 14, 0, 0, 0.897, 0.0, true},
      {332, 270, 10, 4, 3.947, 0.146, false},
      {7733, 7290, 1363, 1072, 4.007, 0.589, true},
      {4048, 3537, 142, 112, 4.221, 0.134, true},
      {5096, 3797, 473, 281, 3.409, 0.252, true},
  };
  for (const Row& r : rows) {
    StatsSummary s = stats_from_counts(1, r.N, r.n, r.N_hat, r.n_hat);
    CHECK(std::abs(s.prop_inf - r.green / 5.0) < 0.002);
    if (r.check_red) CHECK(std::abs(s.prop_hat - r.red / 5.0) < 0.002);
  }
}

TEST_CASE("stats counts bars by kind and death") {
  std::vector<Bar> bars = {
      make_bar(1, BarKind::inf, Grade::at(0), Grade::at(1)),
      make_bar(1, BarKind::inf, Grade::at(0), Grade::inf()),
      make_bar(1, BarKind::hat, Grade::at(1), Grade::inf()),
      make_bar(0, BarKind::inf, Grade::at(0), Grade::inf()),  // other dimension
  };
  StatsSummary s = stats(bars, 1);
  CHECK(s.N == 2);
  CHECK(s.n == 1);
  CHECK(s.N_hat == 1);
  CHECK(s.n_hat == 1);
  CHECK(s.prop_inf == doctest::Approx(1.0 / 3.0));
  CHECK(s.prop_hat == doctest::Approx(1.0 / 3.0));

  StatsSummary empty = stats({}, 1);
  CHECK(empty.N == 0);
  CHECK(empty.prop_inf == 0.0);
}

TEST_CASE("barcode CSV format") {
  std::vector<Bar> one = {make_bar(1, BarKind::inf, Grade::at(std::log(2.0)), Grade::inf())};
  std::ostringstream out;
  write_barcode_csv(out, one);
  CHECK(out.str() == "dim,kind,birth,death\n1,inf,0.693147181,inf\n");

  std::ostringstream empty;
  write_barcode_csv(empty, {});
  CHECK(empty.str() == "dim,kind,birth,death\n");
}

TEST_CASE("barcode exports round-trip") {
  Filtration f = fixtures::worked_filtration();
  std::vector<Bar> bars = compute_barcodes(f, 1);
  REQUIRE(bars.size() == 8);  // 5 dimension-0 + 3 dimension-1

  std::ostringstream csv;
  write_barcode_csv(csv, bars);
  std::istringstream csv_in(csv.str());
  std::vector<Bar> csv_back = read_barcode_csv(csv_in);
  REQUIRE(csv_back.size() == bars.size());
  for (std::size_t i = 0; i < bars.size(); ++i) {
    CHECK(csv_back[i].dim == bars[i].dim);
    CHECK(csv_back[i].kind == bars[i].kind);
    CHECK(csv_back[i].birth.render() == bars[i].birth.render());
    CHECK(csv_back[i].death.render() == bars[i].death.render());
  }

  std::ostringstream json;
  write_barcode_json(json, bars);
  std::istringstream json_in(json.str());
  std::vector<Bar> json_back = read_barcode_json(json_in);
  REQUIRE(json_back.size() == bars.size());
  // JSON carries full double precision, so grades survive exactly.
  for (std::size_t i = 0; i < bars.size(); ++i) {
    CHECK(json_back[i].birth == bars[i].birth);
    CHECK(json_back[i].death == bars[i].death);
  }

  // Stats computed from the re-read file match stats from memory.
  StatsSummary from_memory = stats(bars, 1);
  StatsSummary from_file = stats(csv_back, 1);
  CHECK(from_memory.N == from_file.N);
  CHECK(from_memory.n == from_file.n);
  CHECK(from_memory.N_hat == from_file.N_hat);
  CHECK(from_memory.n_hat == from_file.n_hat);
}

TEST_CASE("stats JSON payload") {
  std::vector<Bar> bars = {
      make_bar(1, BarKind::inf, Grade::at(0.0), Grade::at(2.0)),
      make_bar(1, BarKind::hat, Grade::at(1.0), Grade::inf()),
  };
  std::string payload = stats_json(stats(bars, 1), bars, Grade::at(1.5));
  CHECK(payload.find("\"dim\": 1") != std::string::npos);
  CHECK(payload.find("\"N\": 1") != std::string::npos);
  CHECK(payload.find("\"N_hat\": 1") != std::string::npos);
  CHECK(payload.find("\"length_histogram\"") != std::string::npos);
  CHECK(payload.find("\"betti_at\"") != std::string::npos);
}

TEST_CASE("svg rendering") {
  std::string empty = render_svg({});
  CHECK(empty.find("<svg") == 0);
  CHECK(empty.find("</svg>") != std::string::npos);
  CHECK(empty.find("<line") != std::string::npos);  // the axis

  std::string one = render_svg({make_bar(0, BarKind::inf, Grade::at(0), Grade::inf())});
  CHECK(one.find("<polygon") != std::string::npos);  // infinity arrowhead

  Filtration f = fixtures::worked_filtration();
  std::vector<Bar> bars = compute_barcodes(f, 1);
  std::vector<Bar> dim1(bars.begin() + 5, bars.end());
  std::string svg = render_svg(dim1);
  CHECK(svg.find("#1b7837") != std::string::npos);  // inf kind color
  CHECK(svg.find("#2166ac") != std::string::npos);  // hat kind color
  // Two arrowheads: one infinite inf bar, one infinite hat bar.
  std::size_t arrows = 0;
  for (std::size_t pos = svg.find("<polygon"); pos != std::string::npos;
       pos = svg.find("<polygon", pos + 1))
    ++arrows;
  CHECK(arrows == 2);

  CHECK(render_svg(dim1) == svg);  // deterministic bytes
}
