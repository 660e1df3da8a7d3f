#include "hyperbar/report.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace hyperbar {

StatsSummary stats_from_counts(int dim, std::int64_t N, std::int64_t n, std::int64_t N_hat,
                               std::int64_t n_hat) {
  StatsSummary s;
  s.dim = dim;
  s.N = N;
  s.n = n;
  s.N_hat = N_hat;
  s.n_hat = n_hat;
  const std::int64_t total = N + N_hat;
  if (total > 0) {
    s.prop_inf = static_cast<double>(n) / static_cast<double>(total);
    s.prop_hat = static_cast<double>(n_hat) / static_cast<double>(total);
  }
  return s;
}

StatsSummary stats(const std::vector<Bar>& bars, int dim) {
  std::int64_t N = 0, n = 0, N_hat = 0, n_hat = 0;
  for (const Bar& b : bars) {
    if (b.dim != dim) continue;
    if (b.kind == BarKind::inf) {
      ++N;
      if (!b.death.is_finite()) ++n;
    } else {
      ++N_hat;
      if (!b.death.is_finite()) ++n_hat;
    }
  }
  return stats_from_counts(dim, N, n, N_hat, n_hat);
}

void write_barcode_csv(std::ostream& out, const std::vector<Bar>& bars) {
  std::vector<Bar> sorted = bars;
  std::sort(sorted.begin(), sorted.end(), bar_less);
  out << "dim,kind,birth,death\n";
  for (const Bar& b : sorted)
    out << b.dim << ',' << to_string(b.kind) << ',' << b.birth.render() << ','
        << b.death.render() << '\n';
}

std::vector<Bar> read_barcode_csv(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) throw ParseError(1, "empty barcode file");
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "dim,kind,birth,death") throw ParseError(1, "expected header 'dim,kind,birth,death'");
  std::vector<Bar> bars;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string dim_str, kind_str, birth_str, death_str;
    if (!std::getline(fields, dim_str, ',') || !std::getline(fields, kind_str, ',') ||
        !std::getline(fields, birth_str, ',') || !std::getline(fields, death_str))
      throw ParseError(lineno, "expected 'dim,kind,birth,death'");
    Bar bar;
    try {
      std::size_t pos = 0;
      bar.dim = std::stoi(dim_str, &pos);
      if (pos != dim_str.size() || bar.dim < 0) throw std::invalid_argument(dim_str);
    } catch (const std::exception&) {
      throw ParseError(lineno, "bad dimension '" + dim_str + "'");
    }
    if (kind_str == "inf")
      bar.kind = BarKind::inf;
    else if (kind_str == "hat")
      bar.kind = BarKind::hat;
    else
      throw ParseError(lineno, "bad kind '" + kind_str + "'");
    try {
      bar.birth = Grade::parse(birth_str);
      bar.death = Grade::parse(death_str);
    } catch (const std::exception& ex) {
      throw ParseError(lineno, ex.what());
    }
    bars.push_back(std::move(bar));
  }
  return bars;
}

namespace {

nlohmann::json grade_json(const Grade& g) {
  if (!g.is_finite()) return "inf";
  return g.value;
}

Grade grade_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return Grade::inf();
    throw std::invalid_argument("bad grade value");
  }
  return Grade::at(j.get<double>());
}

}  // namespace

void write_barcode_json(std::ostream& out, const std::vector<Bar>& bars) {
  std::vector<Bar> sorted = bars;
  std::sort(sorted.begin(), sorted.end(), bar_less);
  nlohmann::json arr = nlohmann::json::array();
  for (const Bar& b : sorted)
    arr.push_back({{"dim", b.dim},
                   {"kind", to_string(b.kind)},
                   {"birth", grade_json(b.birth)},
                   {"death", grade_json(b.death)}});
  out << arr.dump(2) << '\n';
}

std::vector<Bar> read_barcode_json(std::istream& in) {
  nlohmann::json arr = nlohmann::json::parse(in);
  std::vector<Bar> bars;
  for (const auto& item : arr) {
    Bar bar;
    bar.dim = item.at("dim").get<int>();
    std::string kind = item.at("kind").get<std::string>();
    if (kind == "inf")
      bar.kind = BarKind::inf;
    else if (kind == "hat")
      bar.kind = BarKind::hat;
    else
      throw std::invalid_argument("bad kind '" + kind + "'");
    bar.birth = grade_from_json(item.at("birth"));
    bar.death = grade_from_json(item.at("death"));
    bars.push_back(std::move(bar));
  }
  return bars;
}

std::string stats_json(const StatsSummary& summary, const std::vector<Bar>& bars,
                       std::optional<Grade> betti_at) {
  nlohmann::json j;
  j["dim"] = summary.dim;
  j["N"] = summary.N;
  j["n"] = summary.n;
  j["N_hat"] = summary.N_hat;
  j["n_hat"] = summary.n_hat;
  j["prop_inf"] = summary.prop_inf;
  j["prop_hat"] = summary.prop_hat;

  // Finite bar lengths per kind, as (length, count) pairs ascending.
  std::map<std::string, std::map<double, std::int64_t>> hist;
  for (const Bar& b : bars) {
    if (b.dim != summary.dim || !b.death.is_finite()) continue;
    hist[to_string(b.kind)][b.death.value - b.birth.value]++;
  }
  nlohmann::json lengths = nlohmann::json::object();
  for (const auto& [kind, by_len] : hist) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [len, count] : by_len) arr.push_back({{"length", len}, {"count", count}});
    lengths[kind] = std::move(arr);
  }
  j["length_histogram"] = std::move(lengths);

  if (betti_at) {
    std::int64_t alive_inf = 0, alive_hat = 0;
    for (const Bar& b : bars) {
      if (b.dim != summary.dim) continue;
      if (b.birth <= *betti_at && *betti_at < b.death)
        (b.kind == BarKind::inf ? alive_inf : alive_hat)++;
    }
    j["betti_at"] = {{"grade", grade_json(*betti_at)},
                     {"inf", alive_inf},
                     {"hat", alive_hat}};
  }
  return j.dump(2) + "\n";
}

std::string render_svg(const std::vector<Bar>& bars) {
  std::vector<Bar> sorted = bars;
  std::sort(sorted.begin(), sorted.end(), bar_less);

  double max_grade = 0.0;
  for (const Bar& b : sorted) {
    if (b.birth.is_finite()) max_grade = std::max(max_grade, b.birth.value);
    if (b.death.is_finite()) max_grade = std::max(max_grade, b.death.value);
  }
  if (max_grade <= 0.0) max_grade = 1.0;

  const double left = 40.0, right = 600.0, top = 20.0, row_height = 14.0;
  const double span = right - left;
  const double arrow_x = right + 18.0;
  auto x_of = [&](double g) { return left + span * (g / max_grade); };

  const double axis_y = top + row_height * static_cast<double>(sorted.size()) + 10.0;
  const double height = axis_y + 30.0;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"660\" height=\""
      << static_cast<int>(height) << "\" viewBox=\"0 0 660 " << static_cast<int>(height)
      << "\">\n";
  svg << "<rect width=\"660\" height=\"" << static_cast<int>(height)
      << "\" fill=\"white\"/>\n";

  std::size_t row = 0;
  for (const Bar& b : sorted) {
    const char* color = b.kind == BarKind::inf ? "#1b7837" : "#2166ac";
    double y = top + row_height * static_cast<double>(row) + row_height / 2.0;
    double x0 = x_of(b.birth.value);
    if (b.death.is_finite()) {
      svg << "<line x1=\"" << x0 << "\" y1=\"" << y << "\" x2=\"" << x_of(b.death.value)
          << "\" y2=\"" << y << "\" stroke=\"" << color << "\" stroke-width=\"4\"/>\n";
    } else {
      svg << "<line x1=\"" << x0 << "\" y1=\"" << y << "\" x2=\"" << arrow_x << "\" y2=\""
          << y << "\" stroke=\"" << color << "\" stroke-width=\"4\"/>\n";
      svg << "<polygon points=\"" << arrow_x << ',' << y - 5 << ' ' << arrow_x << ','
          << y + 5 << ' ' << arrow_x + 9 << ',' << y << "\" fill=\"" << color << "\"/>\n";
    }
    ++row;
  }

  svg << "<line x1=\"" << left << "\" y1=\"" << axis_y << "\" x2=\"" << right << "\" y2=\""
      << axis_y << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  char label[64];
  std::snprintf(label, sizeof label, "%.4g", max_grade);
  svg << "<text x=\"" << left << "\" y=\"" << axis_y + 16
      << "\" font-family=\"sans-serif\" font-size=\"11\">0</text>\n";
  svg << "<text x=\"" << right - 30 << "\" y=\"" << axis_y + 16
      << "\" font-family=\"sans-serif\" font-size=\"11\">" << label << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace hyperbar
