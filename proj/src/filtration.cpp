#include "hyperbar/filtration.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <set>
#include <stdexcept>

namespace hyperbar {

std::string Grade::render() const {
  if (infinite) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

Grade Grade::parse(const std::string& text) {
  if (text == "inf") return Grade::inf();
  std::size_t pos = 0;
  double v = std::stod(text, &pos);
  if (pos != text.size()) throw std::invalid_argument("bad grade value: " + text);
  if (!std::isfinite(v) || v < 0)
    throw std::invalid_argument("grades must be finite and non-negative: " + text);
  return Grade::at(v);
}

void Filtration::set_grade(Hyperedge e, Grade g) {
  if (!e.valid()) throw std::invalid_argument("invalid hyperedge");
  if (e.members.back() >= roster_.size())
    throw std::invalid_argument("hyperedge member outside roster");
  grades_[std::move(e)] = g;
}

Grade Filtration::grade(const Hyperedge& e) const {
  auto it = grades_.find(e);
  if (it != grades_.end()) return it->second;
  if (e.size() == 1) return Grade::at(0.0);
  return Grade::inf();
}

std::vector<std::pair<Hyperedge, Grade>> Filtration::finite_edges_of_size(
    std::size_t size) const {
  std::vector<std::pair<Hyperedge, Grade>> out;
  if (size == 1) {
    for (std::uint32_t v = 0; v < roster_.size(); ++v) {
      Hyperedge e{v};
      Grade g = grade(e);
      if (g.is_finite()) out.emplace_back(std::move(e), g);
    }
    return out;
  }
  for (const auto& [e, g] : grades_)
    if (e.size() == size && g.is_finite()) out.emplace_back(e, g);
  return out;
}

std::vector<Grade> Filtration::critical_grades() const {
  std::vector<Grade> grades;
  for (std::uint32_t v = 0; v < roster_.size(); ++v) {
    Grade g = grade(Hyperedge{v});
    if (g.is_finite()) grades.push_back(g);
  }
  for (const auto& [e, g] : grades_)
    if (e.size() >= 2 && g.is_finite()) grades.push_back(g);
  std::sort(grades.begin(), grades.end());
  grades.erase(std::unique(grades.begin(), grades.end()), grades.end());
  return grades;
}

bool Filtration::is_simplicial() const {
  for (const auto& [e, g] : grades_) {
    if (!g.is_finite() || e.size() < 2) continue;
    Hyperedge face;
    face.members.resize(e.size() - 1);
    for (std::size_t skip = 0; skip < e.size(); ++skip) {
      std::size_t w = 0;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (i != skip) face.members[w++] = e.members[i];
      if (g < grade(face)) return false;
    }
  }
  return true;
}

void Filtration::write(std::ostream& out) const {
  struct Row {
    Grade g;
    Hyperedge e;
  };
  std::vector<Row> rows;
  for (std::uint32_t v = 0; v < roster_.size(); ++v) {
    Hyperedge e{v};
    rows.push_back({grade(e), std::move(e)});
  }
  for (const auto& [e, g] : grades_)
    if (e.size() >= 2) rows.push_back({g, e});
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.g == b.g) return a.e < b.e;
    return a.g < b.g;
  });
  out << "hyperedge,grade\n";
  for (const Row& r : rows) out << format_edge(r.e, roster_) << ',' << r.g.render() << '\n';
}

Filtration Filtration::read(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) throw ParseError(1, "empty filtration file");
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "hyperedge,grade") throw ParseError(1, "expected header 'hyperedge,grade'");

  struct RawRow {
    std::vector<std::string> ids;
    Grade g;
    std::size_t line;
  };
  std::vector<RawRow> raw;
  std::set<std::string> id_set;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::size_t comma = line.rfind(',');
    if (comma == std::string::npos || comma == 0 || comma + 1 == line.size())
      throw ParseError(lineno, "expected '<id>|..|<id>,<grade>'");
    std::string edge_part = line.substr(0, comma);
    RawRow row;
    row.line = lineno;
    try {
      row.g = Grade::parse(line.substr(comma + 1));
    } catch (const std::exception& ex) {
      throw ParseError(lineno, ex.what());
    }
    std::size_t start = 0;
    while (start <= edge_part.size()) {
      std::size_t bar = edge_part.find('|', start);
      std::string id = edge_part.substr(start, bar == std::string::npos ? bar : bar - start);
      if (id.empty()) throw ParseError(lineno, "empty vertex id");
      row.ids.push_back(id);
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
    for (const std::string& id : row.ids) id_set.insert(id);
    raw.push_back(std::move(row));
  }

  Filtration f(std::vector<std::string>(id_set.begin(), id_set.end()));
  std::map<std::string, std::uint32_t> index;
  for (std::uint32_t i = 0; i < f.roster_.size(); ++i) index[f.roster_[i]] = i;
  for (const RawRow& row : raw) {
    std::vector<std::uint32_t> members;
    for (const std::string& id : row.ids) members.push_back(index.at(id));
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
      throw ParseError(row.line, "repeated vertex id in hyperedge");
    f.grades_[Hyperedge(std::move(members))] = row.g;
  }
  return f;
}

}  // namespace hyperbar
