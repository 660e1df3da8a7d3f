#include "hyperbar/engine.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hyperbar {

std::string to_string(BarKind k) { return k == BarKind::inf ? "inf" : "hat"; }

bool bar_less(const Bar& a, const Bar& b) {
  if (a.dim != b.dim) return a.dim < b.dim;
  if (a.kind != b.kind) return a.kind == BarKind::inf;
  if (!(a.birth == b.birth)) return a.birth < b.birth;
  if (!(a.death == b.death)) return a.death < b.death;
  return a.source < b.source;
}

DimMatrix build_dim_matrix(const Filtration& f, int k,
                           const std::set<Hyperedge>& excluded_rows) {
  if (k < 0) throw std::invalid_argument("dimension must be >= 0");
  if (f.max_tracked_size && static_cast<std::size_t>(k) + 2 > *f.max_tracked_size)
    throw std::invalid_argument("dimension " + std::to_string(k) +
                                " exceeds the filtration's tracked hyperedge cap");

  DimMatrix dm;
  dm.k = k;

  struct Keyed {
    Grade g;
    Hyperedge e;
  };
  std::vector<Keyed> cols;
  for (auto& [e, g] : f.finite_edges_of_size(k + 2)) cols.push_back({g, e});
  std::sort(cols.begin(), cols.end(), [](const Keyed& a, const Keyed& b) {
    if (a.g == b.g) return a.e < b.e;
    return a.g < b.g;
  });

  std::vector<Keyed> rows;
  std::set<Hyperedge> seen;
  for (auto& [e, g] : f.finite_edges_of_size(k + 1)) {
    if (excluded_rows.count(e)) continue;
    seen.insert(e);
    rows.push_back({g, e});
  }
  // Infinite-grade faces of the columns.
  for (const Keyed& c : cols) {
    Hyperedge face;
    face.members.resize(c.e.size() - 1);
    for (std::size_t skip = 0; skip < c.e.size(); ++skip) {
      std::size_t w = 0;
      for (std::size_t i = 0; i < c.e.size(); ++i)
        if (i != skip) face.members[w++] = c.e.members[i];
      if (f.grade(face).is_finite() || excluded_rows.count(face)) continue;
      if (seen.insert(face).second) rows.push_back({Grade::inf(), face});
    }
  }
  std::sort(rows.begin(), rows.end(), [](const Keyed& a, const Keyed& b) {
    if (a.g == b.g) return a.e < b.e;
    return b.g < a.g;  // grade nonincreasing
  });

  dm.row_edges.reserve(rows.size());
  dm.row_grades.reserve(rows.size());
  for (Keyed& r : rows) {
    dm.row_grades.push_back(r.g);
    dm.row_edges.push_back(std::move(r.e));
  }
  dm.col_edges.reserve(cols.size());
  dm.col_grades.reserve(cols.size());
  for (Keyed& c : cols) {
    dm.col_grades.push_back(c.g);
    dm.col_edges.push_back(std::move(c.e));
  }

  std::map<Hyperedge, std::size_t> row_index;
  for (std::size_t i = 0; i < dm.row_edges.size(); ++i) row_index[dm.row_edges[i]] = i;

  dm.matrix = BitMatrix(dm.row_edges.size(), dm.col_edges.size());
  Hyperedge face;
  for (std::size_t j = 0; j < dm.col_edges.size(); ++j) {
    const Hyperedge& c = dm.col_edges[j];
    face.members.resize(c.size() - 1);
    for (std::size_t skip = 0; skip < c.size(); ++skip) {
      std::size_t w = 0;
      for (std::size_t i = 0; i < c.size(); ++i)
        if (i != skip) face.members[w++] = c.members[i];
      auto it = row_index.find(face);
      if (it != row_index.end()) dm.matrix.set(it->second, j);
    }
  }
  return dm;
}

PivotSet compute_pivot(BitMatrix& m) {
  PivotSet out;
  std::vector<std::uint32_t> live;  // non-pivot columns, ascending index
  live.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) live.push_back(static_cast<std::uint32_t>(j));

  for (std::size_t i = 0; i < m.rows; ++i) {
    std::size_t hit = BitVector::npos;
    for (std::size_t idx = 0; idx < live.size(); ++idx) {
      if (m.columns[live[idx]].get(i)) {
        hit = idx;
        break;
      }
    }
    if (hit == BitVector::npos) continue;
    const std::uint32_t j = live[hit];
    out.pairs.emplace_back(i, j);
    for (std::size_t idx = hit + 1; idx < live.size(); ++idx) {
      const std::uint32_t c = live[idx];
      if (m.columns[c].get(i)) m.columns[c] ^= m.columns[j];
    }
    live.erase(live.begin() + hit);
  }
  return out;
}

std::vector<Bar> extract_bars(const DimMatrix& dm, const PivotSet& pivots) {
  std::vector<Grade> death(dm.row_edges.size(), Grade::inf());
  std::vector<char> paired(dm.row_edges.size(), 0);
  for (auto [i, j] : pivots.pairs) {
    death[i] = dm.col_grades[j];
    paired[i] = 1;
  }
  std::vector<Bar> bars;
  for (std::size_t i = 0; i < dm.row_edges.size(); ++i) {
    const Grade birth = dm.row_grades[i];
    const Grade d = death[i];
    if (birth == d) continue;  // zero-length and (inf, inf) pairs
    Bar bar;
    bar.dim = dm.k;
    bar.source = dm.row_edges[i];
    if (birth < d) {
      bar.kind = BarKind::inf;
      bar.birth = birth;
      bar.death = d;
    } else {
      bar.kind = BarKind::hat;
      bar.birth = d;
      bar.death = birth;
    }
    bars.push_back(std::move(bar));
  }
  return bars;
}

namespace {

std::set<Hyperedge> pivot_column_edges(const DimMatrix& dm, const PivotSet& pivots) {
  std::set<Hyperedge> out;
  for (auto [i, j] : pivots.pairs) out.insert(dm.col_edges[j]);
  return out;
}

}  // namespace

std::set<Hyperedge> negative_rows(const Filtration& f, int k) {
  std::set<Hyperedge> negatives;
  for (int d = 0; d < k; ++d) {
    DimMatrix dm = build_dim_matrix(f, d, negatives);
    PivotSet piv = compute_pivot(dm.matrix);
    negatives = pivot_column_edges(dm, piv);
  }
  return negatives;
}

std::vector<Bar> compute_barcodes(const Filtration& f, int max_k, BarMode mode) {
  if (max_k < 0) throw std::invalid_argument("max dimension must be >= 0");
  std::vector<Bar> bars;
  std::set<Hyperedge> negatives;  // dimension-k pivot columns feed dimension k+1
  for (int k = 0; k <= max_k; ++k) {
    DimMatrix dm = build_dim_matrix(f, k, mode == BarMode::filtered ? negatives
                                                                    : std::set<Hyperedge>{});
    PivotSet piv = compute_pivot(dm.matrix);
    std::vector<Bar> level = extract_bars(dm, piv);
    bars.insert(bars.end(), level.begin(), level.end());
    if (mode == BarMode::filtered) negatives = pivot_column_edges(dm, piv);
  }
  std::sort(bars.begin(), bars.end(), bar_less);
  return bars;
}

std::vector<ModuleSummand> decompose(const std::vector<Bar>& bars,
                                     const std::vector<Grade>& critical_grades) {
  auto index_of = [&](const Grade& g) -> std::size_t {
    for (std::size_t i = 0; i < critical_grades.size(); ++i)
      if (critical_grades[i] == g) return i;
    throw std::invalid_argument("bar endpoint " + g.render() + " is not a critical grade");
  };
  std::vector<ModuleSummand> out;
  for (const Bar& bar : bars) {
    ModuleSummand s;
    s.start = index_of(bar.birth);
    if (bar.death.is_finite()) {
      s.kind = ModuleSummand::Kind::torsion;
      s.length = index_of(bar.death) - s.start;
    } else {
      s.kind = ModuleSummand::Kind::free_module;
      s.length = 0;
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace hyperbar
