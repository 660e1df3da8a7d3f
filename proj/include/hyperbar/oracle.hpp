// Definition-level ground truth for the engine: persistent Betti numbers of
// the embedded (inf) and hat homologies computed directly from the chain
// subspace constructions, barcode reconstruction by inclusion-exclusion over
// critical grades, an independent classical reduction for the simplicial
// special case, and barcode diffing. Desk scale only: the ambient chain
// groups are enumerated outright, so the roster cap applies.
#pragma once

#include <string>
#include <vector>

#include "hyperbar/engine.hpp"
#include "hyperbar/filtration.hpp"

namespace hyperbar {

// Hypergraph holding every hyperedge of grade <= t (infinite-grade edges
// never appear; for t = inf this is the full final hypergraph).
Hypergraph snapshot_hypergraph(const Filtration& f, Grade t);

struct GradeSnapshot {
  Grade t;
  Hypergraph hypergraph;
  // Per dimension 0..max_dim: raw edge span, infimum and supremum spaces.
  std::vector<Subspace> edge_spans;
  std::vector<Subspace> inf_spaces;
  std::vector<Subspace> sup_spaces;
};

GradeSnapshot snapshot(const Filtration& f, Grade t, int max_dim);

// dim ker(boundary on inf_n at t) - dim(that kernel meet boundary(inf_{n+1} at r)).
std::size_t persistent_betti_inf(const Filtration& f, int n, Grade t, Grade r);

// Same with the kernel taken on the supremum space at t.
std::size_t persistent_betti_hat(const Filtration& f, int n, Grade t, Grade r);

struct PersistentBettiTable {
  int dim = 0;
  std::vector<Grade> grades;  // finite critical grades, ascending
  // inf_beta[i][j], hat_beta[i][j] for t = grades[i], r = grades[j] (j >= i);
  // column index grades.size() holds the r = infinity values.
  std::vector<std::vector<std::size_t>> inf_beta;
  std::vector<std::vector<std::size_t>> hat_beta;

  std::size_t inf_at(std::size_t i, std::size_t j) const { return inf_beta[i][j]; }
  std::size_t hat_at(std::size_t i, std::size_t j) const { return hat_beta[i][j]; }
  std::size_t additional_at(std::size_t i, std::size_t j) const {
    return hat_beta[i][j] - inf_beta[i][j];
  }
};

PersistentBettiTable betti_table(const Filtration& f, int dim);

// Interval multisets whose rank functions reproduce the table: the inf bars
// from the inf table and the additional hat bars from the entrywise
// difference. Throws std::logic_error on a non-realizable table.
std::pair<std::vector<Bar>, std::vector<Bar>> bars_from_betti(const PersistentBettiTable& t);

// All oracle bars (inf + additional hat) for dimensions 0..max_dim, sorted.
std::vector<Bar> oracle_barcodes(const Filtration& f, int max_dim);

// Textbook column reduction for simplicial-complex filtrations, written
// against the engine on purpose: simplices sorted by (grade, size, members),
// columns reduced by matching largest surviving face indices. Requires
// f.is_simplicial().
std::vector<Bar> classical_simplicial_bars(const Filtration& f, int max_dim);

struct DiffEntry {
  enum class Side { engine_only, oracle_only };
  Side side;
  Bar bar;
};

struct DiffReport {
  std::vector<DiffEntry> entries;
  bool empty() const { return entries.empty(); }
  std::string describe(const std::vector<std::string>& roster = {}) const;
};

// Multiset difference by (dim, kind, birth, death).
DiffReport compare(const std::vector<Bar>& engine_bars, const std::vector<Bar>& oracle_bars);

}  // namespace hyperbar
