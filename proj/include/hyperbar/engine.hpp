// Barcode computation for hypergraph filtrations: per-dimension boundary
// matrices with the prescribed row/column orderings, the row-major pivot
// reduction, bar extraction for both the embedded (inf) and hat kinds, and
// the graded-module decomposition view.
//
// A dimension-k matrix has one row per k-hyperedge (grade nonincreasing) and
// one column per finite-grade (k+1)-hyperedge (grade nondecreasing); a pivot
// pairs a row with the column whose arrival settles its class. In filtered
// mode, rows that served as pivot columns one dimension down ("negative"
// hyperedges: their arrival killed a lower class) are left out of the
// reduction, which is what makes pivot rows attributable to class births.
// Literal mode keeps every row and emits every (birth, death) pair as-is.
#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hyperbar/filtration.hpp"

namespace hyperbar {

enum class BarKind { inf, hat };

std::string to_string(BarKind k);

struct Bar {
  int dim = 0;
  BarKind kind = BarKind::inf;
  Grade birth;
  Grade death;
  // Row hyperedge that emitted the bar; empty for bars read back from files.
  Hyperedge source;

  friend bool operator==(const Bar& a, const Bar& b) {
    return a.dim == b.dim && a.kind == b.kind && a.birth == b.birth && a.death == b.death;
  }
};

// Deterministic output order: (dim, kind, birth, death, source edge).
bool bar_less(const Bar& a, const Bar& b);

struct DimMatrix {
  int k = 0;
  std::vector<Hyperedge> row_edges;
  std::vector<Grade> row_grades;
  std::vector<Hyperedge> col_edges;
  std::vector<Grade> col_grades;
  BitMatrix matrix;  // rows x cols, entry = facet incidence
};

struct PivotSet {
  // (row index, column index) pairs in discovery order; each row and each
  // column appears at most once.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

enum class BarMode { filtered, literal };

// Rows: every finite-grade k-hyperedge plus the infinite-grade ones that are
// faces of some finite column (other rows have no entry and cannot pivot),
// minus `excluded_rows`. Throws if k+2 exceeds the filtration's tracked cap.
DimMatrix build_dim_matrix(const Filtration& f, int k,
                           const std::set<Hyperedge>& excluded_rows = {});

// The row-major reduction: for each row in order, claim the smallest
// non-pivot column with a 1 there, then clear that row from every later
// non-pivot column. Mutates the matrix (current-state semantics).
PivotSet compute_pivot(BitMatrix& m);

// Finite-grade k-hyperedges that were pivot columns in the dimension-(k-1)
// reduction; they killed a class below and must not emit dimension-k births.
std::set<Hyperedge> negative_rows(const Filtration& f, int k);

// Per row: birth = row grade, death = pivot column grade or infinity.
// birth < death -> inf bar; birth > death -> hat bar (death, birth);
// equal-grade and (inf, inf) pairs are dropped.
std::vector<Bar> extract_bars(const DimMatrix& dm, const PivotSet& pivots);

// Dimensions 0..max_k, ascending (each dimension's negative rows come from
// the one below); output sorted by bar_less.
std::vector<Bar> compute_barcodes(const Filtration& f, int max_k,
                                  BarMode mode = BarMode::filtered);

struct ModuleSummand {
  enum class Kind { free_module, torsion };
  Kind kind = Kind::free_module;
  std::size_t start = 0;   // grade index of the shift
  std::size_t length = 0;  // torsion exponent; 0 for free summands
};

// Bars to graded-module summands over the given critical grade list:
// (b, inf) -> free summand shifted to index(b); (b, d) -> torsion summand at
// index(b) with exponent index(d) - index(b). Throws if an endpoint is not a
// critical grade.
std::vector<ModuleSummand> decompose(const std::vector<Bar>& bars,
                                     const std::vector<Grade>& critical_grades);

}  // namespace hyperbar
