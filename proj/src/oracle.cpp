#include "hyperbar/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <tuple>

namespace hyperbar {

Hypergraph snapshot_hypergraph(const Filtration& f, Grade t) {
  if (f.roster().size() > max_ambient_vertices)
    throw std::invalid_argument("roster too large for the oracle (cap " +
                                std::to_string(max_ambient_vertices) + " vertices)");
  Hypergraph h;
  h.roster = f.roster();
  for (std::uint32_t v = 0; v < h.roster.size(); ++v) {
    Grade g = f.grade(Hyperedge{v});
    if (g.is_finite() && g <= t) h.edges.insert(Hyperedge{v});
  }
  for (const auto& [e, g] : f.explicit_grades())
    if (e.size() >= 2 && g.is_finite() && g <= t) h.edges.insert(e);
  return h;
}

GradeSnapshot snapshot(const Filtration& f, Grade t, int max_dim) {
  GradeSnapshot s;
  s.t = t;
  s.hypergraph = snapshot_hypergraph(f, t);
  for (int n = 0; n <= max_dim; ++n) {
    s.edge_spans.push_back(edge_span(s.hypergraph, n));
    s.inf_spaces.push_back(inf_chain_space(s.hypergraph, n));
    s.sup_spaces.push_back(sup_chain_space(s.hypergraph, n));
  }
  return s;
}

namespace {

struct BettiParts {
  Subspace kernel_inf;  // ker(boundary) on the infimum space at t
  Subspace kernel_sup;  // ker(boundary) on the supremum space at t
  Subspace image_inf;   // boundary(infimum space one dimension up) at r
};

Subspace kernel_on(const Hypergraph& h, const Subspace& chains, int n) {
  if (n == 0) return chains;
  return subspace_intersection(chains,
                               kernel_basis(ambient_boundary_matrix(h.vertex_count(), n)));
}

Subspace image_of(const Hypergraph& h, const Subspace& chains, int from_dim) {
  BitMatrix d = ambient_boundary_matrix(h.vertex_count(), from_dim);
  std::vector<BitVector> gens;
  for (const BitVector& b : chains.basis()) gens.push_back(d.apply(b));
  return Subspace::span(d.rows, std::move(gens));
}

BettiParts betti_parts(const Filtration& f, int n, Grade t, Grade r) {
  if (r < t) throw std::invalid_argument("persistent Betti numbers require t <= r");
  Hypergraph at_t = snapshot_hypergraph(f, t);
  Hypergraph at_r = snapshot_hypergraph(f, r);
  BettiParts parts;
  parts.kernel_inf = kernel_on(at_t, inf_chain_space(at_t, n), n);
  parts.kernel_sup = kernel_on(at_t, sup_chain_space(at_t, n), n);
  parts.image_inf = image_of(at_r, inf_chain_space(at_r, n + 1), n + 1);
  return parts;
}

std::size_t quotient_dim(const Subspace& kernel, const Subspace& image) {
  return kernel.dim() - subspace_intersection(kernel, image).dim();
}

}  // namespace

std::size_t persistent_betti_inf(const Filtration& f, int n, Grade t, Grade r) {
  BettiParts p = betti_parts(f, n, t, r);
  return quotient_dim(p.kernel_inf, p.image_inf);
}

std::size_t persistent_betti_hat(const Filtration& f, int n, Grade t, Grade r) {
  BettiParts p = betti_parts(f, n, t, r);
  return quotient_dim(p.kernel_sup, p.image_inf);
}

PersistentBettiTable betti_table(const Filtration& f, int dim) {
  PersistentBettiTable table;
  table.dim = dim;
  table.grades = f.critical_grades();
  const std::size_t m = table.grades.size();

  // Kernels vary with t, images with r; precompute both families once.
  std::vector<Subspace> kernels_inf, kernels_sup, images;
  for (std::size_t i = 0; i < m; ++i) {
    Hypergraph h = snapshot_hypergraph(f, table.grades[i]);
    kernels_inf.push_back(kernel_on(h, inf_chain_space(h, dim), dim));
    kernels_sup.push_back(kernel_on(h, sup_chain_space(h, dim), dim));
    images.push_back(image_of(h, inf_chain_space(h, dim + 1), dim + 1));
  }

  table.inf_beta.assign(m, std::vector<std::size_t>(m + 1, 0));
  table.hat_beta.assign(m, std::vector<std::size_t>(m + 1, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      table.inf_beta[i][j] = quotient_dim(kernels_inf[i], images[j]);
      table.hat_beta[i][j] = quotient_dim(kernels_sup[i], images[j]);
    }
    // Nothing arrives after the last finite grade, so r = infinity
    // stabilizes at the last column.
    table.inf_beta[i][m] = m ? table.inf_beta[i][m - 1] : 0;
    table.hat_beta[i][m] = m ? table.hat_beta[i][m - 1] : 0;
  }
  return table;
}

namespace {

// Inclusion-exclusion over consecutive critical grades; beta[i][j] counts
// classes born by grades[i] and alive strictly past grades[j] (j = m: ever).
std::vector<Bar> bars_from_rank_function(const std::vector<Grade>& grades,
                                         const std::vector<std::vector<std::size_t>>& beta,
                                         int dim, BarKind kind) {
  const std::size_t m = grades.size();
  std::vector<Bar> bars;
  auto at = [&](std::size_t i, std::size_t j) -> std::int64_t {
    return static_cast<std::int64_t>(beta[i][j]);
  };
  for (std::size_t i = 0; i < m; ++i) {
    // Finite deaths at grades[j], j > i.
    for (std::size_t j = i + 1; j < m; ++j) {
      std::int64_t mult = at(i, j - 1) - at(i, j);
      if (i > 0) mult -= at(i - 1, j - 1) - at(i - 1, j);
      if (mult < 0) throw std::logic_error("non-realizable persistent Betti table");
      for (std::int64_t c = 0; c < mult; ++c) {
        Bar bar;
        bar.dim = dim;
        bar.kind = kind;
        bar.birth = grades[i];
        bar.death = grades[j];
        bars.push_back(bar);
      }
    }
    std::int64_t inf_mult = at(i, m) - (i > 0 ? at(i - 1, m) : 0);
    if (inf_mult < 0) throw std::logic_error("non-realizable persistent Betti table");
    for (std::int64_t c = 0; c < inf_mult; ++c) {
      Bar bar;
      bar.dim = dim;
      bar.kind = kind;
      bar.birth = grades[i];
      bar.death = Grade::inf();
      bars.push_back(bar);
    }
  }
  // Verify the reconstruction reproduces the table.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j <= m; ++j) {
      std::size_t alive = 0;
      for (const Bar& bar : bars)
        if (bar.birth <= grades[i] && (j == m ? !bar.death.is_finite() : grades[j] < bar.death))
          ++alive;
      if (alive != beta[i][j]) throw std::logic_error("persistent Betti table reconstruction failed");
    }
  }
  std::sort(bars.begin(), bars.end(), bar_less);
  return bars;
}

}  // namespace

std::pair<std::vector<Bar>, std::vector<Bar>> bars_from_betti(const PersistentBettiTable& t) {
  const std::size_t m = t.grades.size();
  std::vector<std::vector<std::size_t>> additional(m, std::vector<std::size_t>(m + 1, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j <= m; ++j) {
      if (t.hat_beta[i][j] < t.inf_beta[i][j])
        throw std::logic_error("hat Betti numbers must dominate inf Betti numbers");
      additional[i][j] = t.hat_beta[i][j] - t.inf_beta[i][j];
    }
  return {bars_from_rank_function(t.grades, t.inf_beta, t.dim, BarKind::inf),
          bars_from_rank_function(t.grades, additional, t.dim, BarKind::hat)};
}

std::vector<Bar> oracle_barcodes(const Filtration& f, int max_dim) {
  std::vector<Bar> bars;
  for (int n = 0; n <= max_dim; ++n) {
    auto [inf_bars, hat_bars] = bars_from_betti(betti_table(f, n));
    bars.insert(bars.end(), inf_bars.begin(), inf_bars.end());
    bars.insert(bars.end(), hat_bars.begin(), hat_bars.end());
  }
  std::sort(bars.begin(), bars.end(), bar_less);
  return bars;
}

std::vector<Bar> classical_simplicial_bars(const Filtration& f, int max_dim) {
  if (!f.is_simplicial())
    throw std::invalid_argument("classical reduction requires a simplicial-complex filtration");

  struct Simplex {
    Grade g;
    Hyperedge e;
  };
  std::vector<Simplex> simplices;
  for (std::size_t size = 1; size <= static_cast<std::size_t>(max_dim) + 2; ++size)
    for (auto& [e, g] : f.finite_edges_of_size(size)) simplices.push_back({g, e});
  std::sort(simplices.begin(), simplices.end(), [](const Simplex& a, const Simplex& b) {
    if (!(a.g == b.g)) return a.g < b.g;
    if (a.e.size() != b.e.size()) return a.e.size() < b.e.size();
    return a.e < b.e;
  });

  std::map<Hyperedge, std::size_t> index;
  for (std::size_t i = 0; i < simplices.size(); ++i) index[simplices[i].e] = i;

  // Columns as sorted index lists; low = largest index.
  std::vector<std::vector<std::size_t>> cols(simplices.size());
  for (std::size_t j = 0; j < simplices.size(); ++j) {
    const Hyperedge& e = simplices[j].e;
    if (e.size() == 1) continue;
    Hyperedge face;
    face.members.resize(e.size() - 1);
    for (std::size_t skip = 0; skip < e.size(); ++skip) {
      std::size_t w = 0;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (i != skip) face.members[w++] = e.members[i];
      cols[j].push_back(index.at(face));
    }
    std::sort(cols[j].begin(), cols[j].end());
  }

  auto xor_into = [](std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    a = std::move(out);
  };

  std::vector<std::size_t> owner(simplices.size(), static_cast<std::size_t>(-1));
  std::vector<char> killed(simplices.size(), 0);
  std::vector<Bar> bars;
  for (std::size_t j = 0; j < simplices.size(); ++j) {
    auto& col = cols[j];
    while (!col.empty()) {
      std::size_t low = col.back();
      if (owner[low] == static_cast<std::size_t>(-1)) break;
      xor_into(col, cols[owner[low]]);
    }
    if (col.empty()) continue;
    std::size_t low = col.back();
    owner[low] = j;
    killed[low] = 1;
    if (simplices[low].g < simplices[j].g) {
      Bar bar;
      bar.dim = simplices[low].e.dim();
      bar.kind = BarKind::inf;
      bar.birth = simplices[low].g;
      bar.death = simplices[j].g;
      bar.source = simplices[low].e;
      bars.push_back(bar);
    }
  }
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    if (killed[i] || !cols[i].empty()) continue;
    if (simplices[i].e.dim() > max_dim) continue;
    Bar bar;
    bar.dim = simplices[i].e.dim();
    bar.kind = BarKind::inf;
    bar.birth = simplices[i].g;
    bar.death = Grade::inf();
    bar.source = simplices[i].e;
    bars.push_back(bar);
  }
  std::sort(bars.begin(), bars.end(), bar_less);
  return bars;
}

std::string DiffReport::describe(const std::vector<std::string>&) const {
  std::string out;
  for (const DiffEntry& d : entries) {
    out += d.side == DiffEntry::Side::engine_only ? "engine only: " : "oracle only: ";
    out += "dim " + std::to_string(d.bar.dim) + ' ' + to_string(d.bar.kind) + " [" +
           d.bar.birth.render() + ", " + d.bar.death.render() + ")\n";
  }
  return out;
}

DiffReport compare(const std::vector<Bar>& engine_bars, const std::vector<Bar>& oracle_bars) {
  auto key = [](const Bar& b) {
    return std::tuple(b.dim, b.kind == BarKind::hat, b.death.infinite, b.birth.value,
                      b.death.value, b.birth.infinite);
  };
  std::map<std::tuple<int, bool, bool, double, double, bool>, std::int64_t> counts;
  std::map<std::tuple<int, bool, bool, double, double, bool>, Bar> repr;
  for (const Bar& b : engine_bars) {
    counts[key(b)]++;
    repr.emplace(key(b), b);
  }
  for (const Bar& b : oracle_bars) {
    counts[key(b)]--;
    repr.emplace(key(b), b);
  }
  DiffReport report;
  for (const auto& [k, c] : counts) {
    for (std::int64_t i = 0; i < std::abs(c); ++i)
      report.entries.push_back(
          {c > 0 ? DiffEntry::Side::engine_only : DiffEntry::Side::oracle_only, repr.at(k)});
  }
  return report;
}

}  // namespace hyperbar
