#include "hyperbar/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperbar {

bool Hyperedge::valid() const {
  if (members.empty()) return false;
  for (std::size_t i = 1; i < members.size(); ++i)
    if (members[i - 1] >= members[i]) return false;
  return true;
}

bool Hyperedge::contains(const Hyperedge& other) const {
  return std::includes(members.begin(), members.end(), other.members.begin(),
                       other.members.end());
}

std::string format_edge(const Hyperedge& e, const std::vector<std::string>& roster) {
  std::string out;
  for (std::size_t i = 0; i < e.members.size(); ++i) {
    if (i) out += '|';
    out += roster.at(e.members[i]);
  }
  return out;
}

void Hypergraph::add_edge(Hyperedge e) {
  if (!e.valid()) throw std::invalid_argument("hyperedge members must be strictly increasing");
  if (!e.members.empty() && e.members.back() >= roster.size())
    throw std::invalid_argument("hyperedge member outside roster");
  edges.insert(std::move(e));
}

std::vector<Hyperedge> Hypergraph::edges_of_dim(int n) const {
  std::vector<Hyperedge> out;
  for (const Hyperedge& e : edges)
    if (e.dim() == n) out.push_back(e);
  return out;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t subset_rank(const Hyperedge& e, std::size_t n_vertices) {
  // Lexicographic rank over strictly increasing sequences.
  std::size_t rank = 0;
  std::size_t prev = 0;  // next candidate value
  const std::size_t k = e.members.size();
  for (std::size_t pos = 0; pos < k; ++pos) {
    for (std::size_t v = prev; v < e.members[pos]; ++v)
      rank += binomial(n_vertices - v - 1, k - pos - 1);
    prev = e.members[pos] + 1;
  }
  return rank;
}

Hyperedge subset_unrank(std::size_t rank, std::size_t n_vertices, std::size_t size) {
  std::vector<std::uint32_t> members;
  members.reserve(size);
  std::size_t v = 0;
  for (std::size_t pos = 0; pos < size; ++pos) {
    while (true) {
      std::uint64_t block = binomial(n_vertices - v - 1, size - pos - 1);
      if (rank < block) break;
      rank -= block;
      ++v;
    }
    members.push_back(static_cast<std::uint32_t>(v));
    ++v;
  }
  return Hyperedge(std::move(members));
}

namespace {

void check_ambient_cap(std::size_t n_vertices) {
  if (n_vertices > max_ambient_vertices)
    throw std::invalid_argument("roster too large for ambient chain enumeration (cap " +
                                std::to_string(max_ambient_vertices) + ")");
}

}  // namespace

Chain boundary(const Hyperedge& e, std::size_t n_vertices) {
  check_ambient_cap(n_vertices);
  Chain c;
  c.dim = e.dim() - 1;
  c.n_vertices = n_vertices;
  c.coeffs = BitVector(c.dim >= 0 ? binomial(n_vertices, e.size() - 1) : 0);
  if (c.dim < 0) return c;  // boundary of a vertex is zero
  Hyperedge face;
  face.members.resize(e.size() - 1);
  for (std::size_t skip = 0; skip < e.size(); ++skip) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != skip) face.members[w++] = e.members[i];
    std::size_t r = subset_rank(face, n_vertices);
    c.coeffs.set(r, !c.coeffs.get(r));
  }
  return c;
}

Chain boundary(const Chain& c) {
  Chain out;
  out.dim = c.dim - 1;
  out.n_vertices = c.n_vertices;
  out.coeffs = BitVector(out.dim >= 0 ? binomial(c.n_vertices, out.dim + 1) : 0);
  if (out.dim < 0) return out;
  for (std::size_t r : c.coeffs.support()) {
    Hyperedge e = subset_unrank(r, c.n_vertices, c.dim + 1);
    out.coeffs ^= boundary(e, c.n_vertices).coeffs;
  }
  return out;
}

BitMatrix ambient_boundary_matrix(std::size_t n_vertices, int k) {
  check_ambient_cap(n_vertices);
  if (k < 0) throw std::invalid_argument("boundary matrix dimension must be >= 0");
  const std::size_t cols = binomial(n_vertices, k + 1);
  const std::size_t rows = k == 0 ? 0 : binomial(n_vertices, k);
  BitMatrix m(rows, cols);
  if (k == 0) return m;
  for (std::size_t j = 0; j < cols; ++j)
    m.columns[j] = boundary(subset_unrank(j, n_vertices, k + 1), n_vertices).coeffs;
  return m;
}

Subspace edge_span(const Hypergraph& h, int n) {
  check_ambient_cap(h.vertex_count());
  const std::size_t ambient = binomial(h.vertex_count(), n + 1);
  std::vector<BitVector> gens;
  for (const Hyperedge& e : h.edges_of_dim(n))
    gens.push_back(BitVector::unit(ambient, subset_rank(e, h.vertex_count())));
  return Subspace::span(ambient, std::move(gens));
}

Subspace inf_chain_space(const Hypergraph& h, int n) {
  if (n < 0) throw std::invalid_argument("dimension must be >= 0");
  Subspace hn = edge_span(h, n);
  if (n == 0) return hn;  // boundary of a 0-chain vanishes
  BitMatrix d = ambient_boundary_matrix(h.vertex_count(), n);
  return subspace_intersection(preimage_space(d, edge_span(h, n - 1)), hn);
}

Subspace sup_chain_space(const Hypergraph& h, int n) {
  if (n < 0) throw std::invalid_argument("dimension must be >= 0");
  const std::size_t ambient = binomial(h.vertex_count(), n + 1);
  Subspace raw = edge_span(h, n);
  std::vector<BitVector> gens = raw.basis();
  for (const Hyperedge& e : h.edges_of_dim(n + 1))
    gens.push_back(boundary(e, h.vertex_count()).coeffs);
  return Subspace::span(ambient, std::move(gens));
}

Hypergraph delta_closure(const Hypergraph& h) {
  Hypergraph out;
  out.roster = h.roster;
  for (const Hyperedge& e : h.edges) {
    const std::size_t k = e.size();
    // All nonempty subsets via bitmask enumeration.
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      Hyperedge sub;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1u << i)) sub.members.push_back(e.members[i]);
      out.edges.insert(std::move(sub));
    }
  }
  return out;
}

Hypergraph lower_delta(const Hypergraph& h) {
  Hypergraph out;
  out.roster = h.roster;
  for (const Hyperedge& e : h.edges) {
    const std::size_t k = e.size();
    bool closed = true;
    for (std::uint32_t mask = 1; closed && mask < (1u << k); ++mask) {
      Hyperedge sub;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1u << i)) sub.members.push_back(e.members[i]);
      closed = h.edges.count(sub) > 0;
    }
    if (closed) out.edges.insert(e);
  }
  return out;
}

namespace {

Subspace boundary_image(const Hypergraph& h, const Subspace& chains, int from_dim) {
  // Image of the ambient boundary map applied to a chain subspace.
  const std::size_t target_ambient =
      from_dim >= 1 ? binomial(h.vertex_count(), from_dim) : 0;
  if (from_dim < 1) return Subspace::zero(0);
  BitMatrix d = ambient_boundary_matrix(h.vertex_count(), from_dim);
  std::vector<BitVector> gens;
  for (const BitVector& b : chains.basis()) gens.push_back(d.apply(b));
  return Subspace::span(target_ambient, std::move(gens));
}

Subspace cycle_part(const Hypergraph& h, const Subspace& chains, int n) {
  if (n == 0) return chains;  // everything is a cycle
  BitMatrix d = ambient_boundary_matrix(h.vertex_count(), n);
  return subspace_intersection(chains, kernel_basis(d));
}

}  // namespace

std::pair<std::size_t, std::size_t> embedded_betti_both_sides(const Hypergraph& h, int n) {
  Subspace inf_n = inf_chain_space(h, n);
  Subspace inf_up = inf_chain_space(h, n + 1);
  Subspace ker_inf = cycle_part(h, inf_n, n);
  Subspace img_inf = boundary_image(h, inf_up, n + 1);
  std::size_t inf_side =
      ker_inf.dim() - subspace_intersection(ker_inf, img_inf).dim();

  Subspace sup_n = sup_chain_space(h, n);
  Subspace ker_sup = cycle_part(h, sup_n, n);
  // Image of the supremum boundary one dimension up equals the boundary of
  // the raw (n+1)-edge span.
  Subspace img_sup = boundary_image(h, edge_span(h, n + 1), n + 1);
  std::size_t sup_side =
      ker_sup.dim() - subspace_intersection(ker_sup, img_sup).dim();

  return {inf_side, sup_side};
}

std::size_t embedded_betti(const Hypergraph& h, int n) {
  auto [inf_side, sup_side] = embedded_betti_both_sides(h, n);
  if (inf_side != sup_side)
    throw std::logic_error("embedded homology mismatch between infimum and supremum sides");
  return inf_side;
}

std::size_t hat_betti(const Hypergraph& h, int n) {
  Subspace ker_sup = cycle_part(h, sup_chain_space(h, n), n);
  Subspace img_inf = boundary_image(h, inf_chain_space(h, n + 1), n + 1);
  return ker_sup.dim() - subspace_intersection(ker_sup, img_inf).dim();
}

MorphismReport validate_morphism(const std::vector<std::uint32_t>& vertex_map,
                                 const Hypergraph& source, const Hypergraph& target) {
  if (vertex_map.size() != source.vertex_count())
    throw std::invalid_argument("vertex map must cover the source roster");
  for (std::uint32_t v : vertex_map)
    if (v >= target.vertex_count())
      throw std::invalid_argument("vertex map image outside target roster");

  MorphismReport report;
  report.morphism = true;
  std::set<Hyperedge> images;
  bool edge_map_injective = true;
  for (const Hyperedge& e : source.edges) {
    std::vector<std::uint32_t> img;
    for (std::uint32_t v : e.members) img.push_back(vertex_map[v]);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    Hyperedge image(std::move(img));
    if (!target.has_edge(image)) {
      report.morphism = false;
      break;
    }
    if (!images.insert(image).second) edge_map_injective = false;
  }
  if (!report.morphism) return report;

  std::vector<std::uint32_t> seen = vertex_map;
  std::sort(seen.begin(), seen.end());
  bool vertex_injective = std::adjacent_find(seen.begin(), seen.end()) == seen.end();
  report.injective = vertex_injective;
  report.embedding = vertex_injective && edge_map_injective;
  return report;
}

}  // namespace hyperbar
