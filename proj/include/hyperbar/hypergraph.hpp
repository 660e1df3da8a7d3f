// Hypergraph data model: vertex roster, hyperedges, the boundary operator,
// the derived complexes (infimum/supremum chain spaces, delta closures),
// static homology dimensions, and morphism validation.
//
// Ambient chain groups are enumerated explicitly (all C(|V|, k+1) subsets in
// lexicographic order), so these operations carry a hard roster cap; the
// persistence engine never goes through this path.
#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "hyperbar/gf2.hpp"

namespace hyperbar {

// Roster size limit for ambient basis enumeration.
inline constexpr std::size_t max_ambient_vertices = 12;

struct Hyperedge {
  std::vector<std::uint32_t> members;  // strictly increasing, non-empty

  Hyperedge() = default;
  Hyperedge(std::initializer_list<std::uint32_t> m) : members(m) {}
  explicit Hyperedge(std::vector<std::uint32_t> m) : members(std::move(m)) {}

  int dim() const { return static_cast<int>(members.size()) - 1; }
  std::size_t size() const { return members.size(); }

  bool valid() const;
  bool contains(const Hyperedge& other) const;  // other subset of this

  auto operator<=>(const Hyperedge& other) const = default;
};

std::string format_edge(const Hyperedge& e, const std::vector<std::string>& roster);

struct Hypergraph {
  std::vector<std::string> roster;  // ids unique; index = position
  std::set<Hyperedge> edges;

  std::size_t vertex_count() const { return roster.size(); }
  bool has_edge(const Hyperedge& e) const { return edges.count(e) > 0; }
  void add_edge(Hyperedge e);

  // Hyperedges of dimension n, in lexicographic order.
  std::vector<Hyperedge> edges_of_dim(int n) const;
};

// A chain in the ambient group C_k over n_vertices: coefficients indexed by
// the lexicographic rank of each (k+1)-subset.
struct Chain {
  int dim = -1;
  std::size_t n_vertices = 0;
  BitVector coeffs;  // size C(n_vertices, dim+1)
};

std::uint64_t binomial(std::size_t n, std::size_t k);

// Lexicographic rank of a (k+1)-subset among all (k+1)-subsets of [0, n).
std::size_t subset_rank(const Hyperedge& e, std::size_t n_vertices);
Hyperedge subset_unrank(std::size_t rank, std::size_t n_vertices, std::size_t size);

// Sum of the codimension-1 faces (no signs in characteristic 2).
Chain boundary(const Hyperedge& e, std::size_t n_vertices);
Chain boundary(const Chain& c);

// Ambient boundary matrix C_k -> C_{k-1}; for k = 0 the zero map (0 rows).
BitMatrix ambient_boundary_matrix(std::size_t n_vertices, int k);

// Span of the hypergraph's dimension-n hyperedges inside ambient C_n.
Subspace edge_span(const Hypergraph& h, int n);

// Infimum chain space: largest subspace of the edge span whose boundary
// stays inside the edge span one dimension down. For n = 0 the whole span.
Subspace inf_chain_space(const Hypergraph& h, int n);

// Supremum chain space: edge span plus boundaries of (n+1)-hyperedges.
Subspace sup_chain_space(const Hypergraph& h, int n);

// Downward closure: all nonempty subsets of every hyperedge.
Hypergraph delta_closure(const Hypergraph& h);

// Largest simplicial complex inside the edge set.
Hypergraph lower_delta(const Hypergraph& h);

// Embedded homology dimension; computes both the infimum-side and
// supremum-side quotients and throws std::logic_error if they disagree.
std::size_t embedded_betti(const Hypergraph& h, int n);
std::pair<std::size_t, std::size_t> embedded_betti_both_sides(const Hypergraph& h, int n);

// dim ker(boundary on the supremum space) - dim boundary(infimum space above).
std::size_t hat_betti(const Hypergraph& h, int n);

struct MorphismReport {
  bool morphism = false;   // every hyperedge image is a hyperedge of the target
  bool injective = false;  // vertex map injective (and morphism)
  bool embedding = false;  // injective and edge map injective
};

// vertex_map[i] = target index of source vertex i; must cover the roster.
MorphismReport validate_morphism(const std::vector<std::uint32_t>& vertex_map,
                                 const Hypergraph& source, const Hypergraph& target);

}  // namespace hyperbar
