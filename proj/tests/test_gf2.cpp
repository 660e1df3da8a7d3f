#include "doctest.h"

#include <algorithm>
#include <random>

#include "hyperbar/gf2.hpp"

using namespace hyperbar;

namespace {

BitVector from_bits(std::initializer_list<int> bits, std::size_t size) {
  BitVector v(size);
  for (int b : bits) v.set(static_cast<std::size_t>(b));
  return v;
}

// Boundary of the triangle edge set {AB, AC, BC} over vertices {A, B, C}:
// columns in lexicographic edge order, rows in vertex order.
BitMatrix triangle_boundary() {
  BitMatrix m(3, 3);
  m.columns[0] = from_bits({0, 1}, 3);  // AB -> A + B
  m.columns[1] = from_bits({0, 2}, 3);  // AC -> A + C
  m.columns[2] = from_bits({1, 2}, 3);  // BC -> B + C
  return m;
}

BitMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  BitMatrix m(rows, cols);
  std::bernoulli_distribution bit(0.4);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i)
      if (bit(rng)) m.set(i, j);
  return m;
}

Subspace random_subspace(std::mt19937& rng, std::size_t ambient, std::size_t generators) {
  std::vector<BitVector> gens;
  std::bernoulli_distribution bit(0.5);
  for (std::size_t g = 0; g < generators; ++g) {
    BitVector v(ambient);
    for (std::size_t i = 0; i < ambient; ++i)
      if (bit(rng)) v.set(i);
    gens.push_back(std::move(v));
  }
  return Subspace::span(ambient, std::move(gens));
}

}  // namespace

TEST_CASE("bit vector basics") {
  BitVector v(70);
  CHECK(v.is_zero());
  v.set(0);
  v.set(69);
  CHECK(v.popcount() == 2);
  CHECK(v.lowest_set() == 0);
  v.set(0, false);
  CHECK(v.lowest_set() == 69);
  CHECK(v.support() == std::vector<std::size_t>{69});

  BitVector a = from_bits({1, 3}, 8);
  BitVector b = from_bits({3, 5}, 8);
  CHECK((a ^ b) == from_bits({1, 5}, 8));
  CHECK((a ^ a).is_zero());
}

TEST_CASE("rank") {
  CHECK(rank(BitMatrix(3, 3)) == 0);
  CHECK(rank(BitMatrix::identity(3)) == 3);
  CHECK(rank(triangle_boundary()) == 2);
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(BitMatrix::identity(4)).dim() == 0);
  CHECK(kernel_basis(BitMatrix(3, 4)) == Subspace::full(4));

  Subspace ker = kernel_basis(triangle_boundary());
  REQUIRE(ker.dim() == 1);
  CHECK(ker.basis()[0] == from_bits({0, 1, 2}, 3));  // AB + AC + BC
}

TEST_CASE("subspace sum") {
  auto e = [](int i) { return BitVector::unit(4, static_cast<std::size_t>(i)); };
  Subspace a = Subspace::span(4, {e(0)});
  Subspace b = Subspace::span(4, {e(1)});
  CHECK(subspace_sum(a, b).dim() == 2);
  CHECK(subspace_sum(a, a) == a);

  Subspace c = Subspace::span(4, {e(0) ^ e(1)});
  Subspace d = Subspace::span(4, {e(1) ^ e(2)});
  Subspace s = subspace_sum(c, d);
  CHECK(s.dim() == 2);
  CHECK(s.contains(e(0) ^ e(2)));
}

TEST_CASE("subspace intersection") {
  auto e = [](int i) { return BitVector::unit(4, static_cast<std::size_t>(i)); };
  Subspace a = Subspace::span(4, {e(0), e(1)});
  CHECK(subspace_intersection(a, a) == a);
  CHECK(subspace_intersection(Subspace::span(4, {e(0)}), Subspace::span(4, {e(1)})).dim() == 0);

  Subspace b = Subspace::span(4, {e(1), e(2)});
  Subspace meet = subspace_intersection(a, b);
  REQUIRE(meet.dim() == 1);
  CHECK(meet.basis()[0] == e(1));
}

TEST_CASE("preimage space") {
  BitMatrix tri = triangle_boundary();
  CHECK(preimage_space(tri, Subspace::full(3)) == Subspace::full(3));
  CHECK(preimage_space(tri, Subspace::zero(3)) == kernel_basis(tri));

  // Boundary of the two 2-simplices ABC, DEF over six vertices, expressed on
  // the edge basis [AB, AC, BC, CD, CF, DE, DF, EF] (the edges in play):
  // ABC -> AB + AC + BC, DEF -> DE + DF + EF.
  BitMatrix d2(8, 2);
  d2.columns[0] = from_bits({0, 1, 2}, 8);
  d2.columns[1] = from_bits({5, 6, 7}, 8);
  // Span of the six observed edges: everything except DE and EF.
  Subspace observed = Subspace::span(8, {
                                            BitVector::unit(8, 0),
                                            BitVector::unit(8, 1),
                                            BitVector::unit(8, 2),
                                            BitVector::unit(8, 3),
                                            BitVector::unit(8, 4),
                                            BitVector::unit(8, 6),
                                        });
  Subspace pre = preimage_space(d2, observed);
  REQUIRE(pre.dim() == 1);
  CHECK(pre.basis()[0] == BitVector::unit(2, 0));  // ABC only
}

TEST_CASE("rank-nullity and Grassmann identities on random inputs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t rows = 1 + rng() % 10, cols = 1 + rng() % 10;
    BitMatrix m = random_matrix(rng, rows, cols);
    CHECK(kernel_basis(m).dim() + rank(m) == cols);
    CHECK(preimage_space(m, Subspace::zero(rows)) == kernel_basis(m));

    std::size_t ambient = 1 + rng() % 10;
    Subspace a = random_subspace(rng, ambient, rng() % 5);
    Subspace b = random_subspace(rng, ambient, rng() % 5);
    CHECK(a.dim() + b.dim() ==
          subspace_sum(a, b).dim() + subspace_intersection(a, b).dim());
    CHECK(subspace_sum(a, b).contains(a));
    CHECK(a.contains(subspace_intersection(a, b)));
  }
}

TEST_CASE("canonical bases are generator-order independent") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t ambient = 2 + rng() % 8;
    Subspace a = random_subspace(rng, ambient, 1 + rng() % 5);
    std::vector<BitVector> gens = a.basis();
    // Mix the generators: shuffle and add pairwise sums.
    if (gens.size() >= 2) gens.push_back(gens[0] ^ gens[1]);
    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(Subspace::span(ambient, gens) == a);
  }
}
