// Exact linear algebra over GF(2): bit-packed vectors, column-major
// matrices, and canonical subspaces (reduced column echelon form).
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hyperbar {

class BitVector {
public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static BitVector unit(std::size_t size, std::size_t index) {
    BitVector v(size);
    v.set(index);
    return v;
  }

  std::size_t size() const { return size_; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

  void set(std::size_t i, bool value = true) {
    if (value)
      words_[i >> 6] |= std::uint64_t(1) << (i & 63);
    else
      words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
  }

  // Addition in characteristic 2 is symmetric difference of supports.
  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) {
    a ^= b;
    return a;
  }

  bool is_zero() const;
  std::size_t popcount() const;

  // Index of the lowest set bit, or npos when zero.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t lowest_set() const;

  std::vector<std::size_t> support() const;

  bool operator==(const BitVector& other) const = default;

private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Column-major matrix over GF(2); every column has basis_size == rows.
struct BitMatrix {
  std::size_t rows = 0;
  std::vector<BitVector> columns;

  BitMatrix() = default;
  BitMatrix(std::size_t rows_, std::size_t cols_) : rows(rows_), columns(cols_, BitVector(rows_)) {}

  std::size_t cols() const { return columns.size(); }

  bool get(std::size_t i, std::size_t j) const { return columns[j].get(i); }
  void set(std::size_t i, std::size_t j, bool value = true) { columns[j].set(i, value); }

  static BitMatrix identity(std::size_t n);

  // M x, where x has one coordinate per column.
  BitVector apply(const BitVector& x) const;
};

// Canonical subspace of GF(2)^ambient: basis in reduced column echelon form,
// pivot (lowest set bit) indices strictly increasing and unique to their
// basis vector. Equal subspaces have byte-identical bases.
class Subspace {
public:
  Subspace() = default;
  static Subspace zero(std::size_t ambient) { return Subspace(ambient, {}); }
  static Subspace full(std::size_t ambient);
  // Span of arbitrary generators; reduces to the canonical basis.
  static Subspace span(std::size_t ambient, std::vector<BitVector> generators);

  std::size_t ambient_size() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<BitVector>& basis() const { return basis_; }

  bool contains(const BitVector& v) const;
  bool contains(const Subspace& other) const;

  bool operator==(const Subspace& other) const = default;

private:
  Subspace(std::size_t ambient, std::vector<BitVector> basis)
      : ambient_(ambient), basis_(std::move(basis)) {}

  std::size_t ambient_ = 0;
  std::vector<BitVector> basis_;
};

// Dimension of the column span.
std::size_t rank(const BitMatrix& m);

// Basis of {x : Mx = 0}; lives in GF(2)^cols.
Subspace kernel_basis(const BitMatrix& m);

// Span of the columns of M.
Subspace column_space(const BitMatrix& m);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);

// {x : Mx in S}; requires s.ambient_size() == m.rows.
Subspace preimage_space(const BitMatrix& m, const Subspace& s);

}  // namespace hyperbar
