#include "hyperbar/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace hyperbar {

BitVector& BitVector::operator^=(const BitVector& other) {
  if (size_ != other.size_) throw std::invalid_argument("BitVector size mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

bool BitVector::is_zero() const {
  for (std::uint64_t w : words_)
    if (w) return false;
  return true;
}

std::size_t BitVector::popcount() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += std::popcount(w);
  return n;
}

std::size_t BitVector::lowest_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
  return npos;
}

std::vector<std::size_t> BitVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      out.push_back(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns[i].set(i);
  return m;
}

BitVector BitMatrix::apply(const BitVector& x) const {
  if (x.size() != cols()) throw std::invalid_argument("apply: coordinate size mismatch");
  BitVector out(rows);
  for (std::size_t j : x.support()) out ^= columns[j];
  return out;
}

namespace {

// Column echelon reduction: returns vectors with distinct, strictly
// increasing pivots (lowest set bits), fully back-substituted so every pivot
// index appears in exactly one basis vector. Canonical for a given span.
std::vector<BitVector> reduce_to_echelon(std::vector<BitVector> generators) {
  std::vector<BitVector> basis;  // kept sorted by pivot
  for (BitVector& v : generators) {
    for (const BitVector& b : basis) {
      std::size_t p = b.lowest_set();
      if (p != BitVector::npos && v.size() > p && v.get(p)) v ^= b;
    }
    if (!v.is_zero()) {
      basis.push_back(std::move(v));
      for (std::size_t i = basis.size(); i > 1; --i) {
        if (basis[i - 1].lowest_set() < basis[i - 2].lowest_set())
          std::swap(basis[i - 1], basis[i - 2]);
        else
          break;
      }
    }
  }
  // Back-substitute: clear each pivot from every other basis vector.
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::size_t p = basis[i].lowest_set();
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (j != i && basis[j].get(p)) basis[j] ^= basis[i];
  }
  return basis;
}

}  // namespace

Subspace Subspace::full(std::size_t ambient) {
  std::vector<BitVector> basis;
  basis.reserve(ambient);
  for (std::size_t i = 0; i < ambient; ++i) basis.push_back(BitVector::unit(ambient, i));
  return Subspace(ambient, std::move(basis));
}

Subspace Subspace::span(std::size_t ambient, std::vector<BitVector> generators) {
  for (const BitVector& g : generators)
    if (g.size() != ambient) throw std::invalid_argument("span: ambient size mismatch");
  return Subspace(ambient, reduce_to_echelon(std::move(generators)));
}

bool Subspace::contains(const BitVector& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("contains: ambient size mismatch");
  BitVector r = v;
  for (const BitVector& b : basis_) {
    std::size_t p = b.lowest_set();
    if (r.get(p)) r ^= b;
  }
  return r.is_zero();
}

bool Subspace::contains(const Subspace& other) const {
  for (const BitVector& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

std::size_t rank(const BitMatrix& m) {
  return Subspace::span(m.rows, m.columns).dim();
}

Subspace kernel_basis(const BitMatrix& m) {
  // Reduce columns while tracking the combination of original columns that
  // produced each; a column that reduces to zero yields a kernel vector.
  std::vector<BitVector> reduced;   // nonzero echelon columns
  std::vector<BitVector> combos;    // matching combinations over GF(2)^cols
  std::vector<BitVector> kernel;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    BitVector v = m.columns[j];
    BitVector c = BitVector::unit(m.cols(), j);
    for (std::size_t b = 0; b < reduced.size(); ++b) {
      std::size_t p = reduced[b].lowest_set();
      if (v.get(p)) {
        v ^= reduced[b];
        c ^= combos[b];
      }
    }
    if (v.is_zero()) {
      kernel.push_back(std::move(c));
    } else {
      reduced.push_back(std::move(v));
      combos.push_back(std::move(c));
    }
  }
  return Subspace::span(m.cols(), std::move(kernel));
}

Subspace column_space(const BitMatrix& m) {
  return Subspace::span(m.rows, m.columns);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_size() != b.ambient_size())
    throw std::invalid_argument("subspace_sum: ambient size mismatch");
  std::vector<BitVector> gens = a.basis();
  gens.insert(gens.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_size(), std::move(gens));
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_size() != b.ambient_size())
    throw std::invalid_argument("subspace_intersection: ambient size mismatch");
  // x in A and x in B  <=>  x = A u = B w for a kernel element (u, w) of [A B].
  BitMatrix stacked(a.ambient_size(), a.dim() + b.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) stacked.columns[j] = a.basis()[j];
  for (std::size_t j = 0; j < b.dim(); ++j) stacked.columns[a.dim() + j] = b.basis()[j];
  Subspace ker = kernel_basis(stacked);
  std::vector<BitVector> gens;
  for (const BitVector& k : ker.basis()) {
    BitVector x(a.ambient_size());
    for (std::size_t j : k.support())
      if (j < a.dim()) x ^= a.basis()[j];
    gens.push_back(std::move(x));
  }
  return Subspace::span(a.ambient_size(), std::move(gens));
}

Subspace preimage_space(const BitMatrix& m, const Subspace& s) {
  if (s.ambient_size() != m.rows)
    throw std::invalid_argument("preimage_space: codomain size mismatch");
  // Mx in S  <=>  Mx + S y = 0 for some y: kernel of [M | S], x coordinates.
  BitMatrix stacked(m.rows, m.cols() + s.dim());
  for (std::size_t j = 0; j < m.cols(); ++j) stacked.columns[j] = m.columns[j];
  for (std::size_t j = 0; j < s.dim(); ++j) stacked.columns[m.cols() + j] = s.basis()[j];
  Subspace ker = kernel_basis(stacked);
  std::vector<BitVector> gens;
  for (const BitVector& k : ker.basis()) {
    BitVector x(m.cols());
    for (std::size_t j : k.support())
      if (j < m.cols()) x.set(j);
    gens.push_back(std::move(x));
  }
  return Subspace::span(m.cols(), std::move(gens));
}

}  // namespace hyperbar
