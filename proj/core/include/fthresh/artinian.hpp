#pragma once

#include <unordered_map>
#include <vector>

#include "fthresh/ideal.hpp"
#include "fthresh/linalg.hpp"

namespace fthresh {

// The finite dimensional algebra S/B for a zero dimensional B, with the standard
// monomials of B's Groebner basis as k-basis and precomputed
// multiplication-by-variable tables.
class ArtinianAlgebra {
 public:
  explicit ArtinianAlgebra(const Ideal& ideal);

  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<Monomial>& basis() const noexcept { return basis_; }
  const PrimeField& field() const noexcept { return ring_->field(); }
  const PolyRingPtr& ring() const noexcept { return ring_; }

  Vec zero() const { return Vec(basis_.size(), 0); }
  // Class of 1; the zero vector when B is the unit ideal.
  Vec one() const;
  Vec to_vector(const Polynomial& f) const;
  Polynomial to_polynomial(const Vec& v) const;

  Vec multiply_variable(const Vec& v, std::size_t var) const;
  Vec multiply_monomial(const Vec& v, const Monomial& m) const;
  Vec multiply(const Vec& v, const Polynomial& g) const;

  // Columns of multiplication by g: column j is g * basis[j].
  std::vector<SparseVec> multiplication_matrix(const Polynomial& g) const;
  // M * v for a matrix given by sparse columns.
  Vec apply(const std::vector<SparseVec>& columns, const SparseVec& v) const;

  // Basis of { u : u * g = 0 for all g in gens } as normal-form polynomials.
  std::vector<Polynomial> annihilator(const std::vector<Polynomial>& gens) const;

 private:
  using Sparse = SparseVec;

  PolyRingPtr ring_;
  std::vector<Polynomial> gb_;
  std::vector<Monomial> basis_;
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> index_;
  std::vector<std::vector<Sparse>> tables_;  // [var][basis index]
};

}  // namespace fthresh
