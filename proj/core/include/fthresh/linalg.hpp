#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "fthresh/field.hpp"

namespace fthresh {

using Vec = std::vector<Coeff>;
// (index, nonzero coefficient) pairs sorted by index.
using SparseVec = std::vector<std::pair<std::uint32_t, Coeff>>;

// Incrementally maintained reduced row echelon form over GF(p). The pivot of
// a row is its first nonzero column, so callers control pivot priority
// through the column order.
class EchelonSpace {
 public:
  EchelonSpace(PrimeField field, std::size_t length) : field_(field), length_(length) {}

  std::size_t length() const noexcept { return length_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<Vec>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  // Reduces v in place; afterwards v is zero in every pivot column.
  void reduce(Vec& v) const;
  bool contains(Vec v) const;

  // Returns the pivot column of the inserted row, or nullopt when v was
  // already in the span.
  std::optional<std::size_t> insert(Vec v);

  // Row whose pivot is `column`, if any.
  const Vec* row_with_pivot(std::size_t column) const;

 private:
  PrimeField field_;
  std::size_t length_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<long> pivot_row_;  // column -> row index or -1
};

// Row echelon form with sparse rows and no back substitution; cheaper than
// EchelonSpace when only span membership matters.
class SparseEchelon {
 public:
  SparseEchelon(PrimeField field, std::size_t length)
      : field_(field), rows_(length), present_(length, false) {}

  std::size_t rank() const noexcept { return rank_; }
  // Reduces v; returns true and stores it when v was independent.
  bool insert(Vec v);
  bool contains(Vec v) const;

 private:
  void reduce(Vec& v) const;

  PrimeField field_;
  std::vector<SparseVec> rows_;  // by pivot column, pivot coefficient 1
  std::vector<bool> present_;
  std::size_t rank_ = 0;
};

SparseVec to_sparse(const Vec& v);

// v += c * w
void axpy(const PrimeField& field, Vec& v, Coeff c, const Vec& w);
bool is_zero(const Vec& v);

// Basis of {u : M u = 0} for M given as a list of rows of width `columns`.
std::vector<Vec> nullspace(const PrimeField& field, const std::vector<Vec>& rows,
                           std::size_t columns);

}  // namespace fthresh
