#include "fthresh/linalg.hpp"

#include <algorithm>

namespace fthresh {

void axpy(const PrimeField& field, Vec& v, Coeff c, const Vec& w) {
  if (c == 0) return;
  const std::uint64_t p = field.characteristic();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (w[i]) v[i] = static_cast<Coeff>((v[i] + static_cast<std::uint64_t>(c) * w[i]) % p);
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Coeff c) { return c == 0; });
}

SparseVec to_sparse(const Vec& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) out.push_back({static_cast<std::uint32_t>(i), v[i]});
  return out;
}

void SparseEchelon::reduce(Vec& v) const {
  const std::uint64_t p = field_.characteristic();
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (!v[c] || !present_[c]) continue;
    const std::uint64_t factor = p - v[c];
    for (const auto& [j, x] : rows_[c]) v[j] = static_cast<Coeff>((v[j] + factor * x) % p);
  }
}

bool SparseEchelon::contains(Vec v) const {
  reduce(v);
  return is_zero(v);
}

bool SparseEchelon::insert(Vec v) {
  reduce(v);
  std::size_t pivot = 0;
  while (pivot < v.size() && v[pivot] == 0) ++pivot;
  if (pivot == v.size()) return false;
  Coeff inv = field_.inv(v[pivot]);
  for (std::size_t j = pivot; j < v.size(); ++j)
    if (v[j]) v[j] = field_.mul(v[j], inv);
  rows_[pivot] = to_sparse(v);
  present_[pivot] = true;
  ++rank_;
  return true;
}

void EchelonSpace::reduce(Vec& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Coeff c = v[pivots_[r]];
    if (c) axpy(field_, v, field_.neg(c), rows_[r]);
  }
}

bool EchelonSpace::contains(Vec v) const {
  reduce(v);
  return is_zero(v);
}

const Vec* EchelonSpace::row_with_pivot(std::size_t column) const {
  if (column >= pivot_row_.size() || pivot_row_[column] < 0) return nullptr;
  return &rows_[static_cast<std::size_t>(pivot_row_[column])];
}

std::optional<std::size_t> EchelonSpace::insert(Vec v) {
  reduce(v);
  std::size_t pivot = 0;
  while (pivot < v.size() && v[pivot] == 0) ++pivot;
  if (pivot == v.size()) return std::nullopt;
  Coeff inv = field_.inv(v[pivot]);
  for (auto& c : v)
    if (c) c = field_.mul(c, inv);
  for (auto& row : rows_) {
    Coeff c = row[pivot];
    if (c) axpy(field_, row, field_.neg(c), v);
  }
  if (pivot_row_.size() < length_) pivot_row_.assign(length_, -1);
  pivot_row_[pivot] = static_cast<long>(rows_.size());
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return pivot;
}

std::vector<Vec> nullspace(const PrimeField& field, const std::vector<Vec>& rows,
                           std::size_t columns) {
  EchelonSpace space(field, columns);
  for (const auto& r : rows) {
    if (space.rank() == columns) break;
    space.insert(r);
  }
  std::vector<bool> is_pivot(columns, false);
  for (auto p : space.pivots()) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    Vec u(columns, 0);
    u[free] = 1;
    for (std::size_t r = 0; r < space.rank(); ++r) {
      Coeff c = space.rows()[r][free];
      if (c) u[space.pivots()[r]] = field.neg(c);
    }
    basis.push_back(std::move(u));
  }
  return basis;
}

}  // namespace fthresh
