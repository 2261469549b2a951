#include "fthresh/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace fthresh {

Monomial Monomial::variable(std::size_t index, std::uint32_t exponent) {
  Monomial m;
  m.set(index, exponent);
  return m;
}

void Monomial::set(std::size_t i, std::uint32_t exponent) {
  if (i >= kMaxVariables) throw std::out_of_range("variable index out of range");
  if (exponent > kMaxExponent) throw std::overflow_error("exponent overflow");
  degree_ = degree_ - exps_[i] + exponent;
  exps_[i] = exponent;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) noexcept {
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::pow(std::uint64_t k) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    std::uint64_t e = static_cast<std::uint64_t>(exps_[i]) * k;
    if (e > kMaxExponent) throw std::overflow_error("exponent overflow");
    r.exps_[i] = static_cast<std::uint32_t>(e);
    r.degree_ += r.exps_[i];
  }
  return r;
}

std::size_t Monomial::support_size() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e != 0; }));
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

int MonomialOrder::grevlex(const Monomial& a, const Monomial& b, std::size_t first) const noexcept {
  std::uint32_t da = 0, db = 0;
  for (std::size_t i = first; i < n_; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = n_; i-- > first;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
  switch (kind_) {
    case Kind::GRevLex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      for (std::size_t i = n_; i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
      }
      return 0;
    case Kind::EliminateFirst:
      if (a[0] != b[0]) return a[0] < b[0] ? -1 : 1;
      return grevlex(a, b, 1);
  }
  return 0;
}

}  // namespace fthresh
