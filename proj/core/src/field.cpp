#include "fthresh/field.hpp"

#include <string>

#include "fthresh/errors.hpp"

namespace fthresh {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_power_of(std::uint64_t q, std::uint64_t p, unsigned* exponent) noexcept {
  if (p < 2 || q == 0) return false;
  unsigned e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return false;
  if (exponent) *exponent = e;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p > kMaxCharacteristic || !is_prime(p))
    throw PreconditionError("characteristic " + std::to_string(p) +
                            " is not a prime in [2, 65536]");
  auto table = std::make_shared<std::vector<Coeff>>(p, 0);
  (*table)[1] = 1;
  // inv(i) = -(p / i) * inv(p mod i)
  for (std::uint32_t i = 2; i < p; ++i)
    (*table)[i] = neg(mul(p / i, (*table)[p % i]));
  inverses_ = std::move(table);
}

Coeff PrimeField::inv(Coeff a) const {
  if (a == 0 || a >= p_) throw PreconditionError("division by zero in GF(p)");
  return (*inverses_)[a];
}

Coeff PrimeField::pow(Coeff a, std::uint64_t k) const noexcept {
  Coeff result = 1 % p_;
  Coeff base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Coeff PrimeField::from_integer(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Coeff>(r);
}

}  // namespace fthresh
