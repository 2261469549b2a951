#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace fthresh {

using Coeff = std::uint32_t;

// GF(p) for a prime 2 <= p <= 2^16. Elements are canonical representatives
// in [0, p). Inverses come from a table shared between copies.
class PrimeField {
 public:
  static constexpr std::uint32_t kMaxCharacteristic = 1u << 16;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }

  Coeff add(Coeff a, Coeff b) const noexcept {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Coeff inv(Coeff a) const;  // throws on a == 0
  Coeff pow(Coeff a, std::uint64_t k) const noexcept;

  // Reduces an arbitrary integer into [0, p).
  Coeff from_integer(std::int64_t v) const noexcept;

  bool operator==(const PrimeField& other) const noexcept { return p_ == other.p_; }

 private:
  std::uint32_t p_;
  std::shared_ptr<const std::vector<Coeff>> inverses_;
};

bool is_prime(std::uint64_t n) noexcept;

// True when q = p^e for some e >= 0; writes e.
bool is_power_of(std::uint64_t q, std::uint64_t p, unsigned* exponent = nullptr) noexcept;

}  // namespace fthresh
