#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace fthresh {

// Exact rational with positive denominator, always in lowest terms.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);  // NOLINT(google-explicit-constructor)

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;

  bool operator==(const Rational& o) const noexcept { return num_ == o.num_ && den_ == o.den_; }
  std::strong_ordering operator<=>(const Rational& o) const noexcept;

  // floor(num/den)
  std::int64_t floor() const noexcept;

  // "n" or "n/d".
  std::string to_string() const;
  // Accepts "n", "n/d", "-n/d" and finite decimals such as "2.52".
  static Rational parse(const std::string& text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// The simplest rational in [lo, hi]: least denominator, then least absolute
// numerator. Found by Stern-Brocot descent (continued fractions).
Rational simplest_in(const Rational& lo, const Rational& hi);

}  // namespace fthresh
