#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace fthresh {

inline constexpr std::size_t kMaxVariables = 12;
inline constexpr std::uint32_t kMaxExponent = 1u << 20;

// Exponent vector with a cached total degree. Slots past the ring's
// variable count stay zero, so a Monomial does not need to know its ring.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(std::size_t index, std::uint32_t exponent = 1);

  std::uint32_t operator[](std::size_t i) const noexcept { return exps_[i]; }
  std::uint32_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  void set(std::size_t i, std::uint32_t exponent);

  friend Monomial operator*(const Monomial& a, const Monomial& b) noexcept {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = a.exps_[i] + b.exps_[i];
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }

  // Precondition: divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const noexcept {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = exps_[i] - divisor.exps_[i];
    r.degree_ = degree_ - divisor.degree_;
    return r;
  }

  bool divides(const Monomial& other) const noexcept {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) noexcept;
  static Monomial gcd(const Monomial& a, const Monomial& b) noexcept;
  static bool coprime(const Monomial& a, const Monomial& b) noexcept;

  // Throws std::overflow_error when an exponent would exceed kMaxExponent.
  Monomial pow(std::uint64_t k) const;

  // Only variables in the mask [0, count) are compared by callers; this is the
  // number of variables with nonzero exponent.
  std::size_t support_size() const noexcept;

  bool operator==(const Monomial& other) const noexcept {
    return degree_ == other.degree_ && exps_ == other.exps_;
  }

  std::size_t hash() const noexcept;

 private:
  std::array<std::uint32_t, kMaxVariables> exps_{};
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

// Global monomial orders.
//  - GRevLex: degree reverse lexicographic on the declared variable order.
//  - EliminateFirst: block order, exponent of variable 0 first, ties broken
//    by grevlex on the remaining variables. Used to eliminate a tag variable.
class MonomialOrder {
 public:
  enum class Kind { GRevLex, EliminateFirst };

  MonomialOrder(Kind kind, std::size_t num_variables) : kind_(kind), n_(num_variables) {}

  Kind kind() const noexcept { return kind_; }

  // Negative, zero or positive as a <, ==, > b.
  int compare(const Monomial& a, const Monomial& b) const noexcept;

  bool greater(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) > 0; }

  bool operator==(const MonomialOrder& o) const noexcept { return kind_ == o.kind_ && n_ == o.n_; }

 private:
  int grevlex(const Monomial& a, const Monomial& b, std::size_t first) const noexcept;

  Kind kind_;
  std::size_t n_;
};

}  // namespace fthresh
