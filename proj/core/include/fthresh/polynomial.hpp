#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fthresh/field.hpp"
#include "fthresh/monomial.hpp"

namespace fthresh {

// Ambient polynomial ring GF(p)[x_1..x_n] with a fixed monomial order.
class PolyRing {
 public:
  PolyRing(PrimeField field, std::vector<std::string> variables,
           MonomialOrder::Kind order = MonomialOrder::Kind::GRevLex);

  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t characteristic() const noexcept { return field_.characteristic(); }
  std::size_t num_variables() const noexcept { return variables_.size(); }
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const MonomialOrder& order() const noexcept { return order_; }

  std::optional<std::size_t> variable_index(std::string_view name) const;

  std::string monomial_to_string(const Monomial& m) const;

  bool operator==(const PolyRing& other) const;

 private:
  PrimeField field_;
  std::vector<std::string> variables_;
  MonomialOrder order_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

PolyRingPtr make_poly_ring(std::uint32_t p, std::vector<std::string> variables,
                           MonomialOrder::Kind order = MonomialOrder::Kind::GRevLex);

struct Term {
  Monomial monomial;
  Coeff coeff;
};

// Sparse polynomial in canonical form: terms sorted by decreasing monomial
// under the ring's order, no zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(PolyRingPtr ring, std::int64_t value);
  static Polynomial variable(PolyRingPtr ring, std::size_t index);
  static Polynomial term(PolyRingPtr ring, const Monomial& m, Coeff c = 1);
  // Accepts unsorted terms with repeats and zeros.
  static Polynomial from_terms(PolyRingPtr ring, std::vector<Term> terms);

  const PolyRingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;

  // Precondition: nonzero.
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  Coeff leading_coefficient() const { return terms_.front().coeff; }

  Coeff constant_term() const;
  Coeff coefficient(const Monomial& m) const;

  // Total degree of the highest / lowest degree term; 0 for the zero polynomial.
  std::uint32_t total_degree() const;
  std::uint32_t lowest_degree() const;
  bool is_homogeneous() const;
  Polynomial homogeneous_component(std::uint32_t degree) const;
  // Lowest-degree homogeneous component, i.e. the initial form in the
  // standard graded sense. Zero for zero.
  Polynomial lowest_form() const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

  Polynomial scaled(Coeff c) const;
  Polynomial times_term(const Monomial& m, Coeff c) const;
  Polynomial monic() const;
  Polynomial pow(std::uint64_t k) const;
  // f^(p^e), computed term-wise since Frobenius is additive and fixes GF(p).
  Polynomial frobenius(unsigned e) const;

  // Exact division by a polynomial known to divide this one.
  Polynomial divide_exact(const Polynomial& divisor) const;

  std::string to_string() const;

  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

 private:
  void check_ring(const Polynomial& other) const;
  Polynomial add_scaled(const Polynomial& other, Coeff c) const;

  PolyRingPtr ring_;
  std::vector<Term> terms_;
};

// Moves f into `target`, sending variable i of f's ring to variable
// var_map[i] of target.
Polynomial remap(const Polynomial& f, const PolyRingPtr& target,
                 std::span<const std::size_t> var_map);

// Enumerates all monomials of total degree `degree` in the first n variables.
std::vector<Monomial> monomials_of_degree(std::size_t n, std::uint32_t degree);

}  // namespace fthresh
