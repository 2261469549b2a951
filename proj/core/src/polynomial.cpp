#include "fthresh/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "fthresh/errors.hpp"

namespace fthresh {

PolyRing::PolyRing(PrimeField field, std::vector<std::string> variables, MonomialOrder::Kind order)
    : field_(field), variables_(std::move(variables)), order_(order, variables_.size()) {
  if (variables_.size() > kMaxVariables)
    throw PreconditionError("at most " + std::to_string(kMaxVariables) + " variables supported");
  for (std::size_t i = 0; i < variables_.size(); ++i)
    for (std::size_t j = i + 1; j < variables_.size(); ++j)
      if (variables_[i] == variables_[j])
        throw PreconditionError("duplicate variable name '" + variables_[i] + "'");
}

std::optional<std::size_t> PolyRing::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i] == name) return i;
  return std::nullopt;
}

std::string PolyRing::monomial_to_string(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += variables_[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

bool PolyRing::operator==(const PolyRing& other) const {
  return field_ == other.field_ && variables_ == other.variables_ && order_ == other.order_;
}

PolyRingPtr make_poly_ring(std::uint32_t p, std::vector<std::string> variables,
                           MonomialOrder::Kind order) {
  return std::make_shared<const PolyRing>(PrimeField(p), std::move(variables), order);
}

Polynomial Polynomial::constant(PolyRingPtr ring, std::int64_t value) {
  Polynomial f(std::move(ring));
  Coeff c = f.ring_->field().from_integer(value);
  if (c != 0) f.terms_.push_back({Monomial{}, c});
  return f;
}

Polynomial Polynomial::variable(PolyRingPtr ring, std::size_t index) {
  if (index >= ring->num_variables()) throw std::out_of_range("variable index out of range");
  return term(std::move(ring), Monomial::variable(index), 1);
}

Polynomial Polynomial::term(PolyRingPtr ring, const Monomial& m, Coeff c) {
  Polynomial f(std::move(ring));
  c %= f.ring_->characteristic();
  if (c != 0) f.terms_.push_back({m, c});
  return f;
}

Polynomial Polynomial::from_terms(PolyRingPtr ring, std::vector<Term> terms) {
  Polynomial f(std::move(ring));
  const auto& order = f.ring_->order();
  const auto& field = f.ring_->field();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.greater(a.monomial, b.monomial);
  });
  for (auto& t : terms) {
    Coeff c = t.coeff % field.characteristic();
    if (!f.terms_.empty() && f.terms_.back().monomial == t.monomial) {
      f.terms_.back().coeff = field.add(f.terms_.back().coeff, c);
      if (f.terms_.back().coeff == 0) f.terms_.pop_back();
    } else if (c != 0) {
      f.terms_.push_back({t.monomial, c});
    }
  }
  return f;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

Coeff Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return 0;
}

Coeff Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.monomial == m) return t.coeff;
  return 0;
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

std::uint32_t Polynomial::lowest_degree() const {
  if (terms_.empty()) return 0;
  std::uint32_t d = terms_.front().monomial.degree();
  for (const auto& t : terms_) d = std::min(d, t.monomial.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  return true;
}

Polynomial Polynomial::homogeneous_component(std::uint32_t degree) const {
  Polynomial r(ring_);
  for (const auto& t : terms_)
    if (t.monomial.degree() == degree) r.terms_.push_back(t);
  return r;
}

Polynomial Polynomial::lowest_form() const {
  if (terms_.empty()) return *this;
  return homogeneous_component(lowest_degree());
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (ring_ != other.ring_ && !(*ring_ == *other.ring_))
    throw RingMismatch("polynomials belong to different rings");
}

Polynomial Polynomial::add_scaled(const Polynomial& other, Coeff c) const {
  check_ring(other);
  const auto& order = ring_->order();
  const auto& field = ring_->field();
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    int cmp;
    if (a == terms_.end()) cmp = -1;
    else if (b == other.terms_.end()) cmp = 1;
    else cmp = order.compare(a->monomial, b->monomial);
    if (cmp > 0) {
      r.terms_.push_back(*a++);
    } else if (cmp < 0) {
      Coeff v = field.mul(b->coeff, c);
      if (v != 0) r.terms_.push_back({b->monomial, v});
      ++b;
    } else {
      Coeff v = field.add(a->coeff, field.mul(b->coeff, c));
      if (v != 0) r.terms_.push_back({a->monomial, v});
      ++a;
      ++b;
    }
  }
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& other) const { return add_scaled(other, 1); }

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return add_scaled(other, ring_->field().neg(1));
}

Polynomial Polynomial::operator-() const { return scaled(ring_->field().neg(1)); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_ring(other);
  if (terms_.empty() || other.terms_.empty()) return Polynomial(ring_);
  const auto& field = ring_->field();
  std::vector<Term> products;
  products.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : other.terms_)
      products.push_back({a.monomial * b.monomial, field.mul(a.coeff, b.coeff)});
  return from_terms(ring_, std::move(products));
}

Polynomial Polynomial::scaled(Coeff c) const {
  c %= ring_->characteristic();
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial, ring_->field().mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, Coeff c) const {
  // Monomial orders are multiplicative, so the sort order is preserved.
  c %= ring_->characteristic();
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    r.terms_.push_back({t.monomial * m, ring_->field().mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(ring_->field().inv(leading_coefficient()));
}

Polynomial Polynomial::pow(std::uint64_t k) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  std::uint64_t top = 0;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < ring_->num_variables(); ++i) top = std::max<std::uint64_t>(top, t.monomial[i]);
  if (top * k > kMaxExponent) throw std::overflow_error("exponent overflow");
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Polynomial Polynomial::frobenius(unsigned e) const {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= ring_->characteristic();
    if (q > kMaxExponent) throw std::overflow_error("exponent overflow");
  }
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial.pow(q), t.coeff});
  return r;
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
  check_ring(divisor);
  if (divisor.is_zero()) throw PreconditionError("division by zero polynomial");
  const auto& field = ring_->field();
  Coeff lead_inv = field.inv(divisor.leading_coefficient());
  Polynomial remainder = *this;
  std::vector<Term> quotient;
  while (!remainder.is_zero()) {
    const Term& lt = remainder.leading_term();
    if (!divisor.leading_monomial().divides(lt.monomial))
      throw PreconditionError("polynomial division is not exact");
    Monomial m = lt.monomial / divisor.leading_monomial();
    Coeff c = field.mul(lt.coeff, lead_inv);
    quotient.push_back({m, c});
    remainder = remainder - divisor.times_term(m, c);
  }
  return from_terms(ring_, std::move(quotient));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    if (t.monomial.is_one()) {
      out += std::to_string(t.coeff);
    } else {
      if (t.coeff != 1) out += std::to_string(t.coeff) + "*";
      out += ring_->monomial_to_string(t.monomial);
    }
  }
  return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
  check_ring(other);
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].monomial == other.terms_[i].monomial) || terms_[i].coeff != other.terms_[i].coeff)
      return false;
  return true;
}

Polynomial remap(const Polynomial& f, const PolyRingPtr& target,
                 std::span<const std::size_t> var_map) {
  if (f.ring()->characteristic() != target->characteristic())
    throw RingMismatch("cannot move polynomial between characteristics");
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < f.ring()->num_variables(); ++i)
      if (t.monomial[i] != 0) m.set(var_map[i], t.monomial[i]);
    terms.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

namespace {

void enumerate(std::size_t n, std::size_t var, std::uint32_t remaining, Monomial& current,
               std::vector<Monomial>& out) {
  if (var + 1 == n) {
    current.set(var, remaining);
    out.push_back(current);
    current.set(var, 0);
    return;
  }
  for (std::uint32_t e = remaining + 1; e-- > 0;) {
    current.set(var, e);
    enumerate(n, var + 1, remaining - e, current, out);
  }
  current.set(var, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t n, std::uint32_t degree) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Monomial current;
  enumerate(n, 0, degree, current, out);
  return out;
}

}  // namespace fthresh
