#include "fthresh/ideal.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "fthresh/artinian.hpp"
#include "fthresh/errors.hpp"
#include "fthresh/groebner.hpp"

namespace fthresh {

struct Ideal::Cache {
  std::once_flag once;
  std::vector<Polynomial> basis;
  std::once_flag primary_once;
  MPrimaryInfo primary;
};

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (!(*g.ring() == *ring_->ambient()))
      throw RingMismatch("generator does not live in the ring's ambient polynomial ring");
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

Ideal Ideal::maximal(const RingPtr& ring) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ring->num_variables(); ++i) gens.push_back(ring->variable(i));
  return Ideal(ring, std::move(gens));
}

Ideal Ideal::parse(const RingPtr& ring, const std::vector<std::string>& generators) {
  std::vector<Polynomial> gens;
  for (const auto& g : generators) gens.push_back(ring->parse(g));
  return Ideal(ring, std::move(gens));
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
  std::call_once(cache_->once, [this] {
    std::vector<Polynomial> all = generators_;
    all.insert(all.end(), ring_->relation_basis().begin(), ring_->relation_basis().end());
    cache_->basis = reduced_groebner_basis(ring_->ambient(), std::move(all));
  });
  return cache_->basis;
}

void Ideal::check_ring(const Polynomial& f) const {
  if (!(*f.ring() == *ring_->ambient())) throw RingMismatch("element is not in the ideal's ring");
}

void Ideal::check_ring(const Ideal& other) const {
  if (!ring_->same_ring(*other.ring_)) throw RingMismatch("ideals belong to different rings");
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
  check_ring(f);
  return fthresh::normal_form(f, groebner_basis());
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
  check_ring(other);
  for (const auto& g : other.generators_)
    if (!contains(g)) return false;
  return true;
}

bool Ideal::equals(const Ideal& other) const {
  check_ring(other);
  const auto& a = groebner_basis();
  const auto& b = other.groebner_basis();
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool Ideal::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().is_constant();
}

bool Ideal::is_zero_in_ring() const {
  for (const auto& g : generators_)
    if (!fthresh::normal_form(g, ring_->relation_basis()).is_zero()) return false;
  return true;
}

std::string Ideal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ", ";
    out += generators_[i].to_string();
  }
  return out + ")";
}

namespace {

void require_same(const Ideal& a, const Ideal& b) {
  if (!a.ring()->same_ring(*b.ring())) throw RingMismatch("ideals belong to different rings");
}

std::vector<Polynomial> dedup(std::vector<Polynomial> gens) {
  std::set<std::string> seen;
  std::vector<Polynomial> out;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    Polynomial m = g.monic();
    if (seen.insert(m.to_string()).second) out.push_back(std::move(m));
  }
  return out;
}

// Lift of a + L as a list of S-polynomials.
std::vector<Polynomial> lifted(const Ideal& a) {
  std::vector<Polynomial> gens = a.generators();
  const auto& rel = a.ring()->relation_basis();
  gens.insert(gens.end(), rel.begin(), rel.end());
  return gens;
}

// Intersection of two ideals of S given by generators, as generators in S.
std::vector<Polynomial> intersect_in_ambient(const PolyRingPtr& s, const std::vector<Polynomial>& a,
                                             const std::vector<Polynomial>& b) {
  std::vector<std::string> names{"__elim"};
  names.insert(names.end(), s->variables().begin(), s->variables().end());
  auto t_ring = std::make_shared<const PolyRing>(s->field(), names,
                                                 MonomialOrder::Kind::EliminateFirst);
  std::vector<std::size_t> shift(s->num_variables());
  std::vector<std::size_t> back(names.size(), 0);
  for (std::size_t i = 0; i < shift.size(); ++i) {
    shift[i] = i + 1;
    back[i + 1] = i;
  }
  Polynomial t = Polynomial::variable(t_ring, 0);
  Polynomial one_minus_t = Polynomial::constant(t_ring, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a) gens.push_back(t * remap(f, t_ring, shift));
  for (const auto& f : b) gens.push_back(one_minus_t * remap(f, t_ring, shift));
  std::vector<Polynomial> out;
  for (const auto& g : reduced_groebner_basis(t_ring, std::move(gens)))
    if (g.leading_monomial()[0] == 0) out.push_back(remap(g, s, back));
  return out;
}

}  // namespace

Ideal sum(const Ideal& a, const Ideal& b) {
  require_same(a, b);
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), dedup(std::move(gens)));
}

Ideal product(const Ideal& a, const Ideal& b) {
  require_same(a, b);
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal(a.ring(), dedup(std::move(gens)));
}

Ideal power(const Ideal& a, unsigned t) {
  Ideal result = Ideal::unit(a.ring());
  for (unsigned k = 0; k < t; ++k) result = product(result, a);
  return result;
}

Ideal bracket(const Ideal& a, std::uint64_t q) {
  unsigned e = 0;
  if (!is_power_of(q, a.ring()->characteristic(), &e))
    throw PreconditionError("bracket power exponent " + std::to_string(q) +
                            " is not a power of the characteristic " +
                            std::to_string(a.ring()->characteristic()));
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(g.frobenius(e));
  return Ideal(a.ring(), std::move(gens));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same(a, b);
  return Ideal(a.ring(), intersect_in_ambient(a.ring()->ambient(), lifted(a), lifted(b)));
}

Ideal colon_by_elimination(const Ideal& a, const Ideal& b) {
  require_same(a, b);
  if (b.is_zero_in_ring()) throw PreconditionError("colon by the zero ideal");
  const auto& s = a.ring()->ambient();
  const auto lift = a.groebner_basis();
  std::optional<std::vector<Polynomial>> acc;
  for (const auto& g : b.generators()) {
    if (a.contains(g)) continue;
    std::vector<Polynomial> quotient;
    for (const auto& h : intersect_in_ambient(s, lift, {g})) quotient.push_back(h.divide_exact(g));
    if (!acc) acc = std::move(quotient);
    else acc = intersect_in_ambient(s, *acc, quotient);
  }
  if (!acc) return Ideal::unit(a.ring());
  return Ideal(a.ring(), reduced_groebner_basis(s, std::move(*acc)));
}

Ideal colon(const Ideal& a, const Ideal& b) {
  require_same(a, b);
  if (b.is_zero_in_ring()) throw PreconditionError("colon by the zero ideal");
  if (!is_zero_dimensional(a)) return colon_by_elimination(a, b);
  ArtinianAlgebra algebra(a);
  std::vector<Polynomial> gens = a.groebner_basis();
  for (auto& u : algebra.annihilator(b.generators())) gens.push_back(std::move(u));
  return Ideal(a.ring(), reduced_groebner_basis(a.ring()->ambient(), std::move(gens)));
}

Ideal colon(const Ideal& a, const Polynomial& f) { return colon(a, Ideal(a.ring(), {f})); }

Ideal maximal_power(const RingPtr& ring, unsigned t) {
  std::vector<Polynomial> gens;
  for (const auto& m : monomials_of_degree(ring->num_variables(), t))
    gens.push_back(Polynomial::term(ring->ambient(), m, 1));
  return Ideal(ring, std::move(gens));
}

bool is_zero_dimensional(const Ideal& a) {
  const auto& gb = a.groebner_basis();
  const std::size_t n = a.ring()->num_variables();
  if (gb.size() == 1 && gb.front().is_constant()) return false;
  std::vector<bool> seen(n, false);
  for (const auto& g : gb) {
    const Monomial& m = g.leading_monomial();
    if (m.support_size() != 1) continue;
    for (std::size_t i = 0; i < n; ++i)
      if (m[i] != 0) seen[i] = true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

const MPrimaryInfo& Ideal::primary_info() const {
  std::call_once(cache_->primary_once, [this] {
    if (!is_zero_dimensional(*this)) return;
    // Images m^k A of m^k in A = S/(a + L) form a descending chain; it
    // reaches zero, or stalls at a nonzero space when some variable is not
    // nilpotent.
    ArtinianAlgebra algebra(*this);
    EchelonSpace current(algebra.field(), algebra.dimension());
    for (std::size_t j = 0; j < algebra.dimension(); ++j) {
      Vec e = algebra.zero();
      e[j] = 1;
      current.insert(std::move(e));
    }
    for (unsigned k = 1;; ++k) {
      EchelonSpace next(algebra.field(), algebra.dimension());
      for (const auto& row : current.rows())
        for (std::size_t v = 0; v < ring_->num_variables(); ++v)
          next.insert(algebra.multiply_variable(row, v));
      if (next.rank() == 0) {
        cache_->primary = {true, k};
        return;
      }
      if (next.rank() == current.rank()) return;
      current = std::move(next);
    }
  });
  return cache_->primary;
}

MPrimaryInfo m_primary_info(const Ideal& a) { return a.primary_info(); }

bool is_m_primary(const Ideal& a) { return a.primary_info().m_primary; }

SocleBasis socle(const Ideal& a) {
  if (!is_m_primary(a)) throw PreconditionError("socle requires an m-primary ideal");
  ArtinianAlgebra algebra(a);
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < a.ring()->num_variables(); ++i) vars.push_back(a.ring()->variable(i));
  return SocleBasis{algebra.annihilator(vars)};
}

}  // namespace fthresh
