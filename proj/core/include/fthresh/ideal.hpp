#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fthresh/ring.hpp"

namespace fthresh {

struct MPrimaryInfo {
  bool m_primary = false;
  // min { N : m^N is contained in a + L }, present when m-primary.
  std::optional<unsigned> nilpotency_degree;
};

// An ideal of R = S/L given by generators. Every predicate goes through the
// lift (generators + L) in S; its reduced Groebner basis is computed lazily
// and shared between copies of the handle.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal maximal(const RingPtr& ring);
  static Ideal zero(const RingPtr& ring) { return Ideal(ring, {}); }
  static Ideal unit(const RingPtr& ring) { return Ideal(ring, {ring->one()}); }
  static Ideal parse(const RingPtr& ring, const std::vector<std::string>& generators);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }

  // Reduced Groebner basis of (generators + L) in S. Thread safe.
  const std::vector<Polynomial>& groebner_basis() const;

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  bool equals(const Ideal& other) const;

  bool is_unit() const;
  // Cached m_primary_info(*this).
  const MPrimaryInfo& primary_info() const;
  // True when the ideal is zero in R, i.e. its generators lie in L.
  bool is_zero_in_ring() const;

  std::string to_string() const;

 private:
  struct Cache;

  void check_ring(const Polynomial& f) const;
  void check_ring(const Ideal& other) const;

  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

Ideal sum(const Ideal& a, const Ideal& b);
Ideal product(const Ideal& a, const Ideal& b);
// a^t by iterated products; duplicate and zero generators are dropped.
Ideal power(const Ideal& a, unsigned t);
// (g^q : g a listed generator). Throws PreconditionError if q is not a power of p.
Ideal bracket(const Ideal& a, std::uint64_t q);
// Intersection in R, via elimination of a tag variable in S[t].
Ideal intersect(const Ideal& a, const Ideal& b);
// (a :_R b) computed on lifts: ((a + L) :_S b). Throws PreconditionError when b
// is zero in R. Zero dimensional a uses linear algebra in S/(a+L), everything else
// goes through intersect().
Ideal colon(const Ideal& a, const Ideal& b);
Ideal colon(const Ideal& a, const Polynomial& f);
// Colon through elimination only; exposed so tests can compare both routes.
Ideal colon_by_elimination(const Ideal& a, const Ideal& b);

// m^t for the maximal ideal of `ring`.
Ideal maximal_power(const RingPtr& ring, unsigned t);

// S/(a + L) is finite dimensional: every variable has a pure power among the
// leading monomials.
bool is_zero_dimensional(const Ideal& a);
// Globally m-primary: zero dimensional and every variable nilpotent in
// S/(a + L), so the origin is the only point of V(a + L).
MPrimaryInfo m_primary_info(const Ideal& a);
bool is_m_primary(const Ideal& a);

// k-basis of (a : m) / a in normal form. Throws PreconditionError if a is
// not m-primary.
struct SocleBasis {
  std::vector<Polynomial> representatives;
};
SocleBasis socle(const Ideal& a);

}  // namespace fthresh
