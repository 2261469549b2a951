#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fthresh/ideal.hpp"
#include "fthresh/linalg.hpp"

namespace fthresh {

// (generators) + m^{D+1} inside S / m^{D+1}, as a row-reduced subspace of
// the coefficient vectors on monomials of degree <= D. Columns are sorted by
// ascending degree, so the pivot of a row sits in its lowest degree and the
// reduced form of f exposes its m-adic order modulo the ideal.
class TruncatedSpace {
 public:
  TruncatedSpace(PolyRingPtr ring, const std::vector<Polynomial>& generators, unsigned degree);

  unsigned degree() const noexcept { return degree_; }
  const PolyRingPtr& ring() const noexcept { return ring_; }
  std::size_t columns() const noexcept { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
  // Columns of degree i are [degree_start(i), degree_start(i + 1)).
  std::size_t degree_start(unsigned i) const { return starts_.at(i); }

  Vec to_vector(const Polynomial& f) const;  // drops terms above the truncation
  Polynomial to_polynomial(const Vec& v) const;

  // Canonical representative of f modulo the ideal and m^{D+1}.
  Vec reduce(const Polynomial& f) const;

  // Basis of the degree-i piece of the initial ideal, i <= D.
  std::vector<Polynomial> initial_piece(unsigned i) const;

 private:
  PolyRingPtr ring_;
  unsigned degree_;
  std::vector<Monomial> monomials_;
  std::vector<std::size_t> starts_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
  EchelonSpace space_;
};

// m-adic order of an element of R, capped at the truncation degree.
struct Order {
  std::uint32_t value = 0;
  bool at_least = false;  // the element lies in m^value + L

  std::string to_string() const;
};

// Order of f modulo L: the largest r < D with f in m^r + L, or AtLeast(D).
Order ord(const Polynomial& f, const RingPtr& ring, unsigned D);
// Lowest homogeneous part of the canonical representative of f. Throws
// PreconditionError when ord(f) is AtLeast(D).
Polynomial initial_form(const Polynomial& f, const RingPtr& ring, unsigned D);

// Truncation degree used when a caller does not pick one.
unsigned default_truncation(const RingPtr& ring, const std::vector<Polynomial>& extra = {});

// gr_m(R) = S / in(L). When exact is false only degrees <= truncation_degree
// are certified.
struct GradedPresentation {
  RingPtr ring;
  std::vector<Polynomial> initial_relations;
  unsigned truncation_degree = 0;
  bool exact = false;
};

GradedPresentation gr_presentation(const RingPtr& ring, unsigned D);

// in(a + L) as an ideal of gr.ring. The truncation is raised to the
// nilpotency degree of a, which makes the answer exact. Throws
// PreconditionError unless a is m-primary.
Ideal gr_of_ideal(const Ideal& a, const GradedPresentation& gr, unsigned D = 0);

struct HilbertData {
  std::vector<std::uint64_t> values;  // h_0 .. h_D

  bool operator==(const HilbertData&) const = default;
  std::string to_string() const;
};

// h_i = dim S/(m^{i+1} + L) - dim S/(m^i + L), from Groebner staircases.
HilbertData hilbert_data(const RingPtr& ring, unsigned D);
// Dimension counts of the graded quotient. Throws PreconditionError when D
// exceeds a truncated presentation's certified range.
HilbertData hilbert_data(const GradedPresentation& gr, unsigned D);
// S / (homogeneous generators), degreewise.
HilbertData graded_hilbert_data(const PolyRingPtr& ring, const std::vector<Polynomial>& generators,
                                unsigned D);

struct GrClaimReport {
  bool pass = false;
  std::string reason;
  // realizations[k] is an element of L whose initial form is claimed[k].
  std::vector<Polynomial> realizations;
  HilbertData ring_side;
  HilbertData claim_side;
};

// Element of L with the given homogeneous lowest form, if one exists.
std::optional<Polynomial> realize_initial_form(const Polynomial& g, const RingPtr& ring);

// Checks that every claimed generator is the initial form of an explicit
// element of L and that S/(claimed) has the Hilbert function of gr_m(R)
// through degree D.
GrClaimReport verify_gr_claim(const std::vector<Polynomial>& claimed, const RingPtr& ring,
                              unsigned D);

}  // namespace fthresh
