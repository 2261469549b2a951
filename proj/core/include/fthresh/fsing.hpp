#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fthresh/frobenius.hpp"
#include "fthresh/ideal.hpp"

namespace fthresh {

// Fedder: S/L is F-pure at m iff (L^[p] :_S L) is not inside m^[p].
bool fedder_f_pure(const RingPtr& ring);

// (L^[q] :_S L) as an ideal of S; the unit ideal when L = 0.
Ideal splitting_colon(const RingPtr& ring, std::uint64_t q);

// b_a(q) = max { t : a^t (L^[q] :_S L) not inside m^[q] }. The witness is
// multiplier * (word product), an element of a^b (L^[q] : L) outside m^[q].
struct FptRecord {
  unsigned e;
  std::uint64_t q;
  std::uint64_t b;
  Polynomial multiplier;                    // generator of (L^[q] : L)
  std::vector<std::uint32_t> witness_word;  // exponent of each generator of a
  Polynomial witness;
  bool containment_enumerated;
};

struct FptEstimate {
  std::vector<FptRecord> records;
  std::size_t generator_count = 0;
  Rational lower;
  Rational upper;
  std::optional<Rational> guess;
};

FptRecord fpt_record(const Ideal& a, unsigned e);
// Throws PreconditionError when the ring is not F-pure or a is not inside m.
FptEstimate fpt_estimate(const Ideal& a, unsigned e_max, std::int64_t max_denominator = 64);

// How the domain hypothesis of a tight closure probe was met.
enum class DomainEvidence { PolynomialRing, IrreducibleHypersurface, Asserted };
std::string to_string(DomainEvidence d);

// Nullopt when the search is too large to decide; otherwise whether the
// principal relation f has no factorization f = g h with g(0) = h(0) = 0.
std::optional<bool> locally_irreducible(const Polynomial& f, std::size_t budget = 50000);

struct TcVerdict {
  enum class Kind { Member, CertifiedNotInStar, ConsistentWithStar };
  Kind kind;
  unsigned checked_through = 0;
  std::optional<unsigned> witness_e;
  std::optional<Polynomial> failed_element;  // c x^q outside J^[q] + L
  DomainEvidence domain;
  bool test_element_asserted = true;  // c is always taken on trust
};
std::string to_string(TcVerdict::Kind k);

struct TcOptions {
  bool assert_domain = false;
};

TcVerdict tc_member(const Polynomial& x, const Ideal& J, const Polynomial& c, unsigned e_max,
                    const TcOptions& options = {});

// Partial derivatives of a principal relation, offered as test element
// candidates. Empty for other presentations.
std::vector<Polynomial> test_element_candidates(const RingPtr& ring);

struct SocleProbe {
  Polynomial element;
  TcVerdict verdict;
  // c^I(J) with I = J + (element); absent when I is the unit ideal.
  std::optional<ThresholdEstimate> cross_check;
  std::optional<bool> excludes_dimension;
};

struct FRationalReport {
  enum class Kind { CertifiedStarTrivialUpToSocle, NotCertified };
  Kind kind;
  unsigned dimension = 0;
  std::vector<SocleProbe> probes;
  bool basis_only = false;
  bool exhaustive = false;
  std::size_t combinations_checked = 0;
  // Populated when an exhaustive search finds a combination not certified.
  std::optional<Polynomial> uncertified_combination;
};
std::string to_string(FRationalReport::Kind k);

struct FRationalOptions {
  TcOptions tc;
  bool exhaustive = false;  // all socle combinations, allowed up to dimension 8
  bool cross_check = true;
};

FRationalReport f_rational_probe(const Ideal& J, const Polynomial& c, unsigned e_max,
                                 const FRationalOptions& options = {});

}  // namespace fthresh
