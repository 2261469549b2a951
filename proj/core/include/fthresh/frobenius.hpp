#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fthresh/artinian.hpp"
#include "fthresh/graded.hpp"
#include "fthresh/ideal.hpp"
#include "fthresh/rational.hpp"

namespace fthresh {

// nu^J_a(q) with both certificates: `witness` is a product of nu generators
// of a outside J^[q] + L, and a^(nu+1) lies in J^[q] + L.
struct NuRecord {
  unsigned e;
  std::uint64_t q;
  std::uint64_t nu;
  std::vector<std::uint32_t> witness_word;  // exponent of each generator of a
  Polynomial witness;
  // True when a^(nu+1) was re-checked product by product against a Groebner
  // basis; false when only the linear algebra certificate is available.
  bool containment_enumerated = false;
};

NuRecord nu(const Ideal& a, const Ideal& J, unsigned e);

// p^e, refusing anything past the exponent bound.
std::uint64_t frobenius_power(std::uint32_t p, unsigned e);
// start * prod gens[k]^word[k]
Polynomial word_product(const Polynomial& start, const std::vector<Polynomial>& gens,
                        const std::vector<std::uint32_t>& word);

struct ThresholdEstimate {
  std::vector<NuRecord> records;
  std::size_t generator_count = 0;  // mu(a)
  Rational lower;                   // max nu/q
  Rational upper;                   // min (nu + 1 + mu)/q
  std::optional<Rational> guess;
};

// Brackets from a list of (q, nu) records; shared with the fpt estimator.
struct Bracket {
  Rational lower;
  Rational upper;
};
Bracket bracket_of(std::uint64_t q, std::uint64_t nu, std::size_t generator_count);

// Records for e = 1..e_max (computed concurrently), cumulative brackets and
// the simplest rational in the final interval.
ThresholdEstimate threshold_estimate(const Ideal& a, const Ideal& J, unsigned e_max,
                                     std::int64_t max_denominator = 64);

// Simplest rational in [lo, hi] if its denominator is at most
// max_denominator. Throws PreconditionError on an empty interval.
std::optional<Rational> guess_rational(const Rational& lo, const Rational& hi,
                                       std::int64_t max_denominator);

// Largest t such that some product of t generators times a start element
// is nonzero in the algebra, with the word realizing it. Shared by the nu
// and fpt computations.
struct Ascent {
  std::uint64_t top = 0;
  std::size_t start_index = 0;
  std::vector<std::uint32_t> word;
};
// Returns nullopt when every start element is zero in the algebra.
std::optional<Ascent> ascend(const ArtinianAlgebra& algebra, const std::vector<Polynomial>& start,
                             const std::vector<Polynomial>& generators);

// Enumerates start_j * (products of `length` generators) and checks each lies
// in `target`, pruning at prefixes already inside. Returns nullopt if more
// than `budget` products would be needed.
std::optional<bool> products_contained(const std::vector<Polynomial>& start,
                                       const std::vector<Polynomial>& generators,
                                       std::uint64_t length, const Ideal& target,
                                       std::size_t budget = 20000);

// Finite level comparison nu^b_m(q) <= nu^I_n(q) with I = in(b) in gr_m(R).
enum class Verdict { Pass, Fail, Inconclusive };
std::string to_string(Verdict v);

struct TheoremARow {
  unsigned e = 0;
  std::uint64_t q = 1;
  std::uint64_t nu_ring = 0;     // nu^b_m in R
  std::uint64_t nu_graded = 0;   // nu^I_n in gr
  std::uint64_t nu_ring_m = 0;   // nu^m_m in R
  std::uint64_t nu_graded_n = 0; // nu^n_n in gr
  bool certified = true;         // graded side exact at this q
  bool holds = true;
};

struct TheoremAReport {
  Verdict verdict = Verdict::Pass;
  std::vector<TheoremARow> rows;
  GradedPresentation gr;
  std::vector<Polynomial> initial_ideal;  // generators of I
  bool strict_somewhere = false;
  std::string reason;
};

// D = 0 picks default_truncation(ring).
TheoremAReport verify_theorem_A(const Ideal& b, unsigned e_max, unsigned D = 0);

}  // namespace fthresh
