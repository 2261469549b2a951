#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fthresh/frobenius.hpp"
#include "fthresh/ideal.hpp"

namespace fthresh {

using Fields = std::vector<std::pair<std::string, std::string>>;

// Everything needed to replay one failing (or interesting) instance.
struct CheckWitness {
  std::string ring;
  Fields ideals;  // name -> generators
  std::optional<unsigned> e;
  std::optional<std::uint64_t> t;
  std::optional<std::uint64_t> seed;
  std::string note;
};

struct CheckReport {
  std::string name;
  Fields inputs;
  Verdict verdict = Verdict::Pass;
  std::string reason;
  Fields results;
  std::vector<CheckWitness> witnesses;
  std::vector<std::uint64_t> seeds;
  std::size_t trials = 0;
  std::size_t failures = 0;
};

// (m^{n+1} :_R x) = m^n for n = 0..n_max. Inconclusive unless in(x) is a
// linear form regular on gr_m(R) through degree n_max + 1.
CheckReport check_colon_lemma(const RingPtr& ring, const Polynomial& x, unsigned n_max);

// Smallest n0 <= n_max with m^{n+1} = a m^n for n0 <= n <= n_max.
CheckReport check_reduction(const Ideal& a, unsigned n_max);

// Smallest c with (m^{n+1} : x) cap m^c = m^n for c <= n <= n_max. The window
// for c stops at n_max - 1 so every candidate is tested at two values of n.
CheckReport check_superficial(const RingPtr& ring, const Polynomial& x, unsigned c_max, unsigned n_max);

// a inside b, both m-primary: compares in(a) and in(b) through the
// nilpotency degree of a, then confirms a = b or names a separating class.
CheckReport check_lemma22(const Ideal& a, const Ideal& b);

// Seeded random instances of both monotonicity clauses, plus Frobenius
// scaling when the ring is F-pure. Trial i uses seed + i.
CheckReport check_monotonicity(const RingPtr& ring, std::size_t trials, unsigned e_max, std::uint64_t seed);

struct HypersurfaceFamily {
  std::uint32_t p = 2;
  std::size_t min_vars = 2;
  std::size_t max_vars = 4;
  unsigned max_degree = 3;
  bool maximal_only = false;  // b = m in every trial
};

CheckReport check_theorem_A_randomized(const HypersurfaceFamily& family, std::size_t trials,
                                       unsigned e_max, std::uint64_t seed);

}  // namespace fthresh
