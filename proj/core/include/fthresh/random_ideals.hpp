#pragma once

#include <cstdint>
#include <random>

#include "fthresh/ideal.hpp"

namespace fthresh {

// Generators draw from the engine with plain modular reduction, so a seed
// reproduces the same ideals on every standard library.
using RandomEngine = std::mt19937_64;

// At most max_terms terms of degree <= max_degree with nonzero coefficients.
Polynomial random_polynomial(const PolyRingPtr& ring, RandomEngine& rng, unsigned max_degree,
                             unsigned max_terms);
// Same, with the constant term removed.
Polynomial random_element_of_maximal(const PolyRingPtr& ring, RandomEngine& rng,
                                     unsigned max_degree, unsigned max_terms);

struct RandomIdealShape {
  unsigned max_power = 3;   // m^k with 1 <= k <= max_power
  unsigned min_extra = 1;
  unsigned max_extra = 3;
  unsigned max_degree = 3;
  unsigned max_terms = 4;
};

// m^k plus a few random elements of m: m-primary by construction.
Ideal random_m_primary(const RingPtr& ring, RandomEngine& rng, const RandomIdealShape& shape = {});

// S/(f) for a nonzero random f in m of degree <= max_degree, in `vars`
// variables named x, y, z, w, ...
RingPtr random_hypersurface(std::uint32_t p, std::size_t vars, RandomEngine& rng,
                            unsigned max_degree = 3, unsigned max_terms = 4);

}  // namespace fthresh
