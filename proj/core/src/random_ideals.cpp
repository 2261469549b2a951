#include "fthresh/random_ideals.hpp"

#include "fthresh/errors.hpp"

namespace fthresh {

namespace {

std::uint64_t below(RandomEngine& rng, std::uint64_t n) { return rng() % n; }

}  // namespace

Polynomial random_polynomial(const PolyRingPtr& ring, RandomEngine& rng, unsigned max_degree,
                             unsigned max_terms) {
  const std::size_t n = ring->num_variables();
  const std::uint32_t p = ring->characteristic();
  std::vector<Term> terms;
  const auto count = 1 + below(rng, std::max(1u, max_terms));
  for (std::uint64_t k = 0; k < count; ++k) {
    Monomial m;
    const auto degree = below(rng, max_degree + 1);
    for (std::uint64_t d = 0; d < degree; ++d) m = m * Monomial::variable(below(rng, n));
    terms.push_back({m, static_cast<Coeff>(1 + below(rng, p - 1))});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

Polynomial random_element_of_maximal(const PolyRingPtr& ring, RandomEngine& rng,
                                     unsigned max_degree, unsigned max_terms) {
  Polynomial f = random_polynomial(ring, rng, max_degree, max_terms);
  return f - Polynomial::constant(ring, f.constant_term());
}

Ideal random_m_primary(const RingPtr& ring, RandomEngine& rng, const RandomIdealShape& shape) {
  if (shape.max_power < 1 || shape.min_extra > shape.max_extra)
    throw PreconditionError("bad random ideal shape");
  const auto k = 1 + static_cast<unsigned>(below(rng, shape.max_power));
  std::vector<Polynomial> gens = maximal_power(ring, k).generators();
  const auto extra = shape.min_extra + below(rng, shape.max_extra - shape.min_extra + 1);
  for (std::uint64_t i = 0; i < extra; ++i) {
    Polynomial f = random_element_of_maximal(ring->ambient(), rng, shape.max_degree, shape.max_terms);
    if (!f.is_zero()) gens.push_back(std::move(f));
  }
  return Ideal(ring, std::move(gens));
}

RingPtr random_hypersurface(std::uint32_t p, std::size_t vars, RandomEngine& rng,
                            unsigned max_degree, unsigned max_terms) {
  static const char* names[] = {"x", "y", "z", "w", "u", "v", "s", "t", "a", "b", "c", "d"};
  if (vars < 1 || vars > 12) throw PreconditionError("between 1 and 12 variables");
  auto S = make_poly_ring(p, std::vector<std::string>(names, names + vars));
  for (;;) {
    Polynomial f = random_element_of_maximal(S, rng, max_degree, max_terms);
    if (!f.is_zero()) return QuotientRing::create(S, {f});
  }
}

}  // namespace fthresh
