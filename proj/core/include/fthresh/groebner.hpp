#pragma once

#include <span>
#include <vector>

#include "fthresh/polynomial.hpp"

namespace fthresh {

// Unique reduced Groebner basis of the ideal generated by `generators` in
// `ring` under the ring's order. Buchberger completion with the normal
// selection strategy (minimal lcm degree, ties by the order on lcms) and the
// Gebauer-Moeller criteria. The basis is monic and sorted by increasing
// leading monomial. Zero ideal -> empty, unit ideal -> {1}.
std::vector<Polynomial> reduced_groebner_basis(const PolyRingPtr& ring,
                                               std::vector<Polynomial> generators);

// Remainder of multivariate division of f by `basis` (full reduction, every
// term of the result is standard with respect to the basis' leading terms).
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis);

// True when `basis` is a reduced Groebner basis (every S-polynomial reduces
// to zero and the basis is inter-reduced and monic).
bool is_reduced_groebner_basis(std::span<const Polynomial> basis);

}  // namespace fthresh
