#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "fthresh/polynomial.hpp"

namespace fthresh {

// R = S / L, viewed locally at the ideal m generated by the variables.
// S is the ambient polynomial ring (grevlex). Relations must vanish at the
// origin. Predicates about R exported by this library only look at m-primary
// targets, where global membership in S/L agrees with membership in the
// localization.
class QuotientRing {
 public:
  static std::shared_ptr<const QuotientRing> create(PolyRingPtr ambient,
                                                    std::vector<Polynomial> relations);
  static std::shared_ptr<const QuotientRing> create(std::uint32_t p,
                                                    std::vector<std::string> variables,
                                                    const std::vector<std::string>& relations = {});

  const PolyRingPtr& ambient() const noexcept { return ambient_; }
  const std::vector<Polynomial>& relations() const noexcept { return relations_; }
  // Reduced Groebner basis of L in S.
  const std::vector<Polynomial>& relation_basis() const noexcept { return relation_basis_; }

  std::uint32_t characteristic() const noexcept { return ambient_->characteristic(); }
  const PrimeField& field() const noexcept { return ambient_->field(); }
  std::size_t num_variables() const noexcept { return ambient_->num_variables(); }
  const std::vector<std::string>& variables() const noexcept { return ambient_->variables(); }

  // Krull dimension of S/L.
  unsigned dimension() const noexcept { return dimension_; }

  bool is_polynomial_ring() const noexcept { return relation_basis_.empty(); }

  Polynomial parse(std::string_view text) const;
  Polynomial variable(std::size_t i) const { return Polynomial::variable(ambient_, i); }
  Polynomial one() const { return Polynomial::constant(ambient_, 1); }
  Polynomial zero() const { return Polynomial(ambient_); }

  // S itself, with no relations.
  std::shared_ptr<const QuotientRing> ambient_ring() const;

  // Same ambient, relations L + extra.
  std::shared_ptr<const QuotientRing> with_relations(const std::vector<Polynomial>& extra) const;

  std::string to_string() const;

  bool same_ring(const QuotientRing& other) const;

 private:
  QuotientRing(PolyRingPtr ambient, std::vector<Polynomial> relations);

  PolyRingPtr ambient_;
  std::vector<Polynomial> relations_;
  std::vector<Polynomial> relation_basis_;
  unsigned dimension_ = 0;
};

using RingPtr = std::shared_ptr<const QuotientRing>;

// Krull dimension of S / (monomial ideal generated by `leads`): the largest
// set of variables containing no support of a leading monomial.
unsigned dimension_of_monomial_quotient(std::size_t num_variables,
                                        const std::vector<Monomial>& leads);

}  // namespace fthresh
