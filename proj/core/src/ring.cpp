#include "fthresh/ring.hpp"

#include "fthresh/errors.hpp"
#include "fthresh/groebner.hpp"
#include "fthresh/parser.hpp"

namespace fthresh {

unsigned dimension_of_monomial_quotient(std::size_t n, const std::vector<Monomial>& leads) {
  unsigned best = 0;
  for (const auto& m : leads)
    if (m.is_one()) return 0;  // unit ideal; treat as dimension 0
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    unsigned size = static_cast<unsigned>(__builtin_popcount(mask));
    if (size <= best) continue;
    bool independent = true;
    for (const auto& m : leads) {
      bool inside = true;
      for (std::size_t i = 0; i < n && inside; ++i)
        if (m[i] != 0 && !(mask & (1u << i))) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

QuotientRing::QuotientRing(PolyRingPtr ambient, std::vector<Polynomial> relations)
    : ambient_(std::move(ambient)), relations_(std::move(relations)) {
  for (auto& r : relations_) {
    if (!(*r.ring() == *ambient_)) throw RingMismatch("relation does not live in the ambient ring");
    if (r.constant_term() != 0)
      throw PreconditionError("relation " + r.to_string() +
                              " does not vanish at the origin; the local ring would be zero");
  }
  relation_basis_ = reduced_groebner_basis(ambient_, relations_);
  std::vector<Monomial> leads;
  for (const auto& g : relation_basis_) leads.push_back(g.leading_monomial());
  dimension_ = dimension_of_monomial_quotient(ambient_->num_variables(), leads);
}

RingPtr QuotientRing::create(PolyRingPtr ambient, std::vector<Polynomial> relations) {
  std::vector<Polynomial> nonzero;
  for (auto& r : relations)
    if (!r.is_zero()) nonzero.push_back(std::move(r));
  return RingPtr(new QuotientRing(std::move(ambient), std::move(nonzero)));
}

RingPtr QuotientRing::create(std::uint32_t p, std::vector<std::string> variables,
                             const std::vector<std::string>& relations) {
  auto ambient = make_poly_ring(p, std::move(variables));
  std::vector<Polynomial> rels;
  for (const auto& text : relations) rels.push_back(parse_polynomial(text, ambient));
  return create(ambient, std::move(rels));
}

Polynomial QuotientRing::parse(std::string_view text) const {
  return parse_polynomial(text, ambient_);
}

RingPtr QuotientRing::ambient_ring() const { return create(ambient_, {}); }

RingPtr QuotientRing::with_relations(const std::vector<Polynomial>& extra) const {
  std::vector<Polynomial> all = relations_;
  all.insert(all.end(), extra.begin(), extra.end());
  return create(ambient_, std::move(all));
}

std::string QuotientRing::to_string() const {
  std::string out = "GF(" + std::to_string(characteristic()) + ")[";
  for (std::size_t i = 0; i < variables().size(); ++i) {
    if (i) out += ",";
    out += variables()[i];
  }
  out += "]";
  if (!relations_.empty()) {
    out += "/(";
    for (std::size_t i = 0; i < relations_.size(); ++i) {
      if (i) out += ", ";
      out += relations_[i].to_string();
    }
    out += ")";
  }
  return out;
}

bool QuotientRing::same_ring(const QuotientRing& other) const {
  if (this == &other) return true;
  if (!(*ambient_ == *other.ambient_)) return false;
  if (relation_basis_.size() != other.relation_basis_.size()) return false;
  for (std::size_t i = 0; i < relation_basis_.size(); ++i)
    if (relation_basis_[i] != other.relation_basis_[i]) return false;
  return true;
}

}  // namespace fthresh
