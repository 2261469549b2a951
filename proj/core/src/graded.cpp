#include "fthresh/graded.hpp"

#include <algorithm>

#include "fthresh/artinian.hpp"
#include "fthresh/errors.hpp"
#include "fthresh/groebner.hpp"

namespace fthresh {

namespace {

// Monomials of degree <= D, ascending degree, descending order within a degree.
void enumerate_columns(const PolyRing& ring, unsigned D, std::vector<Monomial>& monomials,
                       std::vector<std::size_t>& starts) {
  for (unsigned d = 0; d <= D; ++d) {
    starts.push_back(monomials.size());
    auto piece = monomials_of_degree(ring.num_variables(), d);
    std::sort(piece.begin(), piece.end(),
              [&](const Monomial& a, const Monomial& b) { return ring.order().greater(a, b); });
    monomials.insert(monomials.end(), piece.begin(), piece.end());
  }
  starts.push_back(monomials.size());
}

// Rows m * g with deg m + ord(g) <= D, truncated above D.
template <typename Emit>
void for_each_multiple(const std::vector<Polynomial>& generators, unsigned D, std::size_t n,
                       Emit&& emit) {
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const auto& g = generators[k];
    if (g.is_zero() || g.lowest_degree() > D) continue;
    for (unsigned d = 0; d + g.lowest_degree() <= D; ++d)
      for (const auto& m : monomials_of_degree(n, d)) emit(k, m, g.times_term(m, 1));
  }
}

// Degreewise minimal generators of a homogeneous ideal given by its pieces
// 0..pieces.size()-1: piece i minus S_1 * piece (i-1).
std::vector<Polynomial> minimal_generators(const PolyRingPtr& ring,
                                           const std::vector<std::vector<Polynomial>>& pieces) {
  const std::size_t n = ring->num_variables();
  std::vector<Polynomial> gens;
  for (unsigned i = 0; i < pieces.size(); ++i) {
    if (pieces[i].empty()) continue;
    auto monos = monomials_of_degree(n, i);
    std::unordered_map<Monomial, std::size_t, MonomialHash> idx;
    for (std::size_t j = 0; j < monos.size(); ++j) idx.emplace(monos[j], j);
    auto vec = [&](const Polynomial& f) {
      Vec v(monos.size(), 0);
      for (const auto& t : f.terms()) v[idx.at(t.monomial)] = t.coeff;
      return v;
    };
    EchelonSpace span(ring->field(), monos.size());
    if (i > 0)
      for (const auto& g : pieces[i - 1])
        for (std::size_t x = 0; x < n; ++x) span.insert(vec(g * Polynomial::variable(ring, x)));
    for (const auto& f : pieces[i])
      if (span.insert(vec(f))) gens.push_back(f.monic());
  }
  return gens;
}

unsigned max_degree(const std::vector<Polynomial>& polys) {
  unsigned d = 0;
  for (const auto& f : polys)
    if (!f.is_zero()) d = std::max(d, f.total_degree());
  return d;
}

}  // namespace

// TruncatedSpace

TruncatedSpace::TruncatedSpace(PolyRingPtr ring, const std::vector<Polynomial>& generators,
                               unsigned degree)
    : ring_(std::move(ring)), degree_(degree), space_(ring_->field(), 0) {
  enumerate_columns(*ring_, degree_, monomials_, starts_);
  for (std::size_t j = 0; j < monomials_.size(); ++j) index_.emplace(monomials_[j], j);
  space_ = EchelonSpace(ring_->field(), monomials_.size());
  for_each_multiple(generators, degree_, ring_->num_variables(),
                    [&](std::size_t, const Monomial&, const Polynomial& row) {
                      if (space_.rank() < monomials_.size()) space_.insert(to_vector(row));
                    });
}

Vec TruncatedSpace::to_vector(const Polynomial& f) const {
  Vec v(monomials_.size(), 0);
  for (const auto& t : f.terms())
    if (t.monomial.degree() <= degree_) v[index_.at(t.monomial)] = t.coeff;
  return v;
}

Polynomial TruncatedSpace::to_polynomial(const Vec& v) const {
  std::vector<Term> terms;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j]) terms.push_back({monomials_[j], v[j]});
  return Polynomial::from_terms(ring_, std::move(terms));
}

Vec TruncatedSpace::reduce(const Polynomial& f) const {
  Vec v = to_vector(f);
  space_.reduce(v);
  return v;
}

std::vector<Polynomial> TruncatedSpace::initial_piece(unsigned i) const {
  if (i > degree_) throw PreconditionError("degree beyond truncation");
  std::vector<Polynomial> out;
  const std::size_t lo = starts_[i], hi = starts_[i + 1];
  for (std::size_t r = 0; r < space_.rank(); ++r) {
    std::size_t pivot = space_.pivots()[r];
    if (pivot < lo || pivot >= hi) continue;
    std::vector<Term> terms;
    for (std::size_t j = lo; j < hi; ++j)
      if (space_.rows()[r][j]) terms.push_back({monomials_[j], space_.rows()[r][j]});
    out.push_back(Polynomial::from_terms(ring_, std::move(terms)));
  }
  return out;
}

// Order, initial forms

std::string Order::to_string() const {
  return at_least ? "AtLeast(" + std::to_string(value) + ")" : std::to_string(value);
}

namespace {

void check_same_ambient(const Polynomial& f, const RingPtr& ring) {
  if (!(*f.ring() == *ring->ambient())) throw RingMismatch("element is not in " + ring->to_string());
}

// Lowest nonzero degree of the canonical representative, or nullopt.
std::optional<unsigned> reduced_order(const TruncatedSpace& space, const Vec& v) {
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j]) return space.monomials()[j].degree();
  return std::nullopt;
}

}  // namespace

Order ord(const Polynomial& f, const RingPtr& ring, unsigned D) {
  if (D < 1) throw PreconditionError("ord needs a cutoff D >= 1");
  check_same_ambient(f, ring);
  TruncatedSpace space(ring->ambient(), ring->relations(), D);
  auto r = reduced_order(space, space.reduce(f));
  if (!r || *r >= D) return {D, true};
  return {*r, false};
}

Polynomial initial_form(const Polynomial& f, const RingPtr& ring, unsigned D) {
  if (D < 1) throw PreconditionError("initial_form needs a cutoff D >= 1");
  check_same_ambient(f, ring);
  TruncatedSpace space(ring->ambient(), ring->relations(), D);
  Vec v = space.reduce(f);
  auto r = reduced_order(space, v);
  if (!r || *r >= D)
    throw PreconditionError(f.to_string() + " lies in m^" + std::to_string(D) + " + L");
  return space.to_polynomial(v).homogeneous_component(*r);
}

unsigned default_truncation(const RingPtr& ring, const std::vector<Polynomial>& extra) {
  return 2 * std::max(max_degree(ring->relations()), max_degree(extra)) + 4;
}

// Associated graded presentations

GradedPresentation gr_presentation(const RingPtr& ring, unsigned D) {
  if (D < 1) throw PreconditionError("gr_presentation needs D >= 1");
  GradedPresentation gr;
  gr.truncation_degree = D;
  const auto& basis = ring->relation_basis();
  if (basis.size() <= 1) {
    // (f) has in((f)) = (in f) since gr of S is a domain.
    if (!basis.empty()) gr.initial_relations.push_back(basis.front().lowest_form().monic());
    gr.exact = true;
  } else {
    TruncatedSpace space(ring->ambient(), ring->relations(), D);
    std::vector<std::vector<Polynomial>> pieces;
    for (unsigned i = 0; i <= D; ++i) pieces.push_back(space.initial_piece(i));
    gr.initial_relations = minimal_generators(ring->ambient(), pieces);
    gr.exact = false;
  }
  gr.ring = QuotientRing::create(ring->ambient(), gr.initial_relations);
  return gr;
}

Ideal gr_of_ideal(const Ideal& a, const GradedPresentation& gr, unsigned D) {
  const RingPtr& ring = a.ring();
  if (!(*ring->ambient() == *gr.ring->ambient())) throw RingMismatch("presentation ambient differs");
  auto info = m_primary_info(a);
  if (!info.m_primary) throw PreconditionError(a.to_string() + " is not m-primary");
  const unsigned N = *info.nilpotency_degree;
  const unsigned degree = std::max({D, N, 1u});

  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), ring->relations().begin(), ring->relations().end());
  TruncatedSpace space(ring->ambient(), gens, degree);
  std::vector<std::vector<Polynomial>> pieces;
  for (unsigned i = 0; i <= N; ++i) pieces.push_back(space.initial_piece(i));
  return Ideal(gr.ring, minimal_generators(ring->ambient(), pieces));
}

// Hilbert functions

std::string HilbertData::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + std::to_string(values[i]);
  return s;
}

HilbertData hilbert_data(const RingPtr& ring, unsigned D) {
  HilbertData h;
  std::uint64_t previous = 0;  // dim S/(m^0 + L) = 0
  for (unsigned i = 1; i <= D + 1; ++i) {
    std::uint64_t dim = ArtinianAlgebra(maximal_power(ring, i)).dimension();
    h.values.push_back(dim - previous);
    previous = dim;
  }
  return h;
}

HilbertData graded_hilbert_data(const PolyRingPtr& ring, const std::vector<Polynomial>& generators,
                                unsigned D) {
  for (const auto& g : generators)
    if (!g.is_homogeneous()) throw PreconditionError(g.to_string() + " is not homogeneous");
  auto gb = reduced_groebner_basis(ring, generators);
  HilbertData h;
  for (unsigned i = 0; i <= D; ++i) {
    std::uint64_t count = 0;
    for (const auto& m : monomials_of_degree(ring->num_variables(), i))
      count += std::none_of(gb.begin(), gb.end(),
                            [&](const Polynomial& g) { return g.leading_monomial().divides(m); });
    h.values.push_back(count);
  }
  return h;
}

HilbertData hilbert_data(const GradedPresentation& gr, unsigned D) {
  if (!gr.exact && D > gr.truncation_degree)
    throw PreconditionError("presentation is certified only through degree " +
                            std::to_string(gr.truncation_degree));
  return graded_hilbert_data(gr.ring->ambient(), gr.initial_relations, D);
}

// Claim verification

std::optional<Polynomial> realize_initial_form(const Polynomial& g, const RingPtr& ring) {
  check_same_ambient(g, ring);
  if (g.is_zero() || !g.is_homogeneous()) throw PreconditionError("claimed generator must be nonzero homogeneous");
  const unsigned i = g.total_degree();
  const auto& S = ring->ambient();
  std::vector<Monomial> monomials;
  std::vector<std::size_t> starts;
  enumerate_columns(*S, i, monomials, starts);
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t j = 0; j < monomials.size(); ++j) index.emplace(monomials[j], j);

  // Rows carry a tag block recording which multiple m * l_k they came from.
  struct Origin {
    std::size_t generator;
    Monomial multiplier;
  };
  std::vector<Origin> origins;
  std::vector<Vec> rows;
  for_each_multiple(ring->relations(), i, S->num_variables(),
                    [&](std::size_t k, const Monomial& m, const Polynomial& row) {
                      Vec v(monomials.size(), 0);
                      for (const auto& t : row.terms())
                        if (t.monomial.degree() <= i) v[index.at(t.monomial)] = t.coeff;
                      rows.push_back(std::move(v));
                      origins.push_back({k, m});
                    });
  const std::size_t width = monomials.size() + rows.size();
  EchelonSpace space(ring->field(), width);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Vec v = rows[r];
    v.resize(width, 0);
    v[monomials.size() + r] = 1;
    space.insert(std::move(v));
  }
  Vec target(width, 0);
  for (const auto& t : g.terms()) target[index.at(t.monomial)] = t.coeff;
  space.reduce(target);
  for (std::size_t j = 0; j < monomials.size(); ++j)
    if (target[j]) return std::nullopt;

  // target = g - sum c_r row_r, so the tag block holds -c.
  const auto& field = ring->field();
  Polynomial element(S);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Coeff c = target[monomials.size() + r];
    if (!c) continue;
    element += ring->relations()[origins[r].generator].times_term(origins[r].multiplier, field.neg(c));
  }
  return element;
}

GrClaimReport verify_gr_claim(const std::vector<Polynomial>& claimed, const RingPtr& ring,
                              unsigned D) {
  GrClaimReport report;
  for (const auto& g : claimed) {
    auto element = realize_initial_form(g, ring);
    // Re-check the witness directly rather than trusting the solver.
    if (!element || element->is_zero() || element->lowest_form() != g ||
        !Ideal::zero(ring).contains(*element)) {
      report.reason = g.to_string() + " is not the initial form of an element of the relations";
      return report;
    }
    report.realizations.push_back(*element);
  }
  report.ring_side = hilbert_data(ring, D);
  report.claim_side = graded_hilbert_data(ring->ambient(), claimed, D);
  for (unsigned i = 0; i <= D; ++i) {
    if (report.ring_side.values[i] != report.claim_side.values[i]) {
      report.reason = "Hilbert functions differ in degree " + std::to_string(i);
      return report;
    }
  }
  report.pass = true;
  report.reason = "realized and Hilbert functions agree through degree " + std::to_string(D);
  return report;
}

}  // namespace fthresh
