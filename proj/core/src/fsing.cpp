#include "fthresh/fsing.hpp"

#include <future>

#include "fthresh/artinian.hpp"
#include "fthresh/errors.hpp"
#include "fthresh/groebner.hpp"

namespace fthresh {

namespace {

Ideal relations_in_ambient(const RingPtr& ring) {
  return Ideal(ring->ambient_ring(), ring->relations());
}

void require_inside_maximal(const Ideal& a) {
  for (const auto& g : a.generators())
    if (g.constant_term() != 0) throw PreconditionError(a.to_string() + " is not contained in m");
}

DomainEvidence domain_evidence(const RingPtr& ring, const TcOptions& options) {
  if (ring->is_polynomial_ring()) return DomainEvidence::PolynomialRing;
  if (ring->relation_basis().size() == 1) {
    auto irreducible = locally_irreducible(ring->relation_basis().front());
    if (irreducible && !*irreducible)
      throw PreconditionError("the relation factors at the origin, so R is not a domain");
    if (irreducible) return DomainEvidence::IrreducibleHypersurface;
  }
  if (options.assert_domain) return DomainEvidence::Asserted;
  throw PreconditionError("cannot certify that R is a domain; assert it explicitly");
}

Polynomial derivative(const Polynomial& f, std::size_t var) {
  const PrimeField& k = f.ring()->field();
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    const std::uint32_t a = t.monomial[var];
    if (a == 0) continue;
    Monomial m = t.monomial;
    m.set(var, a - 1);
    terms.push_back({m, k.mul(t.coeff, k.from_integer(a))});
  }
  return Polynomial::from_terms(f.ring(), std::move(terms));
}

}  // namespace

bool fedder_f_pure(const RingPtr& ring) {
  if (ring->is_polynomial_ring()) return true;
  const std::uint32_t p = ring->characteristic();
  Ideal colon_ideal = splitting_colon(ring, p);
  return !bracket(Ideal::maximal(ring->ambient_ring()), p).contains(colon_ideal);
}

Ideal splitting_colon(const RingPtr& ring, std::uint64_t q) {
  auto S = ring->ambient_ring();
  if (ring->is_polynomial_ring()) return Ideal::unit(S);
  const auto& basis = ring->relation_basis();
  // S is a UFD: (f^q : f) = (f^(q-1)).
  if (basis.size() == 1) return Ideal(S, {basis.front().pow(q - 1)});
  Ideal L = relations_in_ambient(ring);
  return colon(bracket(L, q), L);
}

FptRecord fpt_record(const Ideal& a, unsigned e) {
  require_inside_maximal(a);
  const RingPtr& ring = a.ring();
  auto S = ring->ambient_ring();
  const std::uint64_t q = frobenius_power(ring->characteristic(), e);
  Ideal multipliers = splitting_colon(ring, q);
  Ideal target = bracket(Ideal::maximal(S), q);
  ArtinianAlgebra algebra(target);
  const auto& gens = a.generators();
  auto ascent = ascend(algebra, multipliers.generators(), gens);
  if (!ascent) throw PreconditionError(ring->to_string() + " is not F-pure");
  const Polynomial& multiplier = multipliers.generators()[ascent->start_index];
  FptRecord record{e, q, ascent->top, multiplier, ascent->word,
                   word_product(multiplier, gens, ascent->word), false};
  if (target.contains(record.witness))
    throw Error("fpt witness " + record.witness.to_string() + " lies in m^[q]");
  auto contained = products_contained(multipliers.generators(), gens, record.b + 1, target);
  if (contained && !*contained) throw Error("a^(b+1) (L^[q] : L) is not contained in m^[q]");
  record.containment_enumerated = contained.has_value();
  return record;
}

FptEstimate fpt_estimate(const Ideal& a, unsigned e_max, std::int64_t max_denominator) {
  if (e_max < 1) throw PreconditionError("e_max must be at least 1");
  require_inside_maximal(a);
  if (!fedder_f_pure(a.ring())) throw PreconditionError(a.ring()->to_string() + " is not F-pure");
  FptEstimate est;
  est.generator_count = a.generators().size();
  std::vector<std::future<FptRecord>> jobs;
  for (unsigned e = 1; e <= e_max; ++e)
    jobs.push_back(std::async(std::launch::async, [&a, e] { return fpt_record(a, e); }));
  for (auto& job : jobs) est.records.push_back(job.get());
  for (std::size_t i = 0; i < est.records.size(); ++i) {
    Bracket b = bracket_of(est.records[i].q, est.records[i].b, est.generator_count);
    if (i == 0 || b.lower > est.lower) est.lower = b.lower;
    if (i == 0 || b.upper < est.upper) est.upper = b.upper;
  }
  if (est.upper - est.lower <= Rational(1))
    est.guess = guess_rational(est.lower, est.upper, max_denominator);
  return est;
}

std::string to_string(DomainEvidence d) {
  switch (d) {
    case DomainEvidence::PolynomialRing: return "polynomial-ring";
    case DomainEvidence::IrreducibleHypersurface: return "irreducible-hypersurface";
    case DomainEvidence::Asserted: return "asserted";
  }
  return "?";
}

std::optional<bool> locally_irreducible(const Polynomial& f, std::size_t budget) {
  const auto& ring = f.ring();
  const std::uint32_t p = ring->characteristic();
  const std::size_t n = ring->num_variables();
  const std::uint32_t half = f.total_degree() / 2;
  // Candidate factors g with g(0) = 0, monic, of degree k <= deg f / 2.
  std::size_t spent = 0;
  for (std::uint32_t k = 1; k <= half; ++k) {
    std::vector<Monomial> support;
    for (std::uint32_t d = 1; d <= k; ++d)
      for (const auto& m : monomials_of_degree(n, d)) support.push_back(m);
    std::size_t count = 1;
    for (std::size_t i = 0; i < support.size(); ++i) {
      count *= p;
      if (count > budget) return std::nullopt;
    }
    spent += count;
    if (spent > budget) return std::nullopt;
    std::vector<Coeff> digits(support.size(), 0);
    for (std::size_t idx = 0; idx < count; ++idx) {
      std::size_t rest = idx;
      for (auto& d : digits) {
        d = static_cast<Coeff>(rest % p);
        rest /= p;
      }
      std::vector<Term> terms;
      for (std::size_t i = 0; i < support.size(); ++i)
        if (digits[i]) terms.push_back({support[i], digits[i]});
      Polynomial g = Polynomial::from_terms(ring, std::move(terms));
      if (g.is_zero() || g.total_degree() != k || g.leading_coefficient() != 1) continue;
      if (!normal_form(f, std::vector<Polynomial>{g}).is_zero()) continue;
      if (f.divide_exact(g).constant_term() == 0) return false;
    }
  }
  return true;
}

std::string to_string(TcVerdict::Kind k) {
  switch (k) {
    case TcVerdict::Kind::Member: return "member";
    case TcVerdict::Kind::CertifiedNotInStar: return "certified-not-in-star";
    case TcVerdict::Kind::ConsistentWithStar: return "consistent-with-star";
  }
  return "?";
}

TcVerdict tc_member(const Polynomial& x, const Ideal& J, const Polynomial& c, unsigned e_max,
                    const TcOptions& options) {
  const RingPtr& ring = J.ring();
  if (x.ring() != ring->ambient() || c.ring() != ring->ambient())
    throw RingMismatch("x and c must be elements of the ring of J");
  if (relations_in_ambient(ring).contains(c)) throw PreconditionError("c must be nonzero in R");
  TcVerdict verdict{TcVerdict::Kind::Member, 0, std::nullopt, std::nullopt,
                    domain_evidence(ring, options), true};
  if (J.contains(x)) return verdict;
  for (unsigned e = 1; e <= e_max; ++e) {
    const std::uint64_t q = frobenius_power(ring->characteristic(), e);
    Polynomial element = c * x.frobenius(e);
    verdict.checked_through = e;
    if (!bracket(J, q).contains(element)) {
      verdict.kind = TcVerdict::Kind::CertifiedNotInStar;
      verdict.witness_e = e;
      verdict.failed_element = element;
      return verdict;
    }
  }
  verdict.kind = TcVerdict::Kind::ConsistentWithStar;
  return verdict;
}

std::vector<Polynomial> test_element_candidates(const RingPtr& ring) {
  std::vector<Polynomial> out;
  if (ring->relation_basis().size() != 1) return out;
  const Polynomial& f = ring->relation_basis().front();
  for (std::size_t i = 0; i < ring->num_variables(); ++i) {
    Polynomial d = derivative(f, i);
    if (!d.is_zero()) out.push_back(d);
  }
  return out;
}

std::string to_string(FRationalReport::Kind k) {
  switch (k) {
    case FRationalReport::Kind::CertifiedStarTrivialUpToSocle: return "certified-star-trivial-up-to-socle";
    case FRationalReport::Kind::NotCertified: return "not-certified";
  }
  return "?";
}

FRationalReport f_rational_probe(const Ideal& J, const Polynomial& c, unsigned e_max,
                                 const FRationalOptions& options) {
  const RingPtr& ring = J.ring();
  const unsigned d = ring->dimension();
  if (J.generators().size() != d || !is_m_primary(J))
    throw PreconditionError(J.to_string() + " is not a system of parameters");
  auto basis = socle(J).representatives;
  if (options.exhaustive && basis.size() > 8)
    throw PreconditionError("exhaustive socle search is limited to dimension 8");

  FRationalReport report{FRationalReport::Kind::CertifiedStarTrivialUpToSocle, d, {}, false,
                         options.exhaustive, 0, std::nullopt};
  std::vector<std::future<SocleProbe>> jobs;
  for (const auto& u : basis) {
    jobs.push_back(std::async(std::launch::async, [&, u] {
      SocleProbe probe{u, tc_member(u, J, c, e_max, options.tc), std::nullopt, std::nullopt};
      Ideal I = sum(J, Ideal(ring, {u}));
      if (options.cross_check && !I.is_unit()) {
        probe.cross_check = threshold_estimate(J, I, e_max);
        const Rational dim(static_cast<std::int64_t>(d));
        probe.excludes_dimension = !(probe.cross_check->lower <= dim && dim <= probe.cross_check->upper);
      }
      return probe;
    }));
  }
  for (auto& job : jobs) report.probes.push_back(job.get());
  report.combinations_checked = report.probes.size();
  for (const auto& probe : report.probes)
    if (probe.verdict.kind != TcVerdict::Kind::CertifiedNotInStar)
      report.kind = FRationalReport::Kind::NotCertified;

  if (options.exhaustive && basis.size() > 1 &&
      report.kind == FRationalReport::Kind::CertifiedStarTrivialUpToSocle) {
    // Combinations with leading coefficient 1 and at least two nonzero entries.
    const std::uint32_t p = ring->characteristic();
    std::size_t total = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) total *= p;
    for (std::size_t idx = 1; idx < total; ++idx) {
      std::vector<Coeff> digits(basis.size());
      std::size_t rest = idx, nonzero = 0;
      for (auto& dgt : digits) {
        dgt = static_cast<Coeff>(rest % p);
        rest /= p;
        if (dgt) ++nonzero;
      }
      std::size_t first = 0;
      while (digits[first] == 0) ++first;
      if (digits[first] != 1 || nonzero < 2) continue;
      Polynomial u = ring->zero();
      for (std::size_t i = 0; i < basis.size(); ++i)
        if (digits[i]) u += basis[i].scaled(digits[i]);
      ++report.combinations_checked;
      if (tc_member(u, J, c, e_max, options.tc).kind != TcVerdict::Kind::CertifiedNotInStar) {
        report.kind = FRationalReport::Kind::NotCertified;
        report.uncertified_combination = u;
        break;
      }
    }
  }
  report.basis_only = basis.size() > 1 && !options.exhaustive;
  return report;
}

}  // namespace fthresh
