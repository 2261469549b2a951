#include "fthresh/frobenius.hpp"

#include <future>

#include "fthresh/errors.hpp"
#include "fthresh/groebner.hpp"

namespace fthresh {

namespace {

void require_inside_maximal(const Ideal& a) {
  for (const auto& g : a.generators())
    if (g.constant_term() != 0) throw PreconditionError(a.to_string() + " is not contained in m");
}

}  // namespace

std::uint64_t frobenius_power(std::uint32_t p, unsigned e) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (q > (std::uint64_t{1} << 20) / p) throw PreconditionError("p^e exceeds the exponent bound");
    q *= p;
  }
  return q;
}

Polynomial word_product(const Polynomial& start, const std::vector<Polynomial>& gens,
                        const std::vector<std::uint32_t>& word) {
  Polynomial out = start;
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (word[k]) out *= gens[k].pow(word[k]);
  return out;
}

std::optional<Ascent> ascend(const ArtinianAlgebra& algebra, const std::vector<Polynomial>& start,
                             const std::vector<Polynomial>& generators) {
  struct Raw {
    SparseVec vec;
    std::size_t start;
    std::vector<std::uint32_t> word;
  };
  const std::size_t dim = algebra.dimension();
  std::vector<std::vector<SparseVec>> matrices;
  for (const auto& g : generators) matrices.push_back(algebra.multiplication_matrix(g));

  // Raw vectors are images of actual products, so every element of the
  // current span comes with a word.
  std::vector<Raw> current;
  {
    SparseEchelon span(algebra.field(), dim);
    for (std::size_t j = 0; j < start.size(); ++j) {
      Vec v = algebra.to_vector(start[j]);
      if (span.insert(v)) current.push_back({to_sparse(v), j, std::vector<std::uint32_t>(generators.size(), 0)});
    }
  }
  if (current.empty()) return std::nullopt;
  for (std::uint64_t t = 0;; ++t) {
    SparseEchelon span(algebra.field(), dim);
    std::vector<Raw> next;
    for (const auto& raw : current) {
      for (std::size_t k = 0; k < generators.size(); ++k) {
        Vec v = algebra.apply(matrices[k], raw.vec);
        if (!span.insert(v)) continue;
        Raw r{to_sparse(v), raw.start, raw.word};
        ++r.word[k];
        next.push_back(std::move(r));
      }
    }
    if (next.empty()) return Ascent{t, current.front().start, current.front().word};
    current = std::move(next);
  }
}

std::optional<bool> products_contained(const std::vector<Polynomial>& start,
                                       const std::vector<Polynomial>& generators,
                                       std::uint64_t length, const Ideal& target,
                                       std::size_t budget) {
  std::size_t visited = 0;
  bool over = false;
  // Depth first over nondecreasing generator indices; a prefix inside the
  // target makes every extension inside too.
  auto walk = [&](auto&& self, const Polynomial& prefix, std::size_t from, std::uint64_t left) -> bool {
    if (++visited > budget) {
      over = true;
      return true;
    }
    Polynomial reduced = target.normal_form(prefix);
    if (reduced.is_zero()) return true;
    if (left == 0) return false;
    for (std::size_t k = from; k < generators.size(); ++k) {
      if (!self(self, reduced * generators[k], k, left - 1)) return false;
      if (over) return true;
    }
    return true;
  };
  for (const auto& s : start) {
    if (!walk(walk, s, 0, length)) return false;
    if (over) return std::nullopt;
  }
  return true;
}

NuRecord nu(const Ideal& a, const Ideal& J, unsigned e) {
  if (!a.ring()->same_ring(*J.ring())) throw RingMismatch("a and J live in different rings");
  require_inside_maximal(a);
  if (!is_m_primary(J)) throw PreconditionError(J.to_string() + " is not m-primary");
  const RingPtr& ring = J.ring();
  const std::uint64_t q = frobenius_power(ring->characteristic(), e);
  Ideal target = bracket(J, q);
  ArtinianAlgebra algebra(target);
  const auto& gens = a.generators();
  auto ascent = ascend(algebra, {ring->one()}, gens);
  if (!ascent) throw Error("J^[q] + L is the unit ideal");
  NuRecord record{e, q, ascent->top, ascent->word, word_product(ring->one(), gens, ascent->word), false};
  // Both certificates are re-checked through Groebner normal forms.
  if (target.contains(record.witness))
    throw Error("nu witness " + record.witness.to_string() + " lies in J^[q] + L");
  auto contained = products_contained({ring->one()}, gens, record.nu + 1, target);
  if (contained && !*contained) throw Error("a^(nu+1) is not contained in J^[q] + L");
  record.containment_enumerated = contained.has_value();
  return record;
}

Bracket bracket_of(std::uint64_t q, std::uint64_t nu, std::size_t generator_count) {
  const auto qq = static_cast<std::int64_t>(q);
  return {Rational(static_cast<std::int64_t>(nu), qq),
          Rational(static_cast<std::int64_t>(nu + 1 + generator_count), qq)};
}

std::optional<Rational> guess_rational(const Rational& lo, const Rational& hi,
                                       std::int64_t max_denominator) {
  Rational r = simplest_in(lo, hi);
  if (r.den() > max_denominator) return std::nullopt;
  return r;
}

ThresholdEstimate threshold_estimate(const Ideal& a, const Ideal& J, unsigned e_max,
                                     std::int64_t max_denominator) {
  if (e_max < 1) throw PreconditionError("e_max must be at least 1");
  ThresholdEstimate est;
  est.generator_count = a.generators().size();
  std::vector<std::future<NuRecord>> jobs;
  for (unsigned e = 1; e <= e_max; ++e)
    jobs.push_back(std::async(std::launch::async, [&a, &J, e] { return nu(a, J, e); }));
  for (auto& job : jobs) est.records.push_back(job.get());
  for (std::size_t i = 0; i < est.records.size(); ++i) {
    Bracket b = bracket_of(est.records[i].q, est.records[i].nu, est.generator_count);
    if (i == 0 || b.lower > est.lower) est.lower = b.lower;
    if (i == 0 || b.upper < est.upper) est.upper = b.upper;
  }
  if (est.upper - est.lower <= Rational(1))
    est.guess = guess_rational(est.lower, est.upper, max_denominator);
  return est;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

TheoremAReport verify_theorem_A(const Ideal& b, unsigned e_max, unsigned D) {
  const RingPtr& ring = b.ring();
  auto info = m_primary_info(b);
  if (!info.m_primary) throw PreconditionError(b.to_string() + " is not m-primary");
  if (D == 0) D = default_truncation(ring);
  TheoremAReport report;
  report.gr = gr_presentation(ring, D);
  Ideal I = gr_of_ideal(b, report.gr, D);
  report.initial_ideal = I.generators();
  Ideal m = Ideal::maximal(ring);
  Ideal n = Ideal::maximal(report.gr.ring);
  auto graded_nilpotency = *m_primary_info(I).nilpotency_degree;
  const std::uint64_t vars = ring->num_variables();
  bool any_uncertified = false;
  for (unsigned e = 1; e <= e_max; ++e) {
    TheoremARow row;
    row.e = e;
    auto ring_side = std::async(std::launch::async, [&] { return nu(m, b, e); });
    auto ring_m = std::async(std::launch::async, [&] { return nu(m, m, e); });
    auto graded_n = std::async(std::launch::async, [&] { return nu(n, n, e); });
    NuRecord graded = nu(n, I, e);
    row.q = graded.q;
    row.nu_graded = graded.nu;
    row.nu_ring = ring_side.get().nu;
    row.nu_ring_m = ring_m.get().nu;
    row.nu_graded_n = graded_n.get().nu;
    // A truncated in(L) is trusted at q only if every degree that can matter
    // modulo I^[q] is covered: m^T lies in I^[q] for
    // T = n(q-1) + 1 + (N-1)q with N the nilpotency degree of I.
    if (!report.gr.exact) {
      std::uint64_t T = vars * (row.q - 1) + 1 + (graded_nilpotency - 1) * row.q;
      row.certified = D + 1 >= T;
    }
    row.holds = row.nu_ring <= row.nu_graded;
    if (row.nu_ring < row.nu_graded) report.strict_somewhere = true;
    // Dropping relations only enlarges nu, so a violation is real even when
    // the graded side is truncated.
    if (!row.holds) report.verdict = Verdict::Fail;
    if (!row.certified) any_uncertified = true;
    report.rows.push_back(row);
  }
  if (report.verdict == Verdict::Fail) {
    report.reason = "counterexample candidate: nu^b_m(q) > nu^I_n(q)";
  } else if (any_uncertified) {
    report.verdict = Verdict::Inconclusive;
    report.reason = "truncated gr does not cover the degrees needed at some q";
  } else {
    report.reason = "nu^b_m(q) <= nu^I_n(q) for every computed q";
  }
  return report;
}

}  // namespace fthresh
