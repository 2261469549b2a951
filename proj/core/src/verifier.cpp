#include "fthresh/verifier.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "fthresh/errors.hpp"
#include "fthresh/fsing.hpp"
#include "fthresh/graded.hpp"
#include "fthresh/random_ideals.hpp"

namespace fthresh {

namespace {

std::string join(const std::vector<Polynomial>& gens) {
  std::string out;
  for (const auto& g : gens) {
    if (!out.empty()) out += ", ";
    out += g.to_string();
  }
  return out;
}

// Runs fn(0..count-1) in waves of hardware_concurrency and returns results in
// index order, so aggregation never depends on scheduling.
template <typename Fn>
auto parallel_map(std::size_t count, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using Result = decltype(fn(std::size_t{}));
  const std::size_t wave = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  std::vector<Result> out;
  out.reserve(count);
  for (std::size_t start = 0; start < count; start += wave) {
    std::vector<std::future<Result>> jobs;
    for (std::size_t i = start; i < std::min(count, start + wave); ++i)
      jobs.push_back(std::async(std::launch::async, fn, i));
    for (auto& job : jobs) out.push_back(job.get());
  }
  return out;
}

CheckReport inconclusive(CheckReport report, std::string reason) {
  report.verdict = Verdict::Inconclusive;
  report.reason = std::move(reason);
  return report;
}

// A generator of `bigger` outside `smaller`, for witnesses.
std::optional<Polynomial> escaping_generator(const Ideal& bigger, const Ideal& smaller) {
  for (const auto& g : bigger.generators())
    if (!smaller.contains(g)) return g;
  return std::nullopt;
}

}  // namespace

CheckReport check_colon_lemma(const RingPtr& ring, const Polynomial& x, unsigned n_max) {
  CheckReport report;
  report.name = "colon-lemma";
  report.inputs = {{"ring", ring->to_string()}, {"x", x.to_string()}, {"n_max", std::to_string(n_max)}};
  const unsigned D = n_max + 1;
  Order o = ord(x, ring, D + 1);
  if (o.at_least || o.value != 1) return inconclusive(report, "in(x) is not a linear form");
  Polynomial ell = initial_form(x, ring, D + 1);
  GradedPresentation gr = gr_presentation(ring, D);
  const auto& A = gr.ring->ambient();
  HilbertData h = graded_hilbert_data(A, gr.initial_relations, D);
  auto with_ell = gr.initial_relations;
  with_ell.push_back(ell);
  HilbertData hq = graded_hilbert_data(A, with_ell, D);
  // dim ker(ell : A_i -> A_{i+1}) = h_i - h_{i+1} + dim (A / ell A)_{i+1}
  for (unsigned i = 0; i <= n_max; ++i) {
    if (h.values[i] + hq.values[i + 1] != h.values[i + 1])
      return inconclusive(report, "in(x) = " + ell.to_string() + " is a zero divisor on gr in degree " +
                                      std::to_string(i));
  }
  for (unsigned n = 0; n <= n_max; ++n) {
    Ideal lhs = colon(maximal_power(ring, n + 1), x);
    Ideal rhs = maximal_power(ring, n);
    if (lhs.equals(rhs)) continue;
    report.verdict = Verdict::Fail;
    report.reason = "(m^" + std::to_string(n + 1) + " : x) differs from m^" + std::to_string(n);
    CheckWitness w{ring->to_string(), {{"colon", lhs.to_string()}}, std::nullopt, n, std::nullopt, ""};
    if (auto g = escaping_generator(lhs, rhs)) w.note = g->to_string() + " is in the colon but not in m^n";
    report.witnesses.push_back(std::move(w));
    report.failures = 1;
    return report;
  }
  report.reason = "(m^{n+1} : x) = m^n for n <= " + std::to_string(n_max);
  report.results = {{"initial_form", ell.to_string()}};
  return report;
}

CheckReport check_reduction(const Ideal& a, unsigned n_max) {
  for (const auto& g : a.generators())
    if (g.constant_term() != 0) throw PreconditionError(a.to_string() + " is not contained in m");
  const RingPtr& ring = a.ring();
  CheckReport report;
  report.name = "reduction";
  report.inputs = {{"ring", ring->to_string()}, {"a", a.to_string()}, {"n_max", std::to_string(n_max)}};
  std::optional<unsigned> n0;
  for (unsigned n = n_max + 1; n-- > 0;) {
    if (!maximal_power(ring, n + 1).equals(product(a, maximal_power(ring, n)))) break;
    n0 = n;
  }
  if (!n0) {
    report.verdict = Verdict::Fail;
    report.reason = "m^{n+1} != a m^n at n = " + std::to_string(n_max) + "; a is not a reduction of m";
    report.witnesses.push_back({ring->to_string(), {{"a", a.to_string()}}, std::nullopt, n_max, std::nullopt,
                                "m^(t+1) differs from a m^t"});
    report.failures = 1;
    return report;
  }
  report.reason = "m^{n+1} = a m^n for " + std::to_string(*n0) + " <= n <= " + std::to_string(n_max);
  report.results = {{"n0", std::to_string(*n0)}};
  return report;
}

CheckReport check_superficial(const RingPtr& ring, const Polynomial& x, unsigned c_max, unsigned n_max) {
  CheckReport report;
  report.name = "superficial";
  report.inputs = {{"ring", ring->to_string()}, {"x", x.to_string()}, {"c_max", std::to_string(c_max)},
                   {"n_max", std::to_string(n_max)}};
  Order o = ord(x, ring, 2);
  if (o.at_least || o.value != 1) return inconclusive(report, "x is not in m \\ m^2");
  if (n_max < 1) return inconclusive(report, "n_max must be at least 1");
  const unsigned c_hi = std::min(c_max, n_max - 1);
  std::vector<Ideal> colons, powers;
  for (unsigned n = 0; n <= n_max; ++n) {
    colons.push_back(colon(maximal_power(ring, n + 1), x));
    powers.push_back(maximal_power(ring, n));
  }
  CheckWitness last{ring->to_string(), {}, std::nullopt, std::nullopt, std::nullopt, ""};
  for (unsigned c = 0; c <= c_hi; ++c) {
    bool ok = true;
    for (unsigned n = c; n <= n_max && ok; ++n) {
      Ideal lhs = c == 0 ? colons[n] : intersect(colons[n], powers[c]);
      if (lhs.equals(powers[n])) continue;
      ok = false;
      last.ideals = {{"colon_cap_m^c", lhs.to_string()}};
      last.t = n;
      last.note = "c = " + std::to_string(c);
      if (auto g = escaping_generator(lhs, powers[n])) last.note += ", " + g->to_string() + " escapes m^n";
    }
    if (ok) {
      report.reason = "(m^{n+1} : x) cap m^c = m^n for c <= n <= n_max";
      report.results = {{"c", std::to_string(c)}};
      return report;
    }
  }
  report.verdict = Verdict::Fail;
  report.reason = "no c <= " + std::to_string(c_hi) + " works through n_max";
  report.witnesses.push_back(std::move(last));
  report.failures = 1;
  return report;
}

CheckReport check_lemma22(const Ideal& a, const Ideal& b) {
  const RingPtr& ring = a.ring();
  if (!ring->same_ring(*b.ring())) throw RingMismatch("a and b live in different rings");
  if (!b.contains(a)) throw PreconditionError(a.to_string() + " is not contained in " + b.to_string());
  const auto& info = a.primary_info();
  if (!info.m_primary || !b.primary_info().m_primary) throw PreconditionError("a and b must be m-primary");
  const unsigned N = *info.nilpotency_degree;
  CheckReport report;
  report.name = "lemma22";
  report.inputs = {{"ring", ring->to_string()}, {"a", a.to_string()}, {"b", b.to_string()}};
  GradedPresentation gr = gr_presentation(ring, std::max(N, 1u));
  Ideal in_a = gr_of_ideal(a, gr, N);
  Ideal in_b = gr_of_ideal(b, gr, N);
  const auto& A = gr.ring->ambient();
  auto with_relations = [&](std::vector<Polynomial> gens) {
    gens.insert(gens.end(), gr.initial_relations.begin(), gr.initial_relations.end());
    return gens;
  };
  HilbertData ha = graded_hilbert_data(A, with_relations(in_a.generators()), N);
  HilbertData hb = graded_hilbert_data(A, with_relations(in_b.generators()), N);
  report.results.push_back({"degree_bound", std::to_string(N)});
  for (unsigned i = 0; i <= N; ++i) {
    if (ha.values[i] == hb.values[i]) continue;
    std::optional<Polynomial> separating;
    for (const auto& g : in_b.generators()) {
      if (g.total_degree() > i || separating) continue;
      for (const auto& m : monomials_of_degree(A->num_variables(), i - g.total_degree())) {
        Polynomial h = g.times_term(m, 1);
        if (!in_a.contains(h)) {
          separating = in_a.normal_form(h);
          break;
        }
      }
    }
    report.reason = "in(a) and in(b) differ in degree " + std::to_string(i);
    report.results.push_back({"equal", "false"});
    report.results.push_back({"degree", std::to_string(i)});
    if (separating) report.results.push_back({"class", separating->to_string()});
    return report;
  }
  report.results.push_back({"equal", "true"});
  if (!a.contains(b)) {
    report.verdict = Verdict::Fail;
    report.reason = "in(a) = in(b) through the nilpotency degree but a != b";
    report.witnesses.push_back({ring->to_string(), {{"a", a.to_string()}, {"b", b.to_string()}}, std::nullopt,
                                N, std::nullopt, ""});
    report.failures = 1;
    return report;
  }
  report.reason = "in(a) = in(b) through degree " + std::to_string(N) + " and a = b";
  report.results.push_back({"verified", "true"});
  return report;
}

CheckReport check_monotonicity(const RingPtr& ring, std::size_t trials, unsigned e_max, std::uint64_t seed) {
  CheckReport report;
  report.name = "monotonicity";
  report.inputs = {{"ring", ring->to_string()}, {"trials", std::to_string(trials)},
                   {"e_max", std::to_string(e_max)}, {"seed", std::to_string(seed)}};
  const bool f_pure = fedder_f_pure(ring);
  const std::uint32_t p = ring->characteristic();
  auto outcomes = parallel_map(trials, [&](std::size_t trial) {
    std::vector<CheckWitness> found;
    RandomEngine rng(seed + trial);
    Ideal J = random_m_primary(ring, rng);
    const bool degenerate = trial % 5 == 4;
    Ideal I = J;
    if (!degenerate) {
      std::vector<Polynomial> extra;
      for (std::uint64_t k = 0, count = 1 + rng() % 2; k < count; ++k)
        extra.push_back(random_element_of_maximal(ring->ambient(), rng, 3, 3));
      I = sum(J, Ideal(ring, extra));
    }
    Ideal a = random_m_primary(ring, rng);
    std::vector<Polynomial> sub;
    for (const auto& g : a.generators())
      if (rng() % 2) sub.push_back(g);
    if (sub.empty()) sub.push_back(a.generators().front());
    Ideal b(ring, sub);
    Fields ideals{{"I", I.to_string()}, {"J", J.to_string()}, {"a", a.to_string()}, {"b", b.to_string()}};
    std::uint64_t previous = 0;
    for (unsigned e = 1; e <= e_max; ++e) {
      const std::uint64_t nJa = nu(a, J, e).nu;
      const std::uint64_t nIa = nu(a, I, e).nu;
      const std::uint64_t nJb = nu(b, J, e).nu;
      auto flag = [&](std::uint64_t t, std::string note) {
        found.push_back({ring->to_string(), ideals, e, t, seed + trial, std::move(note)});
      };
      if (nIa > nJa) flag(nIa, "nu^I_a(q) > nu^J_a(q)");
      if (degenerate && nIa != nJa) flag(nIa, "I = J but nu values differ");
      if (nJb > nJa) flag(nJb, "nu^J_b(q) > nu^J_a(q)");
      if (f_pure && e > 1 && nJa < p * previous) flag(nJa, "nu(pq) < p nu(q) on an F-pure ring");
      previous = nJa;
    }
    return found;
  });
  for (std::size_t trial = 0; trial < outcomes.size(); ++trial) {
    report.seeds.push_back(seed + trial);
    if (!outcomes[trial].empty()) ++report.failures;
    for (auto& w : outcomes[trial]) report.witnesses.push_back(std::move(w));
  }
  report.trials = trials;
  report.results = {{"violations", std::to_string(report.witnesses.size())},
                    {"scaling_checked", f_pure ? "true" : "false"}};
  if (report.failures) {
    report.verdict = Verdict::Fail;
    report.reason = std::to_string(report.failures) + " of " + std::to_string(trials) + " trials violate monotonicity";
  } else {
    report.reason = "no violations";
  }
  return report;
}

CheckReport check_theorem_A_randomized(const HypersurfaceFamily& family, std::size_t trials,
                                       unsigned e_max, std::uint64_t seed) {
  if (family.min_vars < 1 || family.min_vars > family.max_vars || family.max_vars > 4)
    throw PreconditionError("hypersurfaces in 1 to 4 variables");
  CheckReport report;
  report.name = "theoremA";
  report.inputs = {{"p", std::to_string(family.p)},
                   {"vars", std::to_string(family.min_vars) + ".." + std::to_string(family.max_vars)},
                   {"max_degree", std::to_string(family.max_degree)},
                   {"b", family.maximal_only ? "m" : "random"},
                   {"trials", std::to_string(trials)},
                   {"e_max", std::to_string(e_max)},
                   {"seed", std::to_string(seed)}};
  struct Outcome {
    Verdict verdict;
    bool strict;
    CheckWitness witness;
  };
  auto outcomes = parallel_map(trials, [&](std::size_t trial) {
    RandomEngine rng(seed + trial);
    const std::size_t vars = family.min_vars + rng() % (family.max_vars - family.min_vars + 1);
    RingPtr ring = random_hypersurface(family.p, vars, rng, family.max_degree);
    Ideal b = family.maximal_only ? Ideal::maximal(ring) : random_m_primary(ring, rng);
    TheoremAReport r = verify_theorem_A(b, e_max);
    CheckWitness w{ring->to_string(), {{"b", b.to_string()}, {"in(b)", join(r.initial_ideal)}}, std::nullopt,
                   std::nullopt, seed + trial, r.reason};
    for (const auto& row : r.rows)
      if (!row.holds) {
        w.e = row.e;
        w.t = row.nu_ring;
        break;
      }
    return Outcome{r.verdict, r.strict_somewhere, std::move(w)};
  });
  std::size_t passed = 0, inconclusive_count = 0, strict = 0;
  for (std::size_t trial = 0; trial < outcomes.size(); ++trial) {
    auto& o = outcomes[trial];
    report.seeds.push_back(seed + trial);
    if (o.strict) ++strict;
    switch (o.verdict) {
      case Verdict::Pass: ++passed; break;
      case Verdict::Inconclusive:
        ++inconclusive_count;
        report.witnesses.push_back(std::move(o.witness));
        break;
      case Verdict::Fail:
        ++report.failures;
        report.witnesses.push_back(std::move(o.witness));
        break;
    }
  }
  report.trials = trials;
  report.results = {{"passed", std::to_string(passed)},
                    {"failed", std::to_string(report.failures)},
                    {"inconclusive", std::to_string(inconclusive_count)},
                    {"strict", std::to_string(strict)}};
  if (report.failures) {
    report.verdict = Verdict::Fail;
    report.reason = "finite level inequality violated";
  } else if (inconclusive_count) {
    report.verdict = Verdict::Inconclusive;
    report.reason = "some trials could not be certified";
  } else {
    report.reason = std::to_string(passed) + "/" + std::to_string(trials) + " trials pass";
  }
  return report;
}

}  // namespace fthresh
