#include <gtest/gtest.h>

#include "fthresh/errors.hpp"
#include "fthresh/random_ideals.hpp"
#include "fthresh/verifier.hpp"

using namespace fthresh;

namespace {

std::string result(const CheckReport& r, const std::string& key) {
  for (const auto& [k, v] : r.results)
    if (k == key) return v;
  return "<missing>";
}

RingPtr plane(std::uint32_t p = 2) { return QuotientRing::create(p, {"x", "y"}); }
RingPtr node(std::uint32_t p = 2) { return QuotientRing::create(p, {"x", "y"}, {"x*y"}); }

}  // namespace

TEST(RandomIdeals, MPrimaryByConstruction) {
  RandomEngine rng(51);
  for (auto r : {plane(), node(3), QuotientRing::create(2, {"x", "y", "z"}, {"x^2 + y*z"})}) {
    for (int trial = 0; trial < 10; ++trial) {
      Ideal a = random_m_primary(r, rng);
      EXPECT_TRUE(is_m_primary(a)) << a.to_string();
      for (const auto& g : a.generators()) EXPECT_EQ(g.constant_term(), 0u);
    }
  }
}

TEST(RandomIdeals, SeedReproduces) {
  RandomEngine a(7), b(7);
  auto r = QuotientRing::create(3, {"x", "y", "z"});
  EXPECT_EQ(random_m_primary(r, a).to_string(), random_m_primary(r, b).to_string());
  RandomEngine c(8), d(8);
  EXPECT_EQ(random_hypersurface(2, 4, c)->to_string(), random_hypersurface(2, 4, d)->to_string());
}

TEST(ColonLemma, Examples) {
  auto r = plane();
  EXPECT_EQ(check_colon_lemma(r, r->parse("x"), 3).verdict, Verdict::Pass);
  auto n = node();
  auto good = check_colon_lemma(n, n->parse("x + y"), 3);
  EXPECT_EQ(good.verdict, Verdict::Pass) << good.reason;
  auto bad = check_colon_lemma(n, n->parse("x"), 3);
  EXPECT_EQ(bad.verdict, Verdict::Inconclusive);
  EXPECT_NE(bad.reason.find("zero divisor"), std::string::npos);
  EXPECT_EQ(check_colon_lemma(r, r->parse("x^2"), 2).verdict, Verdict::Inconclusive);
}

TEST(ColonLemma, HandComputedNodeColon) {
  // In k[x,y]/(xy): m^(n+1) = (x^(n+1), y^(n+1)) and (m^(n+1) : x+y) = m^n.
  auto n = node();
  for (unsigned k = 0; k <= 3; ++k) {
    Ideal expected = maximal_power(n, k);
    Ideal hand(n, {n->parse("x").pow(k), n->parse("y").pow(k)});
    EXPECT_TRUE(expected.equals(hand));
    EXPECT_TRUE(colon(maximal_power(n, k + 1), n->parse("x + y")).equals(hand));
  }
}

TEST(Reduction, Examples) {
  auto r = plane();
  auto full = check_reduction(Ideal::maximal(r), 3);
  EXPECT_EQ(full.verdict, Verdict::Pass);
  EXPECT_EQ(result(full, "n0"), "0");
  auto squares = check_reduction(Ideal::parse(r, {"x^2", "y^2"}), 3);
  EXPECT_EQ(squares.verdict, Verdict::Fail);
  ASSERT_EQ(squares.witnesses.size(), 1u);
  EXPECT_EQ(squares.witnesses[0].t, 3u);
  auto n = node();
  auto sum = check_reduction(Ideal::parse(n, {"x + y"}), 3);
  EXPECT_EQ(sum.verdict, Verdict::Pass);
  EXPECT_EQ(result(sum, "n0"), "1");
  EXPECT_THROW(check_reduction(Ideal::parse(r, {"1 + x"}), 2), PreconditionError);
}

TEST(Superficial, Examples) {
  auto r = plane();
  auto x = check_superficial(r, r->parse("x"), 3, 4);
  EXPECT_EQ(x.verdict, Verdict::Pass);
  EXPECT_EQ(result(x, "c"), "0");
  auto n = node();
  EXPECT_EQ(check_superficial(n, n->parse("x + y"), 3, 4).verdict, Verdict::Pass);
  auto bad = check_superficial(n, n->parse("x"), 3, 4);
  EXPECT_EQ(bad.verdict, Verdict::Fail);
  ASSERT_EQ(bad.witnesses.size(), 1u);
  EXPECT_EQ(check_superficial(r, r->parse("x*y"), 3, 4).verdict, Verdict::Inconclusive);
}

TEST(Superficial, HandComputedColon) {
  // (m^(n+1) : x) = (x^n) + (y) in k[x,y]/(xy).
  auto n = node();
  for (unsigned k = 1; k <= 4; ++k) {
    Ideal hand(n, {n->parse("x").pow(k), n->parse("y")});
    EXPECT_TRUE(colon(maximal_power(n, k + 1), n->parse("x")).equals(hand));
  }
}

TEST(InitialIdealComparison, Examples) {
  auto r = plane();
  Ideal m = Ideal::maximal(r);
  auto same = check_lemma22(m, m);
  EXPECT_EQ(same.verdict, Verdict::Pass);
  EXPECT_EQ(result(same, "equal"), "true");
  EXPECT_EQ(result(same, "verified"), "true");

  auto sep = check_lemma22(Ideal::parse(r, {"x^2", "y^2"}), Ideal::parse(r, {"x^2", "x*y", "y^2"}));
  EXPECT_EQ(sep.verdict, Verdict::Pass);
  EXPECT_EQ(result(sep, "equal"), "false");
  EXPECT_EQ(result(sep, "degree"), "2");
  EXPECT_EQ(result(sep, "class"), "x*y");

  auto red = check_lemma22(Ideal::parse(r, {"x", "y^5"}), Ideal::parse(r, {"x", "y^5", "x + y^5"}));
  EXPECT_EQ(result(red, "equal"), "true");
  EXPECT_EQ(result(red, "verified"), "true");

  EXPECT_THROW(check_lemma22(Ideal::parse(r, {"x", "y^2"}), Ideal::parse(r, {"x^2", "y"})), PreconditionError);
}

TEST(Monotonicity, Examples) {
  auto regular = check_monotonicity(plane(), 10, 2, 0);
  EXPECT_EQ(regular.verdict, Verdict::Pass) << regular.reason;
  EXPECT_EQ(result(regular, "violations"), "0");
  EXPECT_EQ(result(regular, "scaling_checked"), "true");
  EXPECT_EQ(regular.seeds.size(), 10u);
  auto n = check_monotonicity(node(3), 10, 1, 0);
  EXPECT_EQ(n.verdict, Verdict::Pass) << n.reason;
  // Not F-pure: scaling is skipped, both clauses still hold.
  auto thick = check_monotonicity(QuotientRing::create(2, {"x", "y"}, {"x^2"}), 5, 2, 3);
  EXPECT_EQ(thick.verdict, Verdict::Pass);
  EXPECT_EQ(result(thick, "scaling_checked"), "false");
}

TEST(Monotonicity, ReplaysDeterministically) {
  auto a = check_monotonicity(node(2), 6, 2, 11);
  auto b = check_monotonicity(node(2), 6, 2, 11);
  EXPECT_EQ(a.results, b.results);
  EXPECT_EQ(a.seeds, b.seeds);
  EXPECT_EQ(a.inputs, b.inputs);
}

TEST(RandomizedGradedComparison, Examples) {
  HypersurfaceFamily fam;
  fam.p = 2;
  auto r = check_theorem_A_randomized(fam, 8, 2, 0);
  EXPECT_EQ(r.verdict, Verdict::Pass) << r.reason;
  EXPECT_EQ(result(r, "passed"), "8");
  fam.maximal_only = true;
  auto m = check_theorem_A_randomized(fam, 8, 2, 0);
  EXPECT_EQ(m.verdict, Verdict::Pass) << m.reason;
  fam.max_vars = 5;
  EXPECT_THROW(check_theorem_A_randomized(fam, 1, 1, 0), PreconditionError);
}

// Properties.

TEST(VerifierProperties, LinearFormsSatisfyColonLemmaOnPolynomialRings) {
  RandomEngine rng(52);
  for (std::uint32_t p : {2u, 3u}) {
    auto r = QuotientRing::create(p, {"x", "y", "z"});
    for (int trial = 0; trial < 5; ++trial) {
      Polynomial ell = r->zero();
      for (std::size_t i = 0; i < 3; ++i) ell += r->variable(i).scaled(static_cast<Coeff>(rng() % p));
      if (ell.is_zero()) ell = r->variable(0);
      // Higher order terms do not change in(x).
      Polynomial x = ell + random_element_of_maximal(r->ambient(), rng, 3, 2).times_term(Monomial::variable(1), 1);
      auto report = check_colon_lemma(r, x, 2);
      EXPECT_EQ(report.verdict, Verdict::Pass) << x.to_string() << ": " << report.reason;
    }
  }
}

TEST(VerifierProperties, IdealsContainingMAreReductions) {
  RandomEngine rng(53);
  for (auto r : {plane(3), node(2)}) {
    for (int trial = 0; trial < 5; ++trial) {
      Ideal a = sum(Ideal::maximal(r), Ideal(r, {random_element_of_maximal(r->ambient(), rng, 3, 3)}));
      auto report = check_reduction(a, 3);
      EXPECT_EQ(report.verdict, Verdict::Pass);
      EXPECT_EQ(result(report, "n0"), "0");
    }
  }
}

TEST(VerifierProperties, RedundantGeneratorsGiveEqualInitialIdeals) {
  RandomEngine rng(54);
  for (auto r : {plane(2), node(3)}) {
    for (int trial = 0; trial < 5; ++trial) {
      Ideal a = random_m_primary(r, rng);
      Polynomial extra = a.generators()[0] * random_polynomial(r->ambient(), rng, 2, 2) +
                         a.generators().back();
      Ideal b = sum(a, Ideal(r, {extra}));
      auto report = check_lemma22(a, b);
      EXPECT_EQ(report.verdict, Verdict::Pass);
      EXPECT_EQ(result(report, "equal"), "true");
    }
  }
}

TEST(VerifierProperties, SeparatingClassesLieInTheLargerInitialIdeal) {
  RandomEngine rng(55);
  auto r = plane(2);
  for (int trial = 0; trial < 6; ++trial) {
    Ideal a = random_m_primary(r, rng, {3, 1, 2, 3, 3});
    Ideal b = sum(a, Ideal(r, {random_element_of_maximal(r->ambient(), rng, 2, 2)}));
    auto report = check_lemma22(a, b);
    ASSERT_EQ(report.verdict, Verdict::Pass);
    if (result(report, "equal") == "true") {
      EXPECT_TRUE(a.equals(b));
    } else {
      // The class is a nonzero homogeneous element of in(b) not in in(a).
      Polynomial cls = r->parse(result(report, "class"));
      EXPECT_EQ(cls.lowest_form(), cls);
      EXPECT_FALSE(a.equals(b));
    }
  }
}
