#include <gtest/gtest.h>

#include <random>

#include "fthresh/errors.hpp"
#include "fthresh/graded.hpp"
#include "support/oracles.hpp"
#include "support/random_poly.hpp"

using namespace fthresh;

namespace {

RingPtr blowup() { return QuotientRing::create(2, {"x", "y", "z", "w"}, {"x*y - z^2*w"}); }

RingPtr determinantal() {
  // 2x3 matrix [[a,b,c],[d,e,f]]; Delta_12 perturbed by the product of all entries.
  return QuotientRing::create(2, {"a", "b", "c", "d", "e", "f"},
                              {"a*e - b*d + a*b*c*d*e*f", "a*f - c*d", "b*f - c*e"});
}

// Random polynomial with zero constant term.
Polynomial random_in_m(const PolyRingPtr& s, std::mt19937_64& rng, unsigned deg, unsigned terms) {
  Polynomial f = gen::random_polynomial(s, rng, deg, terms);
  return f - Polynomial::constant(s, f.constant_term());
}

}  // namespace

TEST(Ord, Examples) {
  auto r = blowup();
  EXPECT_EQ(ord(r->parse("x*y - z^2*w"), r->ambient_ring(), 6).value, 2u);
  auto plane = QuotientRing::create(2, {"x", "y"});
  EXPECT_EQ(ord(plane->parse("x + x^2"), plane, 6).value, 1u);
  auto cusp = QuotientRing::create(2, {"x", "y"}, {"x^2 + y^3"});
  Order o = ord(cusp->parse("x^2"), cusp, 6);
  EXPECT_EQ(o.value, 3u);
  EXPECT_FALSE(o.at_least);
}

TEST(Ord, ElementsOfRelationsAreInfinite) {
  auto cusp = QuotientRing::create(2, {"x", "y"}, {"x^2 + y^3"});
  for (unsigned D : {1u, 3u, 7u}) {
    Order o = ord(cusp->parse("x^2 + y^3"), cusp, D);
    EXPECT_TRUE(o.at_least);
    EXPECT_EQ(o.value, D);
    EXPECT_EQ(o.to_string(), "AtLeast(" + std::to_string(D) + ")");
  }
  EXPECT_THROW(ord(cusp->parse("x"), cusp, 0), PreconditionError);
}

TEST(InitialForm, Examples) {
  auto r = blowup();
  auto s = r->ambient_ring();
  EXPECT_EQ(initial_form(r->parse("x*y - z^2*w"), s, 6), r->parse("x*y"));
  EXPECT_EQ(initial_form(r->parse("x + y^2"), s, 6), r->parse("x"));
  auto cusp = QuotientRing::create(2, {"x", "y"}, {"x^2 + y^3"});
  EXPECT_EQ(initial_form(cusp->parse("x^2"), cusp, 6), cusp->parse("y^3"));
  EXPECT_THROW(initial_form(cusp->parse("x^2 + y^3"), cusp, 6), PreconditionError);
}

TEST(GrPresentation, PrincipalShortcut) {
  auto gr = gr_presentation(blowup(), 8);
  EXPECT_TRUE(gr.exact);
  ASSERT_EQ(gr.initial_relations.size(), 1u);
  EXPECT_EQ(gr.initial_relations[0], blowup()->parse("x*y"));

  auto cusp = QuotientRing::create(3, {"x", "y"}, {"x^2 - y^3"});
  gr = gr_presentation(cusp, 4);
  EXPECT_TRUE(gr.exact);
  EXPECT_EQ(gr.initial_relations[0], cusp->parse("x^2"));

  gr = gr_presentation(QuotientRing::create(2, {"x"}), 3);
  EXPECT_TRUE(gr.exact);
  EXPECT_TRUE(gr.initial_relations.empty());
}

TEST(GrPresentation, DeterminantalThroughDegreeFour) {
  auto r = determinantal();
  auto gr = gr_presentation(r, 4);
  EXPECT_FALSE(gr.exact);
  Ideal in_l(gr.ring, gr.initial_relations);
  for (const char* minor : {"a*e - b*d", "a*f - c*d", "b*f - c*e"})
    EXPECT_TRUE(in_l.contains(r->parse(minor))) << minor;
  // Segre P^1 x P^2: h_i = (i+1) * C(i+2, 2).
  const HilbertData expected{{1, 6, 18, 40, 75}};
  EXPECT_EQ(hilbert_data(gr, 4), expected);
  for (std::uint32_t i = 0; i <= 4; ++i) {
    std::uint64_t lower = i ? oracle::truncated_quotient_dimension(r->ambient(), r->relations(), i - 1) : 0;
    EXPECT_EQ(oracle::truncated_quotient_dimension(r->ambient(), r->relations(), i) - lower,
              expected.values[i]);
  }
  EXPECT_THROW(hilbert_data(gr, 5), PreconditionError);
}

TEST(GrPresentation, TruncatedPiecesMatchGeneratorsInLowDegree) {
  auto r = QuotientRing::create(3, {"x", "y", "z"}, {"x^2 - y^3", "x*z - y^4"});
  auto gr = gr_presentation(r, 6);
  EXPECT_FALSE(gr.exact);
  Ideal in_l(gr.ring, gr.initial_relations);
  EXPECT_TRUE(in_l.contains(r->parse("x^2")));
  EXPECT_TRUE(in_l.contains(r->parse("x*z")));
  for (const auto& g : gr.initial_relations) EXPECT_TRUE(g.is_homogeneous());
}

TEST(GrOfIdeal, Examples) {
  auto plane = QuotientRing::create(2, {"x", "y"});
  auto gr = gr_presentation(plane, 4);
  Ideal n = gr_of_ideal(Ideal::maximal(plane), gr);
  EXPECT_TRUE(n.equals(Ideal::maximal(gr.ring)));

  Ideal b = gr_of_ideal(Ideal::parse(plane, {"x + y^2", "y^5"}), gr, 6);
  EXPECT_TRUE(b.equals(Ideal::parse(gr.ring, {"x", "y^5"})));
  for (const auto& g : b.generators()) EXPECT_TRUE(g.is_homogeneous());

  Ideal c = gr_of_ideal(Ideal::parse(plane, {"x^2", "y^2"}), gr);
  EXPECT_TRUE(c.equals(Ideal::parse(gr.ring, {"x^2", "y^2"})));

  EXPECT_THROW(gr_of_ideal(Ideal::parse(plane, {"x"}), gr), PreconditionError);
}

TEST(GrOfIdeal, InQuotient) {
  // Ideals of the cusp GF(2)[x,y]/(x^2 + y^3).
  auto cusp = QuotientRing::create(2, {"x", "y"}, {"x^2 + y^3"});
  auto gr = gr_presentation(cusp, 6);
  Ideal b = gr_of_ideal(Ideal::parse(cusp, {"x", "y^2"}), gr);
  EXPECT_TRUE(b.equals(Ideal::parse(gr.ring, {"x", "y^2"})));
  Ideal c = gr_of_ideal(Ideal::parse(cusp, {"x^2", "y^4"}), gr);
  // x^2 = y^3 in R, so in(c) picks up y^3.
  EXPECT_TRUE(c.contains(cusp->parse("y^3")));
  EXPECT_FALSE(c.contains(cusp->parse("y^2")));
}

TEST(Hilbert, Examples) {
  auto plane = QuotientRing::create(2, {"x", "y"});
  EXPECT_EQ(hilbert_data(plane, 3), (HilbertData{{1, 2, 3, 4}}));
  auto dual = QuotientRing::create(2, {"x"}, {"x^2"});
  EXPECT_EQ(hilbert_data(dual, 3), (HilbertData{{1, 1, 0, 0}}));
  EXPECT_EQ(hilbert_data(gr_presentation(dual, 3), 3), (HilbertData{{1, 1, 0, 0}}));
  auto node = QuotientRing::create(2, {"x", "y", "z", "w"}, {"x*y"});
  HilbertData expected;
  for (std::uint64_t i = 0; i <= 3; ++i)
    expected.values.push_back(oracle::binomial(i + 3, 3) - oracle::binomial(i + 1, 3));
  // C(6,3) - C(4,3) = 16 in degree 3.
  EXPECT_EQ(expected, (HilbertData{{1, 4, 9, 16}}));
  EXPECT_EQ(hilbert_data(node, 3), expected);
  EXPECT_EQ(hilbert_data(gr_presentation(node, 3), 3), expected);
  EXPECT_EQ(hilbert_data(node, 3).to_string(), "1,4,9,16");
}

TEST(VerifyGrClaim, Examples) {
  auto r = blowup();
  auto pass = verify_gr_claim({r->parse("x*y")}, r, 5);
  EXPECT_TRUE(pass.pass) << pass.reason;
  ASSERT_EQ(pass.realizations.size(), 1u);
  EXPECT_EQ(pass.realizations[0].lowest_form(), r->parse("x*y"));

  auto fail = verify_gr_claim({r->parse("z^2*w")}, r, 5);
  EXPECT_FALSE(fail.pass);
  EXPECT_NE(fail.reason.find("not the initial form"), std::string::npos);

  // Realizable but too small: Hilbert functions disagree.
  auto node = QuotientRing::create(2, {"x", "y"}, {"x*y", "x^3"});
  auto partial = verify_gr_claim({node->parse("x*y")}, node, 4);
  EXPECT_FALSE(partial.pass);
  EXPECT_NE(partial.reason.find("degree 3"), std::string::npos);
}

TEST(VerifyGrClaim, DeterminantalMinors) {
  auto r = determinantal();
  auto report = verify_gr_claim({r->parse("a*e - b*d"), r->parse("a*f - c*d"), r->parse("b*f - c*e")}, r, 4);
  EXPECT_TRUE(report.pass) << report.reason;
  EXPECT_EQ(report.ring_side, (HilbertData{{1, 6, 18, 40, 75}}));
  // Delta_12 is realized by the perturbed relation itself (up to other relations).
  EXPECT_EQ(report.realizations[0].lowest_form(), r->parse("a*e - b*d"));
}

TEST(VerifyGrClaim, DeterminantalDivergesAtDegreeSeven) {
  // c*M lies in L but not in the ideal of minors, so the claim cannot hold
  // in every degree: the relation x13 * M is an initial form of degree 7.
  auto r = determinantal();
  auto element = realize_initial_form(r->parse("a*b*c^2*d*e*f"), r);
  ASSERT_TRUE(element.has_value());
  EXPECT_TRUE(Ideal::zero(r).contains(*element));
  Ideal minors = Ideal::parse(r->ambient_ring(), {"a*e - b*d", "a*f - c*d", "b*f - c*e"});
  EXPECT_FALSE(minors.contains(r->parse("a*b*c^2*d*e*f")));
}

// Properties.

TEST(GradedProperties, InitialFormsMultiplyOverPolynomialRings) {
  std::mt19937_64 rng(21);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto s = QuotientRing::create(p, {"x", "y", "z"});
    for (int trial = 0; trial < 10; ++trial) {
      Polynomial f = random_in_m(s->ambient(), rng, 3, 4);
      Polynomial g = random_in_m(s->ambient(), rng, 3, 4);
      if (f.is_zero() || g.is_zero()) continue;
      const unsigned D = 8;
      EXPECT_EQ(initial_form(f * g, s, D), initial_form(f, s, D) * initial_form(g, s, D));
      EXPECT_EQ(ord(f * g, s, D).value, ord(f, s, D).value + ord(g, s, D).value);
    }
  }
}

TEST(GradedProperties, OrderIsSuperadditiveUnderSums) {
  std::mt19937_64 rng(22);
  auto r = QuotientRing::create(3, {"x", "y", "z"}, {"x*y - z^3", "y^2 - x*z^2"});
  const unsigned D = 6;
  for (int trial = 0; trial < 15; ++trial) {
    Polynomial f = random_in_m(r->ambient(), rng, 4, 4);
    Polynomial g = random_in_m(r->ambient(), rng, 4, 4);
    Order of = ord(f, r, D), og = ord(g, r, D), os = ord(f + g, r, D);
    EXPECT_GE(os.value, std::min(of.value, og.value));
  }
}

TEST(GradedProperties, OrderMatchesGroebnerMembership) {
  std::mt19937_64 rng(23);
  auto r = QuotientRing::create(2, {"x", "y", "z"}, {"x^2 + y^3 + y*z^2", "x*z^2 + y^4"});
  const unsigned D = 6;
  for (int trial = 0; trial < 12; ++trial) {
    Polynomial f = gen::random_polynomial(r->ambient(), rng, 5, 5);
    unsigned expected = 0;
    while (expected + 1 <= D && maximal_power(r, expected + 1).contains(f)) ++expected;
    Order o = ord(f, r, D);
    if (expected >= D) {
      EXPECT_TRUE(o.at_least);
    } else {
      EXPECT_FALSE(o.at_least);
      EXPECT_EQ(o.value, expected) << f.to_string();
    }
  }
}

TEST(GradedProperties, InitialFormIgnoresRepresentative) {
  std::mt19937_64 rng(24);
  auto r = QuotientRing::create(3, {"x", "y"}, {"x^2 - y^3 + x*y^2"});
  for (int trial = 0; trial < 10; ++trial) {
    Polynomial f = random_in_m(r->ambient(), rng, 3, 3);
    Polynomial l = r->relations()[0] * gen::random_polynomial(r->ambient(), rng, 2, 3);
    Order o = ord(f, r, 8);
    if (o.at_least) continue;
    EXPECT_EQ(initial_form(f + l, r, 8), initial_form(f, r, 8));
  }
}

TEST(GradedProperties, PrincipalShortcutMatchesStaircase) {
  std::mt19937_64 rng(25);
  for (std::uint32_t p : {2u, 3u}) {
    for (int trial = 0; trial < 6; ++trial) {
      auto s = make_poly_ring(p, {"x", "y", "z"});
      Polynomial f = random_in_m(s, rng, 3, 4);
      if (f.is_zero()) continue;
      auto r = QuotientRing::create(s, {f});
      for (unsigned D : {2u, 4u}) {
        HilbertData ring_side = hilbert_data(r, D);
        EXPECT_EQ(ring_side, graded_hilbert_data(s, {f.lowest_form()}, D)) << f.to_string();
        EXPECT_EQ(ring_side, hilbert_data(gr_presentation(r, D), D));
      }
    }
  }
}

TEST(GradedProperties, TruncatedPresentationMatchesOracle) {
  std::mt19937_64 rng(26);
  auto s = make_poly_ring(2, {"x", "y", "z"});
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<Polynomial> rel{random_in_m(s, rng, 3, 3), random_in_m(s, rng, 3, 3)};
    auto r = QuotientRing::create(s, rel);
    const unsigned D = 4;
    auto h = hilbert_data(r, D);
    std::uint64_t prev = 0;
    for (std::uint32_t i = 0; i <= D; ++i) {
      std::uint64_t dim = oracle::truncated_quotient_dimension(s, rel, i);
      EXPECT_EQ(h.values[i], dim - prev);
      prev = dim;
    }
    EXPECT_EQ(hilbert_data(gr_presentation(r, D), D), h);
  }
}

TEST(GradedProperties, QuotientByRegularLinearForm) {
  std::mt19937_64 rng(27);
  auto s = make_poly_ring(2, {"x", "y", "z", "w"});
  int tested = 0;
  for (int trial = 0; trial < 20 && tested < 5; ++trial) {
    Polynomial f = random_in_m(s, rng, 3, 4);
    if (f.is_zero() || f.lowest_degree() < 2) continue;
    Polynomial x = Polynomial::variable(s, 3) + Polynomial::variable(s, trial % 3) +
                   random_in_m(s, rng, 2, 2).homogeneous_component(2);
    auto r = QuotientRing::create(s, {f});
    auto gr = gr_presentation(r, 5);
    Polynomial in_x = x.lowest_form();
    // A linear form is a nonzerodivisor on S/(g) iff it does not divide g.
    if (Ideal(r->ambient_ring(), {in_x}).contains(gr.initial_relations[0])) continue;
    ++tested;
    auto cut = QuotientRing::create(s, {f, x});
    std::vector<Polynomial> graded = gr.initial_relations;
    graded.push_back(in_x);
    EXPECT_EQ(hilbert_data(cut, 4), graded_hilbert_data(s, graded, 4)) << f.to_string();
  }
  EXPECT_GT(tested, 0);
}

TEST(GradedProperties, PowersOfMaximalIdeal) {
  auto r = QuotientRing::create(3, {"x", "y", "z"}, {"x*y - z^3"});
  auto gr = gr_presentation(r, 4);
  for (unsigned t = 1; t <= 4; ++t)
    EXPECT_TRUE(gr_of_ideal(maximal_power(r, t), gr).equals(maximal_power(gr.ring, t))) << t;
}
