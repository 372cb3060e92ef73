#include <gtest/gtest.h>

#include <random>

#include "cantor/errors.hpp"
#include "cantor/oscillator.hpp"
#include "oracles.hpp"

using namespace cantor;

namespace {

constexpr auto kLiteral = OrientationPolicy::PaperLiteral;
constexpr auto kAlternating = OrientationPolicy::AlternatingLevels;

int literal_sign(unsigned) { return -1; }
int alternating_sign(unsigned k) { return k % 2 == 1 ? -1 : 1; }

}  // namespace

TEST(TriangleParams, Golden) {
  EXPECT_EQ(triangle_params(1).height, Rational(7, 6));
  EXPECT_EQ(triangle_params(1).slope, Rational(7));
  EXPECT_EQ(triangle_params(2).height, Rational(5, 9));
  EXPECT_EQ(triangle_params(2).slope, Rational(10));
  EXPECT_EQ(triangle_params(3).height, Rational(19, 54));
  EXPECT_EQ(triangle_params(3).slope, Rational(19));
  EXPECT_THROW(triangle_params(0), DomainError);
}

TEST(TriangleParams, HeightAndSlopeFormulas) {
  for (unsigned k = 1; k <= 40; ++k) {
    const auto p = triangle_params(k);
    EXPECT_EQ(p.height, oracle::height(k));
    EXPECT_EQ(p.slope * inverse_pow3(k) / 2, p.height);
  }
}

TEST(Approximant, StepOneBreakpoints) {
  const auto f = approximant(1, kLiteral);
  const std::vector<Breakpoint> expected{{Rational(0), Rational(0)},     {Rational(1, 6), Rational(7, 6)},
                                         {Rational(1, 3), Rational(0)},  {Rational(1, 2), Rational(-7, 6)},
                                         {Rational(2, 3), Rational(0)},  {Rational(5, 6), Rational(7, 6)},
                                         {Rational(1), Rational(0)}};
  ASSERT_EQ(f.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(f.breakpoints()[i], expected[i]);
}

TEST(Approximant, StepTwoValues) {
  const auto f = approximant(2, kLiteral);
  EXPECT_EQ(f.size(), 15u);
  EXPECT_EQ(f(Rational(1, 18)), Rational(5, 9));
  EXPECT_EQ(f(Rational(1, 6)), Rational(-5, 9));
  EXPECT_EQ(f(Rational(1, 2)), Rational(-7, 6));
  EXPECT_EQ(approximant(2, kAlternating)(Rational(1, 6)), Rational(5, 9));
}

TEST(Approximant, MatchesBumpOracle) {
  std::mt19937_64 rng(3);
  for (unsigned n = 1; n <= 6; ++n) {
    for (auto [pol, sign] : {std::pair{kLiteral, &literal_sign}, std::pair{kAlternating, &alternating_sign}}) {
      const auto f = approximant(n, pol);
      const auto bumps = oracle::step_bumps(n, sign);
      for (const auto& p : f.breakpoints()) EXPECT_EQ(oracle::bump_value(bumps, p.x), p.y);
      std::uniform_int_distribution<long> num(0, 100003);
      for (int t = 0; t < 200; ++t) {
        const Rational x(num(rng), 100003);
        EXPECT_EQ(f(x), oracle::bump_value(bumps, x));
      }
    }
  }
}

TEST(Approximant, BreakpointAndTriangleCensus) {
  for (unsigned n = 1; n <= 10; ++n) {
    const std::size_t two_n = std::size_t{1} << n;
    EXPECT_EQ(approximant(n, kLiteral).size(), 4 * two_n - 1);
    const auto lit = triangle_census(n, kLiteral);
    EXPECT_EQ(lit.upper, two_n);
    EXPECT_EQ(lit.lower, two_n - 1);
    EXPECT_EQ(lit.lower_with_top_height, two_n / 2);

    // Alternating: even-level gap triangles flip to upper.
    const auto alt = triangle_census(n, kAlternating);
    std::size_t odd_gaps = 0;
    for (unsigned k = 1; k <= n; k += 2) odd_gaps += std::size_t{1} << (k - 1);
    EXPECT_EQ(alt.lower, odd_gaps);
    EXPECT_EQ(alt.upper + alt.lower, 2 * two_n - 1);

    const auto signs = pl_sign_changes(approximant(n, kLiteral));
    const auto pos = std::count_if(signs.begin(), signs.end(), [](const auto& s) { return s.sign > 0; });
    EXPECT_EQ(static_cast<std::size_t>(pos), two_n);
    EXPECT_EQ(signs.size() - pos, two_n - 1);
  }
}

TEST(EvalLimit, Golden) {
  EXPECT_EQ(eval_limit(Rational(1, 4), kLiteral), Rational(0));
  EXPECT_EQ(eval_limit(Rational(1, 2), kLiteral), Rational(-7, 6));
  EXPECT_EQ(eval_limit(Rational(1, 6), kLiteral), Rational(-5, 9));
  EXPECT_EQ(eval_limit(Rational(1, 6), kAlternating), Rational(5, 9));
  EXPECT_EQ(eval_limit(Rational(1, 2), kAlternating), Rational(-7, 6));
  EXPECT_EQ(eval_limit(Rational(5, 12), kLiteral), Rational(-7, 12));
  EXPECT_THROW(eval_limit(Rational(3, 2), kLiteral), DomainError);
}

TEST(EvalLimit, RefinementStability) {
  // Fixed gap triangles never change after they are drawn.
  for (unsigned n = 1; n <= 7; ++n) {
    for (auto pol : {kLiteral, kAlternating}) {
      const auto fn = approximant(n, pol);
      const auto next = approximant(n + 1, pol);
      for (const auto& [addr, gap] : enumerate_gaps(n)) {
        for (const Rational& x : {gap.midpoint(), gap.left() + gap.length() / 5, gap.right() - gap.length() / 7}) {
          const Rational lim = eval_limit(x, pol);
          EXPECT_EQ(fn(x), lim);
          EXPECT_EQ(next(x), lim);
        }
      }
    }
  }
}

TEST(EvalLimit, ZeroSetSandwichAndSymmetry) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> den(1, 3000);
  for (int t = 0; t < 1500; ++t) {
    const long q = den(rng);
    const Rational x(std::uniform_int_distribution<long>(0, q)(rng), q);
    const auto loc = cantor_membership(x);
    const Rational lit = eval_limit(x, kLiteral);
    const Rational alt = eval_limit(x, kAlternating);
    EXPECT_EQ(lit.is_zero(), in_cantor(loc)) << x;
    EXPECT_EQ(lit.abs(), alt.abs());
    EXPECT_LE(lit, Rational(0));
    EXPECT_EQ(eval_limit(Rational(1) - x, kLiteral), lit);
    EXPECT_EQ(eval_limit(Rational(1) - x, kAlternating), alt);
    if (const auto* g = std::get_if<InGap>(&loc)) {
      const Rational h = triangle_params(g->address.level).height;
      const bool at_mid = x == gap_interval(g->address).midpoint();
      EXPECT_LE(lit.abs(), h);
      EXPECT_EQ(lit.abs() == h, at_mid);
    }
  }
}

TEST(CauchyGap, Golden) {
  const auto same = cauchy_gap(1, 1, kLiteral);
  EXPECT_EQ(same.exact, Rational(0));
  EXPECT_EQ(same.bound, Rational(7, 3));
  EXPECT_TRUE(same.holds);

  const auto adjacent = cauchy_gap(1, 2, kLiteral);
  EXPECT_EQ(adjacent.exact, Rational(31, 18));
  EXPECT_EQ(adjacent.bound, Rational(31, 18));
  EXPECT_TRUE(adjacent.holds);
  EXPECT_TRUE(adjacent.sharp_holds);
}

TEST(CauchyGap, StatedBoundFailsTwoLevelsApart) {
  // sup|f_1 - f_3| is attained at 1/6: 7/6 - (-5/9).
  const auto c = cauchy_gap(1, 3, kLiteral);
  EXPECT_EQ(c.exact, Rational(31, 18));
  EXPECT_EQ(c.bound, Rational(41, 27));
  EXPECT_FALSE(c.holds);
  EXPECT_TRUE(c.sharp_holds);

  const auto alt = cauchy_gap(2, 4, kAlternating);
  EXPECT_EQ(alt.exact, Rational(49, 54));
  EXPECT_FALSE(alt.holds);
  EXPECT_TRUE(cauchy_gap(1, 3, kAlternating).holds);
}

TEST(CauchyGap, SharpBoundHoldsEverywhere) {
  for (auto pol : {kLiteral, kAlternating}) {
    std::vector<PLFunction> fs;
    for (unsigned n = 1; n <= 8; ++n) fs.push_back(approximant(n, pol));
    for (unsigned n = 1; n <= 8; ++n) {
      for (unsigned m = n + 1; m <= 8; ++m) {
        const auto c = cauchy_gap(n, fs[n - 1], m, fs[m - 1]);
        EXPECT_TRUE(c.sharp_holds) << n << "," << m;
        if (m == n + 1) EXPECT_TRUE(c.holds) << n << "," << m;
        // Literal: the level n+1 gap apex sits under the level-n transient apex.
        if (pol == kLiteral) EXPECT_EQ(c.exact, c.sharp_bound);
      }
    }
  }
}

TEST(VariationClosedForm, MatchesDirectSum) {
  EXPECT_EQ(variation_closed_form(1), Rational(7));
  EXPECT_EQ(variation_closed_form(2), Rational(9));
  Rational prev(0);
  for (unsigned n = 1; n <= 10; ++n) {
    const Rational v = variation_closed_form(n);
    EXPECT_EQ(v, pl_total_variation(approximant(n, kLiteral)));
    EXPECT_EQ(v, pl_total_variation(approximant(n, kAlternating)));
    EXPECT_GT(v, prev);
    prev = v;
  }
}

TEST(WitnessFamily, GoldenHalfDelta) {
  const auto w = witness_family(Rational(1, 2), Rational(11, 6), kLiteral);
  EXPECT_EQ(w.k, 1u);
  EXPECT_EQ(w.m, 3u);
  EXPECT_EQ(w.delta_bar, Rational(1, 6));
  ASSERT_EQ(w.intervals.size(), 3u);
  EXPECT_EQ(w.intervals[0].a, Rational(1, 3));
  EXPECT_EQ(w.intervals[0].b, Rational(1, 2));
  EXPECT_EQ(w.intervals[1].a, Rational(1, 9));
  EXPECT_EQ(w.intervals[1].b, Rational(1, 6));
  EXPECT_EQ(w.intervals[2].a, Rational(1, 27));
  EXPECT_EQ(w.intervals[2].b, Rational(1, 18));
  EXPECT_EQ(w.length_sum, Rational(13, 54));
  EXPECT_EQ(w.variation_sum, Rational(56, 27));
  EXPECT_TRUE(verify_witness(w, Rational(11, 6), kLiteral));
  EXPECT_TRUE(verify_witness(w, Rational(11, 6), kAlternating));
}

TEST(WitnessFamily, StartLevelIsSmallestWithTailBelowDelta) {
  // (3/4) 3^-4 = 1/108 < 1/100 <= (3/4) 3^-3 = 1/36.
  const auto w = witness_family(Rational(1, 100), Rational(1), kLiteral);
  EXPECT_EQ(w.k, 4u);
  EXPECT_LT(w.length_sum, Rational(1, 100));
  EXPECT_GT(w.variation_sum, Rational(1));
  EXPECT_TRUE(verify_witness(w, Rational(1), kLiteral));

  // Geometric sum of half-gap lengths from k to m.
  Rational expected(0);
  for (unsigned i = w.k; i <= w.m; ++i) expected += inverse_pow3(i) / 2;
  EXPECT_EQ(w.length_sum, expected);
}

TEST(WitnessFamily, SoundForManyChallenges) {
  for (long d : {2, 3, 7, 10, 100, 1000, 100000}) {
    for (const Rational& eps : {Rational(1, 10), Rational(1), Rational(2), Rational(5, 2)}) {
      const Rational delta(1, d);
      const auto w = witness_family(delta, eps, kLiteral);
      EXPECT_LT(w.length_sum, delta);
      EXPECT_GT(w.variation_sum, eps);
      EXPECT_TRUE(verify_witness(w, eps, kLiteral));
      if (w.k > 1) {
        EXPECT_GE(Rational(3, 4) * inverse_pow3(w.k - 1), delta);
      }
    }
  }
  EXPECT_THROW(witness_family(Rational(0), Rational(1), kLiteral), PreconditionError);
  EXPECT_THROW(witness_family(Rational(1, 2), Rational(-1), kLiteral), PreconditionError);
}

TEST(VerifyWitness, RejectsTamperedFamilies) {
  const Rational eps(11, 6);
  const auto good = witness_family(Rational(1, 2), eps, kLiteral);

  auto overlap = good;
  overlap.intervals[1].b = Rational(2, 5);
  EXPECT_THROW(check_witness(overlap, eps, kLiteral), ValidationError);

  auto empty = good;
  empty.intervals.clear();
  EXPECT_THROW(check_witness(empty, eps, kLiteral), ValidationError);

  auto retagged = good;
  retagged.intervals[0].level = 2;
  EXPECT_THROW(check_witness(retagged, eps, kLiteral), ValidationError);

  EXPECT_FALSE(verify_witness(good, Rational(56, 27), kLiteral));
  EXPECT_FALSE(verify_witness(good, Rational(3), kLiteral));

  auto wrong_sum = good;
  wrong_sum.length_sum = Rational(1, 4);
  EXPECT_FALSE(check_witness(wrong_sum, eps, kLiteral).length_sum_matches);

  auto too_long = good;
  too_long.delta = Rational(1, 5);
  EXPECT_FALSE(check_witness(too_long, eps, kLiteral).length_below_delta);

  auto shifted = good;
  shifted.intervals[0].a = Rational(3, 8);
  EXPECT_FALSE(check_witness(shifted, eps, kLiteral).left_ends_vanish);
}

TEST(VerifyCut, AlternatingCutsAtZeroAndQuarter) {
  for (const Rational& x : {Rational(0), Rational(1, 4)}) {
    const auto report = verify_cut(x, 4, kAlternating);
    EXPECT_TRUE(report.positive_values_exist);
    EXPECT_TRUE(report.cuts_at_every_radius);
    ASSERT_EQ(report.findings.size(), 4u);
    for (const auto& f : report.findings) {
      ASSERT_TRUE(f.negative && f.positive);
      for (const auto* p : {&*f.negative, &*f.positive}) {
        EXPECT_LT((p->x - x).abs(), f.radius);
        EXPECT_EQ(eval_limit(p->x, kAlternating), p->value);
      }
      EXPECT_LT(f.negative->value, Rational(0));
      EXPECT_GT(f.positive->value, Rational(0));
    }
  }
}

TEST(VerifyCut, AtZeroUsesLeftmostGapsOfNextTwoLevels) {
  const auto report = verify_cut(Rational(0), 4, kAlternating);
  for (const auto& f : report.findings) {
    const unsigned j = f.exponent;
    const unsigned odd = (j + 1) % 2 == 1 ? j + 1 : j + 2;
    EXPECT_EQ(f.negative->gap.to_string(), std::to_string(odd) + ":0");
    EXPECT_EQ(f.positive->gap.level % 2, 0u);
  }
}

TEST(VerifyCut, LiteralNeverFindsPositiveValues) {
  const auto report = verify_cut(Rational(0), 4, kLiteral);
  EXPECT_FALSE(report.positive_values_exist);
  EXPECT_FALSE(report.cuts_at_every_radius);
  for (const auto& f : report.findings) {
    EXPECT_TRUE(f.negative.has_value());
    EXPECT_FALSE(f.positive.has_value());
  }
  const auto scan = scan_gap_midpoints(6, kLiteral);
  EXPECT_EQ(scan.positive, 0u);
  EXPECT_EQ(scan.negative, 63u);
}

TEST(VerifyCut, Preconditions) {
  EXPECT_THROW(verify_cut(Rational(1, 2), 3, kAlternating), PreconditionError);
  EXPECT_THROW(verify_cut(Rational(0), 0, kAlternating), PreconditionError);
}

TEST(Policy, TextForms) {
  EXPECT_EQ(parse_policy("literal"), kLiteral);
  EXPECT_EQ(parse_policy("alternating"), kAlternating);
  EXPECT_EQ(to_string(kAlternating), "alternating");
  EXPECT_THROW(parse_policy("upper"), ParseError);
}
