#include "lsseq/counting.hpp"
#include "lsseq/lambda.hpp"
#include "lsseq/partition.hpp"
#include "lsseq/radical_inverse.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace lsseq;

namespace {

QGammaElement gp(const ParamsRef& p, int k) { return gamma_power(p, k); }

QGammaElement frac(const ParamsRef& p, std::int64_t a, std::int64_t b) {
  return {Rational(BigInt(a), BigInt(b)), Rational(0), p};
}

}  // namespace

TEST(RhoRefine, TrivialPartitionGivesTemplate) {
  const auto p = make_params(1, 1);
  GammaPowers<QGammaElement> powers(p);
  const auto rho = rho_template(powers);
  const auto once = rho_refine(trivial_partition<QGammaElement>(p), rho);
  ASSERT_EQ(once.size(), 2u);
  EXPECT_TRUE(once.intervals[0].left.is_zero());
  EXPECT_EQ(once.intervals[0].length, gp(p, 1));
  EXPECT_EQ(once.intervals[1].left, gp(p, 1));
  EXPECT_EQ(once.intervals[1].length, gp(p, 2));
}

TEST(RhoRefine, SecondStepSplitsOnlyTheLongest) {
  const auto p = make_params(1, 1);
  GammaPowers<QGammaElement> powers(p);
  const auto rho = rho_template(powers);
  const auto two = rho_refine(rho_refine(trivial_partition<QGammaElement>(p), rho), rho);
  ASSERT_EQ(two.size(), 3u);
  EXPECT_EQ(two.intervals[0].length, gp(p, 2));
  EXPECT_EQ(two.intervals[1].length, gp(p, 3));
  EXPECT_EQ(two.intervals[2].length, gp(p, 2));
  EXPECT_TRUE(is_partition_of_unit_interval(two, p));
}

TEST(RhoRefine, EquipartitionSplitsEverything) {
  const auto p = make_params(3, 0);
  GammaPowers<QGammaElement> powers(p);
  const auto rho = rho_template(powers);
  auto q = rho_refine(trivial_partition<QGammaElement>(p), rho);
  q = rho_refine(q, rho);
  ASSERT_EQ(q.size(), 9u);
  for (std::size_t i = 0; i < q.size(); ++i) EXPECT_EQ(q.intervals[i].left, frac(p, static_cast<std::int64_t>(i), 9));
}

TEST(RhoRefine, KakutaniAlpha) {
  const auto p = make_params(2, 0);  // only used as the scalar context
  const auto rho = partition_from_lengths<double>({0.3, 0.7}, p);
  auto q = rho_refine(trivial_partition<double>(p), rho);
  q = rho_refine(q, rho);  // splits [0.3, 1)
  ASSERT_EQ(q.size(), 3u);
  EXPECT_NEAR(q.intervals[1].left, 0.3, 1e-15);
  EXPECT_NEAR(q.intervals[1].length, 0.21, 1e-15);
  EXPECT_NEAR(q.intervals[2].length, 0.49, 1e-15);
  EXPECT_TRUE(is_partition_of_unit_interval(q, p));
}

TEST(RhoRefine, RejectsDegenerateInputs) {
  const auto p = make_params(1, 1);
  const auto omega = trivial_partition<double>(p);
  EXPECT_THROW(rho_refine(omega, omega), std::invalid_argument);
  EXPECT_THROW(rho_refine(Partition<double>{}, partition_from_lengths<double>({0.5, 0.5}, p)), std::invalid_argument);
}

TEST(LSPartition, Examples) {
  const auto p = make_params(1, 1);
  const auto zero = ls_partition<QGammaElement>(0, p);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero.intervals[0].length, QGammaElement::one(p));

  const auto two = ls_partition<QGammaElement>(2, p);
  ASSERT_EQ(two.size(), 3u);
  EXPECT_EQ(two.left_endpoints(), (std::vector<QGammaElement>{QGammaElement::zero(p), gp(p, 2), gp(p, 1)}));

  for (int b : {2, 3, 5}) {
    const auto q = make_params(b, 0);
    const auto part = ls_partition<QGammaElement>(2, q);
    ASSERT_EQ(part.size(), static_cast<std::size_t>(b * b));
    for (int i = 0; i < b * b; ++i) {
      EXPECT_EQ(part.intervals[static_cast<std::size_t>(i)].left, frac(q, i, b * b));
      EXPECT_EQ(part.intervals[static_cast<std::size_t>(i)].length, frac(q, 1, b * b));
    }
  }
}

TEST(LSPartition, StructuralStepEqualsGenericRefinement) {
  // Splitting by labels and splitting every maximal interval agree exactly.
  for (auto [L, S] : {std::pair{1, 1}, {2, 1}, {1, 2}, {1, 3}, {3, 2}, {2, 0}}) {
    const auto p = make_params(L, S);
    GammaPowers<QGammaElement> powers(p);
    const auto rho = rho_template(powers);
    auto generic = trivial_partition<QGammaElement>(p);
    for (int n = 1; n <= 6; ++n) {
      generic = rho_refine(generic, rho);
      const auto structural = ls_partition<QGammaElement>(n, p);
      ASSERT_EQ(generic.size(), structural.size()) << L << "," << S << " n=" << n;
      for (std::size_t i = 0; i < generic.size(); ++i) {
        ASSERT_EQ(generic.intervals[i].left, structural.intervals[i].left);
        ASSERT_EQ(generic.intervals[i].length, structural.intervals[i].length);
      }
    }
  }
}

TEST(LSPartition, CountsAndLabels) {
  for (auto [L, S] : {std::pair{1, 1}, {2, 1}, {1, 3}, {4, 4}, {3, 0}}) {
    const auto p = make_params(L, S);
    for (int n = 0; n <= 6; ++n) {
      const auto part = ls_partition<double>(n, p);
      const CountVector c = counts(n, *p);
      EXPECT_EQ(BigInt(part.size()), c.t);
      EXPECT_EQ(BigInt(part.count(IntervalLabel::Long)), c.l);
      EXPECT_EQ(BigInt(part.count(IntervalLabel::Short)), c.s);
      EXPECT_TRUE(is_partition_of_unit_interval(part, p));
      const auto labels = ls_labels(n, *p);
      ASSERT_EQ(labels.size(), part.size());
      for (std::size_t i = 0; i < labels.size(); ++i) EXPECT_EQ(labels[i], part.intervals[i].label);
    }
  }
}

TEST(LambdaTuple, Examples) {
  const auto p = make_params(1, 1);
  EXPECT_EQ(lambda_tuple<QGammaElement>(1, p), (std::vector<QGammaElement>{QGammaElement::zero(p), gp(p, 1)}));
  const std::vector<QGammaElement> first8{QGammaElement::zero(p), gp(p, 1), gp(p, 2), gp(p, 3), gp(p, 1) + gp(p, 3),
                                          gp(p, 4), gp(p, 1) + gp(p, 4), gp(p, 2) + gp(p, 4)};
  EXPECT_EQ(lambda_tuple<QGammaElement>(4, p), first8);

  const auto q = make_params(2, 0);
  const auto two = lambda_tuple<QGammaElement>(2, q);
  EXPECT_EQ(two, (std::vector<QGammaElement>{frac(q, 0, 1), frac(q, 1, 2), frac(q, 1, 4), frac(q, 3, 4)}));
  const auto three = lambda_tuple<double>(3, q);
  EXPECT_EQ(three, (std::vector<double>{0, 0.5, 0.25, 0.75, 0.125, 0.625, 0.375, 0.875}));
}

TEST(LambdaTuple, IsAPermutationOfThePartitionEndpoints) {
  for (auto [L, S] : {std::pair{1, 1}, {2, 1}, {1, 3}, {3, 2}, {3, 0}}) {
    const auto p = make_params(L, S);
    for (int n = 1; n <= 5; ++n) {
      auto lam = lambda_tuple<QGammaElement>(n, p);
      std::sort(lam.begin(), lam.end());
      EXPECT_EQ(lam, ls_partition<QGammaElement>(n, p).left_endpoints()) << L << "," << S << " n=" << n;
    }
  }
}

TEST(LambdaTuple, HeadIsTheLongIntervalEndpoints) {
  // The l_n entries the next level translates are the left endpoints of the
  // long intervals of rho^n.
  for (auto [L, S] : {std::pair{1, 1}, {2, 1}, {1, 2}, {1, 3}, {3, 2}, {4, 4}, {3, 0}}) {
    const auto p = make_params(L, S);
    for (int n = 1; n <= 5; ++n) {
      const auto lam = lambda_tuple<QGammaElement>(n, p);
      const auto head_len = static_cast<std::size_t>(counts(n, *p).l);
      std::vector<QGammaElement> head(lam.begin(), lam.begin() + static_cast<std::ptrdiff_t>(head_len));
      std::sort(head.begin(), head.end());
      std::vector<QGammaElement> longs;
      for (const auto& iv : ls_partition<QGammaElement>(n, p).intervals)
        if (iv.label == IntervalLabel::Long) longs.push_back(iv.left);
      EXPECT_EQ(head, longs) << L << "," << S << " n=" << n;
    }
  }
}

TEST(VerifyEquivalence, Examples) {
  const auto r11 = verify_equivalence(6, make_params(1, 1));
  EXPECT_TRUE(r11.equal());
  EXPECT_EQ(r11.points, 21u);
  const auto r20 = verify_equivalence(4, make_params(2, 0));
  EXPECT_TRUE(r20.equal());
  EXPECT_EQ(r20.points, 16u);
  EXPECT_TRUE(verify_equivalence(5, make_params(3, 2)).equal());
  // The points also match base-2 digit reversal.
  const auto pts = lambda_tuple<QGammaElement>(4, make_params(2, 0));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto v = oracle::van_der_corput(i, 2);
    EXPECT_EQ(pts[i].p(), Rational(BigInt(numerator(v)), BigInt(denominator(v))));
  }
}

TEST(LSPartition, TwoLengthsPerLevel) {
  for (auto [L, S] : {std::pair{1, 1}, {2, 1}, {1, 3}, {3, 2}, {2, 0}}) {
    const auto p = make_params(L, S);
    for (int n = 0; n <= 7; ++n) {
      const QGammaElement big = gamma_power(p, n), small = gamma_power(p, n + 1);
      for (const auto& iv : ls_partition<QGammaElement>(n, p).intervals) {
        EXPECT_TRUE(iv.length == big || iv.length == small);
        EXPECT_EQ(iv.length == big, iv.label == IntervalLabel::Long);
      }
    }
  }
}

TEST(LSPartition, StructuralEqualsGenericToDepthEight) {
  for (auto [L, S] : {std::pair{1, 1}, {1, 2}, {2, 1}, {1, 3}}) {
    const auto p = make_params(L, S);
    GammaPowers<QGammaElement> powers(p);
    const auto rho = rho_template(powers);
    auto generic = trivial_partition<QGammaElement>(p);
    for (int n = 1; n <= 8; ++n) generic = rho_refine(generic, rho);
    EXPECT_EQ(generic.left_endpoints(), ls_partition<QGammaElement>(8, p).left_endpoints());
  }
}

TEST(LambdaTuple, HeadIsTheLongIntervalEndpointsDeep) {
  // Depth up to 10 for L + S <= 5, capped at 2 * 10^4 points per level to
  // keep exact arithmetic cheap.
  for (int L = 1; L <= 5; ++L)
    for (int S = 1; L + S <= 5; ++S) {
      const auto p = make_params(L, S);
      for (int n = 1; n <= 10 && counts(n, *p).t <= BigInt(20'000); ++n) {
        const auto lam = lambda_tuple<QGammaElement>(n, p);
        const auto head_len = static_cast<std::size_t>(counts(n, *p).l);
        std::vector<QGammaElement> head(lam.begin(), lam.begin() + static_cast<std::ptrdiff_t>(head_len));
        std::sort(head.begin(), head.end());
        std::vector<QGammaElement> longs;
        for (const auto& iv : ls_partition<QGammaElement>(n, p).intervals)
          if (iv.label == IntervalLabel::Long) longs.push_back(iv.left);
        ASSERT_EQ(head, longs) << L << "," << S << " n=" << n;
      }
    }
}

TEST(GeneratePoints, FirstTnPointsAreThePartitionEndpoints) {
  for (auto [L, S] : {std::pair{1, 1}, {2, 1}, {1, 3}, {3, 2}, {2, 0}}) {
    const auto p = make_params(L, S);
    for (int n = 0; n <= 6; ++n) {
      auto pts = generate_points<QGammaElement>(interval_count(n, *p), p);
      std::sort(pts.begin(), pts.end());
      EXPECT_EQ(pts, ls_partition<QGammaElement>(n, p).left_endpoints());
    }
  }
}
