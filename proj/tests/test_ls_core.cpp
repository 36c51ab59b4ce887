#include "lsseq/counting.hpp"
#include "lsseq/psi.hpp"
#include "lsseq/radical_inverse.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace lsseq;

namespace {

QGammaElement gp(const ParamsRef& p, int k) { return gamma_power(p, k); }

// The Example 5.5 values for (1,1): 0, g, g^2, g^3, g+g^3, g^4, g+g^4, g^2+g^4,
// g^5, g+g^5, g^2+g^5, g^3+g^5. The figure labels the eighth point g^2+g^3,
// but its coordinate 0.52786 is g^2+g^4, as in the table; the label is
// treated as a typo.
std::vector<QGammaElement> golden_11(const ParamsRef& p) {
  return {QGammaElement::zero(p), gp(p, 1), gp(p, 2), gp(p, 3), gp(p, 1) + gp(p, 3), gp(p, 4),
          gp(p, 1) + gp(p, 4), gp(p, 2) + gp(p, 4), gp(p, 5), gp(p, 1) + gp(p, 5),
          gp(p, 2) + gp(p, 5), gp(p, 3) + gp(p, 5)};
}

}  // namespace

TEST(Psi, Examples) {
  const auto p = make_params(1, 1);
  EXPECT_TRUE(psi(0, QGammaElement::zero(p)).is_zero());
  EXPECT_EQ(psi(1, QGammaElement::zero(p)), gp(p, 1));
  EXPECT_EQ(psi(0, psi(1, QGammaElement::zero(p))), gp(p, 2));
}

TEST(Psi, ShortBranchDomain) {
  // psi_i for a short i is only defined on [0, gamma).
  const auto p = make_params(1, 1);
  EXPECT_THROW(psi(1, gp(p, 1)), forbidden_composition);
  EXPECT_NO_THROW(psi(1, gp(p, 2)));
  EXPECT_THROW(psi(0, QGammaElement::one(p)), forbidden_composition);
}

TEST(ComposePsi, Examples) {
  const auto p = make_params(1, 1);
  const std::vector<int> zeros{0, 0, 0, 0};
  EXPECT_TRUE(compose_psi(zeros, p).is_zero());
  EXPECT_EQ(compose_psi(std::vector<int>{0, 1}, p), gp(p, 2));
  EXPECT_EQ(compose_psi(std::vector<int>{1, 0, 1}, p), gp(p, 1) + gp(p, 3));
  EXPECT_THROW(compose_psi(std::vector<int>{1, 1}, p), forbidden_composition);
  EXPECT_THROW(compose_psi(std::vector<int>{0, 2}, p), std::out_of_range);
}

TEST(ComposePsi, IteratedEqualsClosedFormOnRandomTuples) {
  std::mt19937_64 rng(11);
  for (auto [L, S] : {std::pair{1, 1}, {2, 1}, {1, 3}, {3, 2}, {2, 0}, {4, 4}}) {
    const auto p = make_params(L, S);
    GammaPowers<double> powers(p);
    int checked = 0;
    while (checked < 200) {
      std::vector<int> t(1 + rng() % 9);
      for (int& i : t) i = static_cast<int>(rng() % static_cast<unsigned>(L + S));
      if (!is_allowed_tuple(t, *p)) {
        EXPECT_THROW(compose_psi(t, p), forbidden_composition);
        continue;
      }
      const QGammaElement exact = compose_psi(t, p);  // throws if the two forms disagree
      EXPECT_NEAR(compose_psi_iterated<double>(t, powers), exact.to_double(), 1e-14);
      ++checked;
    }
  }
}

TEST(RadicalInverse, Examples) {
  const auto p11 = make_params(1, 1);
  EXPECT_TRUE(radical_inverse(0, p11).is_zero());
  EXPECT_EQ(radical_inverse(18, p11), gp(p11, 2) + gp(p11, 5));
  EXPECT_EQ(radical_inverse(3, make_params(2, 0)),
            QGammaElement(Rational(BigInt(3), BigInt(4)), Rational(0), make_params(2, 0)));
  EXPECT_THROW(radical_inverse(3, p11), forbidden_composition);
}

TEST(RadicalInverse, EqualsPsiCompositionOfDigits) {
  // phi(n) = psi_{a_0} o psi_{a_1} o ... (0) for admissible n.
  for (auto [L, S] : {std::pair{1, 1}, {2, 1}, {1, 3}, {3, 2}}) {
    const auto p = make_params(L, S);
    for (std::uint64_t n : oracle::admissible_prefix(300, L, S)) {
      const std::vector<int> d = oracle::digits(n, L + S);
      EXPECT_EQ(radical_inverse(n, p), compose_psi(d, p)) << n;
    }
  }
}

TEST(GeneratePoints, GoldenTable) {
  const auto p = make_params(1, 1);
  const auto pts = generate_points<QGammaElement>(12, p);
  const auto golden = golden_11(p);
  ASSERT_EQ(pts.size(), golden.size());
  for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_EQ(pts[i], golden[i]) << i;
}

TEST(GeneratePoints, VanDerCorputBase2) {
  const auto p = make_params(2, 0);
  const auto pts = generate_points<double>(4, p);
  EXPECT_EQ(pts, (std::vector<double>{0.0, 0.5, 0.25, 0.75}));
}

TEST(GeneratePoints, SinglePointIsZero) {
  for (auto [L, S] : {std::pair{1, 1}, {5, 0}, {2, 7}}) {
    const auto pts = generate_points<QGammaElement>(1, make_params(L, S));
    ASSERT_EQ(pts.size(), 1u);
    EXPECT_TRUE(pts[0].is_zero());
  }
}

TEST(GeneratePoints, StreamMatchesDirectEvaluation) {
  for (auto [L, S] : {std::pair{1, 1}, {2, 1}, {1, 2}, {1, 3}, {3, 2}, {4, 4}}) {
    const auto p = make_params(L, S);
    PointGenerator<QGammaElement> exact(p);
    PointGenerator<double> fast(p);
    const auto ns = oracle::admissible_prefix(2000, L, S);
    for (std::size_t i = 0; i < ns.size(); ++i) {
      if (i > 0) {
        exact.advance();
        fast.advance();
      }
      ASSERT_EQ(exact.integer(), ns[i]);
      ASSERT_EQ(exact.index(), i + 1);
      ASSERT_EQ(exact.value(), radical_inverse(ns[i], p));
      ASSERT_NEAR(fast.value(), exact.value().to_double(), 1e-13);
      ASSERT_GE(fast.value(), 0.0);
      ASSERT_LT(fast.value(), 1.0);
    }
  }
}

TEST(GeneratePoints, PointsAreDistinct) {
  for (auto [L, S] : {std::pair{1, 1}, {2, 3}, {1, 4}}) {
    const auto p = make_params(L, S);
    auto pts = generate_points<QGammaElement>(500, p);
    std::sort(pts.begin(), pts.end());
    EXPECT_EQ(std::adjacent_find(pts.begin(), pts.end()), pts.end());
  }
}

TEST(Psi, BranchImagesTileTheUnitInterval) {
  // Image of psi_i is [psi_i(0), psi_i(0) + gamma * |domain_i|): long branches
  // map [0,1), short ones [0,gamma).
  for (auto [L, S] : {std::pair{1, 1}, {2, 1}, {1, 3}, {3, 2}, {4, 0}, {2, 5}}) {
    const auto p = make_params(L, S);
    QGammaElement expected_left = QGammaElement::zero(p);
    for (int i = 0; i < L + S; ++i) {
      const QGammaElement left = psi(i, QGammaElement::zero(p));
      const QGammaElement width = i < L ? gamma_power(p, 1) : gamma_power(p, 2);
      EXPECT_EQ(left, expected_left) << L << "," << S << " i=" << i;
      expected_left = left + width;
    }
    EXPECT_EQ(expected_left, QGammaElement::one(p));
  }
}

TEST(ComposePsi, ClosedFormEqualsIteratedExhaustively) {
  for (int L = 1; L <= 4; ++L)
    for (int S = 0; L + S <= 4; ++S) {
      if (L + S < 2) continue;
      const auto p = make_params(L, S);
      GammaPowers<QGammaElement> powers(p);
      std::size_t checked = 0;
      for (int len = 1; len <= 8; ++len) {
        std::vector<int> t(static_cast<std::size_t>(len), 0);
        for (;;) {
          if (is_allowed_tuple(t, *p)) {
            ASSERT_EQ(compose_psi_iterated(std::span<const int>(t), powers),
                      compose_psi_closed_form(std::span<const int>(t), powers));
            ++checked;
          }
          std::size_t k = 0;
          while (k < t.size() && ++t[k] == L + S) t[k++] = 0;
          if (k == t.size()) break;
        }
      }
      EXPECT_GT(checked, 0u);
    }
}

TEST(GeneratePoints, PrefixStability) {
  for (auto [L, S] : {std::pair{1, 1}, {2, 1}, {1, 3}}) {
    const auto p = make_params(L, S);
    for (int n = 1; n <= 6; ++n) {
      const auto shorter = generate_points<QGammaElement>(interval_count(n, *p), p);
      const auto longer = generate_points<QGammaElement>(interval_count(n + 1, *p), p);
      EXPECT_TRUE(std::equal(shorter.begin(), shorter.end(), longer.begin()));
    }
  }
}
