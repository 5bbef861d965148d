#include <gtest/gtest.h>

#include "cqs/arith.hpp"
#include "support/common.hpp"

using namespace cqs;
using namespace testing_support;

TEST(HjExpansion, X14_11Sequences) {
  Singularity x = hj_expansion(Int(14), Int(11));
  EXPECT_EQ(to_i64(x.qseq()), (std::vector<i64>{14, 11, 8, 5, 2, 1, 0}));
  EXPECT_EQ(to_i64(x.cseq()), (std::vector<i64>{2, 2, 2, 2, 3, 2, 2}));
  EXPECT_EQ(to_i64(x.qbarseq()), (std::vector<i64>{0, 1, 2, 3, 4, 9, 14}));
  EXPECT_EQ(x.n(), 5u);
}

TEST(HjExpansion, AgreesWithOracleUpTo100) {
  for (auto [d, q] : coprime_pairs(100)) {
    Singularity x = hj_expansion(I(d), I(q));
    oracle::Hj h = oracle::hj(d, q);
    ASSERT_EQ(to_i64(x.qseq()), h.q) << d << "," << q;
    ASSERT_EQ(to_i64(x.cseq()), h.c) << d << "," << q;
    ASSERT_EQ(to_i64(x.qbarseq()), h.qbar) << d << "," << q;
  }
}

TEST(HjExpansion, ShapeInvariants) {
  for (auto [d, q] : coprime_pairs(80)) {
    Singularity x = hj_expansion(I(d), I(q));
    std::size_t n = x.n();
    EXPECT_EQ(x.q_at(n), 1);
    EXPECT_EQ(x.q_at(n + 1), 0);
    EXPECT_EQ(x.qbar_at(n + 1), I(d));
    for (std::size_t i = 1; i <= n; ++i) EXPECT_GE(x.c_at(i), 2);
    for (std::size_t i = 0; i <= n; ++i) EXPECT_GT(x.q_at(i), x.q_at(i + 1));
  }
}

TEST(HjExpansion, Degenerate) {
  Singularity a1 = hj_expansion(Int(2), Int(1));
  EXPECT_EQ(a1.n(), 1u);
  EXPECT_EQ(a1.c_at(1), 2);
  Singularity smooth = hj_expansion(Int(1), Int(0));
  EXPECT_EQ(smooth.n(), 0u);
  EXPECT_TRUE(smooth.smooth());
  EXPECT_EQ(to_i64(smooth.qseq()), (std::vector<i64>{1, 0}));
}

TEST(HjExpansion, Errors) {
  EXPECT_THROW(hj_expansion(Int(6), Int(4)), InvalidInput);
  EXPECT_THROW(hj_expansion(Int(5), Int(0)), InvalidInput);
  EXPECT_THROW(hj_expansion(Int(5), Int(5)), InvalidInput);
  EXPECT_THROW(hj_expansion(Int(0), Int(1)), InvalidInput);
}

TEST(HjExpansion, LargeOrder) {
  Int d("1000000000000000000000007");
  Singularity x = hj_expansion(d, Int(12345));
  EXPECT_EQ(x.qbar_at(x.n() + 1), d);
}

TEST(NormalizeType, Examples) {
  EXPECT_EQ(normalize_type(RawType(Int(5), Int(2), Int(3))), hj_expansion(Int(5), Int(4)));
  EXPECT_EQ(normalize_type(RawType(Int(4), Int(2), Int(1))), hj_expansion(Int(2), Int(1)));
  EXPECT_TRUE(normalize_type(RawType(Int(3), Int(0), Int(1))).smooth());
  EXPECT_TRUE(normalize_type(RawType(Int(1), Int(0), Int(0))).smooth());
  EXPECT_THROW(RawType(Int(0), Int(1), Int(1)), InvalidInput);
  EXPECT_THROW(normalize_type(RawType(Int(4), Int(2), Int(2))), InvalidInput);
}

// Quotienting pseudo-reflections replaces x by x^{gcd(d,b)} and y by y^{gcd(d,a)}; the invariant
// monomials must correspond exactly.
TEST(NormalizeType, InvariantRingsCorrespond) {
  for (i64 d = 1; d <= 24; ++d)
    for (i64 a = 0; a < d; ++a)
      for (i64 b = 0; b < d; ++b) {
        if (d > 1 && std::gcd(std::gcd(d, a), b) != 1) continue;
        Singularity x = normalize_type(RawType(I(d), I(a), I(b)));
        i64 gx = std::gcd(d, b), gy = std::gcd(d, a);
        i64 dn = x.d().get_si(), qn = x.q().get_si();
        for (i64 r = 0; r < 2 * d; ++r)
          for (i64 s = 0; s < 2 * d; ++s) {
            bool in = oracle::invariant(d, a, b, r, s);
            bool out = r % gx == 0 && s % gy == 0 && oracle::invariant(dn, 1, qn, r / gx, s / gy);
            ASSERT_EQ(in, out) << "(" << d << ";" << a << "," << b << ") at " << r << "," << s;
          }
      }
}

TEST(Equivalent, InverseQ) {
  EXPECT_TRUE(equivalent(hj_expansion(Int(5), Int(2)), hj_expansion(Int(5), Int(3))));
  EXPECT_FALSE(equivalent(hj_expansion(Int(5), Int(2)), hj_expansion(Int(5), Int(4))));
  EXPECT_FALSE(equivalent(hj_expansion(Int(5), Int(2)), hj_expansion(Int(7), Int(2))));
}

TEST(Greedy, X14_11Class10) {
  Singularity x = hj_expansion(Int(14), Int(11));
  Decomposition k = greedy_decomposition(x, Int(10));
  EXPECT_EQ(to_i64(k.entries()), (std::vector<i64>{0, 0, 1, 0, 1, 0, 0}));
  DecompositionNorms nm = norms(x, k);
  EXPECT_EQ(nm.x_norm, 10);
  EXPECT_EQ(nm.coins, 2);
  EXPECT_EQ(nm.bar, 6);
  EXPECT_EQ(display(k), "[0,1,0,1,0]");
}

TEST(Greedy, ReducesModD) {
  Singularity x = hj_expansion(Int(14), Int(11));
  EXPECT_EQ(greedy_decomposition(x, Int(24)), greedy_decomposition(x, Int(10)));
  EXPECT_EQ(greedy_decomposition(x, Int(-4)), greedy_decomposition(x, Int(10)));
  EXPECT_EQ(norms(x, greedy_decomposition(x, Int(0))).coins, 0);
}

TEST(Greedy, NonCanonicalCoinSystemContrast) {
  std::vector<i64> denoms{4, 3, 1};
  EXPECT_EQ(oracle::coin_count(oracle::greedy(denoms, 6)), 3);
  EXPECT_EQ(oracle::dp_coin_optimal(denoms, 6), 2);
}

TEST(Greedy, OptimalForHjDenominationsUpTo60) {
  for (auto [d, q] : coprime_pairs(60)) {
    Singularity x = hj_expansion(I(d), I(q));
    std::vector<i64> den = oracle::denominations(oracle::hj(d, q));
    for (i64 k = 0; k < d; ++k) {
      Decomposition g = greedy_decomposition(x, I(k));
      ASSERT_EQ(norms(x, g).coins.get_si(), oracle::dp_coin_optimal(den, k)) << d << "," << q << " k=" << k;
      ASSERT_EQ(norms(x, g).x_norm.get_si(), k);
    }
  }
}

TEST(QMatrix, X14_11) {
  Singularity x = hj_expansion(Int(14), Int(11));
  Matrix m = q_matrix(x);
  std::vector<std::vector<i64>> expected{{1, 2, 3, 4, 9, 14}, {0, 1, 2, 3, 7, 11}, {0, 0, 1, 2, 5, 8},
                                         {0, 0, 0, 1, 3, 5},  {0, 0, 0, 0, 1, 2},  {0, 0, 0, 0, 0, 1}};
  ASSERT_EQ(m.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(to_i64(m[i]), expected[i]) << "row " << i;
  // The entries left open by the border and read off by the completion rule.
  EXPECT_EQ(m[0][3], 4);
  EXPECT_EQ(m[0][4], 9);
  EXPECT_EQ(m[1][3], 3);
  EXPECT_EQ(m[1][4], 7);
  EXPECT_EQ(m[2][4], 5);
  EXPECT_EQ(m[0][2], 3);
}

TEST(QMatrix, RoutesAgreeUpTo100) {
  for (auto [d, q] : coprime_pairs(100)) {
    Singularity x = hj_expansion(I(d), I(q));
    ASSERT_EQ(q_matrix_definition(x), q_matrix_completion(x)) << d << "," << q;
  }
}

TEST(QMatrix, Smooth) { EXPECT_EQ(q_matrix(Singularity()), (Matrix{{Int(1)}})); }

TEST(Canonical, X14_11) {
  Singularity x = hj_expansion(Int(14), Int(11));
  EXPECT_EQ(to_i64(canonical_decomposition(x).entries()), (std::vector<i64>{0, 0, 0, 0, 1, 0, 0}));
  EXPECT_EQ(x.w(), 2);
}

TEST(Canonical, EqualsGreedyOfW) {
  for (auto [d, q] : coprime_pairs(120)) {
    Singularity x = hj_expansion(I(d), I(q));
    ASSERT_EQ(canonical_decomposition(x, Verify::off), greedy_decomposition(x, x.w())) << d << "," << q;
  }
}

TEST(SumWithCanonical, X14_11Class10) {
  Singularity x = hj_expansion(Int(14), Int(11));
  EXPECT_EQ(to_i64(sum_with_canonical(x, Int(10)).entries()), (std::vector<i64>{0, 1, 0, 0, 0, 1, 0}));
}

TEST(SumWithCanonical, SingleCoinClasses) {
  Singularity x = hj_expansion(Int(14), Int(11));
  EXPECT_EQ(sum_with_canonical_closed(x, Int(8)), greedy_decomposition(x, Int(10)));
  EXPECT_EQ(sum_with_canonical_closed(x, Int(11)), greedy_decomposition(x, Int(13)));
}

TEST(SumWithCanonical, ClosedFormEqualsGreedyUpTo80) {
  for (auto [d, q] : coprime_pairs(80)) {
    Singularity x = hj_expansion(I(d), I(q));
    for (i64 k = 1; k < d; ++k)
      ASSERT_EQ(sum_with_canonical_closed(x, I(k)), greedy_decomposition(x, I(k) + x.w())) << d << "," << q << " k=" << k;
  }
}

TEST(SumWithCanonical, TrivialClassRejected) {
  Singularity x = hj_expansion(Int(14), Int(11));
  EXPECT_THROW(sum_with_canonical(x, Int(0)), DomainError);
  EXPECT_THROW(sum_with_canonical(x, Int(14)), DomainError);
}
