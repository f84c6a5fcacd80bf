#include <gtest/gtest.h>

#include "oracles.hpp"
#include "stopset/combinatorics.hpp"

using namespace stopset;

namespace {

// b(q,v) for 0 <= q,v <= 7 as published.
constexpr std::int64_t kTableI[8][8] = {
    {1, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, -1, 0, 0, 0, 0, 0},
    {0, 0, 2, -5, 3, 0, 0, 0},
    {0, 0, 0, 6, -26, 35, -15, 0},
    {0, 0, 0, 0, 24, -154, 340, -315},
    {0, 0, 0, 0, 0, 120, -1044, 3304},
    {0, 0, 0, 0, 0, 0, 720, -8028},
    {0, 0, 0, 0, 0, 0, 0, 5040},
};

Integer falling_factorial(std::int64_t x, int n) {
  Integer r = 1;
  for (int i = 0; i < n; ++i) {
    r *= x - i;
  }
  return r;
}

} // namespace

TEST(Binomial, Examples) {
  EXPECT_EQ(binomial(7, 3), 35);
  EXPECT_EQ(binomial(15, 15), 1);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(binomial(5, 6), 0);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(100, 50), Integer("100891344545564193334812497256"));
  EXPECT_THROW(binomial(-1, 0), DomainError);
}

TEST(Stirling, FirstKindExamples) {
  EXPECT_EQ(stirling_first(0, 0), 1);
  EXPECT_EQ(stirling_first(4, 1), -6);
  EXPECT_EQ(stirling_first(3, 5), 0);
  EXPECT_EQ(stirling_first(5, 0), 0);
}

TEST(Stirling, FirstKindMatchesCycleCounts) {
  const StirlingTables t(7);
  for (int n = 0; n <= 7; ++n) {
    for (int k = 0; k <= 8; ++k) {
      EXPECT_EQ(t.first(n, k), oracle::signed_cycle_count(n, k)) << n << "," << k;
    }
  }
}

TEST(Stirling, FirstColumnIsSignedFactorial) {
  const StirlingTables t(20);
  for (int n = 1; n <= 20; ++n) {
    Integer expected = factorial(static_cast<unsigned>(n - 1));
    if ((n - 1) % 2 != 0) expected = -expected;
    EXPECT_EQ(t.first(n, 1), expected);
  }
}

TEST(Stirling, SecondKindExamples) {
  EXPECT_EQ(stirling_second(3, 2), 3);
  EXPECT_EQ(stirling_second(0, 0), 1);
  EXPECT_EQ(stirling_second(2, 5), 0);
  EXPECT_EQ(stirling_second_explicit(3, 2), 3);
  EXPECT_EQ(stirling_second_explicit(0, 0), 1);
  EXPECT_EQ(stirling_second_explicit(2, 5), 0);
}

TEST(Stirling, SecondKindMatchesPartitionCounts) {
  const StirlingTables t(9);
  for (int n = 0; n <= 9; ++n) {
    for (int k = 0; k <= 10; ++k) {
      EXPECT_EQ(t.second(n, k), oracle::partitions(n, k)) << n << "," << k;
    }
  }
}

TEST(Stirling, ExplicitSumEqualsRecurrence) {
  const StirlingTables t(20);
  for (int n = 0; n <= 20; ++n) {
    for (int k = 0; k <= 21; ++k) {
      EXPECT_EQ(stirling_second_explicit(n, k), t.second(n, k)) << n << "," << k;
    }
  }
}

TEST(Stirling, CapacityExceeded) {
  const StirlingTables t(5);
  EXPECT_THROW((void)t.first(6, 1), ResourceError);
  EXPECT_THROW((void)t.second(6, 1), ResourceError);
  EXPECT_THROW((void)t.first(-1, 0), DomainError);
}

// sum_k s(n,k) x^k equals the falling factorial x(x-1)...(x-n+1).
TEST(Stirling, FallingFactorialIdentity) {
  const StirlingTables t(11);
  for (int n = 0; n <= 10; ++n) {
    for (std::int64_t x = -3; x <= n + 3; ++x) {
      Integer lhs = 0;
      for (int k = 0; k <= n; ++k) {
        lhs += t.first(n, k) * ipow(Integer(x), static_cast<unsigned>(k));
      }
      EXPECT_EQ(lhs, falling_factorial(x, n)) << "n=" << n << " x=" << x;
    }
  }
}

// n! C(x-1, n) = sum_{k=1}^{n+1} s(n+1,k) x^{k-1}.
TEST(Stirling, ShiftedBinomialIdentity) {
  const StirlingTables t(11);
  for (int n = 0; n <= 10; ++n) {
    for (std::int64_t x = 0; x <= n + 3; ++x) {
      Integer rhs = 0;
      for (int k = 1; k <= n + 1; ++k) {
        rhs += t.first(n + 1, k) * ipow(Integer(x), static_cast<unsigned>(k - 1));
      }
      EXPECT_EQ(falling_factorial(x - 1, n), rhs) << "n=" << n << " x=" << x;
    }
  }
}

TEST(BCoefficients, Examples) {
  EXPECT_EQ(b_definition(2, 3), -5);
  EXPECT_EQ(b_definition(5, 7), 3304);
  EXPECT_EQ(b_definition(3, 2), 0);
  EXPECT_EQ(b_recursive(3, 4), -26);
  EXPECT_EQ(b_recursive(4, 4), 24);
  EXPECT_EQ(b_recursive(0, 6), 0);
  EXPECT_EQ(b_explicit(3, 6), -15);
  EXPECT_EQ(b_explicit(2, 5), 0);
  EXPECT_EQ(b_explicit(2, 3), -5);
  EXPECT_THROW(b_definition(-1, 2), DomainError);
}

TEST(BCoefficients, PublishedTable) {
  const BTable table(7);
  const StirlingTables s(8);
  for (int q = 0; q <= 7; ++q) {
    for (int v = 0; v <= 7; ++v) {
      const Integer expected = kTableI[q][v];
      EXPECT_EQ(b_definition(q, v, s), expected) << q << "," << v;
      EXPECT_EQ(table.at(q, v), expected) << q << "," << v;
      EXPECT_EQ(b_explicit(q, v), expected) << q << "," << v;
    }
  }
}

TEST(BCoefficients, ThreeRoutesAgree) {
  const BTable table(12);
  const StirlingTables s(13);
  for (int q = 0; q <= 12; ++q) {
    for (int v = 0; v <= 12; ++v) {
      const Integer def = b_definition(q, v, s);
      EXPECT_EQ(table.at(q, v), def) << q << "," << v;
      EXPECT_EQ(b_explicit(q, v), def) << q << "," << v;
    }
  }
}

TEST(BCoefficients, ClosedForms) {
  const BTable table(20);
  for (int q = 0; q <= 10; ++q) {
    EXPECT_EQ(table.at(q, q), factorial(static_cast<unsigned>(q)));

    Rational harmonic = 0;
    for (int k = 2; k <= q + 1; ++k) {
      harmonic += Rational(1, k);
    }
    const Rational expected_next = -Rational(factorial(static_cast<unsigned>(q + 1))) * harmonic;
    EXPECT_EQ(Rational(table.at(q, q + 1)), expected_next) << q;

    Integer odd_product = 1;
    for (int i = 0; i <= q - 1; ++i) {
      odd_product *= 2 * q - 2 * i - 1;
    }
    EXPECT_EQ(table.at(q, 2 * q), q % 2 == 0 ? odd_product : Integer(-odd_product)) << q;

    for (int v = 2 * q + 1; v <= 20; ++v) {
      EXPECT_EQ(table.at(q, v), 0) << q << "," << v;
    }
  }
}

TEST(BCoefficients, TableCapacity) {
  const BTable table(4);
  EXPECT_THROW((void)table.at(5, 5), ResourceError);
  EXPECT_EQ(table.capacity(), 4U);
}
