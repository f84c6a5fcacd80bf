#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "stopset/bit_matrix.hpp"

using namespace stopset;

namespace {

const char* kExample1 = "1010101\n1100110\n1111000\n";

} // namespace

TEST(ParseMatrix, TranscribesRows) {
  const BitMatrix m = parse_matrix("101\n110");
  ASSERT_EQ(m.rows(), 2U);
  ASSERT_EQ(m.cols(), 3U);
  EXPECT_EQ(oracle::to_grid(m), (oracle::Grid{{1, 0, 1}, {1, 1, 0}}));
}

TEST(ParseMatrix, Example1Shape) {
  const BitMatrix m = parse_matrix(kExample1);
  EXPECT_EQ(m.rows(), 3U);
  EXPECT_EQ(m.cols(), 7U);
  EXPECT_TRUE(m.test(2, 0));
  EXPECT_FALSE(m.test(0, 1));
}

TEST(ParseMatrix, IgnoresWhitespaceAndBlankLines) {
  EXPECT_EQ(parse_matrix("  1 0 1 \r\n\n\t110\n\n"), parse_matrix("101\n110"));
}

TEST(ParseMatrix, RaggedLineNamesLine) {
  try {
    parse_matrix("10\n110");
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(ParseMatrix, RejectsBadCharactersAndEmptyInput) {
  EXPECT_THROW(parse_matrix("102\n"), FormatError);
  EXPECT_THROW(parse_matrix("1x1\n"), FormatError);
  EXPECT_THROW(parse_matrix(""), FormatError);
  EXPECT_THROW(parse_matrix("\n  \n"), FormatError);
}

TEST(ParseMatrix, RoundTripsThroughText) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t r = 1 + rng() % 6;
    const std::size_t n = 1 + rng() % 140;
    const BitMatrix m = oracle::random_matrix(r, n, rng);
    const std::string text = to_text(m);
    EXPECT_EQ(parse_matrix(text), m);
    EXPECT_EQ(to_text(parse_matrix(text)), text);
  }
}

TEST(HammingParityMatrix, TwoChecks) {
  EXPECT_EQ(oracle::to_grid(hamming_parity_matrix(2)), (oracle::Grid{{1, 0, 1}, {0, 1, 1}}));
}

TEST(HammingParityMatrix, IsColumnPermutationOfExample1) {
  const BitMatrix h = hamming_parity_matrix(3);
  const BitMatrix ex = parse_matrix(kExample1);
  std::multiset<std::uint64_t> a;
  std::multiset<std::uint64_t> b;
  for (std::size_t j = 0; j < 7; ++j) {
    a.insert(h.column_pattern(j));
    b.insert(ex.column_pattern(j));
  }
  EXPECT_EQ(a, b);
}

TEST(HammingParityMatrix, StructuralProperties) {
  for (int m = 2; m <= 12; ++m) {
    const BitMatrix h = hamming_parity_matrix(m);
    const std::size_t n = (std::size_t{1} << m) - 1;
    ASSERT_EQ(h.cols(), n);
    std::set<std::uint64_t> cols;
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint64_t c = h.column_pattern(j);
      EXPECT_NE(c, 0U);
      EXPECT_EQ(c, j + 1);
      cols.insert(c);
    }
    EXPECT_EQ(cols.size(), n);
    for (std::size_t i = 0; i < h.rows(); ++i) {
      EXPECT_EQ(h.row_weight(i), std::size_t{1} << (m - 1));
    }
    EXPECT_EQ(rank_gf2(h), static_cast<std::size_t>(m));
  }
}

TEST(HammingParityMatrix, RejectsOutOfRange) {
  EXPECT_THROW(hamming_parity_matrix(1), DomainError);
  EXPECT_THROW(hamming_parity_matrix(32), DomainError);
  EXPECT_THROW(hamming_parity_matrix(25), ResourceError);
}

TEST(RankGf2, Examples) {
  EXPECT_EQ(rank_gf2(parse_matrix("100\n010\n001")), 3U);
  EXPECT_EQ(rank_gf2(hamming_parity_matrix(4)), 4U);
  EXPECT_EQ(rank_gf2(BitMatrix(2, 5)), 0U);
  EXPECT_EQ(rank_gf2(parse_matrix("110\n011\n101")), 2U);
}

TEST(RankGf2, WideMatrixSpansWords) {
  // Two identical 200-column rows plus their complement: rank 2.
  std::string a(200, '0');
  std::string b(200, '1');
  for (std::size_t j = 0; j < 200; j += 3) {
    a[j] = '1';
  }
  const BitMatrix m = parse_matrix(a + "\n" + a + "\n" + b + "\n");
  EXPECT_EQ(rank_gf2(m), 2U);
}

TEST(Submatrix, Example1Selection) {
  const BitMatrix m = parse_matrix(kExample1);
  EXPECT_EQ(oracle::to_grid(submatrix(m, {3, 5}, {2, 3})), (oracle::Grid{{0, 1}, {1, 0}}));
  EXPECT_EQ(submatrix(m, {1, 2, 3, 4, 5, 6, 7}, {1, 2, 3}), m);
  EXPECT_EQ(submatrix(m, {}, {1}).cols(), 0U);
}

TEST(Submatrix, RejectsBadIndices) {
  const BitMatrix m = parse_matrix(kExample1);
  EXPECT_THROW(submatrix(m, {8}, {1}), DomainError);
  EXPECT_THROW(submatrix(m, {0}, {1}), DomainError);
  EXPECT_THROW(submatrix(m, {1}, {4}), DomainError);
  EXPECT_THROW(submatrix(m, {3, 2}, {1}), DomainError);
}
