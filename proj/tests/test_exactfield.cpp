#include <gtest/gtest.h>

#include <random>

#include "ngon/matrix.hpp"
#include "ngon/rat.hpp"
#include "ngon/vandermonde.hpp"
#include "ngon/zeta.hpp"
#include "oracles.hpp"

using namespace ngon;

TEST(Rat, NormalizesOnConstruction) {
  EXPECT_EQ(Rat(6, 4).to_string(), "3/2");
  EXPECT_EQ(Rat(3, -6).to_string(), "-1/2");
  EXPECT_EQ(Rat(0, 7).to_string(), "0");
  EXPECT_EQ(Rat(8, 4).to_string(), "2");
  EXPECT_EQ(Rat(3, -6).denominator(), 2);
}

TEST(Rat, Arithmetic) {
  EXPECT_EQ(Rat(1, 2) + Rat(1, 3), Rat(5, 6));
  EXPECT_EQ(Rat(1, 2) - Rat(1, 3), Rat(1, 6));
  EXPECT_EQ(Rat(2, 3) * Rat(9, 4), Rat(3, 2));
  EXPECT_EQ(Rat(2, 3) / Rat(4, 9), Rat(3, 2));
  EXPECT_EQ(-Rat(2, 3), Rat(-2, 3));
  EXPECT_LT(Rat(1, 3), Rat(1, 2));
  EXPECT_EQ(Rat(-5, 3).sign(), -1);
  EXPECT_TRUE(Rat().is_zero());
}

TEST(Rat, DivisionByZeroRejected) {
  EXPECT_THROW(Rat(1, 0), InvalidInput);
  EXPECT_THROW(Rat(1) / Rat(0), InvalidInput);
}

TEST(Rat, ParseRoundTrip) {
  for (const char* s : {"0", "7", "-7", "3/2", "-1/2", "123456789012345678901234567891/2"})
    EXPECT_EQ(Rat::parse(s).to_string(), s);
  EXPECT_EQ(Rat::parse(" 4/6 "), Rat(2, 3));
  EXPECT_EQ(Rat::parse("+5"), Rat(5));
}

TEST(Rat, ParseRejectsGarbage) {
  for (const char* s : {"", "x", "1/", "/2", "1/0", "1.5", "1/2/3", "--1"})
    EXPECT_THROW(Rat::parse(s), InvalidInput) << s;
}

TEST(Zeta, ConsecutiveIsOneToN) {
  auto z = ZetaAssignment::consecutive(6);
  EXPECT_EQ(z.n(), 6);
  for (Vertex v = 1; v <= 6; ++v) EXPECT_EQ(z[v], Rat(v));
  EXPECT_EQ(z.description(), "consecutive");
}

TEST(Zeta, RejectsDuplicatesAndSmallN) {
  std::vector<Rat> dup{1, 1, 3, 4, 5, 6};
  EXPECT_THROW(ZetaAssignment::from_values(dup), InvalidInput);
  EXPECT_THROW(ZetaAssignment::consecutive(4), InvalidInput);
  EXPECT_THROW((void)ZetaAssignment::consecutive(6).at(7), InvalidInput);
}

TEST(Zeta, SeededIsDeterministicAndDistinct) {
  for (std::uint64_t seed : {1u, 2u, 42u}) {
    auto a = ZetaAssignment::seeded_random(12, seed);
    auto b = ZetaAssignment::seeded_random(12, seed);
    EXPECT_EQ(a.values(), b.values());
    EXPECT_EQ(a.description(), "seed=" + std::to_string(seed));
    auto sorted = a.values();
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
    for (const auto& v : sorted) {
      EXPECT_GE(v, Rat(1));
      EXPECT_LE(v, Rat(kRandomZetaMax));
    }
  }
  EXPECT_NE(ZetaAssignment::seeded_random(8, 1).values(), ZetaAssignment::seeded_random(8, 2).values());
}

TEST(Vandermonde, Examples) {
  auto z = ZetaAssignment::consecutive(7);
  EXPECT_EQ(vandermonde({7}, z), Rat(1));
  EXPECT_EQ(vandermonde({2, 4, 5}, z), Rat(6));
  EXPECT_EQ(vandermonde({2, 1}, z), -vandermonde({1, 2}, z));
  EXPECT_THROW(vandermonde({}, z), InvalidInput);
  EXPECT_THROW(vandermonde({1, 1}, z), InvalidInput);
  EXPECT_THROW(vandermonde({0, 2}, z), InvalidInput);
  EXPECT_THROW(vandermonde({1, 8}, z), InvalidInput);
}

TEST(Vandermonde, MatchesDeterminantExpansion) {
  std::mt19937_64 gen(5);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    auto z = ZetaAssignment::seeded_random(9, seed);
    for (std::size_t k = 1; k <= 5; ++k) {
      for (int trial = 0; trial < 6; ++trial) {
        std::vector<Vertex> all{1, 2, 3, 4, 5, 6, 7, 8, 9};
        std::shuffle(all.begin(), all.end(), gen);
        std::vector<Vertex> cols(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
        EXPECT_EQ(vandermonde(cols, z), oracle::vandermonde_by_expansion(cols, z));
      }
    }
  }
}

TEST(Vandermonde, SwappingTwoIndicesNegates) {
  auto z = ZetaAssignment::seeded_random(8, 11);
  std::vector<Vertex> a{3, 7, 1, 5};
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      auto b = a;
      std::swap(b[i], b[j]);
      EXPECT_EQ(vandermonde(b, z), -vandermonde(a, z));
    }
}

TEST(Matrix, MultiplyExample) {
  DenseMatrix p{{Rat(1, 2), Rat(1, 2)}, {Rat(-1, 2), Rat(3, 2)}};
  DenseMatrix ones{{1}, {1}};
  EXPECT_EQ(mat_mul(p, ones), ones);
  EXPECT_THROW(mat_mul(p, DenseMatrix(3, 1)), InvalidInput);
}

TEST(Matrix, IdentityAndAssociativity) {
  std::mt19937_64 gen(1);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = oracle::random_matrix(3, 4, gen);
    auto b = oracle::random_matrix(4, 2, gen);
    auto c = oracle::random_matrix(2, 5, gen);
    EXPECT_EQ(mat_mul(DenseMatrix::identity(3), a), a);
    EXPECT_EQ(mat_mul(a, DenseMatrix::identity(4)), a);
    EXPECT_EQ(mat_mul(mat_mul(a, b), c), mat_mul(a, mat_mul(b, c)));
  }
}

TEST(Matrix, EqualityRequiresShape) {
  EXPECT_FALSE(mat_eq(DenseMatrix(2, 2), DenseMatrix(3, 3)));
  EXPECT_TRUE(mat_eq(DenseMatrix(2, 3), DenseMatrix(2, 3)));
  DenseMatrix a{{1, 2}};
  DenseMatrix b{{1, 3}};
  EXPECT_FALSE(mat_eq(a, b));
}

TEST(Matrix, RankExamples) {
  EXPECT_EQ(mat_rank(DenseMatrix(3, 4)), 0u);
  EXPECT_EQ(mat_rank(DenseMatrix::identity(4)), 4u);
  DenseMatrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  EXPECT_EQ(mat_rank(m), 2u);
}

TEST(Matrix, RankMatchesMinorsAndTranspose) {
  std::mt19937_64 gen(2);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t rows = 2 + static_cast<std::size_t>(trial % 3);
    const std::size_t cols = 2 + static_cast<std::size_t>((trial / 3) % 3);
    auto m = oracle::random_matrix(rows, cols, gen, 2);
    if (trial % 2 == 0) {
      // force a dependent row
      for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) * Rat(trial + 1, 3) - m(1, c);
    }
    EXPECT_EQ(mat_rank(m), oracle::rank_by_minors(m));
    EXPECT_EQ(mat_rank(m), mat_rank(m.transpose()));
  }
}

TEST(Matrix, DeterminantMatchesLeibniz) {
  std::mt19937_64 gen(3);
  for (std::size_t k = 1; k <= 5; ++k) {
    auto m = oracle::random_matrix(k, k, gen);
    EXPECT_EQ(determinant(m), oracle::leibniz_det(m));
  }
}
