#include <random>

#include <gtest/gtest.h>

#include "hallq/linalg.hpp"

using namespace hallq;
using namespace hallq::linalg;

TEST(Grassmannian, CountsAreGaussianBinomials) {
  auto F2 = gf::Field::make(2, 1, 1);
  EXPECT_EQ(grassmannian(*F2, 1, 4, 2).size(), 35u);
  EXPECT_EQ(grassmannian(*F2, 1, 3, 0).size(), 1u);
  EXPECT_EQ(grassmannian(*F2, 1, 3, 3).size(), 1u);
  auto F3 = gf::Field::make(3, 1, 1);
  EXPECT_EQ(grassmannian(*F3, 1, 3, 1).size(), 13u);
  auto F4 = gf::Field::make(2, 1, 2);
  EXPECT_EQ(grassmannian(*F4, 2, 2, 1).size(), 5u);
  EXPECT_EQ(grassmannian(*F4, 1, 2, 1).size(), 3u);
}

TEST(Grassmannian, BasesAreReducedAndDistinct) {
  auto F = gf::Field::make(3, 1, 1);
  const auto all = grassmannian(*F, 1, 3, 2);
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_EQ(rref(*F, all[i]).basis, all[i]);
    for (std::size_t j = 0; j < i; ++j) EXPECT_NE(all[i], all[j]);
  }
}

TEST(Matrices, InverseAndProducts) {
  auto F = gf::Field::make(2, 2, 1);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<gf::Elem> d(0, 3);
  int invertible = 0;
  for (int t = 0; t < 200; ++t) {
    Mat m(3, 3);
    for (auto& x : m.a) x = d(rng);
    const auto inv = inverse(*F, m);
    const int rank = static_cast<int>(rref(*F, m).pivots.size());
    EXPECT_EQ(inv.has_value(), rank == 3);
    if (inv) {
      ++invertible;
      EXPECT_EQ(multiply(*F, m, *inv), Mat::identity(3));
      EXPECT_EQ(multiply(*F, *inv, m), Mat::identity(3));
    }
  }
  EXPECT_GT(invertible, 0);
}

// |GL_2(F_3)| = (9 - 1)(9 - 3) = 48.
TEST(Matrices, InvertibleCountGL2F3) {
  auto F = gf::Field::make(3, 1, 1);
  int count = 0;
  for (gf::Elem a = 0; a < 3; ++a)
    for (gf::Elem b = 0; b < 3; ++b)
      for (gf::Elem c = 0; c < 3; ++c)
        for (gf::Elem d = 0; d < 3; ++d) {
          Mat m(2, 2);
          m.a = {a, b, c, d};
          count += inverse(*F, m).has_value();
        }
  EXPECT_EQ(count, 48);
}

TEST(Matrices, FrobeniusAndSubfields) {
  auto F = gf::Field::make(2, 1, 2);
  Mat m(1, 2);
  m.a = {F->generator(2), 1};
  EXPECT_FALSE(entries_in_subfield(*F, m, 1));
  EXPECT_TRUE(entries_in_subfield(*F, m, 2));
  EXPECT_EQ(frobenius(*F, frobenius(*F, m, 1), 1), m);
  EXPECT_NE(frobenius(*F, m, 1), m);
}

TEST(RankModP, Examples) {
  EXPECT_EQ(rank_mod_p({{1, 1}, {1, 1}}, 2), 1);
  EXPECT_EQ(rank_mod_p({{1, 2}, {3, 4}}, 2), 1);
  EXPECT_EQ(rank_mod_p({{1, 2}, {3, 4}}, 3), 2);
  EXPECT_EQ(rank_mod_p({{0, 0, 0}}, 5), 0);
  EXPECT_EQ(rank_mod_p({}, 5), 0);
}
