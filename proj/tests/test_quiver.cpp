#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hallq/quiver.hpp"

using namespace hallq;
using namespace hallq::quiver;

TEST(Validate, RejectsLoops) {
  QuiverWithAut q{{"1"}, {{"l", 0, 0}}, {0}, {0}};
  EXPECT_HALLQ_ERROR(validate(q), ErrorKind::HasLoop);
}

TEST(Validate, RejectsNonEquivariantAutomorphism) {
  // a swaps the vertices but fixes the arrow 1 -> 2.
  QuiverWithAut q{{"1", "2"}, {{"h", 0, 1}}, {1, 0}, {0}};
  EXPECT_HALLQ_ERROR(validate(q), ErrorKind::NotEquivariant);
}

TEST(Validate, RejectsArrowsInsideAnOrbit) {
  QuiverWithAut q{{"1", "2"}, {{"h", 0, 1}, {"k", 1, 0}}, {1, 0}, {1, 0}};
  EXPECT_HALLQ_ERROR(validate(q), ErrorKind::NotAdmissible);
}

TEST(Validate, OrbitData) {
  const auto od = validate(fixtures::a3_fold());
  ASSERT_EQ(od.vertex_orbits.size(), 2u);
  EXPECT_EQ(od.vertex_orbits[0].members, (std::vector<int>{0, 2}));
  EXPECT_EQ(od.vertex_orbits[1].members, (std::vector<int>{1}));
  ASSERT_EQ(od.arrow_orbits.size(), 1u);
  EXPECT_EQ(od.N, 2);
  EXPECT_EQ(od.order_n, 2);
}

TEST(DimVectors, InvarianceIsEnforced) {
  Folded Q(fixtures::a3_fold());
  EXPECT_HALLQ_ERROR(Q.dim({1, 0, 0}), ErrorKind::NotInvariant);
  EXPECT_HALLQ_ERROR(Q.dim({1, 0}), ErrorKind::DimensionMismatch);
  EXPECT_EQ(Q.dim({1, 2, 1}).total(), 4);
  EXPECT_EQ(Q.orbit_entries(Q.dim({1, 2, 1})), (std::vector<int>{1, 2}));
  EXPECT_HALLQ_ERROR(Q.dim({0, 1, 0}) - Q.dim({1, 0, 1}), ErrorKind::GradingMismatch);
}

TEST(DimVectors, EnumerationCounts) {
  EXPECT_EQ(Folded(fixtures::a2()).up_to_total(4).size(), 15u);
  // 2 n1 + n2 <= 3
  EXPECT_EQ(Folded(fixtures::a3_fold()).up_to_total(3).size(), 6u);
  Folded Q(fixtures::a2());
  EXPECT_EQ(Q.below(Q.dim({2, 1})).size(), 6u);
}

TEST(EulerForm, SmallExamples) {
  Folded A2(fixtures::a2());
  EXPECT_EQ(euler_form(A2, A2.dim({1, 0}), A2.dim({0, 1})), -1);
  EXPECT_EQ(euler_form(A2, A2.dim({0, 1}), A2.dim({1, 0})), 0);
  EXPECT_EQ(euler_form(A2, A2.dim({1, 1}), A2.dim({1, 1})), 1);
  EXPECT_EQ(symmetric_form(A2, A2.dim({1, 0}), A2.dim({0, 1})), -1);

  Folded K(fixtures::kronecker());
  EXPECT_EQ(euler_form(K, K.dim({1, 0}), K.dim({0, 1})), -2);
  EXPECT_EQ(euler_form(K, K.dim({1, 1}), K.dim({1, 1})), 0);

  Folded F(fixtures::a3_fold());
  const auto s13 = F.simple(0), s2 = F.simple(1);
  EXPECT_EQ(symmetric_form(F, s13, s13), 4);
  EXPECT_EQ(symmetric_form(F, s2, s2), 2);
  EXPECT_EQ(symmetric_form(F, s13, s2), -2);
  EXPECT_EQ(euler_form(F, s13, s2), -2);
  EXPECT_EQ(euler_form(F, s2, s13), 0);
  EXPECT_EQ(diagonal_sum(s13, s13), 2);
  EXPECT_EQ(arrow_sum(F, s13, s2), 2);
}

TEST(EulerForm, Bilinear) {
  const auto q = fixtures::a3_fold();
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-3, 3);
  auto vec = [&] { return std::vector<int>{d(rng), d(rng), d(rng)}; };
  for (int t = 0; t < 200; ++t) {
    auto a = vec(), b = vec(), c = vec();
    std::vector<int> ab(3);
    for (int i = 0; i < 3; ++i) ab[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)];
    EXPECT_EQ(euler_form(q, ab, c), euler_form(q, a, c) + euler_form(q, b, c));
    EXPECT_EQ(euler_form(q, c, ab), euler_form(q, c, a) + euler_form(q, c, b));
  }
}

TEST(EulerForm, InvariantUnderAutomorphism) {
  Folded Q(fixtures::a3_fold());
  for (int a0 = 0; a0 < 3; ++a0)
    for (int a1 = 0; a1 < 3; ++a1)
      for (int a2 = 0; a2 < 3; ++a2)
        for (int b0 = 0; b0 < 3; ++b0)
          for (int b1 = 0; b1 < 3; ++b1)
            for (int b2 = 0; b2 < 3; ++b2) {
              const std::vector<int> a{a0, a1, a2}, b{b0, b1, b2};
              EXPECT_EQ(euler_form(Q.quiver(), Q.act(a), Q.act(b)), euler_form(Q.quiver(), a, b));
            }
}

TEST(Lambda, ZeroVectors) {
  Folded Q(fixtures::a2());
  const auto z = Q.zero();
  const auto l = enumerate_lambda(Q, z, z, z, z);
  ASSERT_EQ(l.size(), 1u);
  EXPECT_TRUE(shift_identity_check(Q, z, z, z, z, l[0]));
}

TEST(Lambda, A2Example) {
  Folded Q(fixtures::a2());
  const auto a = Q.dim({1, 0}), b = Q.dim({0, 1}), z = Q.zero();
  const auto l = enumerate_lambda(Q, a, b, a, b);
  ASSERT_EQ(l.size(), 1u);
  EXPECT_EQ(l[0], (Lambda{a, z, z, b}));
  EXPECT_TRUE(shift_identity_check(Q, a, b, a, b, l[0]));
}

TEST(Lambda, RejectsUnbalancedGradings) {
  Folded Q(fixtures::a2());
  EXPECT_HALLQ_ERROR(enumerate_lambda(Q, Q.dim({1, 0}), Q.zero(), Q.dim({0, 1}), Q.zero()), ErrorKind::GradingMismatch);
}

// Brute force over all quadruples of invariant vectors within the bound.
TEST(Lambda, CountMatchesBruteForce) {
  for (const auto& q : {fixtures::a2(), fixtures::a3_fold(), fixtures::kronecker()}) {
    Folded Q(q);
    const auto dims = Q.up_to_total(3);
    for (const auto& a : dims)
      for (const auto& b : dims)
        for (const auto& ap : dims) {
          if ((a + b).total() > 3 || !(ap <= a + b)) continue;
          const auto bp = a + b - ap;
          std::size_t brute = 0;
          for (const auto& a1 : dims)
            for (const auto& a2 : dims)
              for (const auto& b1 : dims)
                for (const auto& b2 : dims)
                  brute += a1 + a2 == a && b1 + b2 == b && a1 + b1 == ap && a2 + b2 == bp;
          const auto l = enumerate_lambda(Q, a, b, ap, bp);
          EXPECT_EQ(l.size(), brute);
          for (const auto& x : l) {
            EXPECT_EQ(x.a1 + x.a2, a);
            EXPECT_EQ(x.b1 + x.b2, b);
            EXPECT_EQ(x.a1 + x.b1, ap);
            EXPECT_EQ(x.a2 + x.b2, bp);
          }
        }
  }
}

TEST(Shift, RandomA3FoldTuples) {
  Folded Q(fixtures::a3_fold());
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(0, 3);
  std::size_t lambdas = 0;
  for (int t = 0; t < 200; ++t) {
    const auto total = Q.dim_from_orbits({d(rng), d(rng)});
    const auto below = Q.below(total);
    std::uniform_int_distribution<std::size_t> pick(0, below.size() - 1);
    const auto a = below[pick(rng)], ap = below[pick(rng)];
    const auto b = total - a, bp = total - ap;
    for (const auto& l : enumerate_lambda(Q, a, b, ap, bp)) {
      ++lambdas;
      const auto t2 = shift_terms(Q, a, b, ap, bp, l);
      EXPECT_EQ(t2.M - 2 * t2.r_prime, t2.N - t2.sym_a2_b1) << a.str() << " " << b.str() << " " << ap.str();
    }
  }
  EXPECT_GE(lambdas, 200u);
}
