#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hallq/hall.hpp"

using namespace hallq;
using namespace hallq::hall;

namespace {

std::vector<std::uint64_t> g_row(HallTable const& t, std::uint32_t M, std::uint32_t N) {
  std::vector<std::uint64_t> out;
  for (std::uint32_t L = 0; L < t.counts.size(); ++L) out.push_back(t.g(M, N, L));
  return out;
}

}  // namespace

TEST(HallNumbers, A2Simples) {
  auto wb = fixtures::bench(fixtures::a2(), 2);
  const auto& Q = wb->quiver();
  const auto s1 = Q.dim({1, 0}), s2 = Q.dim({0, 1});
  EXPECT_EQ(g_row(wb->hall(s1, s2), 0, 0), (std::vector<std::uint64_t>{1, 1}));
  EXPECT_EQ(g_row(wb->hall(s2, s1), 0, 0), (std::vector<std::uint64_t>{1, 0}));
  EXPECT_EQ(wb->hall(s1, s2).stable_subspaces(1), 1u);
}

TEST(HallNumbers, SemisimpleCountsAreProjectiveLines) {
  for (int p : {2, 3}) {
    auto wb = fixtures::bench(fixtures::a2(), p);
    const auto s1 = wb->quiver().dim({1, 0});
    EXPECT_EQ(g_row(wb->hall(s1, s1), 0, 0), (std::vector<std::uint64_t>{static_cast<std::uint64_t>(p + 1)}));
  }
  auto wb = fixtures::bench(fixtures::a3_fold(), 2);
  const auto s13 = wb->quiver().simple(0);
  EXPECT_EQ(g_row(wb->hall(s13, s13), 0, 0), (std::vector<std::uint64_t>{5}));
}

TEST(HallNumbers, Kronecker) {
  auto wb = fixtures::bench(fixtures::kronecker(), 2);
  const auto s1 = wb->quiver().dim({1, 0}), s2 = wb->quiver().dim({0, 1});
  EXPECT_EQ(g_row(wb->hall(s1, s2), 0, 0), (std::vector<std::uint64_t>{1, 1, 1, 1}));
  EXPECT_EQ(g_row(wb->hall(s2, s1), 0, 0), (std::vector<std::uint64_t>{1, 0, 0, 0}));
}

TEST(HallNumbers, PointwiseAgreesWithTable) {
  auto wb = fixtures::bench(fixtures::a3_fold(), 2);
  for (const auto& a : wb->quiver().up_to_total(2))
    for (const auto& b : wb->quiver().up_to_total(2))
      for (const auto& M : wb->classes(a))
        for (const auto& N : wb->classes(b))
          for (const auto& L : wb->classes(a + b)) {
            EXPECT_EQ(hall_number(*wb, M, N, L), wb->hall(a, b).g(M.orbit, N.orbit, L.orbit));
            EXPECT_EQ(flag_count(*wb, M, N, L),
                      mpz_class(static_cast<unsigned long>(hall_number(*wb, M, N, L))) * wb->orbits(a).group_order *
                          wb->orbits(b).group_order);
          }
  EXPECT_HALLQ_ERROR(hall_number(*wb, wb->semisimple(wb->quiver().simple(0)), wb->zero_class(), wb->zero_class()),
                     ErrorKind::GradingMismatch);
}

TEST(Submodules, CountMatchesStableSubspaces) {
  auto wb = fixtures::bench(fixtures::a2(), 3);
  const auto& Q = wb->quiver();
  const auto nu = Q.dim({2, 1});
  for (const auto& sub : Q.below(nu))
    for (const auto& L : wb->classes(nu)) {
      const auto subs = submodules(*wb, L, sub);
      EXPECT_EQ(subs.size(), wb->hall(nu - sub, sub).stable_subspaces(L.orbit));
      for (const auto& s : subs) {
        EXPECT_EQ(s.sub.dim, sub);
        EXPECT_EQ(s.quotient.dim, nu - sub);
      }
    }
}

TEST(Submodules, HistogramIsGroupInvariant) {
  auto wb = fixtures::bench(fixtures::a3_fold(), 2);
  const auto& ctx = wb->ctx();
  const auto nu = wb->quiver().dim({1, 2, 1});
  const auto& lay = wb->layout(nu);
  const auto group = rep::all_group_elements(ctx, nu);
  std::mt19937_64 rng(17);
  for (const auto& sub : wb->quiver().below(nu))
    for (int t = 0; t < 12; ++t) {
      const auto x = lay.decode(rng() % lay.num_points());
      const auto& g = group[rng() % group.size()];
      EXPECT_EQ(wb->subspace_histogram(nu, x, sub), wb->subspace_histogram(nu, rep::act(ctx, g, x), sub));
    }
}

TEST(ExtCounts, A2OverF3) {
  auto wb = fixtures::bench(fixtures::a2(), 3);
  const auto S1 = wb->semisimple(wb->quiver().dim({1, 0}));
  const auto S2 = wb->semisimple(wb->quiver().dim({0, 1}));
  const auto e = ext_counts(*wb, S1, S2);
  EXPECT_EQ(e.fiber_size, 3);
  EXPECT_EQ(e.fiber_count, (std::vector<std::uint64_t>{1, 2}));
  EXPECT_EQ(e.hom, 0);
  EXPECT_EQ(e.ext, 1);
  ASSERT_TRUE(e.ext_from_fiber.has_value());
  EXPECT_EQ(*e.ext_from_fiber, 1);
  EXPECT_EQ(e.ext_L, (std::vector<mpz_class>{1, 2}));
  const auto back = ext_counts(*wb, S2, S1);
  EXPECT_EQ(back.fiber_size, 1);
  EXPECT_EQ(back.ext, 0);
}

TEST(Identities, RiedtmannPengAndGreenOnA2) {
  auto wb = fixtures::bench(fixtures::a2(), 3);
  const auto& Q = wb->quiver();
  const auto S1 = wb->semisimple(Q.dim({1, 0}));
  const auto S2 = wb->semisimple(Q.dim({0, 1}));
  const ModuleClass P{Q.dim({1, 1}), 1};
  const auto rp = riedtmann_peng(*wb, S1, S2, P);
  EXPECT_EQ(rp.lhs, 1);
  EXPECT_EQ(rp.rhs, 1);
  EXPECT_TRUE(riedtmann_peng_check(*wb, S2, S1, P));
  EXPECT_TRUE(green_raw_check(*wb, S1, S2, S1, S2));
  EXPECT_TRUE(green_raw_check(*wb, S1, S2, S2, S1));
  EXPECT_HALLQ_ERROR(green_raw(*wb, S1, S2, S1, S1), ErrorKind::GradingMismatch);
}

TEST(Identities, GreenSweepKronecker) {
  auto wb = fixtures::bench(fixtures::kronecker(), 2);
  const auto& Q = wb->quiver();
  std::size_t n = 0;
  for (const auto& a : Q.up_to_total(2))
    for (const auto& b : Q.up_to_total(2))
      for (const auto& ap : Q.below(a + b))
        for (const auto& M : wb->classes(a))
          for (const auto& N : wb->classes(b))
            for (const auto& Mp : wb->classes(ap))
              for (const auto& Np : wb->classes(a + b - ap)) {
                ++n;
                EXPECT_TRUE(green_raw_check(*wb, M, N, Mp, Np));
              }
  EXPECT_GT(n, 100u);
}

TEST(Workbench, StrictModeRequiresBuiltTables) {
  Options opts;
  opts.lazy = false;
  auto wb = fixtures::bench(fixtures::a2(), 2, 1, opts);
  const auto nu = wb->quiver().dim({1, 1});
  EXPECT_HALLQ_ERROR(wb->orbits(nu), ErrorKind::MissingOrbitTable);
  wb->build_orbits(nu);
  EXPECT_EQ(wb->orbits(nu).num_orbits(), 2u);
  const auto s1 = wb->quiver().dim({1, 0}), s2 = wb->quiver().dim({0, 1});
  EXPECT_HALLQ_ERROR(wb->hall(s1, s2), ErrorKind::MissingHallTable);
}

TEST(Workbench, SerialAndParallelTablesAgree) {
  Options serial;
  serial.exec = Exec::Serial;
  auto a = fixtures::bench(fixtures::a3_fold(), 2, 1, serial);
  auto b = fixtures::bench(fixtures::a3_fold(), 2);
  for (const auto& x : a->quiver().up_to_total(3))
    for (const auto& y : a->quiver().up_to_total(3)) {
      if ((x + y).total() > 3) continue;
      EXPECT_EQ(a->hall(x, y).counts, b->hall(x, y).counts);
      for (const auto& M : a->classes(x))
        for (const auto& N : a->classes(y)) EXPECT_EQ(a->fiber_histogram(M, N), b->fiber_histogram(M, N));
    }
}
