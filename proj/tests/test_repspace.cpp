#include <map>
#include <set>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hallq/repspace.hpp"

using namespace hallq;
using namespace hallq::rep;
using quiver::Folded;

namespace {

Context ctx_for(const quiver::QuiverWithAut& q, int p, int e = 1, int N = 0) {
  return make_context(Folded(q), p, e, N);
}

std::vector<std::uint64_t> aut_orders(const OrbitTable& t) {
  std::vector<std::uint64_t> out;
  for (const auto& o : t.orbits) out.push_back(o.aut.get_ui());
  return out;
}

// Orbits by applying every group element to every point.
std::vector<std::uint32_t> brute_force_labels(const Context& ctx, const DimVector& nu) {
  Layout lay(ctx, nu);
  const auto group = all_group_elements(ctx, nu);
  std::vector<std::int64_t> label(lay.num_points(), -1);
  std::uint32_t next = 0;
  for (std::uint64_t code = 0; code < lay.num_points(); ++code) {
    if (label[code] >= 0) continue;
    const auto x = lay.decode(code);
    for (const auto& g : group) label[lay.encode(act(ctx, g, x))] = next;
    ++next;
  }
  return {label.begin(), label.end()};
}

}  // namespace

TEST(Layout, EncodeDecodeRoundTrip) {
  auto ctx = ctx_for(fixtures::a3_fold(), 2);
  const auto& Q = *ctx.quiver;
  Layout lay(ctx, Q.dim({1, 2, 1}));
  EXPECT_EQ(lay.num_points(), 16u);  // one 2 x 1 block over F_4
  for (std::uint64_t c = 0; c < lay.num_points(); ++c) EXPECT_EQ(lay.encode(lay.decode(c)), c);
  EXPECT_EQ(lay.encode(lay.zero_point()), 0u);
  EXPECT_EQ(enumerate_points(lay).size(), 16u);
}

TEST(Layout, SpaceTooLarge) {
  auto ctx = ctx_for(fixtures::kronecker(), 2);
  EXPECT_HALLQ_ERROR(Layout(ctx, ctx.quiver->dim({3, 3}), 1000), ErrorKind::SpaceTooLarge);
}

TEST(Context, AmbientDegreeMustBeMultiple) {
  EXPECT_HALLQ_ERROR(ctx_for(fixtures::a3_fold(), 2, 1, 3), ErrorKind::DimensionMismatch);
  EXPECT_EQ(ctx_for(fixtures::a3_fold(), 2, 1, 4).field->N(), 4);
}

TEST(Groups, Orders) {
  auto ctx = ctx_for(fixtures::a2(), 2);
  EXPECT_EQ(group_order(ctx, ctx.quiver->dim({2, 0})), 6);
  EXPECT_EQ(group_order(ctx, ctx.quiver->dim({2, 1})), 6);
  auto ctx3 = ctx_for(fixtures::a2(), 3);
  EXPECT_EQ(group_order(ctx3, ctx3.quiver->dim({2, 1})), 96);
  auto fold = ctx_for(fixtures::a3_fold(), 2);
  EXPECT_EQ(group_order(fold, fold.quiver->dim({1, 1, 1})), 3);
  EXPECT_EQ(group_order(fold, fold.quiver->dim({2, 0, 2})), 180);  // |GL_2(F_4)|
  EXPECT_EQ(all_group_elements(fold, fold.quiver->dim({1, 2, 1})).size(), 18u);
}

TEST(Groups, ActionExampleOverF3) {
  auto ctx = ctx_for(fixtures::a2(), 3);
  const auto nu = ctx.quiver->dim({1, 1});
  Mat g1(1, 1), g2(1, 1), x(1, 1);
  g1.a = {ctx.field->from_int(2)};
  g2.a = {ctx.field->from_int(1)};
  x.a = {ctx.field->from_int(1)};
  const auto y = act(ctx, {g1, g2}, {x});
  ASSERT_EQ(y.size(), 1u);
  EXPECT_EQ(y[0].a[0], ctx.field->from_int(2));
  // The action is a group action.
  const auto gens = generators(ctx, nu);
  for (const auto& g : gens)
    for (const auto& h : gens) EXPECT_EQ(act(ctx, group_multiply(ctx, g, h), {x}), act(ctx, g, act(ctx, h, {x})));
}

TEST(Orbits, KnownCounts) {
  {
    auto ctx = ctx_for(fixtures::a2(), 2);
    const auto t = orbit_table(ctx, ctx.quiver->dim({1, 1}));
    EXPECT_EQ(t.num_orbits(), 2u);
    EXPECT_EQ(aut_orders(t), (std::vector<std::uint64_t>{1, 1}));
  }
  {
    auto ctx = ctx_for(fixtures::a2(), 3);
    const auto t = orbit_table(ctx, ctx.quiver->dim({1, 1}));
    EXPECT_EQ(t.num_orbits(), 2u);
    EXPECT_EQ(aut_orders(t), (std::vector<std::uint64_t>{4, 2}));
  }
  {
    auto ctx = ctx_for(fixtures::kronecker(), 2);
    EXPECT_EQ(orbit_table(ctx, ctx.quiver->dim({1, 1})).num_orbits(), 4u);
    // Pairs of vectors in F_2^2 up to GL_2: zero, three collinear types, one independent.
    EXPECT_EQ(orbit_table(ctx, ctx.quiver->dim({1, 2})).num_orbits(), 5u);
  }
  {
    auto ctx = ctx_for(fixtures::a3_fold(), 2);
    const auto t = orbit_table(ctx, ctx.quiver->dim({1, 1, 1}));
    EXPECT_EQ(t.num_orbits(), 2u);
    EXPECT_EQ(aut_orders(t), (std::vector<std::uint64_t>{3, 1}));
  }
}

TEST(Orbits, MatchBruteForce) {
  const std::vector<std::tuple<quiver::QuiverWithAut, int, std::vector<int>>> cases{
      {fixtures::a2(), 2, {2, 1}},     {fixtures::a2(), 3, {1, 2}},        {fixtures::kronecker(), 2, {1, 2}},
      {fixtures::kronecker(), 2, {2, 1}}, {fixtures::a3_fold(), 2, {1, 2, 1}}, {fixtures::a3(), 2, {1, 1, 1}}};
  for (const auto& [q, p, v] : cases) {
    auto ctx = ctx_for(q, p);
    const auto nu = ctx.quiver->dim(v);
    const auto expected = brute_force_labels(ctx, nu);
    EXPECT_EQ(orbit_table(ctx, nu, Exec::Serial).label, expected);
    EXPECT_EQ(orbit_table(ctx, nu, Exec::Parallel).label, expected);
  }
}

TEST(Orbits, StabilizerAndPartition) {
  auto ctx = ctx_for(fixtures::kronecker(), 2);
  for (const auto& nu : ctx.quiver->up_to_total(4)) {
    const auto t = orbit_table(ctx, nu);
    std::uint64_t total = 0;
    for (const auto& o : t.orbits) {
      total += o.size;
      EXPECT_EQ(o.aut * static_cast<unsigned long>(o.size), t.group_order);
      EXPECT_EQ(t.label[o.rep_code], static_cast<std::uint32_t>(&o - t.orbits.data()));
    }
    EXPECT_EQ(total, t.label.size());
  }
}

TEST(Orbits, TrivialAutomorphismIgnoresAmbientDegree) {
  auto small = ctx_for(fixtures::a3(), 2, 1, 1);
  auto big = ctx_for(fixtures::a3(), 2, 1, 2);
  for (const auto& nu : small.quiver->up_to_total(4)) {
    const auto a = orbit_table(small, nu), b = orbit_table(big, nu);
    EXPECT_EQ(a.num_orbits(), b.num_orbits()) << nu.str();
    EXPECT_EQ(aut_orders(a), aut_orders(b)) << nu.str();
    EXPECT_EQ(a.group_order, b.group_order);
  }
}

TEST(Orbits, TableFromLabelsRebuildsInfo) {
  auto ctx = ctx_for(fixtures::a2(), 3);
  const auto nu = ctx.quiver->dim({2, 1});
  const auto t = orbit_table(ctx, nu);
  const auto r = table_from_labels(ctx, nu, t.label);
  ASSERT_EQ(r.num_orbits(), t.num_orbits());
  for (std::size_t i = 0; i < t.num_orbits(); ++i) {
    EXPECT_EQ(r.orbits[i].rep_code, t.orbits[i].rep_code);
    EXPECT_EQ(r.orbits[i].size, t.orbits[i].size);
    EXPECT_EQ(r.orbits[i].aut, t.orbits[i].aut);
  }
}

TEST(Points, FrobeniusClosureFixesEveryPoint) {
  auto ctx = ctx_for(fixtures::a3_fold(), 2);
  Layout lay(ctx, ctx.quiver->dim({1, 1, 1}));
  for (const auto& x : enumerate_points(lay)) EXPECT_EQ(frobenius_closure(ctx, x), x);
}

TEST(Hom, Dimensions) {
  auto ctx = ctx_for(fixtures::a3_fold(), 2);
  const auto& Q = *ctx.quiver;
  const auto s13 = Q.simple(0), s2 = Q.simple(1);
  const Point zero13 = Layout(ctx, s13).zero_point(), zero2 = Layout(ctx, s2).zero_point();
  EXPECT_EQ(hom_dim(ctx, s13, zero13, s13, zero13), 2);
  EXPECT_EQ(hom_dim(ctx, s2, zero2, s2, zero2), 1);
  EXPECT_EQ(hom_dim(ctx, s13, zero13, s2, zero2), 0);
  EXPECT_EQ(ext_dim(ctx, s13, zero13, s2, zero2), 2);
  EXPECT_EQ(ext_dim(ctx, s2, zero2, s13, zero13), 0);

  auto a2 = ctx_for(fixtures::a2(), 3);
  const auto nu = a2.quiver->dim({1, 1});
  Layout lay(a2, nu);
  const auto P = lay.decode(1), SS = lay.zero_point();
  EXPECT_EQ(hom_dim(a2, nu, P, nu, P), 1);
  EXPECT_EQ(hom_dim(a2, nu, SS, nu, SS), 2);
  EXPECT_EQ(hom_dim(a2, nu, P, nu, SS), 1);
  EXPECT_EQ(ext_dim(a2, nu, P, nu, P), 0);
}
