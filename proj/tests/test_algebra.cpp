#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hallq/algebra.hpp"

using namespace hallq;
using namespace hallq::algebra;
using hall::ModuleClass;

namespace {

std::vector<ModuleClass> all_classes(hall::Workbench& wb, int D) {
  std::vector<ModuleClass> out;
  for (const auto& nu : wb.quiver().up_to_total(D))
    for (const auto& M : wb.classes(nu)) out.push_back(M);
  return out;
}

// (Delta x 1) Delta and (1 x Delta) Delta as maps on triples.
using Triple = std::map<std::tuple<ModuleClass, ModuleClass, ModuleClass>, HallCoeff>;

void add(Triple& t, const ModuleClass& a, const ModuleClass& b, const ModuleClass& c, const HallCoeff& x) {
  auto [it, fresh] = t.try_emplace({a, b, c}, x);
  if (!fresh) it->second += x;
}

void drop_zeros(Triple& t) {
  for (auto it = t.begin(); it != t.end();) it = it->second.is_zero() ? t.erase(it) : std::next(it);
}

}  // namespace

TEST(HallCoeff, Arithmetic) {
  const HallCoeff v = HallCoeff::v_power(2, 1);
  EXPECT_EQ(v * v, HallCoeff(2, 2));
  EXPECT_EQ(HallCoeff::v_power(2, -1) * v, HallCoeff(2, 1));
  EXPECT_EQ(HallCoeff::v_power(2, -1), HallCoeff(2, 0, mpq_class(1, 2)));
  EXPECT_EQ(HallCoeff::v_power(3, 3), HallCoeff(3, 0, 3));
  EXPECT_EQ(HallCoeff::v_power(3, -2), HallCoeff(3, mpq_class(1, 3)));
  EXPECT_EQ(HallCoeff(2, mpq_class(2, 4)).str(), "1/2 + 0*v");
  EXPECT_EQ((HallCoeff(2, 1, 1) - HallCoeff(2, 1, 1)).is_zero(), true);
  EXPECT_EQ(-HallCoeff(5, 1, -2), HallCoeff(5, -1, 2));
}

TEST(HallCoeff, SquareQFoldsV) {
  // v = -sqrt(4) = -2.
  EXPECT_EQ(HallCoeff::v_power(4, 1), HallCoeff(4, -2));
  EXPECT_EQ(HallCoeff::v_power(4, -1), HallCoeff(4, mpq_class(-1, 2)));
  EXPECT_EQ(HallCoeff::v_power(9, 3), HallCoeff(9, -27));
  EXPECT_TRUE(HallCoeff::v_power(4, 5).b() == 0);
}

TEST(HallCoeff, MixingFieldsThrows) {
  EXPECT_HALLQ_ERROR(HallCoeff(2, 1) + HallCoeff(3, 1), ErrorKind::DimensionMismatch);
}

TEST(Multiply, A2Simples) {
  auto wb = fixtures::bench(fixtures::a2(), 2);
  const auto& Q = wb->quiver();
  const auto S1 = wb->semisimple(Q.dim({1, 0})), S2 = wb->semisimple(Q.dim({0, 1}));
  const ModuleClass SS{Q.dim({1, 1}), 0}, P{Q.dim({1, 1}), 1};
  const auto p = multiply(*wb, HallElement::basis(2, S1), HallElement::basis(2, S2));
  const HallCoeff vinv = HallCoeff::v_power(2, -1);
  EXPECT_EQ(p.coeff(SS), vinv);
  EXPECT_EQ(p.coeff(P), vinv);
  EXPECT_EQ(p.coeff(SS).str(), "0 + 1/2*v");
  const auto r = multiply(*wb, HallElement::basis(2, S2), HallElement::basis(2, S1));
  EXPECT_EQ(r.terms().size(), 1u);
  EXPECT_EQ(r.coeff(SS), HallCoeff(2, 1));
}

TEST(Multiply, UnitAndAssociativity) {
  for (auto [q, p] : {std::pair{fixtures::a2(), 3}, std::pair{fixtures::a3_fold(), 2}, std::pair{fixtures::kronecker(), 2}}) {
    auto wb = fixtures::bench(q, p);
    const std::int64_t Q = wb->q();
    const auto cls = all_classes(*wb, 2);
    const auto one = HallElement::basis(Q, wb->zero_class());
    for (const auto& a : cls) {
      const auto ua = HallElement::basis(Q, a);
      EXPECT_EQ(multiply(*wb, one, ua), ua);
      EXPECT_EQ(multiply(*wb, ua, one), ua);
      for (const auto& b : cls)
        for (const auto& c : cls) {
          if ((a.dim + b.dim + c.dim).total() > 3) continue;
          const auto ub = HallElement::basis(Q, b), uc = HallElement::basis(Q, c);
          EXPECT_EQ(multiply(*wb, multiply(*wb, ua, ub), uc), multiply(*wb, ua, multiply(*wb, ub, uc)));
        }
    }
  }
}

TEST(Comultiply, CounitAndCoassociativity) {
  auto wb = fixtures::bench(fixtures::a2(), 2);
  const std::int64_t q = wb->q();
  for (const auto& L : all_classes(*wb, 3)) {
    const auto uL = HallElement::basis(q, L);
    const auto d = comultiply(*wb, uL);
    EXPECT_EQ(counit_left(d), uL);
    EXPECT_EQ(counit_right(d), uL);

    Triple left, right;
    for (const auto& [k, c] : d.terms()) {
      const auto first = comultiply(*wb, HallElement::basis(q, k.first));
      const auto second = comultiply(*wb, HallElement::basis(q, k.second));
      for (const auto& [k2, c2] : first.terms()) add(left, k2.first, k2.second, k.second, c * c2);
      for (const auto& [k2, c2] : second.terms()) add(right, k.first, k2.first, k2.second, c * c2);
    }
    drop_zeros(left);
    drop_zeros(right);
    EXPECT_EQ(left, right) << L.dim.str();
  }
}

TEST(Bialgebra, HoldsOnA2AndA3Fold) {
  for (auto [q, p] : {std::pair{fixtures::a2(), 2}, std::pair{fixtures::a3_fold(), 2}}) {
    auto wb = fixtures::bench(q, p);
    const auto cls = all_classes(*wb, 3);
    for (const auto& M : cls)
      for (const auto& N : cls)
        if ((M.dim + N.dim).total() <= 3) {
          EXPECT_TRUE(bialgebra_check(*wb, M, N));
        }
  }
}

TEST(QBinom, LaurentPolynomials) {
  EXPECT_EQ(qbinom_laurent(2, 1), (std::map<int, mpz_class>{{-1, 1}, {1, 1}}));
  EXPECT_EQ(qbinom_laurent(3, 1), (std::map<int, mpz_class>{{-2, 1}, {0, 1}, {2, 1}}));
  EXPECT_EQ(qbinom_laurent(4, 2), (std::map<int, mpz_class>{{-4, 1}, {-2, 1}, {0, 2}, {2, 1}, {4, 1}}));
  EXPECT_TRUE(qbinom_laurent(2, 3).empty());
  // [2]_{v} at q = 2: v + v^{-1} = v + v/2.
  EXPECT_EQ(qbinom(2, 2, 1, 1), HallCoeff(2, 0, mpq_class(3, 2)));
}

TEST(Serre, CartanEntriesAndVanishing) {
  {
    for (int p : {2, 3}) {
      auto wb = fixtures::bench(fixtures::a2(), p);
      for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 0}}) {
        const auto r = serre(*wb, i, j);
        EXPECT_EQ(r.c, -1);
        EXPECT_TRUE(r.holds());
      }
    }
  }
  {
    auto wb = fixtures::bench(fixtures::kronecker(), 2);
    EXPECT_EQ(serre(*wb, 0, 1).c, -2);
    EXPECT_TRUE(serre_check(*wb, 0, 1));
    EXPECT_TRUE(serre_check(*wb, 1, 0));
  }
  {
    auto wb = fixtures::bench(fixtures::a3_fold(), 2);
    const auto a = serre(*wb, 0, 1), b = serre(*wb, 1, 0);
    EXPECT_EQ(a.c, -1);
    EXPECT_EQ(b.c, -2);
    EXPECT_TRUE(a.holds());
    EXPECT_TRUE(b.holds());
    EXPECT_HALLQ_ERROR(serre(*wb, 0, 0), ErrorKind::DimensionMismatch);
  }
}

TEST(Serre, WrongExponentDoesNotVanish) {
  // u_1^2 u_2 alone is nonzero, so the vanishing above is not vacuous.
  auto wb = fixtures::bench(fixtures::a2(), 2);
  const auto u1 = HallElement::basis(2, wb->semisimple(wb->quiver().simple(0)));
  const auto u2 = HallElement::basis(2, wb->semisimple(wb->quiver().simple(1)));
  EXPECT_FALSE(multiply(*wb, multiply(*wb, u1, u1), u2).is_zero());
}
