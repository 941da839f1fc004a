#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "hallq/hall.hpp"

namespace hallq::algebra {

using hall::ModuleClass;
using hall::Workbench;

// a + b*v in Q[v]/(v^2 - q), v read as -sqrt(q). For square q the v part is
// folded into a, so b is always zero there and equality is plain equality.
class HallCoeff {
 public:
  explicit HallCoeff(std::int64_t q = 1, mpq_class a = 0, mpq_class b = 0);

  static HallCoeff v_power(std::int64_t q, std::int64_t n);

  std::int64_t q() const noexcept { return q_; }
  const mpq_class& a() const noexcept { return a_; }
  const mpq_class& b() const noexcept { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  // "a + b*v", rationals in lowest terms.
  std::string str() const;

  HallCoeff& operator+=(const HallCoeff& o);
  HallCoeff& operator-=(const HallCoeff& o);
  HallCoeff& operator*=(const HallCoeff& o);
  friend HallCoeff operator+(HallCoeff x, const HallCoeff& y) { return x += y; }
  friend HallCoeff operator-(HallCoeff x, const HallCoeff& y) { return x -= y; }
  friend HallCoeff operator*(HallCoeff x, const HallCoeff& y) { return x *= y; }
  friend HallCoeff operator-(HallCoeff x) { return HallCoeff(x.q_, -x.a_, -x.b_); }
  friend HallCoeff operator*(HallCoeff x, const mpq_class& r) { return HallCoeff(x.q_, x.a_ * r, x.b_ * r); }
  friend bool operator==(const HallCoeff& x, const HallCoeff& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

 private:
  void check(const HallCoeff& o) const;
  void fold();
  std::int64_t q_;
  std::int64_t root_ = 0;  // sqrt(q) when q is a perfect square
  mpq_class a_, b_;
};

// Finitely supported combination of basis elements u_[M]; zero terms are
// never stored.
class HallElement {
 public:
  explicit HallElement(std::int64_t q) : q_(q) {}
  static HallElement basis(std::int64_t q, const ModuleClass& M);

  std::int64_t q() const noexcept { return q_; }
  const std::map<ModuleClass, HallCoeff>& terms() const noexcept { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  HallCoeff coeff(const ModuleClass& M) const;
  void add(const ModuleClass& M, const HallCoeff& c);

  HallElement& operator+=(const HallElement& o);
  friend HallElement operator+(HallElement x, const HallElement& y) { return x += y; }
  friend HallElement operator*(const HallCoeff& c, const HallElement& x);
  friend bool operator==(const HallElement&, const HallElement&) = default;

 private:
  std::int64_t q_;
  std::map<ModuleClass, HallCoeff> terms_;
};

class TensorElement {
 public:
  using Key = std::pair<ModuleClass, ModuleClass>;
  explicit TensorElement(std::int64_t q) : q_(q) {}
  static TensorElement basis(std::int64_t q, const ModuleClass& M, const ModuleClass& N);

  std::int64_t q() const noexcept { return q_; }
  const std::map<Key, HallCoeff>& terms() const noexcept { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  HallCoeff coeff(const ModuleClass& M, const ModuleClass& N) const;
  void add(const ModuleClass& M, const ModuleClass& N, const HallCoeff& c);

  TensorElement& operator+=(const TensorElement& o);
  friend bool operator==(const TensorElement&, const TensorElement&) = default;

 private:
  std::int64_t q_;
  std::map<Key, HallCoeff> terms_;
};

HallElement multiply(Workbench& wb, const HallElement& u, const HallElement& w);
TensorElement comultiply(Workbench& wb, const HallElement& u);
// (u_M1 x u_M2)(u_N1 x u_N2) = v^{(M2, N1)} (u_M1 u_N1) x (u_M2 u_N2)
TensorElement tensor_multiply(Workbench& wb, const TensorElement& s, const TensorElement& t);
// (epsilon x id) and (id x epsilon), epsilon(u_M) = delta_{M,0}.
HallElement counit_left(const TensorElement& t);
HallElement counit_right(const TensorElement& t);

struct BialgebraSides {
  TensorElement lhs;  // Delta(u_M u_N)
  TensorElement rhs;  // Delta(u_M) Delta(u_N)
  bool holds() const { return lhs == rhs; }
};
BialgebraSides bialgebra(Workbench& wb, const ModuleClass& M, const ModuleClass& N);
bool bialgebra_check(Workbench& wb, const ModuleClass& M, const ModuleClass& N);

// Symmetric Gaussian binomial as a Laurent polynomial in t: exponent -> coefficient.
std::map<int, mpz_class> qbinom_laurent(int n, int k);
// The same evaluated at t = v^d.
HallCoeff qbinom(std::int64_t q, int n, int k, int d);

struct SerreResult {
  int c = 0;          // Cartan entry 2 (i, j) / (i, i)
  HallElement value;  // the Serre combination, zero when the relation holds
  bool holds() const { return value.is_zero(); }
};
// Throws NonIntegerCartan, DimensionMismatch for i == j.
SerreResult serre(Workbench& wb, int i_orbit, int j_orbit);
bool serre_check(Workbench& wb, int i_orbit, int j_orbit);

}  // namespace hallq::algebra
