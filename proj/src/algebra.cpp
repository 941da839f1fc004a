#include "hallq/algebra.hpp"

#include <cmath>
#include <string>

#include "hallq/error.hpp"

namespace hallq::algebra {

namespace {

std::int64_t exact_root(std::int64_t q) {
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(q))));
  for (std::int64_t c = r > 1 ? r - 1 : 0; c <= r + 1; ++c)
    if (c * c == q) return c;
  return 0;
}

}  // namespace

HallCoeff::HallCoeff(std::int64_t q, mpq_class a, mpq_class b) : q_(q), root_(exact_root(q)), a_(std::move(a)), b_(std::move(b)) {
  fold();
}

void HallCoeff::fold() {
  a_.canonicalize();
  b_.canonicalize();
  if (root_ != 0 && b_ != 0) {
    a_ -= b_ * root_;
    b_ = 0;
  }
}

void HallCoeff::check(const HallCoeff& o) const {
  if (o.q_ != q_) throw Error(ErrorKind::DimensionMismatch, "coefficients over different q");
}

HallCoeff HallCoeff::v_power(std::int64_t q, std::int64_t n) {
  const std::int64_t m = n < 0 ? -n : n;
  mpz_class half;
  mpz_ui_pow_ui(half.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(m / 2));
  if (n >= 0) return m % 2 == 0 ? HallCoeff(q, half) : HallCoeff(q, 0, half);
  // v^{-m} = q^{-m/2} for even m, q^{-(m+1)/2} v for odd m.
  if (m % 2 == 0) return HallCoeff(q, mpq_class(1, half));
  return HallCoeff(q, 0, mpq_class(1, half * q));
}

std::string HallCoeff::str() const { return a_.get_str() + " + " + b_.get_str() + "*v"; }

HallCoeff& HallCoeff::operator+=(const HallCoeff& o) {
  check(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

HallCoeff& HallCoeff::operator-=(const HallCoeff& o) {
  check(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

HallCoeff& HallCoeff::operator*=(const HallCoeff& o) {
  check(o);
  mpq_class a = a_ * o.a_ + b_ * o.b_ * q_;
  mpq_class b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  fold();
  return *this;
}

HallElement HallElement::basis(std::int64_t q, const ModuleClass& M) {
  HallElement e(q);
  e.add(M, HallCoeff(q, 1));
  return e;
}

HallCoeff HallElement::coeff(const ModuleClass& M) const {
  auto it = terms_.find(M);
  return it == terms_.end() ? HallCoeff(q_) : it->second;
}

void HallElement::add(const ModuleClass& M, const HallCoeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(M, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

HallElement& HallElement::operator+=(const HallElement& o) {
  for (const auto& [M, c] : o.terms_) add(M, c);
  return *this;
}

HallElement operator*(const HallCoeff& c, const HallElement& x) {
  HallElement out(x.q_);
  for (const auto& [M, d] : x.terms_) out.add(M, c * d);
  return out;
}

TensorElement TensorElement::basis(std::int64_t q, const ModuleClass& M, const ModuleClass& N) {
  TensorElement t(q);
  t.add(M, N, HallCoeff(q, 1));
  return t;
}

HallCoeff TensorElement::coeff(const ModuleClass& M, const ModuleClass& N) const {
  auto it = terms_.find({M, N});
  return it == terms_.end() ? HallCoeff(q_) : it->second;
}

void TensorElement::add(const ModuleClass& M, const ModuleClass& N, const HallCoeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({M, N}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

HallElement multiply(Workbench& wb, const HallElement& u, const HallElement& w) {
  const std::int64_t q = wb.q();
  HallElement out(q);
  for (const auto& [M, cm] : u.terms())
    for (const auto& [N, cn] : w.terms()) {
      const auto& table = wb.hall(M.dim, N.dim);
      const HallCoeff scale = cm * cn * HallCoeff::v_power(q, quiver::euler_form(wb.quiver(), M.dim, N.dim));
      for (std::uint32_t L = 0; L < table.counts.size(); ++L) {
        const auto g = table.g(M.orbit, N.orbit, L);
        if (g != 0) out.add({table.total, L}, scale * mpq_class(mpz_class(static_cast<unsigned long>(g))));
      }
    }
  return out;
}

TensorElement comultiply(Workbench& wb, const HallElement& u) {
  const std::int64_t q = wb.q();
  const auto& Q = wb.quiver();
  TensorElement out(q);
  for (const auto& [L, cl] : u.terms()) {
    for (const auto& a : Q.below(L.dim)) {
      const auto b = L.dim - a;
      const auto& table = wb.hall(a, b);
      const HallCoeff scale = cl * HallCoeff::v_power(q, quiver::euler_form(Q, a, b));
      for (std::uint32_t M = 0; M < table.num_quot; ++M)
        for (std::uint32_t N = 0; N < table.num_sub; ++N) {
          const auto g = table.g(M, N, L.orbit);
          if (g == 0) continue;
          const ModuleClass cM{a, M}, cN{b, N};
          const mpq_class r = hall::ratio(mpz_class(static_cast<unsigned long>(g)) * wb.aut(cM) * wb.aut(cN), wb.aut(L));
          out.add(cM, cN, scale * r);
        }
    }
  }
  return out;
}

TensorElement tensor_multiply(Workbench& wb, const TensorElement& s, const TensorElement& t) {
  const std::int64_t q = wb.q();
  TensorElement out(q);
  for (const auto& [k1, c1] : s.terms())
    for (const auto& [k2, c2] : t.terms()) {
      const auto& [M1, M2] = k1;
      const auto& [N1, N2] = k2;
      const HallCoeff scale = c1 * c2 * HallCoeff::v_power(q, quiver::symmetric_form(wb.quiver(), M2.dim, N1.dim));
      const HallElement left = multiply(wb, HallElement::basis(q, M1), HallElement::basis(q, N1));
      const HallElement right = multiply(wb, HallElement::basis(q, M2), HallElement::basis(q, N2));
      for (const auto& [A, ca] : left.terms())
        for (const auto& [B, cb] : right.terms()) out.add(A, B, scale * ca * cb);
    }
  return out;
}

HallElement counit_left(const TensorElement& t) {
  HallElement out(t.q());
  for (const auto& [k, c] : t.terms())
    if (k.first.dim.is_zero()) out.add(k.second, c);
  return out;
}

HallElement counit_right(const TensorElement& t) {
  HallElement out(t.q());
  for (const auto& [k, c] : t.terms())
    if (k.second.dim.is_zero()) out.add(k.first, c);
  return out;
}

BialgebraSides bialgebra(Workbench& wb, const ModuleClass& M, const ModuleClass& N) {
  const std::int64_t q = wb.q();
  const HallElement uM = HallElement::basis(q, M);
  const HallElement uN = HallElement::basis(q, N);
  return {comultiply(wb, multiply(wb, uM, uN)), tensor_multiply(wb, comultiply(wb, uM), comultiply(wb, uN))};
}

bool bialgebra_check(Workbench& wb, const ModuleClass& M, const ModuleClass& N) { return bialgebra(wb, M, N).holds(); }

std::map<int, mpz_class> qbinom_laurent(int n, int k) {
  if (k < 0 || k > n) return {};
  if (k == 0 || k == n) return {{0, 1}};
  std::map<int, mpz_class> out;
  for (const auto& [e, c] : qbinom_laurent(n - 1, k)) out[e - k] += c;
  for (const auto& [e, c] : qbinom_laurent(n - 1, k - 1)) out[e + n - k] += c;
  return out;
}

HallCoeff qbinom(std::int64_t q, int n, int k, int d) {
  HallCoeff out(q);
  for (const auto& [e, c] : qbinom_laurent(n, k)) out += HallCoeff::v_power(q, static_cast<std::int64_t>(e) * d) * mpq_class(c);
  return out;
}

SerreResult serre(Workbench& wb, int i_orbit, int j_orbit) {
  const auto& Q = wb.quiver();
  if (i_orbit == j_orbit) throw Error(ErrorKind::DimensionMismatch, "Serre relation needs two distinct vertex orbits");
  const auto ai = Q.simple(i_orbit);
  const auto aj = Q.simple(j_orbit);
  const auto ii = quiver::symmetric_form(Q, ai, ai);
  const auto ij = quiver::symmetric_form(Q, ai, aj);
  if (ii <= 0 || (2 * ij) % ii != 0)
    throw Error(ErrorKind::NonIntegerCartan, "2 (i,j) / (i,i) = " + std::to_string(2 * ij) + "/" + std::to_string(ii));
  const int c = static_cast<int>(2 * ij / ii);
  const int di = static_cast<int>(ii / 2);
  const int n = 1 - c;
  const std::int64_t q = wb.q();

  const HallElement ui = HallElement::basis(q, wb.semisimple(ai));
  const HallElement uj = HallElement::basis(q, wb.semisimple(aj));
  std::vector<HallElement> powers{HallElement::basis(q, wb.zero_class())};
  for (int k = 1; k <= n; ++k) powers.push_back(multiply(wb, powers.back(), ui));

  SerreResult r{c, HallElement(q)};
  for (int k = 0; k <= n; ++k) {
    HallCoeff coeff = qbinom(q, n, k, di);
    if (k % 2 == 1) coeff = -coeff;
    r.value += coeff * multiply(wb, multiply(wb, powers[static_cast<std::size_t>(k)], uj), powers[static_cast<std::size_t>(n - k)]);
  }
  return r;
}

bool serre_check(Workbench& wb, int i_orbit, int j_orbit) { return serre(wb, i_orbit, j_orbit).holds(); }

}  // namespace hallq::algebra
