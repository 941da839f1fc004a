#include "hallq/functions.hpp"

#include "hallq/error.hpp"

namespace hallq::fn {

namespace {

void require_split(const DimVector& total, const DimVector& first, const DimVector& second) {
  if (first + second != total)
    throw Error(ErrorKind::GradingMismatch, "(" + first.str() + ") + (" + second.str() + ") != (" + total.str() + ")");
}

// v^{-sum_i a_i b_i - sum_h a_s b_t}
HallCoeff ind_twist(Workbench& wb, const DimVector& a, const DimVector& b) {
  return HallCoeff::v_power(wb.q(), -quiver::diagonal_sum(a, b) - quiver::arrow_sum(wb.quiver(), a, b));
}

}  // namespace

InvFunction InvFunction::zero(Workbench& wb, const DimVector& nu) {
  return {nu, std::vector<HallCoeff>(wb.orbits(nu).num_orbits(), HallCoeff(wb.q()))};
}

InvFunction InvFunction::indicator(Workbench& wb, const ModuleClass& M) {
  InvFunction f = zero(wb, M.dim);
  f.values[M.orbit] = HallCoeff(wb.q(), 1);
  return f;
}

TensorFunction TensorFunction::zero(Workbench& wb, const DimVector& first, const DimVector& second) {
  TensorFunction t;
  t.first = first;
  t.second = second;
  t.num_second = wb.orbits(second).num_orbits();
  t.values.assign(wb.orbits(first).num_orbits() * t.num_second, HallCoeff(wb.q()));
  return t;
}

InvFunction ind_fn_raw_over_group(Workbench& wb, const InvFunction& f, const InvFunction& g) {
  const auto& table = wb.hall(f.dim, g.dim);
  InvFunction out = InvFunction::zero(wb, table.total);
  for (std::uint32_t L = 0; L < table.counts.size(); ++L)
    for (std::uint32_t M = 0; M < table.num_quot; ++M)
      for (std::uint32_t N = 0; N < table.num_sub; ++N) {
        const auto c = table.g(M, N, L);
        if (c == 0) continue;
        out.values[L] += f.values[M] * g.values[N] * mpq_class(mpz_class(static_cast<unsigned long>(c)));
      }
  return out;
}

InvFunction ind_fn(Workbench& wb, const InvFunction& f, const InvFunction& g) {
  const mpz_class G = wb.orbits(f.dim).group_order * wb.orbits(g.dim).group_order;
  InvFunction sums = ind_fn_raw_over_group(wb, f, g);
  const HallCoeff twist = ind_twist(wb, f.dim, g.dim);
  for (auto& v : sums.values) {
    // raw(x) = |G' x G''| * sum_W f(quotient) g(sub)
    const HallCoeff raw = v * mpq_class(G);
    v = twist * raw * hall::ratio(1, G);
  }
  return sums;
}

InvFunction ind_fn_flags(Workbench& wb, const InvFunction& f, const InvFunction& g) {
  const DimVector total = f.dim + g.dim;
  const mpz_class G = wb.orbits(f.dim).group_order * wb.orbits(g.dim).group_order;
  InvFunction out = InvFunction::zero(wb, total);
  const HallCoeff twist = ind_twist(wb, f.dim, g.dim);
  for (const auto& L : wb.classes(total)) {
    HallCoeff raw(wb.q());
    for (const auto& M : wb.classes(f.dim)) {
      if (f.values[M.orbit].is_zero()) continue;
      for (const auto& N : wb.classes(g.dim)) {
        if (g.values[N.orbit].is_zero()) continue;
        raw += f.values[M.orbit] * g.values[N.orbit] * mpq_class(hall::flag_count(wb, M, N, L));
      }
    }
    out.values[L.orbit] = twist * raw * hall::ratio(1, G);
  }
  return out;
}

TensorFunction res_fn(Workbench& wb, const InvFunction& f, const DimVector& first, const DimVector& second) {
  require_split(f.dim, first, second);
  TensorFunction out = TensorFunction::zero(wb, first, second);
  const HallCoeff twist = HallCoeff::v_power(
      wb.q(), quiver::diagonal_sum(first, second) - quiver::arrow_sum(wb.quiver(), first, second));
  for (const auto& M : wb.classes(first))
    for (const auto& N : wb.classes(second)) {
      const auto& hist = wb.fiber_histogram(M, N);
      HallCoeff sum(wb.q());
      for (std::size_t L = 0; L < hist.size(); ++L)
        if (hist[L] != 0) sum += f.values[L] * mpq_class(mpz_class(static_cast<unsigned long>(hist[L])));
      out.at(M.orbit, N.orbit) = twist * sum;
    }
  return out;
}

TensorFamily delta_fn(Workbench& wb, const InvFunction& f) {
  TensorFamily fam;
  for (const auto& a : wb.quiver().below(f.dim)) {
    const auto b = f.dim - a;
    fam.emplace(std::make_pair(a, b), res_fn(wb, f, a, b));
  }
  return fam;
}

TensorFamily tensor_ind(Workbench& wb, const TensorFamily& s, const TensorFamily& t) {
  const std::int64_t q = wb.q();
  TensorFamily out;
  for (const auto& [ks, S] : s)
    for (const auto& [kt, T] : t) {
      const auto& [a1, a2] = ks;
      const auto& [b1, b2] = kt;
      const auto key = std::make_pair(a1 + b1, a2 + b2);
      auto it = out.find(key);
      if (it == out.end()) it = out.emplace(key, TensorFunction::zero(wb, key.first, key.second)).first;
      TensorFunction& R = it->second;
      const HallCoeff twist = HallCoeff::v_power(q, quiver::symmetric_form(wb.quiver(), a2, b1));

      // ind on each tensor factor, one basis pair at a time.
      const auto& h1 = wb.hall(a1, b1);
      const auto& h2 = wb.hall(a2, b2);
      const HallCoeff t1 = ind_twist(wb, a1, b1);
      const HallCoeff t2 = ind_twist(wb, a2, b2);
      for (std::uint32_t M1 = 0; M1 < h1.num_quot; ++M1)
        for (std::uint32_t M2 = 0; M2 < h2.num_quot; ++M2) {
          const HallCoeff& sv = S.at(M1, M2);
          if (sv.is_zero()) continue;
          for (std::uint32_t N1 = 0; N1 < h1.num_sub; ++N1)
            for (std::uint32_t N2 = 0; N2 < h2.num_sub; ++N2) {
              const HallCoeff& tv = T.at(N1, N2);
              if (tv.is_zero()) continue;
              const HallCoeff base = twist * t1 * t2 * sv * tv;
              for (std::uint32_t L1 = 0; L1 < h1.counts.size(); ++L1) {
                const auto g1 = h1.g(M1, N1, L1);
                if (g1 == 0) continue;
                for (std::uint32_t L2 = 0; L2 < h2.counts.size(); ++L2) {
                  const auto g2 = h2.g(M2, N2, L2);
                  if (g2 == 0) continue;
                  R.at(L1, L2) += base * mpq_class(mpz_class(static_cast<unsigned long>(g1)) * static_cast<unsigned long>(g2));
                }
              }
            }
        }
    }
  return out;
}

HallElement phi(Workbench& wb, const InvFunction& f) {
  HallElement out(wb.q());
  const HallCoeff scale = HallCoeff::v_power(wb.q(), quiver::diagonal_sum(f.dim, f.dim));
  for (std::uint32_t M = 0; M < f.values.size(); ++M) out.add({f.dim, M}, scale * f.values[M]);
  return out;
}

TensorElement phi_tensor(Workbench& wb, const TensorFunction& t) {
  TensorElement out(wb.q());
  const HallCoeff scale = HallCoeff::v_power(
      wb.q(), quiver::diagonal_sum(t.first, t.first) + quiver::diagonal_sum(t.second, t.second));
  const std::size_t num_first = t.num_second == 0 ? 0 : t.values.size() / t.num_second;
  for (std::uint32_t M = 0; M < num_first; ++M)
    for (std::uint32_t N = 0; N < t.num_second; ++N) out.add({t.first, M}, {t.second, N}, scale * t.at(M, N));
  return out;
}

TensorElement phi_family(Workbench& wb, const TensorFamily& fam) {
  TensorElement out(wb.q());
  for (const auto& [k, t] : fam) out += phi_tensor(wb, t);
  return out;
}

Sides<HallElement> phi_mult(Workbench& wb, const ModuleClass& M, const ModuleClass& N) {
  const auto fM = InvFunction::indicator(wb, M);
  const auto fN = InvFunction::indicator(wb, N);
  return {phi(wb, ind_fn(wb, fM, fN)), algebra::multiply(wb, phi(wb, fM), phi(wb, fN))};
}

Sides<TensorElement> phi_comult(Workbench& wb, const ModuleClass& L) {
  const auto fL = InvFunction::indicator(wb, L);
  return {phi_family(wb, delta_fn(wb, fL)), algebra::comultiply(wb, phi(wb, fL))};
}

Sides<TensorElement> green_fn(Workbench& wb, const ModuleClass& M, const ModuleClass& N) {
  const auto fM = InvFunction::indicator(wb, M);
  const auto fN = InvFunction::indicator(wb, N);
  const TensorFamily lhs = delta_fn(wb, ind_fn(wb, fM, fN));
  const TensorFamily rhs = tensor_ind(wb, delta_fn(wb, fM), delta_fn(wb, fN));
  return {phi_family(wb, lhs), phi_family(wb, rhs)};
}

bool green_fn_check(Workbench& wb, const ModuleClass& M, const ModuleClass& N) { return green_fn(wb, M, N).holds(); }

Sides<HallCoeff> res_indicator(Workbench& wb, const ModuleClass& L, const ModuleClass& M, const ModuleClass& N) {
  const std::int64_t q = wb.q();
  const auto r = res_fn(wb, InvFunction::indicator(wb, L), M.dim, N.dim);
  const hall::ExtCounts e = hall::ext_counts(wb, M, N);
  mpz_class hom;
  mpz_ui_pow_ui(hom.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(e.hom));
  const HallCoeff expected =
      HallCoeff::v_power(q, 3 * quiver::diagonal_sum(M.dim, N.dim) - quiver::arrow_sum(wb.quiver(), M.dim, N.dim)) *
      hall::ratio(e.ext_L[L.orbit], hom);
  return {r.at(M.orbit, N.orbit), expected};
}

}  // namespace hallq::fn
