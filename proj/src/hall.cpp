#include "hallq/hall.hpp"

#include <string>

#include "hallq/error.hpp"
#include "hallq/kernels.hpp"

namespace hallq::hall {

using linalg::Mat;
using rep::Point;

namespace {

mpz_class pow_q(std::int64_t q, long exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(exp));
  return r;
}

std::vector<int> pivots_of(const Mat& rref) {
  std::vector<int> piv;
  for (int r = 0; r < rref.rows; ++r)
    for (int c = 0; c < rref.cols; ++c)
      if (rref.at(r, c) != 0) {
        piv.push_back(c);
        break;
      }
  return piv;
}

std::vector<int> complement(const std::vector<int>& piv, int n) {
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (int c : piv) used[static_cast<std::size_t>(c)] = 1;
  std::vector<int> out;
  for (int c = 0; c < n; ++c)
    if (!used[static_cast<std::size_t>(c)]) out.push_back(c);
  return out;
}

// The block upper-triangular point [[x_N, 0], [0, x_M]]: the submodule N
// occupies the leading coordinates at every vertex.
Point direct_sum_point(const rep::Layout& lay, const Point& xm, const Point& xn) {
  Point mid = lay.zero_point();
  for (std::size_t b = 0; b < mid.size(); ++b) {
    for (int r = 0; r < xn[b].rows; ++r)
      for (int c = 0; c < xn[b].cols; ++c) mid[b].at(r, c) = xn[b].at(r, c);
    for (int r = 0; r < xm[b].rows; ++r)
      for (int c = 0; c < xm[b].cols; ++c) mid[b].at(xn[b].rows + r, xn[b].cols + c) = xm[b].at(r, c);
  }
  return mid;
}

// All families of subspaces of dimension sub inside a space of dimension nu,
// one Grassmannian per vertex orbit, and the induced sub/quotient points.
class FamilySpace {
 public:
  FamilySpace(const rep::Context& ctx, const DimVector& nu, const DimVector& sub, std::uint64_t max_families)
      : ctx_(ctx), quot_(nu - sub) {
    const auto& vo = ctx.quiver->orbits().vertex_orbits;
    count_ = 1;
    for (const auto& o : vo) {
      const auto r = static_cast<std::size_t>(o.rep);
      grass_.push_back(linalg::grassmannian(*ctx.field, o.size(), nu[r], sub[r]));
      const std::uint64_t n = grass_.back().size();
      if (n != 0 && count_ > max_families / n)
        throw Error(ErrorKind::SpaceTooLarge, "subspace families of dimension (" + sub.str() + ") in (" + nu.str() +
                                                  ") exceed " + std::to_string(max_families));
      count_ *= n;
    }
  }

  std::uint64_t count() const { return count_; }
  const DimVector& quot() const { return quot_; }

  std::vector<Mat> family(std::uint64_t idx) const {
    std::vector<Mat> fam(grass_.size());
    for (std::size_t o = grass_.size(); o-- > 0;) {
      const std::uint64_t n = grass_[o].size();
      fam[o] = grass_[o][idx % n];
      idx /= n;
    }
    return fam;
  }

  // (quotient point, sub point), or nothing when the family is not x-stable.
  std::optional<std::pair<Point, Point>> split(const Point& x, const std::vector<Mat>& fam) const {
    const gf::Field& F = *ctx_.field;
    const auto& Q = *ctx_.quiver;
    const auto& od = Q.orbits();
    Point qp, sp;
    for (std::size_t ao = 0; ao < od.arrow_orbits.size(); ++ao) {
      const auto& h = Q.quiver().arrows[static_cast<std::size_t>(od.arrow_orbits[ao].rep)];
      const auto s = static_cast<std::size_t>(h.source);
      const auto t = static_cast<std::size_t>(h.target);
      const auto& fs = fam[static_cast<std::size_t>(od.vertex_orbit_of[s])];
      const auto& ft = fam[static_cast<std::size_t>(od.vertex_orbit_of[t])];
      const Mat Bs = linalg::frobenius(F, fs, od.vertex_shift[s]);
      const Mat Bt = linalg::frobenius(F, ft, od.vertex_shift[t]);
      const auto Ps = pivots_of(fs);
      const auto Pt = pivots_of(ft);
      const auto NPs = complement(Ps, fs.cols);
      const auto NPt = complement(Pt, ft.cols);
      const Mat& X = x[ao];

      // Reduces w modulo span(Bt) in place and returns the coordinates removed.
      auto reduce = [&](std::vector<gf::Elem>& w) {
        std::vector<gf::Elem> coord(Pt.size());
        for (std::size_t j = 0; j < Pt.size(); ++j) {
          const gf::Elem c = w[static_cast<std::size_t>(Pt[j])];
          coord[j] = c;
          if (c == 0) continue;
          for (int i = 0; i < Bt.cols; ++i) w[static_cast<std::size_t>(i)] = F.sub(w[static_cast<std::size_t>(i)], F.mul(c, Bt.at(static_cast<int>(j), i)));
        }
        return coord;
      };

      Mat y(Bt.rows, Bs.rows);
      for (int r = 0; r < Bs.rows; ++r) {
        std::vector<gf::Elem> w(static_cast<std::size_t>(X.rows), 0);
        for (int i = 0; i < X.rows; ++i)
          for (int j = 0; j < X.cols; ++j) w[static_cast<std::size_t>(i)] = F.add(w[static_cast<std::size_t>(i)], F.mul(X.at(i, j), Bs.at(r, j)));
        const auto coord = reduce(w);
        for (gf::Elem e : w)
          if (e != 0) return std::nullopt;
        for (std::size_t j = 0; j < coord.size(); ++j) y.at(static_cast<int>(j), r) = coord[j];
      }
      Mat z(static_cast<int>(NPt.size()), static_cast<int>(NPs.size()));
      for (std::size_t k = 0; k < NPs.size(); ++k) {
        std::vector<gf::Elem> w(static_cast<std::size_t>(X.rows));
        for (int i = 0; i < X.rows; ++i) w[static_cast<std::size_t>(i)] = X.at(i, NPs[k]);
        reduce(w);
        for (std::size_t i = 0; i < NPt.size(); ++i) z.at(static_cast<int>(i), static_cast<int>(k)) = w[static_cast<std::size_t>(NPt[i])];
      }
      sp.push_back(std::move(y));
      qp.push_back(std::move(z));
    }
    return std::make_pair(std::move(qp), std::move(sp));
  }

 private:
  const rep::Context& ctx_;
  DimVector quot_;
  std::vector<std::vector<Mat>> grass_;
  std::uint64_t count_ = 1;
};

}  // namespace

std::uint64_t HallTable::stable_subspaces(std::uint32_t L) const {
  std::uint64_t s = 0;
  for (auto c : counts[L]) s += c;
  return s;
}

Workbench::Workbench(rep::Context ctx, Options opts, std::shared_ptr<TableStore> store)
    : ctx_(std::move(ctx)), opts_(opts), store_(std::move(store)) {}

const rep::Layout& Workbench::layout(const DimVector& nu) {
  std::lock_guard lock(mu_);
  auto& slot = layouts_[nu];
  if (!slot) slot = std::make_unique<rep::Layout>(ctx_, nu, opts_.max_points);
  return *slot;
}

const rep::OrbitTable& Workbench::orbits(const DimVector& nu) { return orbits_impl(nu, opts_.lazy); }

const rep::OrbitTable& Workbench::orbits_impl(const DimVector& nu, bool build) {
  std::lock_guard lock(mu_);
  if (auto it = orbit_tables_.find(nu); it != orbit_tables_.end()) return *it->second;
  if (!build) throw Error(ErrorKind::MissingOrbitTable, "dimension (" + nu.str() + ")");
  (void)layout(nu);
  std::optional<rep::OrbitTable> table;
  if (store_) table = store_->load_orbits(ctx_, nu);
  if (!table) {
    table = rep::orbit_table(ctx_, nu, opts_.exec, opts_.max_points);
    if (store_) store_->store_orbits(ctx_, *table);
  }
  auto& slot = orbit_tables_[nu];
  slot = std::make_unique<rep::OrbitTable>(std::move(*table));
  return *slot;
}

const HallTable& Workbench::hall(const DimVector& quot, const DimVector& sub) { return hall_impl(quot, sub, opts_.lazy); }

const HallTable& Workbench::hall_impl(const DimVector& quot, const DimVector& sub, bool build) {
  std::lock_guard lock(mu_);
  const auto key = std::make_pair(quot, sub);
  if (auto it = hall_tables_.find(key); it != hall_tables_.end()) return *it->second;
  if (!build) throw Error(ErrorKind::MissingHallTable, "grading (" + quot.str() + ") x (" + sub.str() + ")");
  const DimVector total = quot + sub;
  const auto& tq = orbits_impl(quot, build);
  const auto& ts = orbits_impl(sub, build);
  const auto& tl = orbits_impl(total, build);
  std::optional<HallTable> table;
  if (store_) table = store_->load_hall(ctx_, quot, sub);
  if (!table) {
    HallTable h;
    h.quot = quot;
    h.sub = sub;
    h.total = total;
    h.num_quot = tq.num_orbits();
    h.num_sub = ts.num_orbits();
    const auto& lay = layout(total);
    for (const auto& o : tl.orbits) h.counts.push_back(subspace_histogram(total, lay.decode(o.rep_code), sub));
    table = std::move(h);
    if (store_) store_->store_hall(ctx_, *table);
  }
  auto& slot = hall_tables_[key];
  slot = std::make_unique<HallTable>(std::move(*table));
  return *slot;
}

std::vector<ModuleClass> Workbench::classes(const DimVector& nu) {
  const auto& t = orbits(nu);
  std::vector<ModuleClass> out;
  for (std::uint32_t i = 0; i < t.num_orbits(); ++i) out.push_back({nu, i});
  return out;
}

Point Workbench::point(const ModuleClass& M) { return layout(M.dim).decode(orbits(M.dim).orbits[M.orbit].rep_code); }

const mpz_class& Workbench::aut(const ModuleClass& M) { return orbits(M.dim).orbits[M.orbit].aut; }

ModuleClass Workbench::zero_class() { return semisimple(quiver().zero()); }

ModuleClass Workbench::semisimple(const DimVector& nu) {
  const auto& t = orbits(nu);
  return {nu, t.orbit_of(layout(nu).encode(layout(nu).zero_point()))};
}

int Workbench::hom_dim(const ModuleClass& M, const ModuleClass& N) {
  return rep::hom_dim(ctx_, M.dim, point(M), N.dim, point(N));
}

int Workbench::ext_dim(const ModuleClass& M, const ModuleClass& N) {
  return rep::ext_dim(ctx_, M.dim, point(M), N.dim, point(N));
}

mpz_class Workbench::fiber_size(const DimVector& quot, const DimVector& sub) {
  const auto& Q = quiver();
  long exp = 0;
  for (const auto& ao : Q.orbits().arrow_orbits) {
    const auto& h = Q.quiver().arrows[static_cast<std::size_t>(ao.rep)];
    exp += static_cast<long>(ao.size()) * quot[static_cast<std::size_t>(h.source)] * sub[static_cast<std::size_t>(h.target)];
  }
  return pow_q(q(), exp);
}

const std::vector<std::uint64_t>& Workbench::fiber_histogram(const ModuleClass& M, const ModuleClass& N) {
  std::lock_guard lock(mu_);
  const auto key = std::make_pair(M, N);
  if (auto it = fibers_.find(key); it != fibers_.end()) return *it->second;
  const DimVector total = M.dim + N.dim;
  const auto& lay = layout(total);
  const auto& table = orbits(total);
  const Point xn = point(N);
  const Point mid = direct_sum_point(lay, point(M), xn);
  kernels::Fiber fiber;
  for (std::size_t b = 0; b < lay.blocks().size(); ++b) {
    const auto& blk = lay.blocks()[b];
    for (int r = 0; r < xn[b].rows; ++r)
      for (int c = xn[b].cols; c < blk.cols; ++c) {
        const std::size_t e = lay.entry_index(static_cast<int>(b), r, c);
        fiber.stride.push_back(lay.stride(e));
        fiber.radix.push_back(lay.radix(e));
      }
  }
  fiber.base = lay.encode(mid);
  auto hist = opts_.exec == Exec::Serial ? kernels::fiber_histogram_serial(fiber, table.label, table.num_orbits())
                                         : kernels::fiber_histogram_parallel(fiber, table.label, table.num_orbits());
  auto& slot = fibers_[key];
  slot = std::make_unique<std::vector<std::uint64_t>>(std::move(hist));
  return *slot;
}

std::vector<std::uint64_t> Workbench::subspace_histogram(const DimVector& nu, const Point& x, const DimVector& sub) {
  if (!(sub <= nu)) throw Error(ErrorKind::GradingMismatch, "(" + sub.str() + ") is not below (" + nu.str() + ")");
  const FamilySpace space(ctx_, nu, sub, opts_.max_families);
  const auto& tq = orbits(space.quot());
  const auto& ts = orbits(sub);
  const auto& lq = layout(space.quot());
  const auto& ls = layout(sub);
  const kernels::ClassifyFn classify = [&](std::uint64_t idx) -> std::optional<std::pair<std::uint32_t, std::uint32_t>> {
    auto parts = space.split(x, space.family(idx));
    if (!parts) return std::nullopt;
    return std::make_pair(tq.orbit_of(lq.encode(parts->first)), ts.orbit_of(ls.encode(parts->second)));
  };
  return opts_.exec == Exec::Serial
             ? kernels::classify_histogram_serial(space.count(), tq.num_orbits(), ts.num_orbits(), classify)
             : kernels::classify_histogram_parallel(space.count(), tq.num_orbits(), ts.num_orbits(), classify);
}

std::vector<SubmoduleRecord> submodules(Workbench& wb, const ModuleClass& L, const DimVector& sub) {
  if (!(sub <= L.dim)) throw Error(ErrorKind::GradingMismatch, "(" + sub.str() + ") is not below (" + L.dim.str() + ")");
  const FamilySpace space(wb.ctx(), L.dim, sub, wb.options().max_families);
  const auto& tq = wb.orbits(space.quot());
  const auto& ts = wb.orbits(sub);
  const auto& lq = wb.layout(space.quot());
  const auto& ls = wb.layout(sub);
  const Point x = wb.point(L);
  std::vector<SubmoduleRecord> out;
  for (std::uint64_t idx = 0; idx < space.count(); ++idx) {
    auto fam = space.family(idx);
    auto parts = space.split(x, fam);
    if (!parts) continue;
    out.push_back({std::move(fam),
                   {space.quot(), tq.orbit_of(lq.encode(parts->first))},
                   {sub, ts.orbit_of(ls.encode(parts->second))}});
  }
  return out;
}

std::uint64_t hall_number(Workbench& wb, const ModuleClass& M, const ModuleClass& N, const ModuleClass& L) {
  if (M.dim + N.dim != L.dim)
    throw Error(ErrorKind::GradingMismatch, "(" + M.dim.str() + ") + (" + N.dim.str() + ") != (" + L.dim.str() + ")");
  return wb.hall(M.dim, N.dim).g(M.orbit, N.orbit, L.orbit);
}

ExtCounts ext_counts(Workbench& wb, const ModuleClass& M, const ModuleClass& N) {
  ExtCounts r;
  const DimVector total = M.dim + N.dim;
  r.fiber_size = wb.fiber_size(M.dim, N.dim);
  r.hom = wb.hom_dim(M, N);
  r.ext = wb.ext_dim(M, N);
  r.fiber_count = wb.fiber_histogram(M, N);

  const auto& lay = wb.layout(total);
  const auto split_orbit = wb.orbits(total).orbit_of(lay.encode(direct_sum_point(lay, wb.point(M), wb.point(N))));
  const mpz_class split_count = static_cast<unsigned long>(r.fiber_count[split_orbit]);
  if (split_count != 0 && mpz_divisible_p(r.fiber_size.get_mpz_t(), split_count.get_mpz_t())) {
    mpz_class ratio = r.fiber_size / split_count;
    int k = 0;
    const mpz_class qz = static_cast<long>(wb.q());
    while (ratio > 1 && mpz_divisible_p(ratio.get_mpz_t(), qz.get_mpz_t())) {
      ratio /= qz;
      ++k;
    }
    if (ratio == 1) r.ext_from_fiber = k;
  }

  const mpz_class ext_size = pow_q(wb.q(), r.ext);
  for (std::size_t L = 0; L < r.fiber_count.size(); ++L) {
    const mpz_class num = mpz_class(static_cast<unsigned long>(r.fiber_count[L])) * ext_size;
    if (!mpz_divisible_p(num.get_mpz_t(), r.fiber_size.get_mpz_t()))
      throw Error(ErrorKind::NonIntegerExtCount, "fiber count " + std::to_string(r.fiber_count[L]) + " for L = " +
                                                     std::to_string(L) + " in (" + total.str() + ")");
    r.ext_L.push_back(num / r.fiber_size);
  }
  return r;
}

IdentitySides riedtmann_peng(Workbench& wb, const ModuleClass& M, const ModuleClass& N, const ModuleClass& L) {
  IdentitySides s;
  s.lhs = mpz_class(static_cast<unsigned long>(hall_number(wb, M, N, L)));
  const ExtCounts e = ext_counts(wb, M, N);
  s.rhs = ratio(e.ext_L[L.orbit] * wb.aut(L), pow_q(wb.q(), e.hom) * wb.aut(M) * wb.aut(N));
  return s;
}

bool riedtmann_peng_check(Workbench& wb, const ModuleClass& M, const ModuleClass& N, const ModuleClass& L) {
  return riedtmann_peng(wb, M, N, L).holds();
}

IdentitySides green_raw(Workbench& wb, const ModuleClass& M, const ModuleClass& N, const ModuleClass& Mp,
                        const ModuleClass& Np) {
  if (M.dim + N.dim != Mp.dim + Np.dim)
    throw Error(ErrorKind::GradingMismatch, "(" + M.dim.str() + ") + (" + N.dim.str() + ") != (" + Mp.dim.str() +
                                                ") + (" + Np.dim.str() + ")");
  const auto& Q = wb.quiver();
  IdentitySides s;
  const DimVector total = M.dim + N.dim;
  const auto& h1 = wb.hall(M.dim, N.dim);
  const auto& h2 = wb.hall(Mp.dim, Np.dim);
  mpq_class sum = 0;
  for (const auto& L : wb.classes(total)) {
    const auto g1 = h1.g(M.orbit, N.orbit, L.orbit);
    const auto g2 = h2.g(Mp.orbit, Np.orbit, L.orbit);
    if (g1 == 0 || g2 == 0) continue;
    sum += ratio(mpz_class(static_cast<unsigned long>(g1)) * static_cast<unsigned long>(g2), wb.aut(L));
  }
  s.lhs = sum * wb.aut(M) * wb.aut(N) * wb.aut(Mp) * wb.aut(Np);
  s.lhs.canonicalize();

  const mpq_class qq = static_cast<long>(wb.q());
  for (const auto& lam : quiver::enumerate_lambda(Q, M.dim, N.dim, Mp.dim, Np.dim)) {
    const auto& hM = wb.hall(lam.a1, lam.a2);
    const auto& hN = wb.hall(lam.b1, lam.b2);
    const auto& hMp = wb.hall(lam.a1, lam.b1);
    const auto& hNp = wb.hall(lam.a2, lam.b2);
    const auto e = quiver::euler_form(Q, lam.a1, lam.b2);
    mpq_class twist = 1;
    for (std::int64_t k = 0; k < (e < 0 ? -e : e); ++k) twist *= qq;
    if (e > 0) twist = 1 / twist;
    const auto cM1 = wb.classes(lam.a1), cM2 = wb.classes(lam.a2), cN1 = wb.classes(lam.b1), cN2 = wb.classes(lam.b2);
    for (const auto& M1 : cM1)
      for (const auto& M2 : cM2) {
        const auto gM = hM.g(M1.orbit, M2.orbit, M.orbit);
        if (gM == 0) continue;
        for (const auto& N1 : cN1) {
          const auto gMp = hMp.g(M1.orbit, N1.orbit, Mp.orbit);
          if (gMp == 0) continue;
          for (const auto& N2 : cN2) {
            const auto gN = hN.g(N1.orbit, N2.orbit, N.orbit);
            const auto gNp = hNp.g(M2.orbit, N2.orbit, Np.orbit);
            if (gN == 0 || gNp == 0) continue;
            mpz_class prod = static_cast<unsigned long>(gM);
            prod *= static_cast<unsigned long>(gN);
            prod *= static_cast<unsigned long>(gMp);
            prod *= static_cast<unsigned long>(gNp);
            prod *= wb.aut(M1) * wb.aut(M2) * wb.aut(N1) * wb.aut(N2);
            s.rhs += twist * prod;
          }
        }
      }
  }
  s.rhs.canonicalize();
  return s;
}

bool green_raw_check(Workbench& wb, const ModuleClass& M, const ModuleClass& N, const ModuleClass& Mp,
                     const ModuleClass& Np) {
  return green_raw(wb, M, N, Mp, Np).holds();
}

mpz_class flag_count(Workbench& wb, const ModuleClass& M, const ModuleClass& N, const ModuleClass& L) {
  if (M.dim + N.dim != L.dim)
    throw Error(ErrorKind::GradingMismatch, "(" + M.dim.str() + ") + (" + N.dim.str() + ") != (" + L.dim.str() + ")");
  const auto& ctx = wb.ctx();
  const FamilySpace space(ctx, L.dim, N.dim, wb.options().max_families);
  const auto Gq = rep::all_group_elements(ctx, M.dim);
  const auto Gs = rep::all_group_elements(ctx, N.dim);
  const auto& tq = wb.orbits(M.dim);
  const auto& ts = wb.orbits(N.dim);
  const auto& lq = wb.layout(M.dim);
  const auto& ls = wb.layout(N.dim);
  const Point x = wb.point(L);
  mpz_class total = 0;
  for (std::uint64_t idx = 0; idx < space.count(); ++idx) {
    const auto parts = space.split(x, space.family(idx));
    if (!parts) continue;
    std::vector<char> quot_hit(Gq.size()), sub_hit(Gs.size());
    for (std::size_t i = 0; i < Gq.size(); ++i)
      quot_hit[i] = tq.orbit_of(lq.encode(rep::act(ctx, Gq[i], parts->first))) == M.orbit;
    for (std::size_t j = 0; j < Gs.size(); ++j)
      sub_hit[j] = ts.orbit_of(ls.encode(rep::act(ctx, Gs[j], parts->second))) == N.orbit;
    for (std::size_t i = 0; i < Gq.size(); ++i)
      for (std::size_t j = 0; j < Gs.size(); ++j)
        if (quot_hit[i] && sub_hit[j]) ++total;
  }
  return total;
}

}  // namespace hallq::hall
