#include "hallq/repspace.hpp"

#include <string>

#include "hallq/error.hpp"
#include "hallq/kernels.hpp"

namespace hallq::rep {

namespace {

std::uint64_t ipow(std::int64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= static_cast<std::uint64_t>(base);
  return r;
}

int vertex_orbit_rep(const Folded& Q, int orbit) { return Q.orbits().vertex_orbits[static_cast<std::size_t>(orbit)].rep; }

// Matrix of g at an arbitrary vertex, by Frobenius translation.
Mat at_vertex(const Context& ctx, const std::vector<Mat>& per_orbit, int vertex) {
  const auto& od = ctx.quiver->orbits();
  const auto v = static_cast<std::size_t>(vertex);
  return linalg::frobenius(*ctx.field, per_orbit[static_cast<std::size_t>(od.vertex_orbit_of[v])], od.vertex_shift[v]);
}

}  // namespace

Context make_context(const Folded& q, int p, int e, int ambient_N) {
  const int lcm = q.orbits().N;
  int N = lcm;
  if (ambient_N > 0) {
    if (ambient_N % lcm != 0)
      throw Error(ErrorKind::DimensionMismatch,
                  "ambient degree " + std::to_string(ambient_N) + " is not a multiple of " + std::to_string(lcm));
    N = ambient_N;
  }
  Context ctx;
  ctx.quiver = std::make_shared<const Folded>(q);
  ctx.field = gf::Field::make(p, e, N);
  return ctx;
}

Layout::Layout(const Context& ctx, const DimVector& nu, std::uint64_t max_points)
    : field_(ctx.field.get()), nu_(nu) {
  const Folded& Q = *ctx.quiver;
  if (nu.size() != static_cast<std::size_t>(Q.num_vertices()))
    throw Error(ErrorKind::DimensionMismatch, "dimension vector length");
  const auto& od = Q.orbits();
  std::size_t entries = 0;
  for (std::size_t ao = 0; ao < od.arrow_orbits.size(); ++ao) {
    Block b;
    b.arrow_orbit = static_cast<int>(ao);
    b.arrow = od.arrow_orbits[ao].rep;
    const auto& h = Q.quiver().arrows[static_cast<std::size_t>(b.arrow)];
    b.rows = nu[static_cast<std::size_t>(h.target)];
    b.cols = nu[static_cast<std::size_t>(h.source)];
    b.d = od.arrow_orbits[ao].size();
    b.first_entry = entries;
    entries += static_cast<std::size_t>(b.rows) * static_cast<std::size_t>(b.cols);
    blocks_.push_back(b);
  }
  radix_.resize(entries);
  stride_.resize(entries);
  for (const auto& b : blocks_)
    for (std::size_t k = 0; k < static_cast<std::size_t>(b.rows * b.cols); ++k) radix_[b.first_entry + k] = ipow(ctx.q(), b.d);
  std::uint64_t s = 1;
  for (std::size_t j = entries; j-- > 0;) {
    stride_[j] = s;
    if (s > max_points / radix_[j])
      throw Error(ErrorKind::SpaceTooLarge, "|E_nu^F| for nu = (" + nu.str() + ") exceeds " + std::to_string(max_points));
    s *= radix_[j];
  }
  num_points_ = s;
}

Point Layout::decode(std::uint64_t code) const {
  Point x;
  x.reserve(blocks_.size());
  for (const auto& b : blocks_) {
    Mat m(b.rows, b.cols);
    const auto& elems = field_->subfield(b.d);
    for (std::size_t k = 0; k < m.a.size(); ++k) {
      const std::size_t j = b.first_entry + k;
      m.a[k] = elems[(code / stride_[j]) % radix_[j]];
    }
    x.push_back(std::move(m));
  }
  return x;
}

std::uint64_t Layout::encode(const Point& x) const {
  if (x.size() != blocks_.size()) throw Error(ErrorKind::DimensionMismatch, "point has wrong number of blocks");
  std::uint64_t code = 0;
  for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
    const auto& b = blocks_[bi];
    const Mat& m = x[bi];
    if (m.rows != b.rows || m.cols != b.cols) throw Error(ErrorKind::DimensionMismatch, "block shape");
    for (std::size_t k = 0; k < m.a.size(); ++k) {
      const std::int32_t idx = field_->subfield_index(b.d, m.a[k]);
      if (idx < 0) throw Error(ErrorKind::DimensionMismatch, "entry outside its subfield");
      code += static_cast<std::uint64_t>(idx) * stride_[b.first_entry + k];
    }
  }
  return code;
}

Point Layout::zero_point() const {
  Point x;
  for (const auto& b : blocks_) x.emplace_back(b.rows, b.cols);
  return x;
}

std::vector<Point> enumerate_points(const Layout& layout) {
  std::vector<Point> out;
  out.reserve(layout.num_points());
  for (std::uint64_t c = 0; c < layout.num_points(); ++c) out.push_back(layout.decode(c));
  return out;
}

mpz_class group_order(const Context& ctx, const DimVector& nu) {
  mpz_class total = 1;
  for (const auto& o : ctx.quiver->orbits().vertex_orbits) {
    const int n = nu[static_cast<std::size_t>(o.rep)];
    mpz_class Q;
    mpz_ui_pow_ui(Q.get_mpz_t(), static_cast<unsigned long>(ctx.q()), static_cast<unsigned long>(o.size()));
    mpz_class Qn;
    mpz_pow_ui(Qn.get_mpz_t(), Q.get_mpz_t(), static_cast<unsigned long>(n));
    mpz_class Qj = 1;
    for (int j = 0; j < n; ++j) {
      total *= Qn - Qj;
      Qj *= Q;
    }
  }
  return total;
}

GroupElem identity_element(const Context& ctx, const DimVector& nu) {
  GroupElem g;
  for (int o = 0; o < ctx.quiver->num_vertex_orbits(); ++o)
    g.push_back(Mat::identity(nu[static_cast<std::size_t>(vertex_orbit_rep(*ctx.quiver, o))]));
  return g;
}

GroupElem group_multiply(const Context& ctx, const GroupElem& g, const GroupElem& h) {
  if (g.size() != h.size()) throw Error(ErrorKind::DimensionMismatch, "group elements of different gradings");
  GroupElem out;
  for (std::size_t i = 0; i < g.size(); ++i) out.push_back(linalg::multiply(*ctx.field, g[i], h[i]));
  return out;
}

Point act(const Context& ctx, const GroupElem& g, const Point& x) {
  const Folded& Q = *ctx.quiver;
  if (g.size() != static_cast<std::size_t>(Q.num_vertex_orbits()) || x.size() != static_cast<std::size_t>(Q.num_arrow_orbits()))
    throw Error(ErrorKind::DimensionMismatch, "group element and point do not match the quiver");
  GroupElem ginv;
  for (const auto& m : g) {
    auto inv = linalg::inverse(*ctx.field, m);
    if (!inv) throw Error(ErrorKind::DimensionMismatch, "group element is not invertible");
    ginv.push_back(std::move(*inv));
  }
  Point out;
  const auto& od = Q.orbits();
  for (std::size_t ao = 0; ao < od.arrow_orbits.size(); ++ao) {
    const auto& h = Q.quiver().arrows[static_cast<std::size_t>(od.arrow_orbits[ao].rep)];
    const Mat gt = at_vertex(ctx, g, h.target);
    const Mat gs_inv = at_vertex(ctx, ginv, h.source);
    if (gt.cols != x[ao].rows || x[ao].cols != gs_inv.rows)
      throw Error(ErrorKind::DimensionMismatch, "block shape does not match the group element");
    out.push_back(linalg::multiply(*ctx.field, linalg::multiply(*ctx.field, gt, x[ao]), gs_inv));
  }
  return out;
}

std::vector<GroupElem> generators(const Context& ctx, const DimVector& nu) {
  std::vector<GroupElem> gens;
  const GroupElem id = identity_element(ctx, nu);
  const auto& vo = ctx.quiver->orbits().vertex_orbits;
  for (std::size_t o = 0; o < vo.size(); ++o) {
    const int n = nu[static_cast<std::size_t>(vo[o].rep)];
    if (n == 0) continue;
    const int d = vo[o].size();
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (j == k) continue;
        for (Elem lambda : ctx.field->prime_basis(d)) {
          GroupElem g = id;
          g[o].at(j, k) = lambda;
          gens.push_back(std::move(g));
        }
      }
    GroupElem g = id;
    g[o].at(0, 0) = ctx.field->generator(d);
    gens.push_back(std::move(g));
  }
  return gens;
}

std::vector<GroupElem> all_group_elements(const Context& ctx, const DimVector& nu) {
  std::vector<GroupElem> out{GroupElem{}};
  const auto& vo = ctx.quiver->orbits().vertex_orbits;
  for (const auto& o : vo) {
    const int n = nu[static_cast<std::size_t>(o.rep)];
    const auto& elems = ctx.field->subfield(o.size());
    std::vector<Mat> gl;
    const std::size_t cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    std::vector<std::size_t> digit(cells, 0);
    while (true) {
      Mat m(n, n);
      for (std::size_t k = 0; k < cells; ++k) m.a[k] = elems[digit[k]];
      if (linalg::inverse(*ctx.field, m)) gl.push_back(std::move(m));
      std::size_t j = cells;
      while (j > 0 && digit[j - 1] + 1 == elems.size()) digit[--j] = 0;
      if (j == 0) break;
      ++digit[j - 1];
    }
    std::vector<GroupElem> next;
    next.reserve(out.size() * gl.size());
    for (const auto& g : out)
      for (const auto& m : gl) {
        GroupElem h = g;
        h.push_back(m);
        next.push_back(std::move(h));
      }
    out = std::move(next);
  }
  return out;
}

Point frobenius_closure(const Context& ctx, const Point& x) {
  const auto& ao = ctx.quiver->orbits().arrow_orbits;
  Point out;
  for (std::size_t i = 0; i < x.size(); ++i) out.push_back(linalg::frobenius(*ctx.field, x[i], ao[i].size()));
  return out;
}

OrbitTable table_from_labels(const Context& ctx, const DimVector& nu, std::vector<std::uint32_t> labels) {
  OrbitTable t;
  t.dim = nu;
  t.group_order = group_order(ctx, nu);
  for (std::uint64_t c = 0; c < labels.size(); ++c) {
    const std::uint32_t id = labels[c];
    if (id == t.orbits.size()) {
      OrbitInfo info;
      info.rep_code = c;
      t.orbits.push_back(info);
    } else if (id > t.orbits.size()) {
      throw Error(ErrorKind::NonExactDivision, "orbit labels are not numbered by least point");
    }
    ++t.orbits[id].size;
  }
  for (auto& o : t.orbits) {
    const mpz_class size = static_cast<unsigned long>(o.size);
    if (!mpz_divisible_p(t.group_order.get_mpz_t(), size.get_mpz_t()))
      throw Error(ErrorKind::NonExactDivision, "orbit of size " + std::to_string(o.size) + " in dimension (" + nu.str() +
                                                   ") does not divide |G_nu^F| = " + t.group_order.get_str());
    o.aut = t.group_order / size;
  }
  t.label = std::move(labels);
  return t;
}

OrbitTable orbit_table(const Context& ctx, const DimVector& nu, Exec exec, std::uint64_t max_points) {
  const Layout layout(ctx, nu, max_points);
  const auto gens = generators(ctx, nu);
  const kernels::ImageFn image = [&](std::uint64_t code, std::size_t g) {
    return layout.encode(act(ctx, gens[g], layout.decode(code)));
  };
  auto labels = exec == Exec::Serial ? kernels::orbit_labels_serial(layout.num_points(), gens.size(), image)
                                     : kernels::orbit_labels_parallel(layout.num_points(), gens.size(), image);
  return table_from_labels(ctx, nu, std::move(labels));
}

int hom_dim(const Context& ctx, const DimVector& nu, const Point& x, const DimVector& mu, const Point& y) {
  const Folded& Q = *ctx.quiver;
  const gf::Field& F = *ctx.field;
  const auto& od = Q.orbits();
  const std::size_t D = static_cast<std::size_t>(F.degree());

  // Zero tuple f, one matrix mu_r x nu_r per vertex-orbit representative r.
  std::vector<Mat> zero_f;
  for (const auto& o : od.vertex_orbits)
    zero_f.emplace_back(mu[static_cast<std::size_t>(o.rep)], nu[static_cast<std::size_t>(o.rep)]);

  std::vector<std::vector<int>> rows;
  std::size_t unknowns = 0;
  for (std::size_t o = 0; o < od.vertex_orbits.size(); ++o) {
    const auto& basis = F.prime_basis(od.vertex_orbits[o].size());
    for (std::size_t cell = 0; cell < zero_f[o].a.size(); ++cell)
      for (Elem b : basis) {
        ++unknowns;
        std::vector<Mat> f = zero_f;
        f[o].a[cell] = b;
        std::vector<int> residual;
        for (std::size_t ao = 0; ao < od.arrow_orbits.size(); ++ao) {
          const auto& h = Q.quiver().arrows[static_cast<std::size_t>(od.arrow_orbits[ao].rep)];
          const Mat ft = at_vertex(ctx, f, h.target);
          const Mat fs = at_vertex(ctx, f, h.source);
          const Mat lhs = linalg::multiply(F, ft, x[ao]);
          const Mat rhs = linalg::multiply(F, y[ao], fs);
          for (std::size_t k = 0; k < lhs.a.size(); ++k) {
            const auto c = F.coeffs(F.sub(lhs.a[k], rhs.a[k]));
            residual.insert(residual.end(), c.begin(), c.end());
          }
        }
        if (residual.empty()) residual.assign(D, 0);
        rows.push_back(std::move(residual));
      }
  }
  const int nullity = static_cast<int>(unknowns) - linalg::rank_mod_p(std::move(rows), F.p());
  if (nullity % F.e() != 0) throw Error(ErrorKind::NonExactDivision, "Hom nullity is not a multiple of e");
  return nullity / F.e();
}

int ext_dim(const Context& ctx, const DimVector& nu, const Point& x, const DimVector& mu, const Point& y) {
  const int h = hom_dim(ctx, nu, x, mu, y);
  const auto ext = static_cast<std::int64_t>(h) - quiver::euler_form(*ctx.quiver, nu, mu);
  if (ext < 0)
    throw Error(ErrorKind::NegativeExt, "dim Hom = " + std::to_string(h) + " is below the Euler form for (" + nu.str() +
                                            "), (" + mu.str() + ")");
  return static_cast<int>(ext);
}

}  // namespace hallq::rep
