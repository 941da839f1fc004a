#include "hallq/quiver.hpp"

#include <numeric>
#include <sstream>

#include "hallq/error.hpp"

namespace hallq::quiver {

namespace {

bool is_permutation(const std::vector<int>& perm, std::size_t n) {
  if (perm.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (int x : perm) {
    if (x < 0 || static_cast<std::size_t>(x) >= n || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = 1;
  }
  return true;
}

void orbits_of(const std::vector<int>& perm, std::vector<Orbit>& orbits, std::vector<int>& orbit_of,
               std::vector<int>& shift) {
  const std::size_t n = perm.size();
  orbit_of.assign(n, -1);
  shift.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (orbit_of[i] >= 0) continue;
    Orbit o;
    o.rep = static_cast<int>(i);
    int cur = o.rep;
    do {
      orbit_of[static_cast<std::size_t>(cur)] = static_cast<int>(orbits.size());
      shift[static_cast<std::size_t>(cur)] = static_cast<int>(o.members.size());
      o.members.push_back(cur);
      cur = perm[static_cast<std::size_t>(cur)];
    } while (cur != o.rep);
    orbits.push_back(std::move(o));
  }
}

}  // namespace

int QuiverWithAut::order() const {
  int n = 1;
  auto cycle_lcm = [&n](const std::vector<int>& perm) {
    std::vector<char> seen(perm.size(), 0);
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (auto j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
        seen[j] = 1;
        ++len;
      }
      n = std::lcm(n, len);
    }
  };
  cycle_lcm(aut_vertices);
  cycle_lcm(aut_arrows);
  return n;
}

OrbitData validate(const QuiverWithAut& q) {
  const std::size_t nv = q.vertices.size();
  const std::size_t na = q.arrows.size();
  if (!is_permutation(q.aut_vertices, nv))
    throw Error(ErrorKind::DimensionMismatch, "vertex automorphism is not a permutation of I");
  if (!is_permutation(q.aut_arrows, na))
    throw Error(ErrorKind::DimensionMismatch, "arrow automorphism is not a permutation of H");
  for (const auto& h : q.arrows) {
    if (h.source < 0 || h.target < 0 || static_cast<std::size_t>(h.source) >= nv ||
        static_cast<std::size_t>(h.target) >= nv)
      throw Error(ErrorKind::DimensionMismatch, "arrow " + h.name + " has an endpoint outside I");
    if (h.source == h.target) throw Error(ErrorKind::HasLoop, h.name);
  }
  for (std::size_t h = 0; h < na; ++h) {
    const auto& arrow = q.arrows[h];
    const auto& image = q.arrows[static_cast<std::size_t>(q.aut_arrows[h])];
    if (q.aut_vertices[static_cast<std::size_t>(arrow.source)] != image.source ||
        q.aut_vertices[static_cast<std::size_t>(arrow.target)] != image.target)
      throw Error(ErrorKind::NotEquivariant, arrow.name);
  }

  OrbitData od;
  orbits_of(q.aut_vertices, od.vertex_orbits, od.vertex_orbit_of, od.vertex_shift);
  orbits_of(q.aut_arrows, od.arrow_orbits, od.arrow_orbit_of, od.arrow_shift);
  for (const auto& h : q.arrows) {
    if (od.vertex_orbit_of[static_cast<std::size_t>(h.source)] == od.vertex_orbit_of[static_cast<std::size_t>(h.target)])
      throw Error(ErrorKind::NotAdmissible, h.name);
  }
  od.N = 1;
  for (const auto& o : od.vertex_orbits) od.N = std::lcm(od.N, o.size());
  for (const auto& o : od.arrow_orbits) od.N = std::lcm(od.N, o.size());
  od.order_n = q.order();
  return od;
}

int DimVector::total() const { return std::accumulate(v_.begin(), v_.end(), 0); }

bool DimVector::is_zero() const {
  for (int x : v_)
    if (x != 0) return false;
  return true;
}

bool DimVector::operator<=(const DimVector& o) const {
  if (v_.size() != o.v_.size()) throw Error(ErrorKind::DimensionMismatch, "dimension vector lengths differ");
  for (std::size_t i = 0; i < v_.size(); ++i)
    if (v_[i] > o.v_[i]) return false;
  return true;
}

std::string DimVector::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < v_.size(); ++i) os << (i ? "," : "") << v_[i];
  return os.str();
}

DimVector operator+(const DimVector& a, const DimVector& b) {
  if (a.v_.size() != b.v_.size()) throw Error(ErrorKind::DimensionMismatch, "dimension vector lengths differ");
  std::vector<int> out(a.v_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.v_[i] + b.v_[i];
  return DimVector(std::move(out));
}

DimVector operator-(const DimVector& a, const DimVector& b) {
  if (a.v_.size() != b.v_.size()) throw Error(ErrorKind::DimensionMismatch, "dimension vector lengths differ");
  std::vector<int> out(a.v_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a.v_[i] - b.v_[i];
    if (out[i] < 0) throw Error(ErrorKind::GradingMismatch, a.str() + " - " + b.str() + " is negative");
  }
  return DimVector(std::move(out));
}

Folded::Folded(QuiverWithAut q) : q_(std::move(q)), od_(validate(q_)) {}

DimVector Folded::dim(std::vector<int> entries) const {
  if (entries.size() != q_.vertices.size())
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(q_.vertices.size()) + " entries");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] < 0) throw Error(ErrorKind::DimensionMismatch, "negative entry");
    if (entries[i] != entries[static_cast<std::size_t>(q_.aut_vertices[i])])
      throw Error(ErrorKind::NotInvariant, "vector is not a-invariant at vertex " + q_.vertices[i]);
  }
  return DimVector(std::move(entries));
}

DimVector Folded::dim_from_orbits(const std::vector<int>& per_orbit) const {
  if (per_orbit.size() != od_.vertex_orbits.size())
    throw Error(ErrorKind::DimensionMismatch, "expected one entry per vertex orbit");
  std::vector<int> v(q_.vertices.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = per_orbit[static_cast<std::size_t>(od_.vertex_orbit_of[i])];
    if (v[i] < 0) throw Error(ErrorKind::DimensionMismatch, "negative entry");
  }
  return DimVector(std::move(v));
}

DimVector Folded::zero() const { return DimVector(std::vector<int>(q_.vertices.size(), 0)); }

DimVector Folded::simple(int vertex_orbit) const {
  std::vector<int> per(od_.vertex_orbits.size(), 0);
  per.at(static_cast<std::size_t>(vertex_orbit)) = 1;
  return dim_from_orbits(per);
}

std::vector<int> Folded::orbit_entries(const DimVector& v) const {
  std::vector<int> out;
  out.reserve(od_.vertex_orbits.size());
  for (const auto& o : od_.vertex_orbits) out.push_back(v[static_cast<std::size_t>(o.rep)]);
  return out;
}

std::vector<DimVector> Folded::below(const DimVector& bound) const {
  const auto top = orbit_entries(bound);
  std::vector<int> cur(top.size(), 0);
  std::vector<DimVector> out;
  while (true) {
    out.push_back(dim_from_orbits(cur));
    std::size_t k = cur.size();
    while (k > 0 && cur[k - 1] == top[k - 1]) cur[--k] = 0;
    if (k == 0) return out;
    ++cur[k - 1];
  }
}

std::vector<DimVector> Folded::up_to_total(int max_total) const {
  const std::size_t n = od_.vertex_orbits.size();
  std::vector<int> cur(n, 0);
  std::vector<DimVector> out;
  auto weight = [&] {
    int w = 0;
    for (std::size_t k = 0; k < n; ++k) w += cur[k] * od_.vertex_orbits[k].size();
    return w;
  };
  while (true) {
    if (weight() <= max_total) out.push_back(dim_from_orbits(cur));
    std::size_t k = n;
    bool advanced = false;
    while (k > 0) {
      --k;
      ++cur[k];
      if (weight() <= max_total) {
        advanced = true;
        break;
      }
      cur[k] = 0;
    }
    if (!advanced) return out;
  }
}

std::vector<int> Folded::act(const std::vector<int>& v) const {
  std::vector<int> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[static_cast<std::size_t>(q_.aut_vertices[i])];
  return out;
}

std::int64_t euler_form(const QuiverWithAut& q, const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != q.vertices.size() || b.size() != q.vertices.size())
    throw Error(ErrorKind::DimensionMismatch, "dimension vector length does not match the quiver");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<std::int64_t>(a[i]) * b[i];
  for (const auto& h : q.arrows)
    s -= static_cast<std::int64_t>(a[static_cast<std::size_t>(h.source)]) * b[static_cast<std::size_t>(h.target)];
  return s;
}

std::int64_t euler_form(const Folded& q, const DimVector& a, const DimVector& b) {
  return euler_form(q.quiver(), a.entries(), b.entries());
}

std::int64_t symmetric_form(const Folded& q, const DimVector& a, const DimVector& b) {
  return euler_form(q, a, b) + euler_form(q, b, a);
}

std::int64_t diagonal_sum(const DimVector& a, const DimVector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dimension vector lengths differ");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<std::int64_t>(a[i]) * b[i];
  return s;
}

std::int64_t arrow_sum(const Folded& q, const DimVector& a, const DimVector& b) {
  std::int64_t s = 0;
  for (const auto& h : q.quiver().arrows)
    s += static_cast<std::int64_t>(a[static_cast<std::size_t>(h.source)]) * b[static_cast<std::size_t>(h.target)];
  return s;
}

std::vector<Lambda> enumerate_lambda(const Folded& q, const DimVector& a, const DimVector& b,
                                     const DimVector& a_prime, const DimVector& b_prime) {
  if (a + b != a_prime + b_prime)
    throw Error(ErrorKind::GradingMismatch, "alpha+beta != alpha'+beta'");
  const auto av = q.orbit_entries(a);
  const auto apv = q.orbit_entries(a_prime);
  std::vector<int> cap(av.size());
  for (std::size_t k = 0; k < cap.size(); ++k) cap[k] = std::min(av[k], apv[k]);
  std::vector<Lambda> out;
  for (const auto& a1 : q.below(q.dim_from_orbits(cap))) {
    const DimVector a2 = a - a1;
    const DimVector b1 = a_prime - a1;
    if (!(a2 <= b_prime) || !(b1 <= b)) continue;
    const DimVector b2 = b - b1;
    if (b2 != b_prime - a2) continue;
    out.push_back(Lambda{a1, a2, b1, b2});
  }
  return out;
}

ShiftTerms shift_terms(const Folded& q, const DimVector& a, const DimVector& b, const DimVector& a_prime,
                       const DimVector& b_prime, const Lambda& l) {
  if (l.a1 + l.a2 != a || l.b1 + l.b2 != b || l.a1 + l.b1 != a_prime || l.a2 + l.b2 != b_prime)
    throw Error(ErrorKind::GradingMismatch, "lambda does not refine the given splittings");
  ShiftTerms t;
  t.M = diagonal_sum(a, b) + arrow_sum(q, a, b) - euler_form(q, a_prime, b_prime);
  t.r = arrow_sum(q, l.a1, l.a2) + arrow_sum(q, l.a1, l.b2) + arrow_sum(q, l.b1, l.b2) + diagonal_sum(l.a2, l.b1);
  t.r_prime = t.r - arrow_sum(q, l.a1, l.a2) - arrow_sum(q, l.b1, l.b2);
  t.N = -euler_form(q, l.a1, l.a2) - euler_form(q, l.b1, l.b2) + diagonal_sum(l.a1, l.b1) +
        diagonal_sum(l.a2, l.b2) + arrow_sum(q, l.a1, l.b1) + arrow_sum(q, l.a2, l.b2);
  t.sym_a2_b1 = symmetric_form(q, l.a2, l.b1);
  return t;
}

bool shift_identity_check(const Folded& q, const DimVector& a, const DimVector& b, const DimVector& a_prime,
                          const DimVector& b_prime, const Lambda& lambda) {
  return shift_terms(q, a, b, a_prime, b_prime, lambda).holds();
}

}  // namespace hallq::quiver
