#pragma once

// Quivers without loops, admissible automorphisms, orbit bookkeeping,
// a-invariant dimension vectors and the bilinear forms on them.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace hallq::quiver {

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;
};

// A quiver together with an automorphism (permutation of vertices and arrows).
// Nothing is checked at construction; validate() does that.
struct QuiverWithAut {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<int> aut_vertices;  // i -> a(i)
  std::vector<int> aut_arrows;    // h -> a(h)

  // Smallest n >= 1 with a^n = id on vertices and arrows.
  int order() const;
};

struct Orbit {
  int rep = 0;               // smallest member
  std::vector<int> members;  // members[m] = a^m(rep)
  int size() const { return static_cast<int>(members.size()); }
};

struct OrbitData {
  std::vector<Orbit> vertex_orbits;
  std::vector<Orbit> arrow_orbits;
  std::vector<int> vertex_orbit_of;  // per vertex
  std::vector<int> vertex_shift;     // i = a^{shift}(rep)
  std::vector<int> arrow_orbit_of;
  std::vector<int> arrow_shift;
  int N = 1;        // lcm of all orbit sizes present
  int order_n = 1;  // order of the automorphism
};

// Throws Error{HasLoop, NotEquivariant, NotAdmissible} naming the arrow, or
// DimensionMismatch for malformed permutations.
OrbitData validate(const QuiverWithAut& q);

class Folded;

// a-invariant dimension vector, full length |I|. Only Folded can mint one, so a
// non-invariant vector is unrepresentable.
class DimVector {
 public:
  DimVector() = default;

  const std::vector<int>& entries() const noexcept { return v_; }
  int operator[](std::size_t i) const { return v_[i]; }
  std::size_t size() const noexcept { return v_.size(); }
  int total() const;  // sum over all vertices: dimension over F_q
  bool is_zero() const;
  bool operator<=(const DimVector& o) const;  // componentwise
  std::string str() const;                    // "1,0,1"

  friend bool operator==(const DimVector&, const DimVector&) = default;
  friend std::strong_ordering operator<=>(const DimVector& a, const DimVector& b) { return a.v_ <=> b.v_; }
  friend DimVector operator+(const DimVector& a, const DimVector& b);
  // Throws GradingMismatch when a component goes negative.
  friend DimVector operator-(const DimVector& a, const DimVector& b);

 private:
  friend class Folded;
  explicit DimVector(std::vector<int> v) : v_(std::move(v)) {}
  std::vector<int> v_;
};

// A validated quiver with automorphism.
class Folded {
 public:
  explicit Folded(QuiverWithAut q);

  const QuiverWithAut& quiver() const noexcept { return q_; }
  const OrbitData& orbits() const noexcept { return od_; }
  int num_vertices() const { return static_cast<int>(q_.vertices.size()); }
  int num_vertex_orbits() const { return static_cast<int>(od_.vertex_orbits.size()); }
  int num_arrow_orbits() const { return static_cast<int>(od_.arrow_orbits.size()); }

  // Throws NotInvariant / DimensionMismatch.
  DimVector dim(std::vector<int> entries) const;
  // One entry per vertex orbit.
  DimVector dim_from_orbits(const std::vector<int>& per_orbit) const;
  DimVector zero() const;
  // Indicator of a vertex orbit (the simple of that orbit).
  DimVector simple(int vertex_orbit) const;
  // Entry at each vertex-orbit representative.
  std::vector<int> orbit_entries(const DimVector& v) const;

  // All a-invariant vectors below the bound, componentwise, in lexicographic
  // order of orbit entries.
  std::vector<DimVector> below(const DimVector& bound) const;
  // All a-invariant vectors with total() <= max_total.
  std::vector<DimVector> up_to_total(int max_total) const;
  // The permutation action (a.v)_i = v_{a(i)} on arbitrary integer vectors.
  std::vector<int> act(const std::vector<int>& v) const;

 private:
  QuiverWithAut q_;
  OrbitData od_;
};

// <v', v''> = sum_i v'_i v''_i - sum_h v'_{s(h)} v''_{t(h)}, literal sums over
// all of I and H. Defined on plain integer vectors so it can be tested off the
// invariant lattice.
std::int64_t euler_form(const QuiverWithAut& q, const std::vector<int>& a, const std::vector<int>& b);
std::int64_t euler_form(const Folded& q, const DimVector& a, const DimVector& b);
std::int64_t symmetric_form(const Folded& q, const DimVector& a, const DimVector& b);
// sum_i a_i b_i
std::int64_t diagonal_sum(const DimVector& a, const DimVector& b);
// sum_h a_{s(h)} b_{t(h)}
std::int64_t arrow_sum(const Folded& q, const DimVector& a, const DimVector& b);

struct Lambda {
  DimVector a1, a2, b1, b2;
  friend bool operator==(const Lambda&, const Lambda&) = default;
};

// All lambda = (a1, a2, b1, b2) of a-invariant vectors with a = a1 + a2,
// b = b1 + b2, a' = a1 + b1, b' = a2 + b2, ordered lexicographically by a1.
// Throws GradingMismatch unless a + b == a' + b'.
std::vector<Lambda> enumerate_lambda(const Folded& q, const DimVector& a, const DimVector& b,
                                     const DimVector& a_prime, const DimVector& b_prime);

struct ShiftTerms {
  std::int64_t M = 0;
  std::int64_t r = 0;
  std::int64_t r_prime = 0;
  std::int64_t N = 0;
  std::int64_t sym_a2_b1 = 0;
  bool holds() const { return M - 2 * r_prime == N - sym_a2_b1; }
};

// Evaluates the normalisation shifts on both sides of the Res∘Ind
// decomposition for one lambda. Throws GradingMismatch if lambda does not
// refine (a, b, a', b').
ShiftTerms shift_terms(const Folded& q, const DimVector& a, const DimVector& b, const DimVector& a_prime,
                       const DimVector& b_prime, const Lambda& lambda);
bool shift_identity_check(const Folded& q, const DimVector& a, const DimVector& b, const DimVector& a_prime,
                          const DimVector& b_prime, const Lambda& lambda);

}  // namespace hallq::quiver
