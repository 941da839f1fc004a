#pragma once

// Fixed points of the representation space E_nu under the twisted Frobenius,
// the group G_nu^F acting on them, orbit decompositions and Hom dimensions.
//
// Only the matrices at arrow-orbit representatives are stored. The matrix at
// a^m(h) is Frob^m applied entrywise to the matrix at h, and the group element
// at a^m(i) is Frob^m of the one at the vertex-orbit representative i.

#include <cstdint>
#include <memory>
#include <vector>

#include <gmpxx.h>

#include "hallq/gf.hpp"
#include "hallq/linalg.hpp"
#include "hallq/quiver.hpp"

namespace hallq::rep {

using gf::Elem;
using linalg::Mat;
using quiver::DimVector;
using quiver::Folded;

inline constexpr std::uint64_t kDefaultMaxPoints = std::uint64_t{1} << 22;

// A validated quiver together with the ambient field F_{q^N}.
struct Context {
  std::shared_ptr<const Folded> quiver;
  gf::FieldPtr field;

  std::int64_t q() const { return field->q(); }
  int p() const { return field->p(); }
  int e() const { return field->e(); }
};

// ambient_N = 0 picks the lcm of the orbit sizes; any positive multiple of it
// is accepted as an override.
Context make_context(const Folded& q, int p, int e, int ambient_N = 0);

// One matrix per arrow-orbit representative.
using Point = std::vector<Mat>;
// One invertible matrix per vertex-orbit representative.
using GroupElem = std::vector<Mat>;

struct Block {
  int arrow_orbit = 0;
  int arrow = 0;  // representative arrow
  int rows = 0;   // nu at the target
  int cols = 0;   // nu at the source
  int d = 1;      // arrow-orbit size
  std::size_t first_entry = 0;
};

// Mixed-radix encoding of the points of E_nu^F. Each entry contributes the
// position of its value inside F_{q^{d_h}}; blocks are taken in arrow-orbit
// order and entries row-major, the first entry being the most significant
// digit. Code order is therefore lexicographic order of entry encodings.
class Layout {
 public:
  // Throws SpaceTooLarge above max_points.
  Layout(const Context& ctx, const DimVector& nu, std::uint64_t max_points = kDefaultMaxPoints);

  const DimVector& dim() const noexcept { return nu_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::uint64_t num_points() const noexcept { return num_points_; }
  std::size_t num_entries() const noexcept { return stride_.size(); }
  std::uint64_t stride(std::size_t entry) const { return stride_[entry]; }
  std::uint64_t radix(std::size_t entry) const { return radix_[entry]; }
  std::size_t entry_index(int block, int r, int c) const {
    const auto& b = blocks_[static_cast<std::size_t>(block)];
    return b.first_entry + static_cast<std::size_t>(r) * static_cast<std::size_t>(b.cols) + static_cast<std::size_t>(c);
  }

  Point decode(std::uint64_t code) const;
  std::uint64_t encode(const Point& x) const;
  Point zero_point() const;

 private:
  const gf::Field* field_;
  DimVector nu_;
  std::vector<Block> blocks_;
  std::vector<std::uint64_t> stride_;
  std::vector<std::uint64_t> radix_;
  std::uint64_t num_points_ = 1;
};

std::vector<Point> enumerate_points(const Layout& layout);

// Product over vertex-orbit representatives of |GL_{nu_i}(F_{q^{d_i}})|.
mpz_class group_order(const Context& ctx, const DimVector& nu);

GroupElem identity_element(const Context& ctx, const DimVector& nu);
GroupElem group_multiply(const Context& ctx, const GroupElem& g, const GroupElem& h);
// Throws DimensionMismatch on shape errors.
Point act(const Context& ctx, const GroupElem& g, const Point& x);

// The standard generating set of G_nu^F: transvections over an F_p-basis of
// each F_{q^{d_i}} and one diagonal generator of the multiplicative group.
std::vector<GroupElem> generators(const Context& ctx, const DimVector& nu);

// Every element of G_nu^F, for literal enumerations on tiny groups.
std::vector<GroupElem> all_group_elements(const Context& ctx, const DimVector& nu);

// The full Frobenius applied to a point, read back at the representatives:
// Frob^{d_h} of every block. Equal to x for every valid point.
Point frobenius_closure(const Context& ctx, const Point& x);

struct OrbitInfo {
  std::uint64_t rep_code = 0;  // least point of the orbit
  std::uint64_t size = 0;
  mpz_class aut;  // |G_nu^F| / size
};

struct OrbitTable {
  DimVector dim;
  mpz_class group_order;
  std::vector<OrbitInfo> orbits;  // numbered by least point
  std::vector<std::uint32_t> label;  // point code -> orbit id

  std::size_t num_orbits() const { return orbits.size(); }
  std::uint32_t orbit_of(std::uint64_t code) const { return label[code]; }
};

enum class Exec { Serial, Parallel };

// Throws SpaceTooLarge, NonExactDivision.
OrbitTable orbit_table(const Context& ctx, const DimVector& nu, Exec exec = Exec::Parallel,
                       std::uint64_t max_points = kDefaultMaxPoints);

// Assembles a table from precomputed labels, recomputing sizes and aut orders.
OrbitTable table_from_labels(const Context& ctx, const DimVector& nu, std::vector<std::uint32_t> labels);

// dim over F_q of Hom between the representations x (dimension nu) and
// y (dimension mu).
int hom_dim(const Context& ctx, const DimVector& nu, const Point& x, const DimVector& mu, const Point& y);
// hom_dim - euler_form; throws NegativeExt.
int ext_dim(const Context& ctx, const DimVector& nu, const Point& x, const DimVector& mu, const Point& y);

}  // namespace hallq::rep
