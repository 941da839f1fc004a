#pragma once

// Hall numbers by submodule enumeration, extension counts by fiber
// enumeration, and the counting identities relating them.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "hallq/repspace.hpp"

namespace hallq::hall {

using quiver::DimVector;
using rep::Exec;

// n / d in lowest terms.
inline mpq_class ratio(const mpz_class& n, const mpz_class& d) {
  mpq_class r(n, d);
  r.canonicalize();
  return r;
}

struct ModuleClass {
  DimVector dim;
  std::uint32_t orbit = 0;

  friend bool operator==(const ModuleClass&, const ModuleClass&) = default;
  friend auto operator<=>(const ModuleClass& a, const ModuleClass& b) {
    if (auto c = a.dim <=> b.dim; c != 0) return c;
    return a.orbit <=> b.orbit;
  }
};

// Hall numbers g^L_{MN} for one grading: M runs over classes of dimension
// quot, N over classes of dimension sub, L over classes of quot + sub.
struct HallTable {
  DimVector quot;
  DimVector sub;
  DimVector total;
  std::size_t num_quot = 0;
  std::size_t num_sub = 0;
  // counts[L][M * num_sub + N]
  std::vector<std::vector<std::uint64_t>> counts;

  std::uint64_t g(std::uint32_t M, std::uint32_t N, std::uint32_t L) const {
    return counts[L][static_cast<std::size_t>(M) * num_sub + N];
  }
  // Number of stable subspaces of dimension sub in L.
  std::uint64_t stable_subspaces(std::uint32_t L) const;
};

// Persistence hook for tables; the CLI provides an on-disk implementation.
class TableStore {
 public:
  virtual ~TableStore() = default;
  virtual std::optional<rep::OrbitTable> load_orbits(const rep::Context& ctx, const DimVector& nu) = 0;
  virtual void store_orbits(const rep::Context& ctx, const rep::OrbitTable& table) = 0;
  virtual std::optional<HallTable> load_hall(const rep::Context& ctx, const DimVector& quot, const DimVector& sub) = 0;
  virtual void store_hall(const rep::Context& ctx, const HallTable& table) = 0;
};

struct Options {
  Exec exec = Exec::Parallel;
  std::uint64_t max_points = rep::kDefaultMaxPoints;
  std::uint64_t max_families = std::uint64_t{1} << 24;
  // When false, tables must be built explicitly; lookups of unbuilt tables
  // throw MissingOrbitTable / MissingHallTable.
  bool lazy = true;
};

// Owns the context and every table computed for it. Safe to share between
// threads; each table is built once.
class Workbench {
 public:
  explicit Workbench(rep::Context ctx, Options opts = {}, std::shared_ptr<TableStore> store = nullptr);

  const rep::Context& ctx() const noexcept { return ctx_; }
  const quiver::Folded& quiver() const noexcept { return *ctx_.quiver; }
  const Options& options() const noexcept { return opts_; }
  std::int64_t q() const { return ctx_.q(); }

  const rep::Layout& layout(const DimVector& nu);
  const rep::OrbitTable& orbits(const DimVector& nu);
  const HallTable& hall(const DimVector& quot, const DimVector& sub);
  void build_orbits(const DimVector& nu) { (void)orbits_impl(nu, true); }
  void build_hall(const DimVector& quot, const DimVector& sub) { (void)hall_impl(quot, sub, true); }

  std::vector<ModuleClass> classes(const DimVector& nu);
  rep::Point point(const ModuleClass& M);
  const mpz_class& aut(const ModuleClass& M);
  ModuleClass zero_class();
  // The semisimple class of dimension vector nu (the zero point).
  ModuleClass semisimple(const DimVector& nu);

  int hom_dim(const ModuleClass& M, const ModuleClass& N);
  int ext_dim(const ModuleClass& M, const ModuleClass& N);

  // For quotient M and submodule N: how many extension blocks y give a middle
  // term in each orbit of dim M + dim N.
  const std::vector<std::uint64_t>& fiber_histogram(const ModuleClass& M, const ModuleClass& N);
  // prod over arrow-orbit representatives of q^{d_h nu'_{s(h)} nu''_{t(h)}}.
  mpz_class fiber_size(const DimVector& quot, const DimVector& sub);

  // (quotient orbit, sub orbit) histogram over all stable subspaces of
  // dimension sub of the point x of dimension nu.
  std::vector<std::uint64_t> subspace_histogram(const DimVector& nu, const rep::Point& x, const DimVector& sub);

 private:
  const rep::OrbitTable& orbits_impl(const DimVector& nu, bool build);
  const HallTable& hall_impl(const DimVector& quot, const DimVector& sub, bool build);

  rep::Context ctx_;
  Options opts_;
  std::shared_ptr<TableStore> store_;
  std::recursive_mutex mu_;
  std::map<DimVector, std::unique_ptr<rep::Layout>> layouts_;
  std::map<DimVector, std::unique_ptr<rep::OrbitTable>> orbit_tables_;
  std::map<std::pair<DimVector, DimVector>, std::unique_ptr<HallTable>> hall_tables_;
  std::map<std::pair<ModuleClass, ModuleClass>, std::unique_ptr<std::vector<std::uint64_t>>> fibers_;
};

// One x-stable, Frobenius-rational subspace family of a representation.
struct SubmoduleRecord {
  std::vector<linalg::Mat> family;  // RREF basis per vertex-orbit representative
  ModuleClass quotient;
  ModuleClass sub;
};

// Throws GradingMismatch unless sub <= dim L.
std::vector<SubmoduleRecord> submodules(Workbench& wb, const ModuleClass& L, const DimVector& sub);

// Throws GradingMismatch unless dim M + dim N = dim L.
std::uint64_t hall_number(Workbench& wb, const ModuleClass& M, const ModuleClass& N, const ModuleClass& L);

struct ExtCounts {
  mpz_class fiber_size;
  int hom = 0;                    // dim Hom(M, N)
  int ext = 0;                    // hom - <dim M, dim N>
  std::optional<int> ext_from_fiber;  // log_q(|fiber| / fiber_count(M + N))
  std::vector<std::uint64_t> fiber_count;  // per orbit of dim M + dim N
  std::vector<mpz_class> ext_L;            // |Ext^1(M, N)_L|
};

// Throws NonIntegerExtCount if some |Ext^1(M,N)_L| is not an integer.
ExtCounts ext_counts(Workbench& wb, const ModuleClass& M, const ModuleClass& N);

struct IdentitySides {
  mpq_class lhs;
  mpq_class rhs;
  bool holds() const { return lhs == rhs; }
};

// g^L_{MN} against |Ext^1(M,N)_L| a_L / (|Hom(M,N)| a_M a_N).
IdentitySides riedtmann_peng(Workbench& wb, const ModuleClass& M, const ModuleClass& N, const ModuleClass& L);
bool riedtmann_peng_check(Workbench& wb, const ModuleClass& M, const ModuleClass& N, const ModuleClass& L);

// Both sides of Green's formula. Throws GradingMismatch.
IdentitySides green_raw(Workbench& wb, const ModuleClass& M, const ModuleClass& N, const ModuleClass& Mp,
                        const ModuleClass& Np);
bool green_raw_check(Workbench& wb, const ModuleClass& M, const ModuleClass& N, const ModuleClass& Mp,
                     const ModuleClass& Np);

// Literal count of (W, rho1, rho2) with rho1 in G_sub^F, rho2 in G_quot^F and
// the transported sub and quotient in the classes N and M. Equal to
// g^L_{MN} |G_quot^F| |G_sub^F|.
mpz_class flag_count(Workbench& wb, const ModuleClass& M, const ModuleClass& N, const ModuleClass& L);

}  // namespace hallq::hall
