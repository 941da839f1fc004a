#pragma once

// Quiver spec files, the on-disk table cache and the TSV exports.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "hallq/hall.hpp"

namespace hallq::io {

inline constexpr int kFormatVersion = 1;

struct QuiverSpec {
  quiver::QuiverWithAut quiver;  // vertices and arrows sorted by name
  int p = 2;
  int e = 1;
};

// JSON document with fields vertices, arrows [{name, from, to}],
// aut_vertices {name: image}, aut_arrows {name: image}, p, e. Missing
// automorphism maps mean the identity. Throws Error{ParseError} with the line
// and column for syntax errors and the offending field otherwise.
QuiverSpec parse_quiver_spec(const std::string& text);
QuiverSpec load_quiver_spec(const std::filesystem::path& path);

// Name-sorted serialisation; equal for quivers that differ only in the order
// of declaration.
std::string canonical_form(const quiver::QuiverWithAut& q);

std::string sha256_hex(const std::string& data);

// Content-addressed table cache. Files are written atomically and carry a
// checksum; a corrupted file is reported on the warning stream and treated as
// a miss.
class DiskCache : public hall::TableStore {
 public:
  explicit DiskCache(std::filesystem::path dir, std::ostream* warnings = nullptr);

  std::optional<rep::OrbitTable> load_orbits(const rep::Context& ctx, const quiver::DimVector& nu) override;
  void store_orbits(const rep::Context& ctx, const rep::OrbitTable& table) override;
  std::optional<hall::HallTable> load_hall(const rep::Context& ctx, const quiver::DimVector& quot,
                                           const quiver::DimVector& sub) override;
  void store_hall(const rep::Context& ctx, const hall::HallTable& table) override;

  std::string key(const rep::Context& ctx, const std::string& kind, const std::string& dims) const;
  std::filesystem::path path_for(const std::string& key) const { return dir_ / (key + ".tbl"); }

  std::size_t hits() const noexcept { return hits_; }
  std::size_t misses() const noexcept { return misses_; }

 private:
  std::optional<std::string> read_payload(const std::string& key);
  void write_payload(const std::string& key, const std::string& payload);

  std::filesystem::path dir_;
  std::ostream* warnings_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

// Columns: dim, orbit_id, representative, orbit_size, aut_order.
void write_orbits_tsv(std::ostream& out, hall::Workbench& wb, const quiver::DimVector& nu, bool header);
// Columns: dim_M, dim_N, dim_L, M, N, L, g. Nonzero entries only.
void write_hall_tsv(std::ostream& out, hall::Workbench& wb, const quiver::DimVector& quot,
                    const quiver::DimVector& sub, bool header);

// Blocks separated by ';', entries row-major separated by ',', each entry
// written as its element index. The empty point is "-".
std::string point_string(const rep::Context& ctx, const rep::Point& x);

}  // namespace hallq::io
