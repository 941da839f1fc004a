#include "hallq/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>
#include <openssl/evp.h>

#include "hallq/error.hpp"

namespace hallq::io {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

std::string require_string(const json& j, const std::string& where) {
  if (!j.is_string()) parse_fail(where + ": expected a string");
  return j.get<std::string>();
}

int require_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) parse_fail(where + ": expected an integer");
  return j.get<int>();
}

std::map<std::string, int> index_of(const std::vector<std::string>& names, const std::string& what) {
  std::map<std::string, int> idx;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!idx.emplace(names[i], static_cast<int>(i)).second) parse_fail("duplicate " + what + " name '" + names[i] + "'");
  return idx;
}

std::vector<int> parse_aut(const json& doc, const char* field, const std::map<std::string, int>& idx) {
  std::vector<int> perm(idx.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  if (!doc.contains(field)) return perm;
  const json& m = doc.at(field);
  if (!m.is_object()) parse_fail(std::string(field) + ": expected an object mapping names to images");
  for (const auto& [k, v] : m.items()) {
    auto from = idx.find(k);
    if (from == idx.end()) parse_fail(std::string(field) + ": unknown name '" + k + "'");
    const std::string image = require_string(v, std::string(field) + "." + k);
    auto to = idx.find(image);
    if (to == idx.end()) parse_fail(std::string(field) + "." + k + ": unknown image '" + image + "'");
    perm[static_cast<std::size_t>(from->second)] = to->second;
  }
  return perm;
}

std::string dims_key(const quiver::DimVector& a) { return a.str(); }

}  // namespace

QuiverSpec parse_quiver_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail(e.what());
  }
  if (!doc.is_object()) parse_fail("top level: expected an object");
  for (const char* f : {"vertices", "arrows", "p"})
    if (!doc.contains(f)) parse_fail(std::string("missing field '") + f + "'");

  if (!doc["vertices"].is_array()) parse_fail("vertices: expected an array");
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < doc["vertices"].size(); ++i)
    vertices.push_back(require_string(doc["vertices"][i], "vertices[" + std::to_string(i) + "]"));
  std::sort(vertices.begin(), vertices.end());
  const auto vidx = index_of(vertices, "vertex");

  if (!doc["arrows"].is_array()) parse_fail("arrows: expected an array");
  struct RawArrow {
    std::string name, from, to;
  };
  std::vector<RawArrow> raw;
  for (std::size_t i = 0; i < doc["arrows"].size(); ++i) {
    const json& a = doc["arrows"][i];
    const std::string where = "arrows[" + std::to_string(i) + "]";
    if (!a.is_object()) parse_fail(where + ": expected an object");
    for (const char* f : {"name", "from", "to"})
      if (!a.contains(f)) parse_fail(where + ": missing '" + f + "'");
    raw.push_back({require_string(a["name"], where + ".name"), require_string(a["from"], where + ".from"),
                   require_string(a["to"], where + ".to")});
  }
  std::sort(raw.begin(), raw.end(), [](const RawArrow& x, const RawArrow& y) { return x.name < y.name; });
  std::vector<std::string> arrow_names;
  for (const auto& a : raw) arrow_names.push_back(a.name);
  const auto aidx = index_of(arrow_names, "arrow");

  QuiverSpec spec;
  spec.quiver.vertices = vertices;
  for (const auto& a : raw) {
    auto s = vidx.find(a.from), t = vidx.find(a.to);
    if (s == vidx.end()) parse_fail("arrow " + a.name + ": unknown source '" + a.from + "'");
    if (t == vidx.end()) parse_fail("arrow " + a.name + ": unknown target '" + a.to + "'");
    spec.quiver.arrows.push_back({a.name, s->second, t->second});
  }
  spec.quiver.aut_vertices = parse_aut(doc, "aut_vertices", vidx);
  spec.quiver.aut_arrows = parse_aut(doc, "aut_arrows", aidx);
  spec.p = require_int(doc["p"], "p");
  spec.e = doc.contains("e") ? require_int(doc["e"], "e") : 1;
  return spec;
}

QuiverSpec load_quiver_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_quiver_spec(text.str());
  } catch (const Error& e) {
    std::string msg = e.what();
    const std::string prefix = std::string(to_string(e.kind())) + ": ";
    if (msg.rfind(prefix, 0) == 0) msg.erase(0, prefix.size());
    throw Error(e.kind(), path.string() + ": " + msg);
  }
}

std::string canonical_form(const quiver::QuiverWithAut& q) {
  std::vector<std::string> vertices = q.vertices;
  std::sort(vertices.begin(), vertices.end());
  std::map<std::string, std::pair<std::string, std::string>> arrows;
  std::map<std::string, std::string> aut_v, aut_a;
  for (const auto& a : q.arrows)
    arrows[a.name] = {q.vertices[static_cast<std::size_t>(a.source)], q.vertices[static_cast<std::size_t>(a.target)]};
  for (std::size_t i = 0; i < q.vertices.size(); ++i)
    aut_v[q.vertices[i]] = q.vertices[static_cast<std::size_t>(q.aut_vertices[i])];
  for (std::size_t h = 0; h < q.arrows.size(); ++h)
    aut_a[q.arrows[h].name] = q.arrows[static_cast<std::size_t>(q.aut_arrows[h])].name;
  json j;
  j["vertices"] = vertices;
  j["arrows"] = arrows;
  j["aut_vertices"] = aut_v;
  j["aut_arrows"] = aut_a;
  return j.dump();
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorKind::ChecksumMismatch, "SHA-256 digest failed");
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return out.str();
}

DiskCache::DiskCache(std::filesystem::path dir, std::ostream* warnings) : dir_(std::move(dir)), warnings_(warnings) {
  std::filesystem::create_directories(dir_);
}

std::string DiskCache::key(const rep::Context& ctx, const std::string& kind, const std::string& dims) const {
  std::ostringstream k;
  k << canonical_form(ctx.quiver->quiver()) << "|p=" << ctx.p() << "|e=" << ctx.e() << "|N=" << ctx.field->N()
    << "|kind=" << kind << "|dims=" << dims << "|format=" << kFormatVersion;
  return sha256_hex(k.str());
}

std::optional<std::string> DiskCache::read_payload(const std::string& key) {
  const auto path = path_for(key);
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    ++misses_;
    return std::nullopt;
  }
  std::ostringstream text;
  text << in.rdbuf();
  const std::string s = text.str();
  const std::string marker = "checksum ";
  const auto pos = s.rfind(marker);
  const bool ok = pos != std::string::npos && (pos == 0 || s[pos - 1] == '\n') &&
                  s.substr(pos + marker.size()) == sha256_hex(s.substr(0, pos)) + "\n";
  if (!ok) {
    if (warnings_) *warnings_ << "warning: " << to_string(ErrorKind::ChecksumMismatch) << " in " << path.string() << "; recomputing\n";
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return s.substr(0, pos);
}

void DiskCache::write_payload(const std::string& key, const std::string& payload) {
  const auto final_path = path_for(key);
  std::random_device rd;
  const auto tmp = dir_ / (key + ".tmp" + std::to_string(rd()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << payload << "checksum " << sha256_hex(payload) << "\n";
    if (!out) {
      if (warnings_) *warnings_ << "warning: could not write cache file " << tmp.string() << "\n";
      return;
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, final_path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    if (warnings_) *warnings_ << "warning: could not publish cache file " << final_path.string() << "\n";
  }
}

std::optional<rep::OrbitTable> DiskCache::load_orbits(const rep::Context& ctx, const quiver::DimVector& nu) {
  const std::string k = key(ctx, "orbits", dims_key(nu));
  auto payload = read_payload(k);
  if (!payload) return std::nullopt;
  std::istringstream in(*payload);
  std::string tag, dims;
  std::uint64_t n = 0;
  in >> tag >> dims >> n;
  std::vector<std::uint32_t> labels(n);
  for (auto& l : labels) in >> l;
  if (!in || tag != "orbits" || dims != dims_key(nu)) {
    if (warnings_) *warnings_ << "warning: malformed orbit cache entry " << k << "; recomputing\n";
    return std::nullopt;
  }
  return rep::table_from_labels(ctx, nu, std::move(labels));
}

void DiskCache::store_orbits(const rep::Context& ctx, const rep::OrbitTable& table) {
  std::ostringstream out;
  out << "orbits " << dims_key(table.dim) << " " << table.label.size() << "\n";
  for (std::size_t i = 0; i < table.label.size(); ++i) out << table.label[i] << ((i + 1) % 32 == 0 ? '\n' : ' ');
  out << "\n";
  write_payload(key(ctx, "orbits", dims_key(table.dim)), out.str());
}

std::optional<hall::HallTable> DiskCache::load_hall(const rep::Context& ctx, const quiver::DimVector& quot,
                                                    const quiver::DimVector& sub) {
  const std::string dims = dims_key(quot) + "/" + dims_key(sub);
  const std::string k = key(ctx, "hall", dims);
  auto payload = read_payload(k);
  if (!payload) return std::nullopt;
  std::istringstream in(*payload);
  std::string tag, stored_dims;
  std::size_t nL = 0;
  hall::HallTable t;
  t.quot = quot;
  t.sub = sub;
  t.total = quot + sub;
  in >> tag >> stored_dims >> t.num_quot >> t.num_sub >> nL;
  t.counts.assign(nL, std::vector<std::uint64_t>(t.num_quot * t.num_sub));
  for (auto& row : t.counts)
    for (auto& c : row) in >> c;
  if (!in || tag != "hall" || stored_dims != dims) {
    if (warnings_) *warnings_ << "warning: malformed Hall cache entry " << k << "; recomputing\n";
    return std::nullopt;
  }
  return t;
}

void DiskCache::store_hall(const rep::Context& ctx, const hall::HallTable& table) {
  const std::string dims = dims_key(table.quot) + "/" + dims_key(table.sub);
  std::ostringstream out;
  out << "hall " << dims << " " << table.num_quot << " " << table.num_sub << " " << table.counts.size() << "\n";
  for (const auto& row : table.counts) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
    out << "\n";
  }
  write_payload(key(ctx, "hall", dims), out.str());
}

std::string point_string(const rep::Context& ctx, const rep::Point& x) {
  (void)ctx;
  std::ostringstream out;
  bool any = false;
  for (std::size_t b = 0; b < x.size(); ++b) {
    if (b) out << ';';
    for (std::size_t k = 0; k < x[b].a.size(); ++k) {
      out << (k ? "," : "") << x[b].a[k];
      any = true;
    }
  }
  return any ? out.str() : "-";
}

void write_orbits_tsv(std::ostream& out, hall::Workbench& wb, const quiver::DimVector& nu, bool header) {
  if (header) out << "dim\torbit_id\trepresentative\torbit_size\taut_order\n";
  const auto& t = wb.orbits(nu);
  const auto& lay = wb.layout(nu);
  for (std::size_t i = 0; i < t.num_orbits(); ++i)
    out << nu.str() << '\t' << i << '\t' << point_string(wb.ctx(), lay.decode(t.orbits[i].rep_code)) << '\t'
        << t.orbits[i].size << '\t' << t.orbits[i].aut.get_str() << '\n';
}

void write_hall_tsv(std::ostream& out, hall::Workbench& wb, const quiver::DimVector& quot, const quiver::DimVector& sub,
                    bool header) {
  if (header) out << "dim_M\tdim_N\tdim_L\tM\tN\tL\tg\n";
  const auto& t = wb.hall(quot, sub);
  for (std::uint32_t M = 0; M < t.num_quot; ++M)
    for (std::uint32_t N = 0; N < t.num_sub; ++N)
      for (std::uint32_t L = 0; L < t.counts.size(); ++L)
        if (const auto g = t.g(M, N, L); g != 0)
          out << quot.str() << '\t' << sub.str() << '\t' << t.total.str() << '\t' << M << '\t' << N << '\t' << L << '\t'
              << g << '\n';
}

}  // namespace hallq::io
