// hallq: orbit tables, Hall numbers and verification reports for a quiver
// with automorphism over a finite field.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include "hallq/checks.hpp"
#include "hallq/error.hpp"
#include "hallq/io.hpp"

namespace {

using namespace hallq;

enum Exit { kPass = 0, kFail = 1, kResource = 2, kInput = 3 };

struct Flags {
  std::string quiver;
  int q_power = 0;
  int max_total_dim = 3;
  std::string dim;
  std::string cache;
  int jobs = 0;
  std::uint64_t seed = 1;
  int shift_samples = 500;
  std::string out;
  bool omit_timing = false;
  bool serial = false;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--quiver", f.quiver, "Quiver spec file (JSON)")->required()->check(CLI::ExistingFile);
  cmd->add_option("--q-power", f.q_power, "Extension degree e; q = p^e with p from the spec file")->check(CLI::PositiveNumber);
  cmd->add_option("--max-total-dim", f.max_total_dim, "Bound on the total dimension")->check(CLI::NonNegativeNumber);
  cmd->add_option("--cache", f.cache, "Table cache directory")->envname("HALLQ_CACHE");
  cmd->add_option("--jobs", f.jobs, "OpenMP threads for the kernels")->check(CLI::PositiveNumber);
  cmd->add_option("--out", f.out, "Output file (default: stdout)");
  cmd->add_flag("--serial", f.serial, "Use the serial reference kernels");
}

int exit_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::SpaceTooLarge: return kResource;
    case ErrorKind::ParseError:
    case ErrorKind::NonPrime:
    case ErrorKind::FieldTooLarge:
    case ErrorKind::NoIrreducibleFound:
    case ErrorKind::HasLoop:
    case ErrorKind::NotEquivariant:
    case ErrorKind::NotAdmissible:
    case ErrorKind::NotInvariant:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::GradingMismatch: return kInput;
    default: return kFail;
  }
}

struct Session {
  std::shared_ptr<quiver::Folded> folded;
  std::unique_ptr<hall::Workbench> wb;
  std::shared_ptr<io::DiskCache> cache;
};

Session open_session(const Flags& f) {
  io::QuiverSpec spec = io::load_quiver_spec(f.quiver);
  if (f.q_power > 0) spec.e = f.q_power;
  Session s;
  s.folded = std::make_shared<quiver::Folded>(spec.quiver);
  if (!f.cache.empty()) s.cache = std::make_shared<io::DiskCache>(f.cache, &std::cerr);
  hall::Options opts;
  opts.exec = f.serial ? rep::Exec::Serial : rep::Exec::Parallel;
  s.wb = std::make_unique<hall::Workbench>(rep::make_context(*s.folded, spec.p, spec.e), opts, s.cache);
  if (f.jobs > 0) omp_set_num_threads(f.jobs);
  return s;
}

quiver::DimVector parse_dim(const quiver::Folded& Q, const std::string& text) {
  std::vector<int> entries;
  std::stringstream in(text);
  for (std::string part; std::getline(in, part, ',');) {
    try {
      std::size_t used = 0;
      entries.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "--dim: '" + part + "' is not an integer");
    }
  }
  return Q.dim(entries);
}

template <class Fn>
int with_output(const std::string& path, Fn&& body) {
  if (path.empty()) return body(std::cout);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return kInput;
  }
  return body(out);
}

int cmd_orbits(const Flags& f) {
  Session s = open_session(f);
  std::vector<quiver::DimVector> dims;
  if (!f.dim.empty())
    dims.push_back(parse_dim(*s.folded, f.dim));
  else
    dims = s.folded->up_to_total(f.max_total_dim);
  for (const auto& nu : dims) s.wb->build_orbits(nu);
  return with_output(f.out, [&](std::ostream& out) {
    bool header = true;
    for (const auto& nu : dims) {
      io::write_orbits_tsv(out, *s.wb, nu, header);
      header = false;
    }
    return kPass;
  });
}

int cmd_hall(const Flags& f) {
  Session s = open_session(f);
  const auto dims = s.folded->up_to_total(f.max_total_dim);
  std::optional<quiver::DimVector> only;
  if (!f.dim.empty()) only = parse_dim(*s.folded, f.dim);
  std::vector<std::pair<quiver::DimVector, quiver::DimVector>> gradings;
  for (const auto& a : dims)
    for (const auto& b : dims) {
      const auto total = a + b;
      if (only ? total != *only : total.total() > f.max_total_dim) continue;
      s.wb->build_hall(a, b);
      gradings.emplace_back(a, b);
    }
  if (only && gradings.empty()) throw Error(ErrorKind::GradingMismatch, "--dim exceeds --max-total-dim");
  return with_output(f.out, [&](std::ostream& out) {
    bool header = true;
    for (const auto& [a, b] : gradings) {
      io::write_hall_tsv(out, *s.wb, a, b, header);
      header = false;
    }
    return kPass;
  });
}

int cmd_check(const Flags& f, const std::string& name) {
  Session s = open_session(f);
  checks::Params params;
  params.max_total_dim = f.max_total_dim;
  params.seed = f.seed;
  params.shift_samples = f.shift_samples;
  const auto result = checks::run_check(*s.wb, name, params);
  const auto report = checks::report(result, *s.wb, params, !f.omit_timing);
  std::cerr << name << ": " << (result.passed() ? "pass" : "FAIL") << " (" << result.instances << " instances, "
            << result.failure_count << " failures)\n";
  return with_output(f.out, [&](std::ostream& out) {
    out << report.dump(2) << "\n";
    return result.passed() ? kPass : kFail;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hall algebras of quivers with automorphism over finite fields"};
  app.require_subcommand(1);
  Flags f;

  auto* orbits = app.add_subcommand("orbits", "Orbit table TSV");
  add_common(orbits, f);
  orbits->add_option("--dim", f.dim, "Single dimension vector, one entry per vertex in name order (e.g. 1,1)");

  auto* hall = app.add_subcommand("hall", "Hall-number TSV for all gradings within the bound");
  add_common(hall, f);
  hall->add_option("--dim", f.dim, "Restrict to gradings with this total dimension vector");

  std::string check_name;
  auto* check = app.add_subcommand("check", "Run a verification sweep and emit a JSON report");
  add_common(check, f);
  check->add_option("name", check_name, "Check to run")->required()->check(CLI::IsMember(hallq::checks::check_names()));
  check->add_option("--seed", f.seed, "Seed for sampled checks");
  check->add_option("--shift-samples", f.shift_samples, "Random tuples for the shift check")->check(CLI::PositiveNumber);
  check->add_flag("--omit-timing", f.omit_timing, "Leave wall_time_s out of the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*orbits) return cmd_orbits(f);
    if (*hall) return cmd_hall(f);
    return cmd_check(f, check_name);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
}
