#pragma once

// Verification sweeps shared by the command-line tool and the acceptance
// runner. Every sweep ranges over module classes whose dimension vectors have
// total dimension at most max_total_dim.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "hallq/hall.hpp"

namespace hallq::checks {

struct Failure {
  nlohmann::json inputs;
  std::string lhs;  // "a + b*v"
  std::string rhs;
};

struct CheckResult {
  std::string check;
  std::uint64_t instances = 0;
  std::uint64_t failure_count = 0;
  std::vector<Failure> failures;  // the first kMaxRecordedFailures
  nlohmann::json extra = nlohmann::json::object();
  double wall_time_s = 0;

  bool passed() const { return failure_count == 0; }
  void fail(nlohmann::json inputs, std::string lhs, std::string rhs);
};

inline constexpr std::size_t kMaxRecordedFailures = 200;

struct Params {
  int max_total_dim = 3;
  std::uint64_t seed = 1;
  int shift_samples = 500;
  // ind_fn is compared with the literal flag count when |G' x G''| is at most this.
  std::uint64_t flag_oracle_limit = 1000;
};

// green, bialgebra, rp, euler, phi, indres, serre, shift, orbits.
const std::vector<std::string>& check_names();

// Throws Error{ParseError} for an unknown name; SpaceTooLarge propagates.
CheckResult run_check(hall::Workbench& wb, const std::string& name, const Params& params);

CheckResult check_green(hall::Workbench& wb, const Params& params);
CheckResult check_bialgebra(hall::Workbench& wb, const Params& params);
CheckResult check_rp(hall::Workbench& wb, const Params& params);
CheckResult check_euler(hall::Workbench& wb, const Params& params);
CheckResult check_phi(hall::Workbench& wb, const Params& params);
CheckResult check_indres(hall::Workbench& wb, const Params& params);
CheckResult check_serre(hall::Workbench& wb, const Params& params);
CheckResult check_shift(hall::Workbench& wb, const Params& params);
CheckResult check_orbits(hall::Workbench& wb, const Params& params);

nlohmann::json report(const CheckResult& r, const hall::Workbench& wb, const Params& params, bool with_timing);

std::string class_label(const hall::ModuleClass& M);

}  // namespace hallq::checks
