#include "hallq/checks.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>

#include "hallq/algebra.hpp"
#include "hallq/error.hpp"
#include "hallq/functions.hpp"
#include "hallq/io.hpp"

namespace hallq::checks {

using nlohmann::json;
using algebra::HallCoeff;
using algebra::HallElement;
using algebra::TensorElement;
using hall::ModuleClass;
using hall::Workbench;
using quiver::DimVector;

namespace {

using Grading = std::pair<DimVector, DimVector>;

// Pairs (a, b) of a-invariant dimension vectors with |a| + |b| <= D.
std::vector<Grading> gradings(Workbench& wb, int D) {
  const auto dims = wb.quiver().up_to_total(D);
  std::vector<Grading> out;
  for (const auto& a : dims)
    for (const auto& b : dims)
      if ((a + b).total() <= D) out.emplace_back(a, b);
  return out;
}

std::string rational(const Workbench& wb, const mpq_class& x) { return HallCoeff(wb.q(), x).str(); }

std::string render(const HallElement& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& [M, c] : x.terms()) s += (s.empty() ? "" : "; ") + class_label(M) + ": " + c.str();
  return s;
}

std::string render(const TensorElement& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : x.terms())
    s += (s.empty() ? "" : "; ") + class_label(k.first) + " (x) " + class_label(k.second) + ": " + c.str();
  return s;
}

std::string render(const fn::InvFunction& f) {
  std::string s;
  for (std::size_t i = 0; i < f.values.size(); ++i) s += (i ? "; " : "") + std::to_string(i) + ": " + f.values[i].str();
  return s;
}

json pair_inputs(const ModuleClass& M, const ModuleClass& N) { return {{"M", class_label(M)}, {"N", class_label(N)}}; }

CheckResult timed(const std::string& name, const std::function<void(CheckResult&)>& body) {
  CheckResult r;
  r.check = name;
  const auto start = std::chrono::steady_clock::now();
  body(r);
  r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

mpz_class gaussian_binomial(const mpz_class& Q, int n, int k) {
  mpz_class num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    mpz_class a, b;
    mpz_pow_ui(a.get_mpz_t(), Q.get_mpz_t(), static_cast<unsigned long>(n - i));
    mpz_pow_ui(b.get_mpz_t(), Q.get_mpz_t(), static_cast<unsigned long>(i + 1));
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

// Number of Frobenius-stable families of subspaces of dimension sub inside nu.
mpz_class rational_grassmannian(Workbench& wb, const DimVector& nu, const DimVector& sub) {
  const auto& Q = wb.quiver();
  const auto n = Q.orbit_entries(nu);
  const auto k = Q.orbit_entries(sub);
  mpz_class total = 1;
  for (std::size_t i = 0; i < n.size(); ++i) {
    mpz_class field_size;
    const auto d = Q.orbits().vertex_orbits[i].members.size();
    mpz_ui_pow_ui(field_size.get_mpz_t(), static_cast<unsigned long>(wb.q()), static_cast<unsigned long>(d));
    total *= gaussian_binomial(field_size, n[i], k[i]);
  }
  return total;
}

}  // namespace

void CheckResult::fail(json inputs, std::string lhs, std::string rhs) {
  ++failure_count;
  if (failures.size() < kMaxRecordedFailures) failures.push_back({std::move(inputs), std::move(lhs), std::move(rhs)});
}

std::string class_label(const ModuleClass& M) { return M.dim.str() + "#" + std::to_string(M.orbit); }

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"green", "bialgebra", "rp",    "euler", "phi",
                                              "indres", "serre",    "shift", "orbits"};
  return names;
}

CheckResult run_check(Workbench& wb, const std::string& name, const Params& params) {
  static const std::map<std::string, CheckResult (*)(Workbench&, const Params&)> table{
      {"green", check_green}, {"bialgebra", check_bialgebra}, {"rp", check_rp},
      {"euler", check_euler}, {"phi", check_phi},             {"indres", check_indres},
      {"serre", check_serre}, {"shift", check_shift},         {"orbits", check_orbits}};
  auto it = table.find(name);
  if (it == table.end()) throw Error(ErrorKind::ParseError, "unknown check '" + name + "'");
  return it->second(wb, params);
}

CheckResult check_green(Workbench& wb, const Params& params) {
  return timed("green", [&](CheckResult& r) {
    for (const auto& [a, b] : gradings(wb, params.max_total_dim))
      for (const auto& ap : wb.quiver().below(a + b)) {
        const DimVector bp = a + b - ap;
        for (const auto& M : wb.classes(a))
          for (const auto& N : wb.classes(b))
            for (const auto& Mp : wb.classes(ap))
              for (const auto& Np : wb.classes(bp)) {
                ++r.instances;
                const auto s = hall::green_raw(wb, M, N, Mp, Np);
                if (!s.holds())
                  r.fail({{"M", class_label(M)}, {"N", class_label(N)}, {"M'", class_label(Mp)}, {"N'", class_label(Np)}},
                         rational(wb, s.lhs), rational(wb, s.rhs));
              }
      }
  });
}

CheckResult check_bialgebra(Workbench& wb, const Params& params) {
  return timed("bialgebra", [&](CheckResult& r) {
    std::uint64_t coefficient_failures = 0, green_failures = 0, disagreements = 0;
    for (const auto& [a, b] : gradings(wb, params.max_total_dim))
      for (const auto& M : wb.classes(a))
        for (const auto& N : wb.classes(b)) {
          const auto sides = algebra::bialgebra(wb, M, N);
          for (const auto& ap : wb.quiver().below(a + b)) {
            const DimVector bp = a + b - ap;
            ++r.instances;
            bool bialgebra_ok = true, green_ok = true;
            for (const auto& Mp : wb.classes(ap))
              for (const auto& Np : wb.classes(bp)) {
                const HallCoeff lhs = sides.lhs.coeff(Mp, Np), rhs = sides.rhs.coeff(Mp, Np);
                json in = pair_inputs(M, N);
                in["M'"] = class_label(Mp);
                in["N'"] = class_label(Np);
                if (!(lhs == rhs)) {
                  bialgebra_ok = false;
                  ++coefficient_failures;
                  r.fail(in, lhs.str(), rhs.str());
                }
                if (!hall::green_raw_check(wb, M, N, Mp, Np)) green_ok = false;
              }
            if (!green_ok) ++green_failures;
            if (bialgebra_ok != green_ok) {
              ++disagreements;
              json in = pair_inputs(M, N);
              in["grading"] = {ap.str(), bp.str()};
              in["kind"] = "verdict disagreement with green";
              r.fail(in, bialgebra_ok ? "bialgebra pass" : "bialgebra fail", green_ok ? "green pass" : "green fail");
            }
          }
        }
    r.extra["coefficient_failures"] = coefficient_failures;
    r.extra["green_grading_failures"] = green_failures;
    r.extra["verdict_disagreements"] = disagreements;
  });
}

CheckResult check_rp(Workbench& wb, const Params& params) {
  return timed("rp", [&](CheckResult& r) {
    std::uint64_t integrality_pairs = 0;
    for (const auto& [a, b] : gradings(wb, params.max_total_dim))
      for (const auto& M : wb.classes(a))
        for (const auto& N : wb.classes(b)) {
          ++integrality_pairs;
          try {
            const auto e = hall::ext_counts(wb, M, N);
            for (std::size_t L = 0; L < e.ext_L.size(); ++L)
              if (e.ext_L[L] < 0) {
                json in = pair_inputs(M, N);
                in["L"] = class_label({a + b, static_cast<std::uint32_t>(L)});
                r.fail(in, e.ext_L[L].get_str(), ">= 0");
              }
          } catch (const Error& err) {
            if (err.kind() != ErrorKind::NonIntegerExtCount && err.kind() != ErrorKind::NegativeExt) throw;
            r.fail(pair_inputs(M, N), err.what(), "integer");
            continue;
          }
          for (const auto& L : wb.classes(a + b)) {
            ++r.instances;
            const auto s = hall::riedtmann_peng(wb, M, N, L);
            if (!s.holds()) {
              json in = pair_inputs(M, N);
              in["L"] = class_label(L);
              r.fail(in, rational(wb, s.lhs), rational(wb, s.rhs));
            }
          }
        }
    r.extra["integrality_pairs"] = integrality_pairs;
  });
}

CheckResult check_euler(Workbench& wb, const Params& params) {
  return timed("euler", [&](CheckResult& r) {
    for (const auto& [a, b] : gradings(wb, params.max_total_dim))
      for (const auto& M : wb.classes(a))
        for (const auto& N : wb.classes(b)) {
          ++r.instances;
          const json in = pair_inputs(M, N);
          const int hom = wb.hom_dim(M, N);
          const auto form = quiver::euler_form(wb.quiver(), a, b);
          int ext = 0;
          try {
            ext = wb.ext_dim(M, N);
          } catch (const Error& err) {
            if (err.kind() != ErrorKind::NegativeExt) throw;
            r.fail(in, err.what(), "ext >= 0");
            continue;
          }
          if (hom - ext != form)
            r.fail(in, "hom - ext = " + std::to_string(hom - ext), "euler = " + std::to_string(form));
          const auto e = hall::ext_counts(wb, M, N);
          if (!e.ext_from_fiber || *e.ext_from_fiber != ext)
            r.fail(in, "ext from fiber = " + (e.ext_from_fiber ? std::to_string(*e.ext_from_fiber) : std::string("none")),
                   "ext = " + std::to_string(ext));
          mpz_class total = 0;
          for (auto c : e.fiber_count) total += static_cast<unsigned long>(c);
          if (total != e.fiber_size) r.fail(in, "sum fiber_count = " + total.get_str(), "|fiber| = " + e.fiber_size.get_str());
        }
  });
}

CheckResult check_phi(Workbench& wb, const Params& params) {
  return timed("phi", [&](CheckResult& r) {
    std::uint64_t mult = 0, comult = 0;
    for (const auto& [a, b] : gradings(wb, params.max_total_dim))
      for (const auto& M : wb.classes(a))
        for (const auto& N : wb.classes(b)) {
          ++r.instances;
          ++mult;
          const auto s = fn::phi_mult(wb, M, N);
          if (!s.holds()) {
            json in = pair_inputs(M, N);
            in["scope"] = "mult";
            r.fail(in, render(s.lhs), render(s.rhs));
          }
        }
    for (const auto& nu : wb.quiver().up_to_total(params.max_total_dim))
      for (const auto& L : wb.classes(nu)) {
        ++r.instances;
        ++comult;
        const auto s = fn::phi_comult(wb, L);
        if (!s.holds()) r.fail({{"L", class_label(L)}, {"scope", "comult"}}, render(s.lhs), render(s.rhs));
      }
    r.extra["mult_instances"] = mult;
    r.extra["comult_instances"] = comult;
  });
}

CheckResult check_indres(Workbench& wb, const Params& params) {
  return timed("indres", [&](CheckResult& r) {
    std::uint64_t flag_pairs = 0, flag_skipped = 0, res_triples = 0, partition = 0, green_fn_pairs = 0;
    const auto grads = gradings(wb, params.max_total_dim);
    for (const auto& [a, b] : grads) {
      const mpz_class G = wb.orbits(a).group_order * wb.orbits(b).group_order;
      const bool oracle = G <= params.flag_oracle_limit;
      for (const auto& M : wb.classes(a))
        for (const auto& N : wb.classes(b)) {
          const auto fM = fn::InvFunction::indicator(wb, M);
          const auto fN = fn::InvFunction::indicator(wb, N);
          if (oracle) {
            ++r.instances;
            ++flag_pairs;
            const auto lhs = fn::ind_fn(wb, fM, fN);
            const auto rhs = fn::ind_fn_flags(wb, fM, fN);
            if (lhs.values != rhs.values) {
              json in = pair_inputs(M, N);
              in["kind"] = "ind vs flags";
              r.fail(in, render(lhs), render(rhs));
            }
          } else {
            ++flag_skipped;
          }
          for (const auto& L : wb.classes(a + b)) {
            ++r.instances;
            ++res_triples;
            const auto s = fn::res_indicator(wb, L, M, N);
            if (!s.holds()) {
              json in = pair_inputs(M, N);
              in["L"] = class_label(L);
              in["kind"] = "res of indicator";
              r.fail(in, s.lhs.str(), s.rhs.str());
            }
          }
          ++r.instances;
          ++green_fn_pairs;
          const auto g = fn::green_fn(wb, M, N);
          if (!g.holds()) {
            json in = pair_inputs(M, N);
            in["kind"] = "green at function level";
            r.fail(in, render(g.lhs), render(g.rhs));
          }
        }

      // Double count of pairs (x, W) with W stable of dimension b, once via
      // the fiber histograms and once via the submodule tables.
      const auto& table = wb.hall(a, b);
      const auto& ta = wb.orbits(a);
      const auto& tb = wb.orbits(b);
      const auto& tc = wb.orbits(a + b);
      const mpz_class gr = rational_grassmannian(wb, a + b, b);
      std::vector<mpz_class> fiber_side(tc.num_orbits(), 0);
      for (const auto& M : wb.classes(a))
        for (const auto& N : wb.classes(b)) {
          const auto& hist = wb.fiber_histogram(M, N);
          const mpz_class weight = mpz_class(static_cast<unsigned long>(ta.orbits[M.orbit].size)) *
                                   static_cast<unsigned long>(tb.orbits[N.orbit].size);
          for (std::size_t L = 0; L < hist.size(); ++L) fiber_side[L] += weight * static_cast<unsigned long>(hist[L]);
        }
      for (std::uint32_t L = 0; L < tc.num_orbits(); ++L) {
        ++r.instances;
        ++partition;
        const mpz_class lhs = gr * fiber_side[L];
        const mpz_class rhs = mpz_class(static_cast<unsigned long>(tc.orbits[L].size)) *
                              static_cast<unsigned long>(table.stable_subspaces(L));
        if (lhs != rhs)
          r.fail({{"L", class_label({a + b, L})}, {"sub", b.str()}, {"kind", "fiber partition"}}, lhs.get_str(),
                 rhs.get_str());
      }
    }
    r.extra["flag_oracle_pairs"] = flag_pairs;
    r.extra["flag_oracle_skipped"] = flag_skipped;
    r.extra["res_triples"] = res_triples;
    r.extra["partition_instances"] = partition;
    r.extra["green_fn_pairs"] = green_fn_pairs;
  });
}

CheckResult check_serre(Workbench& wb, const Params&) {
  return timed("serre", [&](CheckResult& r) {
    json pairs = json::array();
    const int n = wb.quiver().num_vertex_orbits();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        ++r.instances;
        const json in = {{"i", i}, {"j", j}};
        try {
          const auto s = algebra::serre(wb, i, j);
          pairs.push_back({{"i", i}, {"j", j}, {"c", s.c}});
          if (!s.holds()) r.fail(in, render(s.value), "0");
        } catch (const Error& err) {
          if (err.kind() != ErrorKind::NonIntegerCartan) throw;
          r.fail(in, err.what(), "integer Cartan entry");
        }
      }
    r.extra["pairs"] = pairs;
  });
}

CheckResult check_shift(Workbench& wb, const Params& params) {
  return timed("shift", [&](CheckResult& r) {
    const auto& Q = wb.quiver();
    const auto dims = Q.up_to_total(params.max_total_dim);
    std::mt19937_64 rng(params.seed);
    auto pick = [&rng](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
    std::uint64_t tuples = 0;
    for (int s = 0; s < params.shift_samples; ++s) {
      const DimVector total = dims[pick(dims.size())];
      const auto below = Q.below(total);
      const DimVector a = below[pick(below.size())];
      const DimVector ap = below[pick(below.size())];
      const DimVector b = total - a, bp = total - ap;
      ++tuples;
      for (const auto& lam : quiver::enumerate_lambda(Q, a, b, ap, bp)) {
        ++r.instances;
        const auto t = quiver::shift_terms(Q, a, b, ap, bp, lam);
        if (!t.holds())
          r.fail({{"alpha", a.str()}, {"beta", b.str()}, {"alpha'", ap.str()}, {"beta'", bp.str()},
                  {"lambda", {lam.a1.str(), lam.a2.str(), lam.b1.str(), lam.b2.str()}}},
                 "M - 2r' = " + std::to_string(t.M - 2 * t.r_prime),
                 "N - (a2,b1) = " + std::to_string(t.N - t.sym_a2_b1));
      }
    }
    r.extra["tuples"] = tuples;
  });
}

CheckResult check_orbits(Workbench& wb, const Params& params) {
  return timed("orbits", [&](CheckResult& r) {
    const auto& ctx = wb.ctx();
    json counts = json::object();
    for (const auto& nu : wb.quiver().up_to_total(params.max_total_dim)) {
      const auto& t = wb.orbits(nu);
      const auto& lay = wb.layout(nu);
      counts[nu.str()] = t.num_orbits();
      const json in = {{"dim", nu.str()}};
      auto expect = [&](const std::string& what, bool ok, const std::string& lhs, const std::string& rhs) {
        ++r.instances;
        if (!ok) {
          json i = in;
          i["invariant"] = what;
          r.fail(i, lhs, rhs);
        }
      };

      std::vector<std::uint64_t> seen(t.num_orbits(), 0);
      std::uint64_t next = 0;
      bool ordered = true;
      for (std::uint64_t code = 0; code < lay.num_points(); ++code) {
        const auto id = t.label[code];
        if (id >= t.num_orbits()) {
          ordered = false;
          continue;
        }
        if (seen[id]++ == 0) {
          if (id != next || t.orbits[id].rep_code != code) ordered = false;
          ++next;
        }
      }
      std::uint64_t sum = 0;
      bool sizes = true;
      for (std::size_t i = 0; i < t.num_orbits(); ++i) {
        sum += t.orbits[i].size;
        if (seen[i] != t.orbits[i].size) sizes = false;
      }
      expect("partition", sum == lay.num_points() && sizes, std::to_string(sum), std::to_string(lay.num_points()));
      expect("least-point numbering", ordered, "misordered", "ordered");

      const auto gens = rep::generators(ctx, nu);
      for (std::uint32_t i = 0; i < t.num_orbits(); ++i) {
        const auto& o = t.orbits[i];
        const mpz_class prod = o.aut * static_cast<unsigned long>(o.size);
        expect("orbit-stabilizer " + std::to_string(i), prod == t.group_order, prod.get_str(), t.group_order.get_str());
        const auto x = lay.decode(o.rep_code);
        expect("frobenius closure " + std::to_string(i), rep::frobenius_closure(ctx, x) == x, "moved", "fixed");
        bool invariant = true;
        for (const auto& g : gens)
          if (t.label[lay.encode(rep::act(ctx, g, x))] != i) invariant = false;
        expect("generator invariance " + std::to_string(i), invariant, "label changed", "label kept");
      }

      const auto serial = rep::orbit_table(ctx, nu, rep::Exec::Serial, wb.options().max_points);
      expect("serial equals parallel", serial.label == t.label, "serial labels", "table labels");
    }
    r.extra["orbit_counts"] = counts;
  });
}

json report(const CheckResult& r, const Workbench& wb, const Params& params, bool with_timing) {
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back({{"inputs", f.inputs}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  json out = {
      {"format_version", io::kFormatVersion},
      {"check", r.check},
      {"parameters",
       {{"quiver_digest", io::sha256_hex(io::canonical_form(wb.quiver().quiver()))},
        {"p", wb.ctx().p()},
        {"e", wb.ctx().e()},
        {"q", wb.q()},
        {"max_total_dim", params.max_total_dim},
        {"seed", params.seed}}},
      {"instances", r.instances},
      {"failure_count", r.failure_count},
      {"failures", failures},
      {"extra", r.extra},
      {"verdict", r.passed() ? "pass" : "fail"},
  };
  if (with_timing) out["wall_time_s"] = r.wall_time_s;
  return out;
}

}  // namespace hallq::checks
