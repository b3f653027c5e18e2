#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rsm/nls.hpp"

namespace rsm {

enum class Scenario { Nls, Smap, Compare, Convergence, WeightsAudit };

Scenario scenario_from_string(const std::string& s);  // throws on unknown name
std::string to_string(Scenario s);

/// One run of the laboratory.  Field names match the CLI flags (and the
/// key=value config file keys).
struct RunConfig {
  Scenario scenario = Scenario::Nls;
  int n = 1024;
  double rmax = 16.0;
  SolverConfig solver;           // dt, t_final, output_every, linear_solve_tol
  NlsParams params;              // --k, --lambda (nls / compare)
  std::string profile = "gauss-m1";  // gauss-m1 | meridian | custom
  double amp = 0.2;
  std::string profile_file;      // tabulated samples for profile = custom
  std::uint64_t seed = 0;
  std::string output_dir = "out";
  int levels = 3;                // refinement levels for the convergence scenario
};

struct CriterionResult {
  std::string name;
  double value = 0;
  double threshold = 0;
  bool pass = false;
};

enum class RunOutcome { Passed, CriteriaFailed, Aborted };

struct RunManifest {
  RunOutcome outcome = RunOutcome::Passed;
  std::string scenario;
  std::string version;
  int n = 0;
  double rmax = 0, dt = 0, t_final = 0;
  double wall_seconds = 0;
  std::vector<CriterionResult> criteria;
  std::vector<std::pair<std::string, std::string>> config_echo;
  std::string abort_reason;  // non-empty when outcome == Aborted

  bool all_pass() const;
  int exit_code() const;  // 0 pass, 2 criteria failed, 3 aborted
};

/// Execute the configured scenario, writing the time-series CSV, field
/// snapshots and the manifest into output_dir.  Solver aborts are captured:
/// the manifest is still written, with the diagnosis.
RunManifest run_scenario(const RunConfig& cfg);

// Individual scenarios (run_scenario dispatches to these).
RunManifest run_nls(const RunConfig& cfg);
RunManifest run_smap(const RunConfig& cfg);

/// Evolve a meridian map, extract q = q[u(t)] through the parallel frame at
/// each output time, evolve q0 = q[u0] independently with K = lambda = 1, and
/// report the L^2-relative discrepancy after one global phase alignment per
/// time slice together with the discrepancy of the frame-invariant |q|.
RunManifest run_compare(const RunConfig& cfg);

/// Run the standard battery at (h, dt), (h/2, dt/2), ... and report observed
/// orders for the free-evolution solver error, the frame roundtrip residual
/// and the virial identity residual.
RunManifest run_convergence(const RunConfig& cfg);

/// Sample the Morawetz weight functions on a log grid of 10^3 radii in
/// [1e-3, 1e3], check the positivity bullets and the branch agreement at
/// r = 1, and write the audit table.  `negate_beta` is a fault-injection hook
/// used by the test suite; a violated sample aborts naming the radius.
RunManifest run_weights_audit(const RunConfig& cfg, bool negate_beta = false);

/// Parse a flat key=value config file (keys exactly the CLI flag names,
/// e.g. "scenario", "n", "rmax", "dt", "t-final", "output-every", "profile",
/// "amp", "k", "lambda", "seed", "out", "levels").  Lines starting with '#'
/// are comments.  Throws std::invalid_argument on unknown keys or bad values.
RunConfig parse_config_file(const std::string& path);

/// Deterministic text formatting used by every writer ("%.17g").
std::string format_double(double x);

/// Write the fixed-order time-series CSV:
/// t,mass_q,energy_u,mass_u,virial_V,virial_rhs,morawetz_M,morawetz_rhs,
/// P,P_rhs,I_R,I_R_rhs,l4_accum
void write_series_csv(const std::string& path, const std::vector<DiagnosticsRow>& rows);

/// Per-output-time snapshot: columns r,re_q,im_q (plus u1,u2,u3 when a map is
/// present).
void write_snapshot_csv(const std::string& path, const ComplexRadialField& q,
                        const SphereMapField* u = nullptr);

void write_manifest(const std::string& path, const RunManifest& m);

}  // namespace rsm
