#include "rsm/harness.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rsm/hankel.hpp"
#include "rsm/hasimoto.hpp"
#include "rsm/profiles.hpp"
#include "rsm/smap.hpp"
#include "rsm/version.hpp"
#include "rsm/weights.hpp"

namespace rsm {

namespace fs = std::filesystem;

Scenario scenario_from_string(const std::string& s) {
  if (s == "nls") return Scenario::Nls;
  if (s == "smap") return Scenario::Smap;
  if (s == "compare") return Scenario::Compare;
  if (s == "convergence") return Scenario::Convergence;
  if (s == "weights-audit") return Scenario::WeightsAudit;
  throw std::invalid_argument("unknown scenario: " + s);
}

std::string to_string(Scenario s) {
  switch (s) {
    case Scenario::Nls: return "nls";
    case Scenario::Smap: return "smap";
    case Scenario::Compare: return "compare";
    case Scenario::Convergence: return "convergence";
    case Scenario::WeightsAudit: return "weights-audit";
  }
  return "?";
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

bool RunManifest::all_pass() const {
  for (const auto& c : criteria)
    if (!c.pass) return false;
  return true;
}

int RunManifest::exit_code() const {
  if (outcome == RunOutcome::Aborted) return 3;
  return all_pass() ? 0 : 2;
}

void write_series_csv(const std::string& path, const std::vector<DiagnosticsRow>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "t,mass_q,energy_u,mass_u,virial_V,virial_rhs,morawetz_M,morawetz_rhs,"
         "P,P_rhs,I_R,I_R_rhs,l4_accum\n";
  for (const auto& r : rows) {
    out << format_double(r.t) << ',' << format_double(r.mass_q) << ','
        << format_double(r.energy_u) << ',' << format_double(r.mass_u) << ','
        << format_double(r.virial_V) << ',' << format_double(r.virial_rhs) << ','
        << format_double(r.morawetz_M) << ',' << format_double(r.morawetz_rhs) << ','
        << format_double(r.P) << ',' << format_double(r.P_rhs) << ',' << format_double(r.I_R)
        << ',' << format_double(r.I_R_rhs) << ',' << format_double(r.l4_accum) << '\n';
  }
}

void write_snapshot_csv(const std::string& path, const ComplexRadialField& q,
                        const SphereMapField* u) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << (u ? "r,re_q,im_q,u1,u2,u3\n" : "r,re_q,im_q\n");
  for (int i = 0; i < q.size(); ++i) {
    out << format_double(q.grid->node(i)) << ',' << format_double(q[i].real()) << ','
        << format_double(q[i].imag());
    if (u) {
      const Vec3& v = (*u)[i];
      out << ',' << format_double(v.x) << ',' << format_double(v.y) << ',' << format_double(v.z);
    }
    out << '\n';
  }
}

void write_manifest(const std::string& path, const RunManifest& m) {
  nlohmann::json j;
  j["scenario"] = m.scenario;
  j["version"] = m.version;
  j["outcome"] = m.outcome == RunOutcome::Aborted
                     ? "aborted"
                     : (m.all_pass() ? "passed" : "criteria_failed");
  j["n"] = m.n;
  j["rmax"] = m.rmax;
  j["dt"] = m.dt;
  j["t_final"] = m.t_final;
  j["wall_seconds"] = m.wall_seconds;
  if (!m.abort_reason.empty()) j["abort_reason"] = m.abort_reason;
  nlohmann::json crit = nlohmann::json::array();
  for (const auto& c : m.criteria) {
    crit.push_back({{"name", c.name},
                    {"value", c.value},
                    {"threshold", c.threshold},
                    {"pass", c.pass}});
  }
  j["criteria"] = crit;
  nlohmann::json echo;
  for (const auto& [k, v] : m.config_echo) echo[k] = v;
  j["config"] = echo;

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << j.dump(2) << '\n';
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

void apply_key(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "scenario") cfg.scenario = scenario_from_string(value);
  else if (key == "n") cfg.n = std::stoi(value);
  else if (key == "rmax") cfg.rmax = std::stod(value);
  else if (key == "dt") cfg.solver.dt = std::stod(value);
  else if (key == "t-final") cfg.solver.t_final = std::stod(value);
  else if (key == "output-every") cfg.solver.output_every = std::stoi(value);
  else if (key == "linear-solve-tol") cfg.solver.linear_solve_tol = std::stod(value);
  else if (key == "profile") cfg.profile = value;
  else if (key == "amp") cfg.amp = std::stod(value);
  else if (key == "profile-file") cfg.profile_file = value;
  else if (key == "k") cfg.params.K = std::stod(value);
  else if (key == "lambda") cfg.params.lambda = std::stoi(value);
  else if (key == "seed") cfg.seed = std::stoull(value);
  else if (key == "out") cfg.output_dir = value;
  else if (key == "levels") cfg.levels = std::stoi(value);
  else throw std::invalid_argument("config: unknown key '" + key + "'");
}

}  // namespace

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path);
  RunConfig cfg;
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::string key, value;
    const auto eq = t.find('=');
    if (eq != std::string::npos) {
      key = trim(t.substr(0, eq));
      value = trim(t.substr(eq + 1));
    } else {
      const auto sp = t.find_first_of(" \t");
      if (sp == std::string::npos)
        throw std::invalid_argument("config: malformed line '" + t + "'");
      key = trim(t.substr(0, sp));
      value = trim(t.substr(sp + 1));
    }
    apply_key(cfg, key, value);
  }
  cfg.params = make_nls_params(cfg.params.K, cfg.params.lambda);
  return cfg;
}

namespace {

std::vector<std::pair<std::string, std::string>> echo_config(const RunConfig& cfg) {
  return {
      {"scenario", to_string(cfg.scenario)},
      {"n", std::to_string(cfg.n)},
      {"rmax", format_double(cfg.rmax)},
      {"dt", format_double(cfg.solver.dt)},
      {"t-final", format_double(cfg.solver.t_final)},
      {"output-every", std::to_string(cfg.solver.output_every)},
      {"linear-solve-tol", format_double(cfg.solver.linear_solve_tol)},
      {"profile", cfg.profile},
      {"amp", format_double(cfg.amp)},
      {"profile-file", cfg.profile_file},
      {"k", format_double(cfg.params.K)},
      {"lambda", std::to_string(cfg.params.lambda)},
      // focusing-regime runs are permitted but flagged; nothing is asserted
      // about their long-time behaviour
      {"defocusing", cfg.params.defocusing() ? "true" : "false"},
      {"seed", std::to_string(cfg.seed)},
      {"out", cfg.output_dir},
      {"levels", std::to_string(cfg.levels)},
  };
}

// Run `body`, capture aborts, time the run, and always write the manifest.
template <typename Body>
RunManifest with_manifest(const RunConfig& cfg, Body&& body) {
  fs::create_directories(cfg.output_dir);
  RunManifest m;
  m.scenario = to_string(cfg.scenario);
  m.version = kVersion;
  m.n = cfg.n;
  m.rmax = cfg.rmax;
  m.dt = cfg.solver.dt;
  m.t_final = cfg.solver.t_final;
  m.config_echo = echo_config(cfg);

  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(m);
  } catch (const SolverAbort& e) {
    m.outcome = RunOutcome::Aborted;
    m.abort_reason = std::string(e.what()) + " (step " + std::to_string(e.step()) + ")";
  } catch (const std::exception& e) {
    m.outcome = RunOutcome::Aborted;
    m.abort_reason = e.what();
  }
  m.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  write_manifest((fs::path(cfg.output_dir) / "manifest.json").string(), m);
  return m;
}

std::string snapshot_path(const RunConfig& cfg, size_t index) {
  char name[32];
  std::snprintf(name, sizeof(name), "snapshot_%04zu.csv", index);
  return (fs::path(cfg.output_dir) / name).string();
}

ComplexRadialField load_custom_profile(const GridPtr& grid, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open profile file " + path);
  ComplexRadialField q(grid);
  std::string line;
  std::getline(in, line);  // header
  int i = 0;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    if (i >= grid->n) throw std::invalid_argument("profile file has more rows than grid nodes");
    double r, re, im;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &r, &re, &im) != 3)
      throw std::invalid_argument("profile file: malformed row '" + line + "'");
    if (std::abs(r - grid->node(i)) > 1e-9 * grid->r_max)
      throw std::invalid_argument("profile file: node mismatch at row " + std::to_string(i));
    q[i] = Complex(re, im);
    ++i;
  }
  if (i != grid->n) throw std::invalid_argument("profile file has fewer rows than grid nodes");
  return q;
}

ComplexRadialField initial_q(const RunConfig& cfg, const GridPtr& grid) {
  if (cfg.profile == "gauss-m1") return gauss_m1(grid, cfg.amp);
  if (cfg.profile == "custom") return load_custom_profile(grid, cfg.profile_file);
  throw std::invalid_argument("profile '" + cfg.profile + "' is not a q-profile (use gauss-m1 or custom)");
}

double relative_drift(const std::vector<double>& values) {
  if (values.empty() || values.front() == 0) return 0;
  double lo = values.front(), hi = values.front();
  for (double v : values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return (hi - lo) / std::abs(values.front());
}

}  // namespace

RunManifest run_nls(const RunConfig& cfg) {
  return with_manifest(cfg, [&](RunManifest& m) {
    const GridPtr grid = make_grid(cfg.n, cfg.rmax);
    const ComplexRadialField q0 = initial_q(cfg, grid);
    const NlsParams p = make_nls_params(cfg.params.K, cfg.params.lambda);
    const NlsTrajectory traj = evolve(q0, p, cfg.solver);

    write_series_csv((fs::path(cfg.output_dir) / "series.csv").string(), traj.rows);
    for (size_t s = 0; s < traj.states.size(); ++s)
      write_snapshot_csv(snapshot_path(cfg, s), traj.states[s].q);

    std::vector<double> masses;
    for (const auto& r : traj.rows) masses.push_back(r.mass_q);
    const double drift = relative_drift(masses);
    m.criteria.push_back({"mass_drift_rel", drift, 1e-6, drift <= 1e-6});
  });
}

RunManifest run_smap(const RunConfig& cfg) {
  return with_manifest(cfg, [&](RunManifest& m) {
    const GridPtr grid = make_grid(cfg.n, cfg.rmax);
    if (cfg.profile != "meridian")
      throw std::invalid_argument("smap scenario requires profile=meridian");
    const SphereMapField u0 = meridian_map(grid, meridian_profile(grid, cfg.amp));
    const SmapTrajectory traj = evolve_map(u0, cfg.solver);

    write_series_csv((fs::path(cfg.output_dir) / "series.csv").string(), traj.rows);
    for (size_t s = 0; s < traj.states.size(); ++s) {
      ComplexRadialField zero(grid);
      write_snapshot_csv(snapshot_path(cfg, s), zero, &traj.states[s].u);
    }

    std::vector<double> energies, massdevs;
    for (const auto& r : traj.rows) {
      energies.push_back(r.energy_u);
      massdevs.push_back(r.mass_u);
    }
    const double e_drift = relative_drift(energies);
    const double m_drift = relative_drift(massdevs);
    const double sphere = sphere_constraint_violation(traj.states.back().u);
    m.criteria.push_back({"energy_drift_rel", e_drift, 1e-4, e_drift <= 1e-4});
    m.criteria.push_back({"mass_dev_drift_rel", m_drift, 1e-4, m_drift <= 1e-4});
    m.criteria.push_back({"sphere_constraint", sphere, 1e-12, sphere <= 1e-12});
  });
}

namespace {

struct PhaseAlignment {
  double gamma = 0;    // phase applied to the first argument
  double l2_rel = 0;   // || e^{i gamma} qA - qB || / ||qB||
  double absq_rel = 0; // || |qA| - |qB| || / || |qB| ||
};

PhaseAlignment align_and_compare(const ComplexRadialField& qA, const ComplexRadialField& qB) {
  PhaseAlignment out;
  const Complex z = inner(qA, qB);
  out.gamma = (std::abs(z) > 0) ? std::arg(z) : 0.0;
  const Complex phase = std::exp(Complex(0, out.gamma));
  double num = 0, den = 0, anum = 0, aden = 0;
  for (int i = 0; i < qA.size(); ++i) {
    const double w = qA.grid->weight(i);
    num += w * std::norm(phase * qA[i] - qB[i]);
    den += w * std::norm(qB[i]);
    const double da = std::abs(qA[i]) - std::abs(qB[i]);
    anum += w * da * da;
    aden += w * std::norm(qB[i]);
  }
  out.l2_rel = (den > 0) ? std::sqrt(num / den) : std::sqrt(num);
  out.absq_rel = (aden > 0) ? std::sqrt(anum / aden) : std::sqrt(anum);
  return out;
}

}  // namespace

RunManifest run_compare(const RunConfig& cfg) {
  return with_manifest(cfg, [&](RunManifest& m) {
    const GridPtr grid = make_grid(cfg.n, cfg.rmax);
    if (cfg.profile != "meridian")
      throw std::invalid_argument("compare scenario requires profile=meridian");
    const NlsParams p = make_nls_params(1.0, 1);  // the frame-coordinate equation
    const SphereMapField u0 = meridian_map(grid, meridian_profile(grid, cfg.amp));
    const ComplexRadialField q0 = hasimoto_transform(u0).q;

    // map stepping subdivides each output interval to satisfy the h^2/4 bound
    const double interval = cfg.solver.dt * cfg.solver.output_every;
    const long nsub = std::max(1l, std::lround(std::ceil(interval / smap_dt_bound(*grid))));
    SolverConfig map_cfg;
    map_cfg.dt = interval / static_cast<double>(nsub);
    map_cfg.t_final = cfg.solver.t_final;
    map_cfg.output_every = static_cast<int>(nsub);
    map_cfg.linear_solve_tol = cfg.solver.linear_solve_tol;

    const SmapTrajectory map_traj = evolve_map(u0, map_cfg);
    const NlsTrajectory nls_traj = evolve(q0, p, cfg.solver);
    if (map_traj.states.size() != nls_traj.states.size())
      throw std::runtime_error("compare: output cadences disagree");

    std::ofstream cmp((fs::path(cfg.output_dir) / "compare.csv").string());
    cmp << "t,l2_rel,absq_rel,gamma\n";

    std::vector<DiagnosticsRow> rows;
    std::vector<double> mass_qA;
    double final_absq = 0, max_l2 = 0;
    for (size_t s = 0; s < map_traj.states.size(); ++s) {
      const SmapState& ms = map_traj.states[s];
      const ComplexRadialField qA = hasimoto_transform(ms.u).q;
      const ComplexRadialField& qB = nls_traj.states[s].q;
      const PhaseAlignment cmpared = align_and_compare(qA, qB);
      cmp << format_double(ms.t) << ',' << format_double(cmpared.l2_rel) << ','
          << format_double(cmpared.absq_rel) << ',' << format_double(cmpared.gamma) << '\n';
      final_absq = cmpared.absq_rel;
      max_l2 = std::max(max_l2, cmpared.l2_rel);
      mass_qA.push_back(mass(qA));

      DiagnosticsRow row = nls_traj.rows[s];
      row.energy_u = map_traj.rows[s].energy_u;
      row.mass_u = map_traj.rows[s].mass_u;
      rows.push_back(row);
      write_snapshot_csv(snapshot_path(cfg, s), qA, &ms.u);
    }
    write_series_csv((fs::path(cfg.output_dir) / "series.csv").string(), rows);

    const double qa_mass_drift = relative_drift(mass_qA);
    m.criteria.push_back({"absq_discrepancy_final", final_absq, 1e-2, final_absq <= 1e-2});
    m.criteria.push_back(
        {"transform_mass_drift_rel", qa_mass_drift, 1e-4, qa_mass_drift <= 1e-4});
  });
}

namespace {

struct OrderRow {
  std::string experiment;
  int level;
  int n;
  double dt;
  double error;
};

double free_evolution_error(int n, double rmax, double dt, double t_final, double amp) {
  const GridPtr grid = make_grid(n, rmax);
  const ComplexRadialField q0 = gauss_m1_sigma(grid, amp, 3.0);
  const NlsParams p = make_nls_params(0.0, 0);
  SolverConfig cfg;
  cfg.dt = dt;
  cfg.t_final = t_final;
  cfg.output_every = std::max(1l, std::lround(t_final / dt));
  const NlsTrajectory traj = evolve(q0, p, cfg);
  const ComplexRadialField exact = free_evolution_exact(q0, t_final, 16.0);
  double num = 0, den = 0;
  const ComplexRadialField& qT = traj.states.back().q;
  for (int i = 0; i < qT.size(); ++i) {
    const double w = grid->weight(i);
    num += w * std::norm(qT[i] - exact[i]);
    den += w * std::norm(exact[i]);
  }
  return den > 0 ? std::sqrt(num / den) : 0.0;
}

double roundtrip_error(int n, double rmax, double amp) {
  const GridPtr grid = make_grid(n, rmax);
  std::vector<double> g(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double r = grid->node(i);
    g[static_cast<size_t>(i)] = amp * std::exp(-r * r);
  }
  return roundtrip_residual(meridian_map(grid, g));
}

double virial_identity_residual(int n, double rmax, double dt, double t_final, double amp) {
  const GridPtr grid = make_grid(n, rmax);
  const ComplexRadialField q0 = gauss_m1(grid, amp);
  const NlsParams p = make_nls_params(1.0, 1);
  SolverConfig cfg;
  cfg.dt = dt;
  cfg.t_final = t_final;
  cfg.output_every = 1;
  const NlsTrajectory traj = evolve(q0, p, cfg);
  double worst = 0;
  for (size_t s = 1; s + 1 < traj.rows.size(); ++s) {
    if (traj.rows[s].virial_rhs == 0) continue;
    const double d2 = (traj.rows[s + 1].virial_V - 2 * traj.rows[s].virial_V +
                       traj.rows[s - 1].virial_V) /
                      (dt * dt);
    worst = std::max(worst, std::abs(d2 - traj.rows[s].virial_rhs) /
                                std::abs(traj.rows[s].virial_rhs));
  }
  return worst;
}

}  // namespace

RunManifest run_convergence(const RunConfig& cfg) {
  return with_manifest(cfg, [&](RunManifest& m) {
    const int levels = std::max(2, cfg.levels);
    const int base_n = std::max(8, cfg.n / 2);
    // --amp scales the whole battery; amp = 0 exercises the degenerate case
    const double scale = cfg.amp / 0.2;
    std::vector<OrderRow> table;

    // Observed order per refinement pair (joint h, dt halving); 99 marks the
    // degenerate all-zero-error case.
    auto run_experiment = [&](const std::string& name, auto&& eval, double base_dt) {
      std::vector<double> errors;
      for (int l = 0; l < levels; ++l) {
        const int n = base_n << l;
        const double dt = base_dt / (1 << l);
        const double err = eval(n, dt);
        errors.push_back(err);
        table.push_back({name, l, n, dt, err});
      }
      double min_order = 99.0;
      for (size_t l = 0; l + 1 < errors.size(); ++l) {
        if (errors[l] == 0 && errors[l + 1] == 0) continue;  // degenerate pair
        const double order = (errors[l + 1] == 0) ? 99.0 : std::log2(errors[l] / errors[l + 1]);
        min_order = std::min(min_order, order);
      }
      return min_order;
    };

    const double order_free = run_experiment(
        "free_evolution",
        [&](int n, double dt) { return free_evolution_error(n, cfg.rmax, dt, 0.25, 1.0 * scale); },
        1.0 / 16);
    const double order_roundtrip = run_experiment(
        "roundtrip",
        [&](int n, double) { return roundtrip_error(n, cfg.rmax, 0.5 * scale); }, 1.0 / 16);
    const double order_virial = run_experiment(
        "virial_identity",
        [&](int n, double dt) { return virial_identity_residual(n, cfg.rmax, dt, 0.04, 0.2 * scale); },
        1e-3);

    std::ofstream out((fs::path(cfg.output_dir) / "orders.csv").string());
    out << "experiment,level,n,dt,error\n";
    for (const auto& r : table)
      out << r.experiment << ',' << r.level << ',' << r.n << ',' << format_double(r.dt) << ','
          << format_double(r.error) << '\n';

    m.criteria.push_back({"free_evolution_order", order_free, 1.9, order_free >= 1.9});
    m.criteria.push_back({"roundtrip_order", order_roundtrip, 1.9, order_roundtrip >= 1.9});
    m.criteria.push_back({"virial_residual_order", order_virial, 1.5, order_virial >= 1.5});
  });
}

RunManifest run_weights_audit(const RunConfig& cfg, bool negate_beta) {
  return with_manifest(cfg, [&](RunManifest& m) {
    const int samples = 1000;
    std::ofstream out((fs::path(cfg.output_dir) / "weights_audit.csv").string());
    out << "r,branch,psi,psi_r,psi_rr,psi_rrr,alpha,beta\n";
    auto emit = [&](double r, const std::string& branch, const MorawetzWeights& w) {
      out << format_double(r) << ',' << branch << ',' << format_double(w.psi) << ','
          << format_double(w.psi_r) << ',' << format_double(w.psi_rr) << ','
          << format_double(w.psi_rrr) << ',' << format_double(w.alpha) << ','
          << format_double(w.beta) << '\n';
    };

    for (int i = 0; i < samples; ++i) {
      const double r = std::pow(10.0, -3.0 + 6.0 * i / (samples - 1.0));
      MorawetzWeights w = weight_functions(r);
      if (negate_beta) w.beta = -w.beta;
      emit(r, "-", w);
      const bool ok = w.psi > 0 && w.psi < 6 && w.psi_r > 0 && w.alpha > 0 && w.beta > 0;
      if (!ok)
        throw SolverAbort("weight positivity violated at r = " + format_double(r), i);
    }

    // branch agreement rows at the seam
    const MorawetzWeights wi = weight_functions_inner(1.0);
    const MorawetzWeights wo = weight_functions_outer(1.0);
    emit(1.0, "inner", wi);
    emit(1.0, "outer", wo);

    const double branch_gap =
        std::max({std::abs(wi.psi - wo.psi), std::abs(wi.psi_r - wo.psi_r),
                  std::abs(wi.psi_rr - wo.psi_rr), std::abs(wi.psi_rrr - wo.psi_rrr)});
    const double alpha_gap = std::abs(wi.alpha - 7.5);
    const double beta_gap = std::abs(wi.beta - 1.0);
    m.criteria.push_back({"branch_c3_agreement", branch_gap, 1e-12, branch_gap <= 1e-12});
    m.criteria.push_back({"alpha_at_1", alpha_gap, 1e-12, alpha_gap <= 1e-12});
    m.criteria.push_back({"beta_at_1", beta_gap, 1e-12, beta_gap <= 1e-12});
    m.criteria.push_back({"positivity_samples", static_cast<double>(samples),
                          static_cast<double>(samples), true});
  });
}

RunManifest run_scenario(const RunConfig& cfg) {
  switch (cfg.scenario) {
    case Scenario::Nls: return run_nls(cfg);
    case Scenario::Smap: return run_smap(cfg);
    case Scenario::Compare: return run_compare(cfg);
    case Scenario::Convergence: return run_convergence(cfg);
    case Scenario::WeightsAudit: return run_weights_audit(cfg);
  }
  throw std::invalid_argument("run_scenario: bad scenario");
}

}  // namespace rsm
