#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "rsm/diagnostics.hpp"
#include "rsm/nls.hpp"
#include "rsm/operators.hpp"
#include "rsm/profiles.hpp"
#include "rsm/smap.hpp"
#include "rsm/weights.hpp"

using namespace rsm;
constexpr double kPi = std::numbers::pi;

TEST_CASE("mass of the Gaussian profile has the closed form pi/4") {
  auto g = make_grid(2048, 12.0);
  CHECK(mass(gauss_m1(g, 1.0)) == doctest::Approx(kPi / 4).epsilon(1e-6));
  ComplexRadialField zero(g);
  CHECK(mass(zero) == 0.0);
}

TEST_CASE("map energy matches the symbolic quadrature") {
  // u = (sin g, 0, cos g), g = exp(-r^2): E = pi int g'^2 r dr = pi/2
  auto g = make_grid(8192, 12.0);
  SphereMapField u = meridian_map(g, meridian_profile(g, 1.0));
  const double symbolic =
      kPi * oracle::integrate(
                [](double r) {
                  const double gp = -2 * r * std::exp(-r * r);
                  return gp * gp * r;
                },
                0.0, 12.0);
  CHECK(symbolic == doctest::Approx(kPi / 2).epsilon(1e-10));
  CHECK(energy(u) == doctest::Approx(symbolic).epsilon(1e-6));

  SphereMapField flat(g);
  for (int i = 0; i < g->n; ++i) flat[i] = khat;
  CHECK(energy(flat) == 0.0);
  CHECK(mass_dev(flat) == 0.0);
}

TEST_CASE("virial pair: zero field and coefficient cancellation at 2K = lambda") {
  auto g = make_grid(256, 12.0);
  ComplexRadialField zero(g);
  auto vz = virial_pair(zero, make_nls_params(1.0, 1));
  CHECK(vz.value == 0.0);
  CHECK(vz.rhs == 0.0);

  // 2K = lambda: the quartic term has coefficient zero, so the rhs equals the
  // free rhs for the same field
  ComplexRadialField q = gauss_m1(g, 0.7);
  auto with = virial_pair(q, make_nls_params(0.5, 1));
  auto free0 = virial_pair(q, make_nls_params(0.0, 0));
  CHECK(with.rhs == doctest::Approx(free0.rhs).epsilon(1e-14));
  CHECK(with.value > 0.0);
}

TEST_CASE("morawetz pair positivity") {
  auto g = make_grid(256, 12.0);
  ComplexRadialField zero(g);
  auto mz = morawetz_pair(zero, make_nls_params(1.0, 1));
  CHECK(mz.value == 0.0);
  CHECK(mz.rhs == 0.0);
  auto pz = morawetz_P_pair(zero, make_nls_params(1.0, 1));
  CHECK(pz.value == 0.0);
  CHECK(pz.rhs == 0.0);

  CorpusRng rng(77);
  ComplexRadialField q = random_smooth_m1(g, rng);
  for (auto [K, lam] : std::vector<std::pair<double, int>>{{1, 1}, {1, -1}, {0, 0}, {0.25, 1}}) {
    auto m = morawetz_pair(q, make_nls_params(K, lam));
    CHECK(m.value >= 0.0);
    if (2 * K >= lam / 2.0) CHECK(m.rhs > 0.0);
  }
}

TEST_CASE("weights: seam values and branch derivatives") {
  auto wi = weight_functions_inner(1.0);
  auto wo = weight_functions_outer(1.0);
  CHECK(wi.psi == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(wo.psi == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(wi.psi_r == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(wo.psi_r == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(wi.psi_rr == doctest::Approx(-2.0).epsilon(1e-15));
  CHECK(wo.psi_rr == doctest::Approx(-2.0).epsilon(1e-15));
  CHECK(std::abs(wi.psi_rrr) < 1e-15);
  CHECK(std::abs(wo.psi_rrr) < 1e-15);
  CHECK(wi.alpha == doctest::Approx(7.5).epsilon(1e-15));   // inner branch: 8 - r/2
  CHECK(wi.beta == doctest::Approx(1.0).epsilon(1e-15));    // inner branch: r
  CHECK(wo.alpha == doctest::Approx(7.5).epsilon(1e-14));
  CHECK(wo.beta == doctest::Approx(1.0).epsilon(1e-14));

  CHECK(weight_functions(0.5).alpha == doctest::Approx(8.0 - 0.25).epsilon(1e-14));
  CHECK(weight_functions(0.5).beta == doctest::Approx(0.5).epsilon(1e-14));
  CHECK_THROWS_AS(weight_functions(0.0), std::invalid_argument);
  CHECK_THROWS_AS(weight_functions(-1.0), std::invalid_argument);
}

TEST_CASE("weights: positivity on a log grid") {
  for (int i = 0; i < 1000; ++i) {
    const double r = std::pow(10.0, -3.0 + 6.0 * i / 999.0);
    auto w = weight_functions(r);
    CHECK(w.psi > 0.0);
    CHECK(w.psi < 6.0);
    CHECK(w.psi_r > 0.0);
    CHECK(w.alpha > 0.0);
    CHECK(w.beta > 0.0);
  }
}

TEST_CASE("cutoff chi is a C^3 step") {
  CHECK(cutoff_chi(0.3).chi == 1.0);
  CHECK(cutoff_chi(1.0).chi == 1.0);
  CHECK(cutoff_chi(2.0).chi == 0.0);
  CHECK(cutoff_chi(5.0).chi == 0.0);
  // seam smoothness: values and three derivatives continuous
  for (double s : {1.0, 2.0}) {
    auto below = cutoff_chi(s - 1e-9);
    auto above = cutoff_chi(s + 1e-9);
    CHECK(std::abs(below.chi - above.chi) < 1e-7);
    CHECK(std::abs(below.chi_p - above.chi_p) < 1e-6);
    CHECK(std::abs(below.chi_pp - above.chi_pp) < 1e-5);
    CHECK(std::abs(below.chi_ppp - above.chi_ppp) < 1e-4);
  }
  for (double s = 1.05; s < 2.0; s += 0.05) CHECK(cutoff_chi(s).chi_p < 0.0);
}

TEST_CASE("momentum functionals vanish for real profiles") {
  auto g = make_grid(512, 16.0);
  ComplexRadialField q = gauss_m1(g, 0.5);  // real samples
  auto loc = local_virial_pair(q, make_nls_params(1.0, 1), 8.0);
  CHECK(std::abs(loc.value) < 1e-14);
  auto mom = morawetz_P_pair(q, make_nls_params(1.0, 1));
  CHECK(std::abs(mom.value) < 1e-14);
  CHECK(mom.rhs > 0.0);

  ComplexRadialField zero(g);
  auto lz = local_virial_pair(zero, make_nls_params(1.0, 1), 8.0);
  CHECK(lz.value == 0.0);
  CHECK(lz.rhs == 0.0);
  CHECK_THROWS_AS(local_virial_pair(q, make_nls_params(1.0, 1), g->h), std::invalid_argument);
}

TEST_CASE("momentum bound |P| <= 6 ||q|| ||q_r||") {
  auto g = make_grid(512, 12.0);
  CorpusRng rng(13);
  for (int rep = 0; rep < 10; ++rep) {
    ComplexRadialField q = random_smooth_m1(g, rng);
    auto mom = morawetz_P_pair(q, make_nls_params(1.0, 1));
    ComplexRadialField qr = radial_derivative(q);
    CHECK(std::abs(mom.value) <= 6.0 * l2_norm(q) * l2_norm(qr) + 1e-14);
  }
}

namespace {

NlsTrajectory defocusing_run(int n, double dt, double t_final, double K, int lambda,
                             bool complex_data = false) {
  auto g = make_grid(n, 16.0);
  ComplexRadialField q0 = gauss_m1(g, 0.2);
  if (complex_data) {
    CorpusRng rng(4);
    q0 = random_smooth_m1(g, rng, 0.25);
  }
  SolverConfig cfg;
  cfg.dt = dt;
  cfg.t_final = t_final;
  cfg.output_every = 1;
  EvolveOptions opts;
  opts.local_virial_R = 8.0;
  return evolve(q0, make_nls_params(K, lambda), cfg, opts);
}

struct ResidualSummary {
  double virial = 0, morawetz = 0, local_virial = 0, momentum = 0;
};

// centered finite differences of the trajectory functionals against the
// identity right-hand sides, worst relative residual over interior samples
ResidualSummary identity_residuals(const NlsTrajectory& traj, double dt) {
  ResidualSummary s;
  const auto& rows = traj.rows;
  for (size_t k = 1; k + 1 < rows.size(); ++k) {
    const double d2V =
        (rows[k + 1].virial_V - 2 * rows[k].virial_V + rows[k - 1].virial_V) / (dt * dt);
    s.virial = std::max(s.virial, std::abs(d2V - rows[k].virial_rhs) / std::abs(rows[k].virial_rhs));
    const double d2M =
        (rows[k + 1].morawetz_M - 2 * rows[k].morawetz_M + rows[k - 1].morawetz_M) / (dt * dt);
    s.morawetz =
        std::max(s.morawetz, std::abs(d2M - rows[k].morawetz_rhs) / std::abs(rows[k].morawetz_rhs));
    const double dI = (rows[k + 1].I_R - rows[k - 1].I_R) / (2 * dt);
    s.local_virial =
        std::max(s.local_virial, std::abs(dI - rows[k].I_R_rhs) / std::abs(rows[k].I_R_rhs));
    const double dP = (rows[k + 1].P - rows[k - 1].P) / (2 * dt);
    s.momentum = std::max(s.momentum, std::abs(dP - rows[k].P_rhs) / std::abs(rows[k].P_rhs));
  }
  return s;
}

}  // namespace

TEST_CASE("evolution identities hold along a defocusing trajectory") {
  const double dt = 1e-3;
  auto traj = defocusing_run(1024, dt, 0.05, 1.0, 1);
  auto res = identity_residuals(traj, dt);
  CHECK(res.virial <= 0.02);
  CHECK(res.morawetz <= 0.02);
  CHECK(res.local_virial <= 0.02);
  CHECK(res.momentum <= 0.02);
}

TEST_CASE("identity residuals decrease with order >= 1.5 under refinement") {
  auto coarse = identity_residuals(defocusing_run(512, 1e-3, 0.04, 1.0, 1), 1e-3);
  auto fine = identity_residuals(defocusing_run(1024, 5e-4, 0.04, 1.0, 1), 5e-4);
  CHECK(oracle::observed_order(coarse.virial, fine.virial) >= 1.5);
  CHECK(oracle::observed_order(coarse.morawetz, fine.morawetz) >= 1.5);
  CHECK(oracle::observed_order(coarse.local_virial, fine.local_virial) >= 1.5);
  CHECK(oracle::observed_order(coarse.momentum, fine.momentum) >= 1.5);
}

TEST_CASE("identities also hold for K=1, lambda=-1") {
  const double dt = 1e-3;
  auto traj = defocusing_run(1024, dt, 0.05, 1.0, -1);
  auto res = identity_residuals(traj, dt);
  CHECK(res.virial <= 0.02);
  CHECK(res.local_virial <= 0.02);
  CHECK(res.momentum <= 0.02);
}

TEST_CASE("virial identity against the exact free flow") {
  // In the free flow the virial rhs is a conserved energy, so V(t) is a
  // quadratic polynomial in t and the centered second difference carries no
  // dt error at all: the residual is the spatial floor, stable under dt
  // refinement.
  auto g = make_grid(1024, 16.0);
  ComplexRadialField q0 = gauss_m1_sigma(g, 1.0, 2.0);
  const NlsParams p = make_nls_params(0.0, 0);
  auto residual_at = [&](double dt) {
    const double t0 = 0.1;
    double V[3], rhs_mid = 0;
    for (int k = -1; k <= 1; ++k) {
      auto qt = free_evolution_exact(q0, t0 + k * dt, 16.0);
      auto pair = virial_pair(qt, p);
      V[k + 1] = pair.value;
      if (k == 0) rhs_mid = pair.rhs;
    }
    const double d2V = (V[2] - 2 * V[1] + V[0]) / (dt * dt);
    return std::abs(d2V - rhs_mid) / rhs_mid;
  };
  const double coarse = residual_at(1e-3);
  const double fine = residual_at(5e-4);
  CHECK(coarse <= 1e-2);
  CHECK(fine <= 1e-2);
  CHECK(std::abs(coarse - fine) <= 0.1 * coarse);  // dt-independent floor
}

TEST_CASE("P is monotone and sign-definite along defocusing runs") {
  for (auto [K, lam] : std::vector<std::pair<double, int>>{{1.0, 1}, {1.0, -1}}) {
    auto traj = defocusing_run(512, 1e-3, 0.1, K, lam, true);
    for (size_t k = 1; k < traj.rows.size(); ++k) CHECK(traj.rows[k].P > traj.rows[k - 1].P);
    if (traj.rows.front().P >= 0)
      for (size_t k = 1; k < traj.rows.size(); ++k) CHECK(traj.rows[k].P > 0.0);
  }
}

TEST_CASE("l4 accumulation: trivial cases") {
  std::vector<double> t{0, 0.5, 1.0, 1.5};
  std::vector<double> zero{0, 0, 0, 0};
  CHECK(l4_spacetime_accumulate(t, zero) == 0.0);
  std::vector<double> constant{2.5, 2.5, 2.5, 2.5};
  CHECK(l4_spacetime_accumulate(t, constant) == doctest::Approx(1.5 * 2.5).epsilon(1e-15));
  CHECK_THROWS_AS(l4_spacetime_accumulate(t, std::vector<double>{1, 2}), std::invalid_argument);
}

TEST_CASE("diagnostics row carries the running l4 integral") {
  auto g = make_grid(256, 12.0);
  ComplexRadialField q0 = gauss_m1(g, 0.3);
  SolverConfig cfg;
  cfg.dt = 1e-3;
  cfg.t_final = 0.02;
  cfg.output_every = 5;
  auto traj = evolve(q0, make_nls_params(1.0, 1), cfg);
  CHECK(traj.rows.front().l4_accum == 0.0);
  CHECK(traj.rows.back().l4_accum ==
        doctest::Approx(l4_spacetime_accumulate(traj)).epsilon(1e-12));
  for (size_t k = 1; k < traj.rows.size(); ++k)
    CHECK(traj.rows[k].l4_accum >= traj.rows[k - 1].l4_accum);
}
