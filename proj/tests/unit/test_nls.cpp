#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rsm/nls.hpp"
#include "rsm/profiles.hpp"

using namespace rsm;

TEST_CASE("params validation and the defocusing flag") {
  CHECK_THROWS_AS(make_nls_params(1.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_nls_params(1.0, -3), std::invalid_argument);
  CHECK(make_nls_params(1.0, 1).defocusing());    // 2K = 2 >= 1
  CHECK(make_nls_params(0.5, 1).defocusing());    // 2K = 1 >= 1
  CHECK(!make_nls_params(0.4, 1).defocusing());   // 0.8 < 1
  CHECK(make_nls_params(0.0, 0).defocusing());    // 0 >= 0
  CHECK(make_nls_params(0.0, -1).defocusing());   // 0 >= -1/2
  CHECK(make_nls_params(-0.25, -1).defocusing()); // -0.5 >= -0.5
  CHECK(!make_nls_params(-0.3, -1).defocusing());
}

TEST_CASE("solver config validation") {
  SolverConfig bad;
  bad.dt = 0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad.dt = 0.5;
  bad.t_final = 0.1;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad.dt = 1e-2;
  bad.output_every = 0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
}

TEST_CASE("nls_rhs: zero field") {
  auto g = make_grid(64, 8.0);
  ComplexRadialField zero(g);
  auto rhs = nls_rhs(zero, make_nls_params(1.0, 1));
  for (int i = 0; i < g->n; ++i) CHECK(std::abs(rhs[i]) == 0.0);
}

TEST_CASE("nls_rhs: free Bessel eigenfunction") {
  const double k = 2.0;
  auto g = make_grid(1024, 16.0);
  ComplexRadialField q(g);
  for (int i = 0; i < g->n; ++i) q[i] = oracle::bessel_j1(k * g->node(i));
  auto rhs = nls_rhs(q, make_nls_params(0.0, 0));
  // dq/dt = -i k^2 q at interior nodes to O(h^2)
  double worst = 0;
  for (int i = 0; i < g->n / 2; ++i)
    if (g->node(i) >= 0.5) worst = std::max(worst, std::abs(rhs[i] - Complex(0, -k * k) * q[i]));
  CHECK(worst < 5 * k * k * k * k * g->h * g->h);
}

TEST_CASE("nls_rhs: nonlocal cubic term against the continuum formula") {
  // q = r exp(-r^2) real, K = lambda = 1; at r* near 1 compare with
  //   dq/dt = -i [ -(q'' + q'/r - q/r^2) + (I(q^2) - q^2/2) q ],
  // derivatives symbolic, I by adaptive quadrature.
  auto g = make_grid(1024, 16.0);
  ComplexRadialField q = gauss_m1(g, 1.0);
  auto rhs = nls_rhs(q, make_nls_params(1.0, 1));

  int idx = 0;
  while (g->node(idx) < 1.0) ++idx;
  const double r = g->node(idx);
  const double e = std::exp(-r * r);
  const double lap_minus = (4 * r * r * r - 8 * r) * e;  // q'' + q'/r - q/r^2
  const double I_val = oracle::integrate(
      [](double rho) { return rho * rho * std::exp(-2 * rho * rho) / rho; }, r, 16.0);
  const double V = I_val - 0.5 * (r * e) * (r * e);
  const Complex expected = Complex(0, -1) * (-lap_minus + V * r * e);
  CHECK(std::abs(rhs[idx] - expected) < 1e-3);
}

TEST_CASE("step_strang: zero stays zero, time advances") {
  auto g = make_grid(64, 8.0);
  NlsState s{0.0, ComplexRadialField(g)};
  auto s1 = step_strang(s, make_nls_params(1.0, 1), 1e-2);
  CHECK(s1.t == doctest::Approx(1e-2));
  for (int i = 0; i < g->n; ++i) CHECK(std::abs(s1.q[i]) == 0.0);
}

TEST_CASE("step_strang conserves mass for every coupling") {
  auto g = make_grid(512, 16.0);
  for (auto [K, lam] : std::vector<std::pair<double, int>>{{0, 0}, {1, 1}, {-1, -1}, {1, -1}, {0.5, 1}}) {
    NlsState s{0.0, gauss_m1(g, 0.4)};
    const double m0 = mass(s.q);
    auto s1 = step_strang(s, make_nls_params(K, lam), 1e-3);
    CHECK(std::abs(mass(s1.q) - m0) / m0 < 10 * 1e-12);
  }
}

TEST_CASE("free case matches the Hankel oracle at dt=1e-3") {
  auto g = make_grid(1024, 16.0);
  ComplexRadialField q0 = gauss_m1_sigma(g, 1.0, 3.0);
  SolverConfig cfg;
  cfg.dt = 1e-3;
  cfg.t_final = 0.5;
  cfg.output_every = 500;
  auto traj = evolve(q0, make_nls_params(0.0, 0), cfg);
  auto exact = free_evolution_exact(q0, 0.5, 16.0);
  CHECK(oracle::l2_rel_diff(traj.states.back().q, exact) <= 1e-4);
}

TEST_CASE("free-case error drops at least 3.5x when dt halves") {
  auto g = make_grid(2048, 16.0);
  ComplexRadialField q0 = gauss_m1_sigma(g, 1.0, 4.0);
  auto exact = free_evolution_exact(q0, 0.5, 16.0);
  auto err_at = [&](double dt) {
    SolverConfig cfg;
    cfg.dt = dt;
    cfg.t_final = 0.5;
    cfg.output_every = 1 << 20;
    auto traj = evolve(q0, make_nls_params(0.0, 0), cfg);
    return oracle::l2_rel_diff(traj.states.back().q, exact);
  };
  const double coarse = err_at(1.0 / 16);
  const double fine = err_at(1.0 / 32);
  CHECK(coarse <= 1e-4);
  CHECK(coarse / fine >= 3.5);
}

TEST_CASE("evolve with t_final=0 returns only the initial state") {
  auto g = make_grid(64, 8.0);
  SolverConfig cfg;
  cfg.dt = 1e-3;
  cfg.t_final = 0;
  auto traj = evolve(gauss_m1(g, 0.2), make_nls_params(1.0, 1), cfg);
  CHECK(traj.states.size() == 1);
  CHECK(traj.rows.size() == 1);
  CHECK(traj.states[0].t == 0.0);
}

TEST_CASE("mass drift over unit time, also at halved dt") {
  auto g = make_grid(1024, 16.0);
  ComplexRadialField q0 = gauss_m1(g, 0.1);
  for (double dt : {1e-3, 5e-4}) {
    SolverConfig cfg;
    cfg.dt = dt;
    cfg.t_final = 1.0;
    cfg.output_every = 200;
    auto traj = evolve(q0, make_nls_params(1.0, 1), cfg);
    const double m0 = traj.rows.front().mass_q;
    for (const auto& row : traj.rows) CHECK(std::abs(row.mass_q - m0) / m0 <= 1e-6);
  }
}

TEST_CASE("scaling symmetry q -> N q(N r, N^2 t)") {
  const int n = 512;
  const double N = 2.0;
  auto gA = make_grid(n, 16.0);
  auto gB = make_grid(n, 16.0 / N);
  ComplexRadialField q0A = gauss_m1(gA, 0.3);
  ComplexRadialField q0B(gB);
  for (int i = 0; i < n; ++i) q0B[i] = N * q0A[i];  // N q0(N r) lands on the same samples

  SolverConfig cfgA;
  cfgA.dt = 1e-3;
  cfgA.t_final = 0.2;
  cfgA.output_every = 200;
  SolverConfig cfgB;
  cfgB.dt = cfgA.dt / (N * N);
  cfgB.t_final = cfgA.t_final / (N * N);
  cfgB.output_every = 200;

  const NlsParams p = make_nls_params(1.0, 1);
  auto A = evolve(q0A, p, cfgA);
  auto B = evolve(q0B, p, cfgB);
  const ComplexRadialField& qA = A.states.back().q;
  const ComplexRadialField& qB = B.states.back().q;
  double num = 0, den = 0;
  for (int i = 0; i < n; ++i) {
    num += gB->weight(i) * std::norm(qB[i] - N * qA[i]);
    den += gB->weight(i) * std::norm(N * qA[i]);
  }
  CHECK(std::sqrt(num / den) <= 1e-3);
}

TEST_CASE("constant phase commutes with the flow") {
  auto g = make_grid(256, 12.0);
  ComplexRadialField q0 = gauss_m1(g, 0.3);
  const Complex phase = std::exp(Complex(0, 1.234));
  ComplexRadialField q0p(g);
  for (int i = 0; i < g->n; ++i) q0p[i] = phase * q0[i];

  SolverConfig cfg;
  cfg.dt = 1e-3;
  cfg.t_final = 0.05;
  cfg.output_every = 50;
  const NlsParams p = make_nls_params(1.0, 1);
  auto a = evolve(q0, p, cfg);
  auto b = evolve(q0p, p, cfg);
  double worst = 0;
  for (int i = 0; i < g->n; ++i)
    worst = std::max(worst, std::abs(b.states.back().q[i] - phase * a.states.back().q[i]));
  CHECK(worst < 1e-13);
}

TEST_CASE("conjugation reverses time") {
  auto g = make_grid(256, 12.0);
  CorpusRng rng(21);
  ComplexRadialField q0 = random_smooth_m1(g, rng);
  const NlsParams p = make_nls_params(1.0, 1);
  const double dt = 1e-3;
  const int steps = 20;

  // evolve conj(q0) forward
  ComplexRadialField qc(g);
  for (int i = 0; i < g->n; ++i) qc[i] = std::conj(q0[i]);
  NlsState a{0.0, qc};
  for (int s = 0; s < steps; ++s) a = step_strang(a, p, dt);

  // evolve q0 backward and conjugate
  NlsState b{0.0, q0};
  for (int s = 0; s < steps; ++s) b = step_strang(b, p, -dt);
  double worst = 0;
  for (int i = 0; i < g->n; ++i)
    worst = std::max(worst, std::abs(a.q[i] - std::conj(b.q[i])));
  CHECK(worst < 1e-8);
}

TEST_CASE("evolve aborts on data that blows past floating point") {
  auto g = make_grid(64, 8.0);
  SolverConfig cfg;
  cfg.dt = 1e-2;
  cfg.t_final = 1.0;
  ComplexRadialField huge = gauss_m1(g, 1e200);
  try {
    evolve(huge, make_nls_params(1.0, 1), cfg);
    CHECK(false);  // must abort
  } catch (const SolverAbort& e) {
    CHECK(e.step() >= 1);  // reports the failing step index
  }

  ComplexRadialField bad = gauss_m1(g, 1.0);
  bad[3] = Complex(std::nan(""), 0);
  CHECK_THROWS_AS(evolve(bad, make_nls_params(1.0, 1), cfg), std::invalid_argument);
}
