#include <doctest.h>

#include <cmath>

#include "tachsim/analytic.hpp"
#include "tachsim/builders.hpp"
#include "tachsim/errors.hpp"
#include "tachsim/evolution.hpp"
#include "tachsim/ion.hpp"

using namespace tachsim;
using namespace tachsim::ion;

namespace {

IonParams yb_params(double m_prime_decay) {
  IonParams ip;
  ip.eta = 0.05;
  ip.omega_tilde = 2 * M_PI * 1e5;
  ip.nu = 2 * M_PI * 1e6;
  ip.delta_x = 3.4e-9;
  ip.gamma = m_prime_decay * 4.0 * (2.0 * ip.eta * ip.omega_tilde);
  ip.gamma_d = 0.0;
  return ip;
}

} // namespace

TEST_CASE("ideal mapping reproduces the example numbers") {
  IonParams ip;
  ip.eta = 0.05;
  ip.omega_tilde = 2 * M_PI * 1e5;
  ip.delta_x = 3.4e-9;
  ip.gamma = 2 * M_PI * 8e4;

  auto map = ideal_mapping(ip, MassSource::decay);
  CHECK(map.c_si == doctest::Approx(2.136e-4).epsilon(1e-3));
  CHECK(map.units.time_unit_s == doctest::Approx(16e-6).epsilon(0.01));
  CHECK(map.m_prime == doctest::Approx(2.0).epsilon(0.02));
  CHECK(map.dirac.mass_type == MassType::tachyon);

  ip.gamma = 0.0;
  auto map0 = ideal_mapping(ip, MassSource::decay);
  CHECK(map0.m_prime == 0.0);

  ip.delta = 1.0 / map.units.time_unit_s;
  auto mapn = ideal_mapping(ip, MassSource::detuning);
  CHECK(mapn.dirac.mass_type == MassType::normal);
  CHECK(mapn.m_prime == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("sideband hamiltonian structure") {
  IonParams ip = yb_params(0.0);
  ip.n_max = 16;
  const double tu = 1.0 / (2 * ip.eta * ip.omega_tilde);
  const double omt_nat = ip.omega_tilde * tu;

  SUBCASE("eta = 0 and phi = 0 annihilates every state") {
    IonParams z = ip;
    z.eta = 1e-300; // the mapping requires eta > 0; the coupling scales it away
    IonState st(16);
    st.amp(0, 3) = 1.0;
    st.amp(1, 7) = 0.5;
    auto out = apply_sideband_hamiltonian(st, 0.37, z);
    // bracket is eta cos(phi) * X; with eta -> 0 the action vanishes
    CHECK(out.norm_sq() < 1e-200);
  }

  SUBCASE("phi = pi/2 is a pure carrier, diagonal in phonon number") {
    IonParams c = ip;
    c.phi = M_PI / 2.0;
    for (std::size_t n : {0u, 3u, 9u}) {
      IonState st(16);
      st.amp(1, n) = 1.0;
      auto out = apply_sideband_hamiltonian(st, 0.0, c);
      for (std::size_t m = 0; m <= 16; ++m) {
        if (m != n) {
          CHECK(std::abs(out.amp(0, m)) < 1e-15);
        }
        CHECK(std::abs(out.amp(1, m)) < 1e-15); // no spin-diagonal part
      }
      CHECK(std::abs(out.amp(0, n)) == doctest::Approx(omt_nat).epsilon(1e-12));
    }
  }

  SUBCASE("sideband matrix element <up,n+1|H_o|down,n> = eta omega sqrt(n+1)") {
    for (std::size_t n : {0u, 4u, 11u}) {
      IonState st(16);
      st.amp(1, n) = 1.0;
      auto out = apply_sideband_hamiltonian(st, 0.0, ip);
      CHECK(std::abs(out.amp(0, n + 1)) ==
            doctest::Approx(ip.eta * omt_nat * std::sqrt(n + 1.0)).epsilon(1e-12));
    }
  }

  SUBCASE("drive equals the red sideband term minus the blue one") {
    IonParams red = ip, blue = ip;
    const double delta_n = ip.delta * tu;
    red.delta = (-ip.nu * tu - 2 * delta_n) / tu;
    blue.delta = (ip.nu * tu - 2 * delta_n) / tu;
    IonState st(16);
    for (std::size_t n = 0; n <= 16; ++n) {
      st.amp(0, n) = Complex(std::sin(0.3 * n + 0.1), std::cos(0.2 * n));
      st.amp(1, n) = Complex(std::cos(0.5 * n), std::sin(0.7 * n + 0.4));
    }
    const double t = 0.613;
    auto d = apply_bichromatic_drive(st, t, ip);
    auto r = apply_sideband_hamiltonian(st, t, red);
    auto b = apply_sideband_hamiltonian(st, t, blue);
    for (std::size_t i = 0; i < d.amps.size(); ++i) {
      CHECK(std::abs(d.amps[i] - (r.amps[i] - b.amps[i])) < 1e-12);
    }
  }
}

TEST_CASE("coherent state moments") {
  const Complex alpha(0.0, 3.5);
  auto st = IonState::coherent(alpha, Spinor{Complex(1, 0), Complex(0, 0)}, 64);
  CHECK(st.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
  auto rec = st.observables();
  CHECK(rec.mean_x == doctest::Approx(2.0 * alpha.real()).epsilon(1e-10));
  CHECK(rec.mean_p == doctest::Approx(alpha.imag()).epsilon(1e-10));
  CHECK(rec.mean_sigma_z == doctest::Approx(1.0));
  CHECK(st.top_two_population() < 1e-10);
}

TEST_CASE("project_to_fock matches spatial observables") {
  auto grid = make_grid(1024, 40.0);
  DiracParams pr{1.0, MassType::tachyon, 0.0};
  auto f = positive_energy_packet(grid, 3.0, 1.0, pr);
  auto spatial = observables(f);
  auto fock = project_to_fock(f, 96);
  CHECK(fock.norm_sq() == doctest::Approx(1.0).epsilon(1e-6));
  auto rec = fock.observables();
  CHECK(rec.mean_x == doctest::Approx(spatial.mean_x).epsilon(1e-6));
  CHECK(rec.mean_p == doctest::Approx(spatial.mean_p).epsilon(1e-6));
  CHECK(rec.mean_sigma_z == doctest::Approx(spatial.mean_sigma_z).epsilon(1e-8));
  CHECK(rec.correlation_xz == doctest::Approx(spatial.correlation_xz).epsilon(1e-4));
}

TEST_CASE("hermitian ion evolution conserves the norm") {
  IonParams ip = yb_params(0.0);
  ip.n_max = 64;
  auto st = IonState::coherent(Complex(0, 2.0),
                               Spinor{Complex(0.8, 0), Complex(0.0, 0.6)}, ip.n_max);
  auto res = evolve_conditioned(st, ip, 0.5, 0.0, 300);
  CHECK(res.success_probability == doctest::Approx(1.0).epsilon(1e-9));
  for (const auto& r : res.series.samples) {
    CHECK(std::abs(r.norm_sq - 1.0) < 1e-9);
  }
}

TEST_CASE("conditioned success probability near the sigma_z = 0 estimate") {
  IonParams ip = yb_params(2.0);
  ip.n_max = 64;
  auto map = ideal_mapping(ip, MassSource::decay);
  auto u = analytic::eigenspinor(3.5, map.dirac, analytic::Branch::plus);
  auto st = IonState::coherent(Complex(0.0, 3.5), u, ip.n_max);
  auto res = evolve_conditioned(st, ip, 0.5, 0.0, 318);
  CHECK(res.success_probability ==
        doctest::Approx(std::exp(-2.0)).epsilon(0.10)); // "very good estimate"
  CHECK(res.success_probability == doctest::Approx(0.135).epsilon(0.10));
  // norm converter to the sigma_z-only convention
  const double gamma_nat = 8.0; // 4 m'
  CHECK(eq3_norm_sq(res.success_probability, gamma_nat, 0.5) ==
        doctest::Approx(res.success_probability * std::exp(2.0)).epsilon(1e-12));
}

TEST_CASE("ion tracks the ideal tachyon dynamics after basis alignment") {
  IonParams ip = yb_params(2.0);
  ip.n_max = 96;
  auto map = ideal_mapping(ip, MassSource::decay);
  auto u = analytic::eigenspinor(3.5, map.dirac, analytic::Branch::plus);
  auto st = IonState::coherent(Complex(0.0, 3.5), u, ip.n_max);
  auto ion_res = evolve_conditioned(st, ip, 0.5, 0.0, 159);

  // identical construction implies an identity spinor alignment at t = 0
  auto grid = make_grid(1024, 40.0);
  auto f0 = gaussian_packet(grid, 3.5, 1.0, u);
  EvolutionConfig cfg{5e-4, 0.5, 20, 0, map.dirac};
  auto ideal = evolve(f0, cfg);
  const auto& r0i = ion_res.series.samples.front();
  const auto& r0d = ideal.series.samples.front();
  CHECK(r0i.mean_sigma_x == doctest::Approx(r0d.mean_sigma_x).epsilon(1e-6));
  CHECK(r0i.mean_sigma_y == doctest::Approx(r0d.mean_sigma_y).epsilon(1e-6));
  CHECK(r0i.mean_sigma_z == doctest::Approx(r0d.mean_sigma_z).epsilon(1e-6));

  double scale = 0.0;
  for (const auto& q : ideal.series.samples) scale = std::max(scale, std::abs(q.mean_x));
  for (const auto& r : ion_res.series.samples) {
    double best = 1e30, ix = 0.0;
    for (const auto& q : ideal.series.samples) {
      if (std::abs(q.time - r.time) < best) {
        best = std::abs(q.time - r.time);
        ix = q.mean_x;
      }
    }
    CHECK(std::abs(r.mean_x - ix) < 0.05 * scale);
  }
}

TEST_CASE("detuned gamma-free ion reproduces the normal Dirac equation") {
  IonParams ip = yb_params(0.0);
  ip.n_max = 80;
  const double tu = 1.0 / (2 * ip.eta * ip.omega_tilde);
  ip.delta = 1.0 / tu; // m' = 1, normal
  auto map = ideal_mapping(ip, MassSource::detuning);
  auto u = analytic::eigenspinor(2.0, map.dirac, analytic::Branch::plus);
  auto st = IonState::coherent(Complex(0.0, 2.0), u, ip.n_max);
  auto ion_res = evolve_conditioned(st, ip, 0.5, 0.0, 159);

  auto grid = make_grid(1024, 40.0);
  auto f0 = gaussian_packet(grid, 2.0, 1.0, u);
  EvolutionConfig cfg{5e-4, 0.5, 20, 0, map.dirac};
  auto ideal = evolve(f0, cfg);

  for (const auto& r : ion_res.series.samples) {
    double best = 1e30;
    ObservableRecord q{};
    for (const auto& cand : ideal.series.samples) {
      if (std::abs(cand.time - r.time) < best) {
        best = std::abs(cand.time - r.time);
        q = cand;
      }
    }
    // frame-invariant observables: <x>, <sigma_z>, correlation
    CHECK(std::abs(r.mean_x - q.mean_x) < 0.02);
    CHECK(std::abs(r.mean_sigma_z - q.mean_sigma_z) < 0.02);
    CHECK(std::abs(r.correlation_xz - q.correlation_xz) < 0.02);
  }
}

TEST_CASE("truncation monitor trips on a too-small Fock space") {
  IonParams ip = yb_params(0.0);
  ip.n_max = 16; // coherent |alpha|^2 = 12.25 spills over
  auto st = IonState::coherent(Complex(0.0, 3.5),
                               Spinor{Complex(1, 0), Complex(0, 0)}, ip.n_max);
  CHECK_THROWS_AS(evolve_conditioned(st, ip, 0.05, 0.0, 10), TruncationError);
}

TEST_CASE("trajectory ensemble statistics and determinism") {
  IonParams ip = yb_params(2.0);
  ip.n_max = 64;
  auto map = ideal_mapping(ip, MassSource::decay);
  auto u = analytic::eigenspinor(3.5, map.dirac, analytic::Branch::plus);
  auto st = IonState::coherent(Complex(0.0, 3.5), u, ip.n_max);

  auto cond = evolve_conditioned(st, ip, 0.5, 0.0, 318);
  auto ens = run_trajectories(ip, st, 0.5, 600, 2024u, 0.0, 318);
  CHECK(ens.n_total == 600);

  const double p = cond.success_probability;
  const double frac = double(ens.n_no_jump) / 600.0;
  const double sigma = std::sqrt(p * (1 - p) / 600.0);
  CHECK(std::abs(frac - p) < 3.0 * sigma);

  // conditioned trajectory average equals the deterministic no-jump curve
  for (const auto& r : ens.conditioned.samples) {
    double best = 1e30, cx = 0.0;
    for (const auto& q : cond.series.samples) {
      if (std::abs(q.time - r.time) < best) {
        best = std::abs(q.time - r.time);
        cx = q.mean_x;
      }
    }
    CHECK(std::abs(r.mean_x - cx) < 1e-9);
  }

  auto ens2 = run_trajectories(ip, st, 0.5, 600, 2024u, 0.0, 318);
  CHECK(ens2.n_no_jump == ens.n_no_jump);
  bool identical = true;
  for (std::size_t i = 0; i < ens.conditioned.samples.size(); ++i) {
    identical = identical && ens.conditioned.samples[i].mean_x ==
                                 ens2.conditioned.samples[i].mean_x;
  }
  CHECK(identical);

  auto ens3 = run_trajectories(ip, st, 0.5, 600, 2025u, 0.0, 318);
  CHECK(ens3.conditioned.samples.back().mean_x != ens.conditioned.samples.back().mean_x);
}

TEST_CASE("pumping-error jumps stay in the conditioned set") {
  IonParams ip = yb_params(2.0);
  ip.n_max = 64;
  ip.gamma_d = 0.1 * ip.gamma;
  auto map = ideal_mapping(ip, MassSource::decay);
  auto u = analytic::eigenspinor(3.5, map.dirac, analytic::Branch::plus);
  auto st = IonState::coherent(Complex(0.0, 3.5), u, ip.n_max);
  auto ens = run_trajectories(ip, st, 0.5, 400, 99u, 0.0, 318);

  std::size_t pump_no_decay = 0;
  for (const auto& tr : ens.trajectories) {
    bool has_pump = false;
    for (const auto& j : tr.jumps) {
      if (j.channel == JumpChannel::pumping) has_pump = true;
    }
    if (has_pump && !tr.decayed) ++pump_no_decay;
  }
  CHECK(pump_no_decay > 0); // pumped survivors exist and were averaged in
}

TEST_CASE("measurement protocol") {
  SUBCASE("uncorrelated product state estimates zero") {
    auto st = IonState::coherent(Complex(1.2, 0.4),
                                 Spinor{Complex(1, 0), Complex(0, 0)}, 64);
    IonParams ip;
    auto est = measure_correlation_protocol(st, ip, {-0.02, -0.01, 0.01, 0.02});
    CHECK(std::abs(est.connected) < 1e-6);
  }

  SUBCASE("entangled packet estimate matches the direct contraction") {
    auto grid = make_grid(1024, 40.0);
    DiracParams pr{1.0, MassType::tachyon, 0.0};
    auto f = positive_energy_packet(grid, 10.0, 1.0, pr);
    auto st = project_to_fock(f, 256);
    IonParams ip;
    ip.n_max = 256;
    auto est = measure_correlation_protocol(st, ip, {-0.02, -0.01, 0.01, 0.02});
    const auto direct = st.observables();
    CHECK(std::abs(est.connected - direct.correlation_xz) < 1e-3);
  }

  SUBCASE("error scales as k^2") {
    auto grid = make_grid(1024, 40.0);
    DiracParams pr{2.0, MassType::tachyon, 0.0};
    auto f = positive_energy_packet(grid, 3.5, 1.0, pr);
    auto st = project_to_fock(f, 128);
    IonParams ip;
    const auto direct = st.observables();
    auto err_at = [&](double k) {
      auto est = measure_correlation_protocol(st, ip, {-2 * k, -k, k, 2 * k});
      return std::abs(est.connected - direct.correlation_xz);
    };
    const double e1 = err_at(0.02);
    const double e2 = err_at(0.01);
    CHECK(e1 / e2 > 2.5);
    CHECK(e1 / e2 < 6.0);
  }

  SUBCASE("oversized displacements are rejected") {
    auto st = IonState::coherent(Complex(5.0, 0.0),
                                 Spinor{Complex(1, 0), Complex(0, 0)}, 96);
    IonParams ip;
    CHECK_THROWS_AS(measure_correlation_protocol(st, ip, {-0.5, 0.5}),
                    ProtocolRegimeError);
  }
}

TEST_CASE("lamb-dicke warning flag") {
  IonParams ip = yb_params(0.0);
  ip.eta = 0.3;
  CHECK(ip.lamb_dicke_warning());
  ip.eta = 0.05;
  CHECK_FALSE(ip.lamb_dicke_warning());
}
