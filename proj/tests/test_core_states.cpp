#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "tachsim/analytic.hpp"
#include "tachsim/builders.hpp"
#include "tachsim/errors.hpp"
#include "tachsim/observables.hpp"
#include "tachsim/units.hpp"

using namespace tachsim;

TEST_CASE("natural units round trip exactly") {
  NaturalUnits u{3.4e-9, 1.59e-5};
  CHECK(u.from_si_length(u.to_si_length(7.25)) == 7.25);
  CHECK(u.from_si_time(u.to_si_time(0.125)) == 0.125);
}

TEST_CASE("gaussian packet moments against the quadrature oracle") {
  DiracParams pr{2.0, MassType::tachyon, 0.0};
  auto grid = make_grid(1024, 40.0);
  auto u = analytic::eigenspinor(3.5, pr, analytic::Branch::plus);
  auto f = gaussian_packet(grid, 3.5, 1.0, u);

  CHECK(f.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
  auto rec = observables(f);
  CHECK(std::abs(rec.mean_x) < 1e-10);

  // momentum-space quadrature oracle: |psi(p)|^2 ~ e^{-2 w^2 (p-p_o)^2}
  const double w = 1.0, po = 3.5;
  auto weight = [&](double p) { return std::exp(-2.0 * w * w * (p - po) * (p - po)); };
  const double norm = oracles::quadrature(weight, po - 10, po + 10);
  const double mean_p =
      oracles::quadrature([&](double p) { return p * weight(p); }, po - 10, po + 10) /
      norm;
  CHECK(rec.mean_p == doctest::Approx(mean_p).epsilon(1e-6));
  CHECK(rec.mean_p == doctest::Approx(3.5).epsilon(1e-6));
}

TEST_CASE("gaussian packet with definite sigma_z has no correlation") {
  auto grid = make_grid(512, 30.0);
  auto f = gaussian_packet(grid, 0.0, 1.0, Spinor{Complex(1.0, 0.0), Complex(0.0, 0.0)});
  auto rec = observables(f);
  CHECK(rec.mean_sigma_z == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(std::abs(rec.correlation_xz) < 1e-13);
}

TEST_CASE("gaussian packet clipped by the boundary") {
  auto grid = make_grid(64, 8.0);
  CHECK_THROWS_AS(gaussian_packet(grid, 0.0, 2.0, Spinor{1.0, 0.0}), DomainTooSmallError);
  CHECK_THROWS_AS(gaussian_packet(grid, 0.0, -1.0, Spinor{1.0, 0.0}), ConfigError);
}

TEST_CASE("positive-energy packet correlation") {
  auto grid = make_grid(1024, 40.0);
  DiracParams tach{1.0, MassType::tachyon, 0.0};
  DiracParams norm{1.0, MassType::normal, 0.0};

  auto ft = positive_energy_packet(grid, 10.0, 1.0, tach);
  CHECK(ft.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
  auto rec = observables(ft);
  // -m/(2 p_o^2) within 5 percent
  CHECK(rec.correlation_xz == doctest::Approx(-0.005).epsilon(0.05));
  // independent direct-sum oracle over the grid
  auto direct = oracles::direct_moments(ft);
  CHECK(rec.correlation_xz == doctest::Approx(direct.corr_xz).epsilon(1e-12));

  auto fn = positive_energy_packet(grid, 10.0, 1.0, norm);
  CHECK(std::abs(observables(fn).correlation_xz) < 1e-6);
}

TEST_CASE("positive-energy packet: spin-down density leads for a tachyon") {
  auto grid = make_grid(1024, 40.0);
  DiracParams tach{2.0, MassType::tachyon, 0.0};
  auto f = positive_energy_packet(grid, 3.5, 1.0, tach);
  std::size_t peak_up = 0, peak_down = 0;
  for (std::size_t j = 0; j < grid.n_points(); ++j) {
    if (std::norm(f.up[j]) > std::norm(f.up[peak_up])) peak_up = j;
    if (std::norm(f.down[j]) > std::norm(f.down[peak_down])) peak_down = j;
  }
  CHECK(grid.x(peak_down) > grid.x(peak_up));
}

TEST_CASE("positive-energy packet rejects heavy complex-band weight") {
  auto grid = make_grid(1024, 40.0);
  DiracParams tach{2.0, MassType::tachyon, 0.0};
  CHECK_THROWS_AS(positive_energy_packet(grid, 2.5, 1.0, tach),
                  IllConditionedPacketError);
}

TEST_CASE("observables of sigma_x eigenstates are exactly +-1") {
  auto grid = make_grid(256, 30.0);
  const double s = 1.0 / std::sqrt(2.0);
  auto fp = gaussian_packet(grid, 1.0, 1.5, Spinor{Complex(s, 0), Complex(s, 0)});
  CHECK(observables(fp).mean_sigma_x == doctest::Approx(1.0).epsilon(1e-14));
  auto fm = gaussian_packet(grid, 1.0, 1.5, Spinor{Complex(s, 0), Complex(-s, 0)});
  CHECK(observables(fm).mean_sigma_x == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("renormalization invariance of every entry except norm_sq") {
  auto grid = make_grid(512, 40.0);
  DiracParams tach{1.0, MassType::tachyon, 0.0};
  auto f = positive_energy_packet(grid, 10.0, 1.0, tach);
  auto base = observables(f);

  auto rng = oracles::test_rng(3);
  std::uniform_real_distribution<double> u(0.2, 2.0);
  for (int trial = 0; trial < 5; ++trial) {
    const Complex c = std::polar(u(rng), u(rng) * 3.0);
    auto scaled = f.scaled(c);
    auto rec = observables(scaled);
    CHECK(rec.mean_x == doctest::Approx(base.mean_x).epsilon(1e-12));
    CHECK(rec.mean_p == doctest::Approx(base.mean_p).epsilon(1e-12));
    CHECK(rec.mean_sigma_x == doctest::Approx(base.mean_sigma_x).epsilon(1e-12));
    CHECK(rec.mean_sigma_y == doctest::Approx(base.mean_sigma_y).epsilon(1e-12));
    CHECK(rec.mean_sigma_z == doctest::Approx(base.mean_sigma_z).epsilon(1e-12));
    CHECK(rec.correlation_xz == doctest::Approx(base.correlation_xz).epsilon(1e-12));
    CHECK(rec.norm_sq == doctest::Approx(std::norm(c) * base.norm_sq).epsilon(1e-12));
  }

  auto half = f.scaled(0.5);
  CHECK(observables(half).norm_sq == doctest::Approx(0.25 * base.norm_sq).epsilon(1e-12));
}

TEST_CASE("sigma bounds after renormalization") {
  auto grid = make_grid(512, 40.0);
  DiracParams tach{1.5, MassType::tachyon, 0.0};
  auto f = positive_energy_packet(grid, 8.0, 1.0, tach);
  auto rec = observables(f.scaled(Complex(0.3, 1.7)));
  CHECK(std::abs(rec.mean_sigma_x) <= 1.0 + 1e-12);
  CHECK(std::abs(rec.mean_sigma_y) <= 1.0 + 1e-12);
  CHECK(std::abs(rec.mean_sigma_z) <= 1.0 + 1e-12);
}

TEST_CASE("zero-norm field is rejected") {
  auto grid = make_grid(64, 20.0);
  SpinorField f(grid);
  CHECK_THROWS_AS(observables(f), DegenerateStateError);
}
