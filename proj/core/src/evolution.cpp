#include "tachsim/evolution.hpp"

#include <cmath>
#include <string>

#include "tachsim/analytic.hpp"
#include "tachsim/builders.hpp"
#include "tachsim/errors.hpp"
#include "tachsim/fft.hpp"

namespace tachsim {

namespace {

class SplitStepEvolver {
public:
  SplitStepEvolver(const SpatialGrid& grid, const DiracParams& params, double dt)
      : grid_(grid), dt_(dt) {
    if (!(dt > 0.0)) throw ConfigError("time step must be positive");
    if (dt * grid.max_momentum() >= 0.5) {
      throw StabilityError("dt * p_max = " + std::to_string(dt * grid.max_momentum()) +
                           " violates the bound dt * p_max < 0.5");
    }
    const std::size_t n = grid.n_points();
    half_up_.resize(n);
    half_down_.resize(n);
    kin_cos_.resize(n);
    kin_sin_.resize(n);
    const bool tach = params.mass_type == MassType::tachyon;
    for (std::size_t j = 0; j < n; ++j) {
      const Complex pot = std::polar(1.0, -params.potential_slope * grid.x(j) * dt / 2.0);
      if (tach) {
        half_up_[j] = pot * std::exp(-params.mass * dt / 2.0);
        half_down_[j] = pot * std::exp(params.mass * dt / 2.0);
      } else {
        half_up_[j] = pot * std::polar(1.0, -params.mass * dt / 2.0);
        half_down_[j] = pot * std::polar(1.0, params.mass * dt / 2.0);
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      const double theta = grid.momentum(k) * dt;
      kin_cos_[k] = std::cos(theta);
      kin_sin_[k] = std::sin(theta);
    }
  }

  void step(std::vector<Complex>& up, std::vector<Complex>& down) const {
    apply_half(up, down);
    fft::forward(up);
    fft::forward(down);
    for (std::size_t k = 0; k < up.size(); ++k) {
      // e^{-i p sigma_x dt} = cos(p dt) I - i sin(p dt) sigma_x
      const Complex u = up[k], d = down[k];
      up[k] = kin_cos_[k] * u - Complex(0.0, kin_sin_[k]) * d;
      down[k] = kin_cos_[k] * d - Complex(0.0, kin_sin_[k]) * u;
    }
    fft::inverse(up);
    fft::inverse(down);
    apply_half(up, down);
  }

private:
  void apply_half(std::vector<Complex>& up, std::vector<Complex>& down) const {
    for (std::size_t j = 0; j < up.size(); ++j) {
      up[j] *= half_up_[j];
      down[j] *= half_down_[j];
    }
  }

  SpatialGrid grid_;
  double dt_;
  std::vector<Complex> half_up_, half_down_;
  std::vector<double> kin_cos_, kin_sin_;
};

double edge_density(const SpinorField& f) {
  const std::size_t n = f.grid.n_points();
  const double d0 = std::norm(f.up[0]) + std::norm(f.down[0]);
  const double d1 = std::norm(f.up[n - 1]) + std::norm(f.down[n - 1]);
  return std::max(d0, d1) * f.grid.dx() / f.norm_sq();
}

Snapshot take_snapshot(const SpinorField& f, double t) {
  Snapshot s;
  s.time = t;
  const std::size_t n = f.grid.n_points();
  s.density.resize(n);
  s.density_up.resize(n);
  s.density_down.resize(n);
  const double inv = 1.0 / f.norm_sq();
  for (std::size_t j = 0; j < n; ++j) {
    s.density_up[j] = std::norm(f.up[j]) * inv;
    s.density_down[j] = std::norm(f.down[j]) * inv;
    s.density[j] = s.density_up[j] + s.density_down[j];
  }
  return s;
}

} // namespace

SpinorField step(const SpinorField& field, const EvolutionConfig& config) {
  SplitStepEvolver ev(field.grid, config.params, config.dt);
  SpinorField out = field;
  ev.step(out.up, out.down);
  return out;
}

struct Evolver::Impl {
  SplitStepEvolver stepper;
  Impl(const SpatialGrid& g, const DiracParams& p, double dt) : stepper(g, p, dt) {}
};

Evolver::Evolver(const SpatialGrid& grid, const DiracParams& params, double dt)
    : impl_(new Impl(grid, params, dt)) {}

Evolver::~Evolver() { delete impl_; }

void Evolver::advance(SpinorField& field) const {
  impl_->stepper.step(field.up, field.down);
}

EvolutionResult evolve(const SpinorField& field, const EvolutionConfig& config) {
  SplitStepEvolver ev(field.grid, config.params, config.dt);
  const std::size_t n_steps =
      static_cast<std::size_t>(std::llround(config.t_final / config.dt));

  EvolutionResult res{ObservableSeries{}, {}, std::nullopt, field};
  auto sample = [&](std::size_t istep) {
    const double t = static_cast<double>(istep) * config.dt;
    ObservableRecord rec = observables(res.final_field);
    rec.time = t;
    res.series.samples.push_back(rec);
    if (!res.boundary_warning_time && edge_density(res.final_field) > 1e-10) {
      res.boundary_warning_time = t;
    }
    if (config.snapshot_stride > 0 && istep % config.snapshot_stride == 0) {
      res.snapshots.push_back(take_snapshot(res.final_field, t));
    }
  };

  sample(0);
  for (std::size_t i = 1; i <= n_steps; ++i) {
    ev.step(res.final_field.up, res.final_field.down);
    if (i % config.sample_stride == 0 || i == n_steps) sample(i);
  }
  return res;
}

double velocity_residual(const ObservableSeries& series, const DiracParams& params) {
  if (series.size() < 3) {
    throw InsufficientDataError("velocity residual needs at least 3 samples");
  }
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < series.size(); ++i) {
    const double dt = series[i + 1].time - series[i - 1].time;
    const double lhs = (series[i + 1].mean_x - series[i - 1].mean_x) / dt;
    double rhs = series[i].mean_sigma_x;
    if (params.mass_type == MassType::tachyon) {
      rhs -= 2.0 * params.mass * series[i].correlation_xz;
    }
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

ScatteringOutcome scattering_run(double p_o, const DiracParams& params,
                                 const EvolutionConfig& config,
                                 const ScatteringSetup& setup) {
  const double g = params.potential_slope;
  if (!(g > 0.0)) throw ConfigError("scattering requires potential_slope > 0");
  if (!(p_o > 0.0)) throw ConfigError("scattering requires p_o > 0");

  const SpatialGrid grid = make_grid(setup.n_points, setup.extent);
  const double e_kin =
      params.mass_type == MassType::tachyon
          ? std::sqrt(std::max(p_o * p_o - params.mass * params.mass, 0.0))
          : std::hypot(p_o, params.mass);
  const double x_cut = setup.x0 + e_kin / g;
  if (std::abs(x_cut) > 0.45 * setup.extent) {
    throw ConfigError("classical turning point outside the grid");
  }

  SpinorField f = positive_energy_packet(grid, p_o, setup.width, params, setup.x0);
  SplitStepEvolver ev(grid, params, config.dt);

  std::size_t cut_idx = 0;
  double best = 1e300;
  for (std::size_t j = 0; j < grid.n_points(); ++j) {
    const double d = std::abs(grid.x(j) - x_cut);
    if (d < best) { best = d; cut_idx = j; }
  }

  auto current_at_cut = [&]() {
    const Complex cross = std::conj(f.up[cut_idx]) * f.down[cut_idx];
    return 2.0 * cross.real() * grid.dx() / f.norm_sq();
  };

  EvolutionResult res{ObservableSeries{}, {}, std::nullopt, f};
  const std::size_t n_steps =
      static_cast<std::size_t>(std::llround(config.t_final / config.dt));
  const double t_turn = p_o / g;

  double peak_flux = 0.0;
  double stop_time = -1.0;
  std::size_t istep = 0;
  auto sample = [&](std::size_t i) {
    ObservableRecord rec = observables(f);
    rec.time = static_cast<double>(i) * config.dt;
    res.series.samples.push_back(rec);
    if (!res.boundary_warning_time && edge_density(f) > 1e-10) {
      res.boundary_warning_time = rec.time;
    }
    if (config.snapshot_stride > 0 && i % config.snapshot_stride == 0) {
      res.snapshots.push_back(take_snapshot(f, rec.time));
    }
  };

  sample(0);
  for (istep = 1; istep <= n_steps; ++istep) {
    ev.step(f.up, f.down);
    const double t = static_cast<double>(istep) * config.dt;
    if (istep % config.sample_stride == 0 || istep == n_steps) {
      res.final_field = f;
      sample(istep);
      const double flux = std::abs(current_at_cut());
      peak_flux = std::max(peak_flux, flux);
      if (t > t_turn && peak_flux > 0.0 && flux < 1e-6 * peak_flux) {
        stop_time = t;
        break;
      }
    }
  }
  if (stop_time < 0.0) {
    throw InconclusiveScatteringError(
        "transmitted and reflected lobes failed to separate by t = " +
        std::to_string(config.t_final));
  }

  res.final_field = f;
  double right = 0.0, total = 0.0;
  for (std::size_t j = 0; j < grid.n_points(); ++j) {
    const double d = std::norm(f.up[j]) + std::norm(f.down[j]);
    total += d;
    if (grid.x(j) > x_cut) right += d;
  }

  ScatteringOutcome out{std::move(res), right / total, 1.0 - right / total,
                        x_cut, stop_time};
  return out;
}

} // namespace tachsim
