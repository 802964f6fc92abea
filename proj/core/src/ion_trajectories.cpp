#include <atomic>
#include <cmath>
#include <random>
#include <thread>

#include "ion_detail.hpp"
#include "tachsim/errors.hpp"
#include "tachsim/ion.hpp"

namespace tachsim::ion {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Platform-independent uniform in (0, 1).
double uniform01(std::mt19937_64& rng) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return u == 0.0 ? 0x1.0p-53 : u;
}

struct SampleAccumulator {
  std::vector<double> count, x, p, sx, sy, sz, corr;

  explicit SampleAccumulator(std::size_t n)
      : count(n), x(n), p(n), sx(n), sy(n), sz(n), corr(n) {}

  void add(std::size_t k, const ObservableRecord& r) {
    count[k] += 1.0;
    x[k] += r.mean_x;
    p[k] += r.mean_p;
    sx[k] += r.mean_sigma_x;
    sy[k] += r.mean_sigma_y;
    sz[k] += r.mean_sigma_z;
    corr[k] += r.correlation_xz;
  }

  void merge(const SampleAccumulator& o) {
    for (std::size_t k = 0; k < count.size(); ++k) {
      count[k] += o.count[k];
      x[k] += o.x[k];
      p[k] += o.p[k];
      sx[k] += o.sx[k];
      sy[k] += o.sy[k];
      sz[k] += o.sz[k];
      corr[k] += o.corr[k];
    }
  }
};

struct ChunkResult {
  SampleAccumulator acc;
  std::vector<TrajectoryRecord> records;
  std::size_t n_no_jump = 0;

  explicit ChunkResult(std::size_t n_samples) : acc(n_samples) {}
};

} // namespace

TrajectoryEnsemble run_trajectories(const IonParams& params, const IonState& initial,
                                    double t_final, std::size_t n_traj,
                                    std::uint64_t master_seed, double dt,
                                    std::size_t sample_stride) {
  if (n_traj < 1) throw ConfigError("run_trajectories requires n_traj >= 1");
  const auto drive = detail::NaturalDrive::from(params);
  const double h = detail::resolve_dt(drive, dt);
  const std::size_t n_steps = static_cast<std::size_t>(std::llround(t_final / h));

  std::vector<std::size_t> sample_steps;
  for (std::size_t i = 0; i <= n_steps; ++i) {
    if (i % sample_stride == 0 || i == n_steps) sample_steps.push_back(i);
  }
  const std::size_t n_samples = sample_steps.size();

  // Fixed-size chunks and an index-ordered reduction keep the result
  // independent of the number of worker threads.
  constexpr std::size_t kChunk = 256;
  const std::size_t n_chunks = (n_traj + kChunk - 1) / kChunk;
  std::vector<ChunkResult> chunk_results;
  chunk_results.reserve(n_chunks);
  for (std::size_t c = 0; c < n_chunks; ++c) chunk_results.emplace_back(n_samples);

  const double gamma_total = drive.gamma + drive.gamma_d;
  const double p_decay_channel =
      gamma_total > 0.0 ? drive.gamma / gamma_total : 1.0;

  std::atomic<std::size_t> next_chunk{0};
  std::atomic<bool> truncation_tripped{false};

  auto run_one = [&](std::uint64_t seed, TrajectoryRecord& rec,
                     SampleAccumulator& acc, std::size_t& no_jump_count,
                     IonState& y, IonState& k1, IonState& k2, IonState& k3,
                     IonState& k4, IonState& tmp) {
    std::mt19937_64 rng(seed);
    rec.seed = seed;
    y = initial;

    double threshold = uniform01(rng);
    bool alive = true;
    ObservableRecord frozen;
    std::size_t sample_idx = 0;

    auto record_sample = [&](std::size_t k) {
      if (alive) {
        y.time = static_cast<double>(sample_steps[k]) * h;
        if (y.top_two_population() > 1e-6) truncation_tripped = true;
        acc.add(k, y.observables());
      } else if (rec.misclassified) {
        acc.add(k, frozen);
      }
    };

    record_sample(sample_idx++);
    for (std::size_t i = 1; i <= n_steps && (alive || rec.misclassified); ++i) {
      if (alive) {
        detail::rk4_step(y, static_cast<double>(i - 1) * h, h, drive, gamma_total,
                         k1, k2, k3, k4, tmp);
        if (y.norm_sq() <= threshold) {
          const double t_jump = static_cast<double>(i) * h;
          const bool is_decay = uniform01(rng) < p_decay_channel;
          if (is_decay) {
            rec.jumps.push_back({t_jump, JumpChannel::decay});
            rec.decayed = true;
            rec.decay_time = t_jump;
            y.time = t_jump;
            frozen = y.observables();
            rec.misclassified = uniform01(rng) >= params.readout_fidelity;
            alive = false;
          } else {
            rec.jumps.push_back({t_jump, JumpChannel::pumping});
            for (std::size_t n = 0; n < y.n_levels; ++n) y.amp(1, n) = 0.0;
            const double nrm = std::sqrt(y.norm_sq());
            for (auto& z : y.amps) z /= nrm;
            threshold = uniform01(rng);
          }
        }
      }
      if (sample_idx < n_samples && i == sample_steps[sample_idx]) {
        record_sample(sample_idx++);
      }
    }
    if (!rec.decayed) ++no_jump_count;
  };

  auto worker = [&]() {
    IonState y(initial.n_max()), k1(initial.n_max()), k2(initial.n_max()),
        k3(initial.n_max()), k4(initial.n_max()), tmp(initial.n_max());
    for (;;) {
      const std::size_t c = next_chunk.fetch_add(1);
      if (c >= n_chunks) break;
      ChunkResult& out = chunk_results[c];
      const std::size_t begin = c * kChunk;
      const std::size_t end = std::min(begin + kChunk, n_traj);
      out.records.resize(end - begin);
      for (std::size_t idx = begin; idx < end; ++idx) {
        const std::uint64_t seed = splitmix64(master_seed + idx);
        run_one(seed, out.records[idx - begin], out.acc, out.n_no_jump, y, k1,
                k2, k3, k4, tmp);
      }
    }
  };

  const std::size_t n_threads =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), n_chunks);
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < n_threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  if (truncation_tripped) {
    throw TruncationError("trajectory state leaked into the top two Fock levels");
  }

  TrajectoryEnsemble ens;
  ens.n_total = n_traj;
  ens.master_seed = master_seed;
  SampleAccumulator total(n_samples);
  for (auto& cr : chunk_results) {
    total.merge(cr.acc);
    ens.n_no_jump += cr.n_no_jump;
    for (auto& r : cr.records) ens.trajectories.push_back(std::move(r));
  }

  for (std::size_t k = 0; k < n_samples; ++k) {
    if (total.count[k] == 0.0) {
      throw StatisticsError("no surviving trajectories at sample " +
                            std::to_string(k) + " of " + std::to_string(n_samples) +
                            " (0 of " + std::to_string(n_traj) + ")");
    }
    ObservableRecord rec;
    rec.time = static_cast<double>(sample_steps[k]) * h;
    const double inv = 1.0 / total.count[k];
    rec.mean_x = total.x[k] * inv;
    rec.mean_p = total.p[k] * inv;
    rec.mean_sigma_x = total.sx[k] * inv;
    rec.mean_sigma_y = total.sy[k] * inv;
    rec.mean_sigma_z = total.sz[k] * inv;
    rec.correlation_xz = total.corr[k] * inv;
    rec.norm_sq = total.count[k] / static_cast<double>(n_traj); // surviving fraction
    ens.conditioned.samples.push_back(rec);
  }
  return ens;
}

} // namespace tachsim::ion
