#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

namespace bergman {

enum class ExecPolicy { serial, parallel };

/// Running sums of one Monte-Carlo shard.
struct McSums {
  std::uint64_t total = 0;
  std::uint64_t accepted = 0;
  double sum_re = 0.0;
  double sum_re2 = 0.0;
  double sum_im = 0.0;
  double sum_im2 = 0.0;

  void add(std::complex<double> v);
  void reject() { ++total; }
  McSums& operator+=(const McSums& o);
};

struct McRun {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  /// Worker threads for the parallel policy; 0 lets OpenMP decide.
  int workers = 0;
  ExecPolicy policy = ExecPolicy::parallel;
};

/// Draws one sample: returns the integrand value, or nullopt when rejected.
using McSampler = std::function<std::optional<std::complex<double>>(std::mt19937_64&)>;

/// Number of independent shards; fixed so that results do not depend on
/// the worker count.
inline constexpr int kMcShards = 64;

/// Seed of shard `shard` derived from (seed, shard).
std::mt19937_64 shard_rng(std::uint64_t seed, int shard);

/// Runs `samples` draws split over kMcShards shards and reduces the shard
/// sums pairwise in shard order. Serial and parallel policies give
/// bit-identical results.
McSums run_mc(const McRun& run, const McSampler& sampler);

/// Mean over all draws (rejections count as zero) and its standard error.
struct MeanAndError {
  std::complex<double> mean;
  double std_error = 0.0;
};
MeanAndError mean_over_all(const McSums& s);
/// Mean over accepted draws only.
MeanAndError mean_over_accepted(const McSums& s);

/// Whether the library was built with OpenMP.
bool have_openmp();

} // namespace bergman
