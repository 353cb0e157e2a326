#include "bergman/monte_carlo.hpp"

#include "bergman/errors.hpp"

#include <cmath>

#ifdef BERGMAN_HAVE_OPENMP
#include <omp.h>
#endif

namespace bergman {

void McSums::add(std::complex<double> v) {
  ++total;
  ++accepted;
  sum_re += v.real();
  sum_re2 += v.real() * v.real();
  sum_im += v.imag();
  sum_im2 += v.imag() * v.imag();
}

McSums& McSums::operator+=(const McSums& o) {
  total += o.total;
  accepted += o.accepted;
  sum_re += o.sum_re;
  sum_re2 += o.sum_re2;
  sum_im += o.sum_im;
  sum_im2 += o.sum_im2;
  return *this;
}

std::mt19937_64 shard_rng(std::uint64_t seed, int shard) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(shard), 0x6267u};
  return std::mt19937_64(seq);
}

namespace {

McSums run_shard(const McRun& run, const McSampler& sampler, int shard) {
  const std::uint64_t base = run.samples / kMcShards;
  const std::uint64_t extra = run.samples % kMcShards;
  const std::uint64_t count = base + (static_cast<std::uint64_t>(shard) < extra ? 1 : 0);
  std::mt19937_64 rng = shard_rng(run.seed, shard);
  McSums s;
  for (std::uint64_t i = 0; i < count; ++i) {
    if (auto v = sampler(rng)) s.add(*v);
    else s.reject();
  }
  return s;
}

McSums reduce_pairwise(std::vector<McSums> parts) {
  while (parts.size() > 1) {
    std::vector<McSums> next;
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2) {
      McSums s = parts[i];
      s += parts[i + 1];
      next.push_back(s);
    }
    if (parts.size() % 2 == 1) next.push_back(parts.back());
    parts = std::move(next);
  }
  return parts.empty() ? McSums{} : parts.front();
}

} // namespace

McSums run_mc(const McRun& run, const McSampler& sampler) {
  std::vector<McSums> parts(kMcShards);
  if (run.policy == ExecPolicy::serial || !have_openmp()) {
    for (int s = 0; s < kMcShards; ++s) parts[static_cast<std::size_t>(s)] = run_shard(run, sampler, s);
  } else {
#ifdef BERGMAN_HAVE_OPENMP
    const int threads = run.workers > 0 ? run.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (int s = 0; s < kMcShards; ++s) parts[static_cast<std::size_t>(s)] = run_shard(run, sampler, s);
#endif
  }
  return reduce_pairwise(std::move(parts));
}

MeanAndError mean_over_all(const McSums& s) {
  if (s.total == 0) return {};
  const double n = static_cast<double>(s.total);
  const double mre = s.sum_re / n;
  const double mim = s.sum_im / n;
  const double var = std::max(0.0, s.sum_re2 / n - mre * mre) + std::max(0.0, s.sum_im2 / n - mim * mim);
  return {{mre, mim}, std::sqrt(var / n)};
}

MeanAndError mean_over_accepted(const McSums& s) {
  if (s.accepted == 0) return {};
  const double n = static_cast<double>(s.accepted);
  const double mre = s.sum_re / n;
  const double mim = s.sum_im / n;
  const double var = std::max(0.0, s.sum_re2 / n - mre * mre) + std::max(0.0, s.sum_im2 / n - mim * mim);
  return {{mre, mim}, std::sqrt(var / n)};
}

bool have_openmp() {
#ifdef BERGMAN_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

} // namespace bergman
