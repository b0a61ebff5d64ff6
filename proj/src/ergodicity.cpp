#include "ergo/ergodicity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ergo::eb {

double tamsd(std::span<const double> series, std::size_t lag, std::size_t t) {
  if (lag == 0) throw std::invalid_argument("tamsd: lag must be >= 1");
  if (t <= lag) throw std::invalid_argument("tamsd: t must exceed lag");
  if (t > series.size())
    throw std::invalid_argument("tamsd: t exceeds series length");
  double ss = 0.0;
  for (std::size_t k = 0; k + lag < t; ++k) {
    const double d = series[k + lag] - series[k];
    ss += d * d;
  }
  return ss / static_cast<double>(t - lag);
}

std::vector<std::size_t> log_spaced_lengths(std::size_t lo, std::size_t hi,
                                            std::size_t count) {
  std::vector<std::size_t> lengths;
  if (hi < lo || count == 0) return lengths;
  if (count == 1 || lo == hi) return {lo};
  const double llo = std::log(static_cast<double>(lo));
  const double lhi = std::log(static_cast<double>(hi));
  for (std::size_t i = 0; i < count; ++i) {
    const double x = llo + (lhi - llo) * static_cast<double>(i) /
                               static_cast<double>(count - 1);
    auto v = static_cast<std::size_t>(std::llround(std::exp(x)));
    v = std::clamp(v, lo, hi);
    if (lengths.empty() || v > lengths.back()) lengths.push_back(v);
  }
  return lengths;
}

EBCurve eb_curve(const std::vector<std::vector<double>>& ensemble,
                 std::size_t lag, LengthUnit unit, std::size_t grid_points) {
  if (ensemble.size() < 2)
    throw std::invalid_argument("eb_curve: need at least 2 trajectories");
  if (lag == 0) throw std::invalid_argument("eb_curve: lag must be >= 1");
  const std::size_t len = ensemble.front().size();
  for (const auto& traj : ensemble)
    if (traj.size() != len)
      throw std::invalid_argument("eb_curve: unequal trajectory lengths");
  if (len < lag + 2)
    throw std::invalid_argument("eb_curve: trajectories too short for lag");

  EBCurve curve;
  curve.lag = lag;
  curve.unit = unit;
  curve.ensemble_size = ensemble.size();
  curve.lengths = log_spaced_lengths(lag + 2, len, grid_points);

  // Prefix sums of squared lag-increments give every TAMSD in O(1).
  // A NaN value poisons the prefix from its first window onward, which is
  // exactly the pairwise-exclusion rule for sentinel-bearing trajectories.
  std::vector<std::vector<double>> prefix(ensemble.size());
  for (std::size_t i = 0; i < ensemble.size(); ++i) {
    const auto& traj = ensemble[i];
    prefix[i].resize(len - lag);
    double acc = 0.0;
    for (std::size_t k = 0; k + lag < len; ++k) {
      const double d = traj[k + lag] - traj[k];
      acc += d * d;
      prefix[i][k] = acc;
    }
  }

  const double nan = std::numeric_limits<double>::quiet_NaN();
  const std::size_t min_used = std::max<std::size_t>(
      2, static_cast<std::size_t>(
             std::ceil(0.1 * static_cast<double>(ensemble.size()))));
  for (std::size_t t : curve.lengths) {
    double sum = 0.0, sum_sq = 0.0;
    std::size_t used = 0;
    for (std::size_t i = 0; i < ensemble.size(); ++i) {
      const double d2 =
          prefix[i][t - lag - 1] / static_cast<double>(t - lag);
      if (!std::isfinite(d2)) continue;
      sum += d2;
      sum_sq += d2 * d2;
      ++used;
    }
    curve.n_used.push_back(used);
    if (used < 2) {
      curve.eb.push_back(nan);
      ++curve.unreliable_points;
      continue;
    }
    const double mean_d2 = sum / static_cast<double>(used);
    const double mean_sq = sum_sq / static_cast<double>(used);
    if (mean_d2 == 0.0) {
      // Every usable TAMSD is exactly zero (they are nonnegative), so the
      // ensemble variance is zero: the identical-trajectories limit, E_B = 0.
      curve.eb.push_back(0.0);
      continue;
    }
    curve.eb.push_back(mean_sq / (mean_d2 * mean_d2) - 1.0);
    if (used < min_used) ++curve.unreliable_points;
  }
  return curve;
}

EBCurve eb_descriptor(const std::vector<DescriptorSeries>& ensemble,
                      std::size_t lag, std::size_t grid_points) {
  if (ensemble.size() < 2)
    throw std::invalid_argument("eb_descriptor: need at least 2 series");
  for (const auto& s : ensemble) {
    if (s.descriptor != ensemble.front().descriptor)
      throw std::invalid_argument("eb_descriptor: mixed descriptors");
    if (!(s.grid == ensemble.front().grid))
      throw std::invalid_argument("eb_descriptor: mixed epoch grids");
  }
  std::vector<std::vector<double>> values;
  values.reserve(ensemble.size());
  for (const auto& s : ensemble) values.push_back(s.values);
  return eb_curve(values, lag, LengthUnit::Epochs, grid_points);
}

MteAverage mte_average(const std::vector<std::vector<double>>& ensemble,
                       std::span<const std::size_t> sizes) {
  if (ensemble.empty())
    throw std::invalid_argument("mte_average: empty ensemble");
  const std::size_t len = ensemble.front().size();
  for (const auto& traj : ensemble)
    if (traj.size() != len)
      throw std::invalid_argument("mte_average: unequal trajectory lengths");

  MteAverage out;
  for (std::size_t m : sizes) {
    if (m == 0 || m > ensemble.size())
      throw std::invalid_argument("mte_average: size exceeds ensemble");
    std::vector<double> avg(len, 0.0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < len; ++k) avg[k] += ensemble[i][k];
    const double inv = 1.0 / static_cast<double>(m);
    for (double& v : avg) v *= inv;
    out.ensemble_sizes.push_back(m);
    out.averaged.push_back(std::move(avg));
  }
  return out;
}

}  // namespace ergo::eb
