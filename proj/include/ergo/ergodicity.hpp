#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ergo/linstats.hpp"

namespace ergo::eb {

// Thirumalai-Mountain ergodicity breaking: the time-averaged mean squared
// displacement (TAMSD) of each trajectory is computed at a fixed lag over a
// grid of measurement lengths t; E_B(t) is the normalized ensemble variance
// of the TAMSD, <d2^2>/<d2>^2 - 1, which decays to zero with growing t for
// an ergodic process. No RNG anywhere in this module.

/// TAMSD of one trajectory: mean of squared lag-increments over the first
/// t samples. Requires lag >= 1 and lag < t <= length.
double tamsd(std::span<const double> series, std::size_t lag, std::size_t t);

enum class LengthUnit { Samples, Epochs };

struct EBCurve {
  std::size_t lag = 0;
  std::vector<std::size_t> lengths;  // strictly increasing, each > lag
  std::vector<double> eb;            // NaN where undefined
  std::vector<std::size_t> n_used;   // trajectories entering each point
  std::size_t ensemble_size = 0;
  LengthUnit unit = LengthUnit::Samples;
  std::size_t unreliable_points = 0;  // fewer than 10% of ensemble survived
};

/// E_B over a log-spaced grid of measurement lengths from lag+2 to the
/// trajectory length. NaN trajectories are excluded pairwise per point.
/// Requires >= 2 trajectories of equal length.
EBCurve eb_curve(const std::vector<std::vector<double>>& ensemble,
                 std::size_t lag, LengthUnit unit = LengthUnit::Samples,
                 std::size_t grid_points = 50);

/// eb_curve over descriptor value sequences (unit = epochs). All series
/// must share the descriptor and the epoch grid.
EBCurve eb_descriptor(const std::vector<DescriptorSeries>& ensemble,
                      std::size_t lag, std::size_t grid_points = 50);

struct MteAverage {
  std::vector<std::size_t> ensemble_sizes;
  std::vector<std::vector<double>> averaged;  // one series per size
};

/// Pointwise mean over the first m trajectories for each m in sizes.
MteAverage mte_average(const std::vector<std::vector<double>>& ensemble,
                       std::span<const std::size_t> sizes);

/// Log-spaced unique integer lengths in [lo, hi].
std::vector<std::size_t> log_spaced_lengths(std::size_t lo, std::size_t hi,
                                            std::size_t count);

}  // namespace ergo::eb
