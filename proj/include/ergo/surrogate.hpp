#pragma once

#include <cstdint>
#include <vector>

#include "ergo/multifractal.hpp"
#include "ergo/time_series.hpp"

namespace ergo::surrogate {

// Iterated amplitude-adjusted Fourier transform surrogates: phase-randomized
// copies that keep the original amplitude distribution exactly (final step
// is a rank remap onto the sorted original values) and its amplitude
// spectrum approximately.

struct IaaftParams {
  std::size_t max_iter = 100;
  double tol = 1e-8;  // relative change of the spectral error between iterations
};

struct IaaftResult {
  TimeSeries series;
  double spectral_error = 0.0;  // final relative amplitude-spectrum RMS mismatch
  std::size_t iterations = 0;
  bool hit_max_iter = false;
};

/// One IAAFT surrogate. Iterates amplitude imposition and rank remapping,
/// stopping when the rank ordering repeats, the spectral error stops
/// changing, or max_iter is reached. A constant series is returned
/// unchanged; otherwise length >= 8 is required.
IaaftResult iaaft(const TimeSeries& series, std::uint64_t seed,
                  const IaaftParams& params = {});

struct SurrogateEnsemble {
  std::vector<TimeSeries> surrogates;
  std::vector<double> spectral_errors;
  std::vector<std::size_t> iterations_used;
  bool any_hit_max_iter = false;
};

/// count surrogates with subseeds derive_seed(seed, index).
SurrogateEnsemble make_ensemble(const TimeSeries& series, std::size_t count,
                                std::uint64_t seed,
                                const IaaftParams& params = {});

struct TmfParams {
  std::size_t n_surrogates = 32;
  IaaftParams iaaft;
  mf::MfParams spectrum;
};

/// One-sample t statistic of the original spectrum width against the
/// surrogate widths: (dalpha_orig - mean(dalpha_surr)) / (sd / sqrt(m)),
/// sample sd with divisor m-1 over the m surrogates with a defined width.
/// Throws UndefinedDescriptorError when the original width or fewer than 2
/// surrogate widths are defined. Zero surrogate sd yields +/-infinity
/// (0 when the numerator is also 0).
double t_mf(const TimeSeries& series, std::uint64_t seed,
            const TmfParams& params = {});

}  // namespace ergo::surrogate
