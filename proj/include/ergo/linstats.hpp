#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ergo/dfa.hpp"
#include "ergo/surrogate.hpp"
#include "ergo/time_series.hpp"

namespace ergo {

enum class Descriptor { Sd, Cv, Rms, Hfgn, DeltaAlpha, Tmf };

std::string_view descriptor_name(Descriptor d);  // "sd", "cv", "rms", "hfgn", "dalpha", "tmf"
std::optional<Descriptor> descriptor_from_name(std::string_view name);

/// Segmentation of a series into nonoverlapping fixed-length epochs; the
/// trailing remainder is discarded and reported.
struct EpochGrid {
  std::size_t epoch_length = 0;
  std::size_t epoch_count = 0;
  std::size_t discarded_tail = 0;

  bool operator==(const EpochGrid&) const = default;
};

EpochGrid segment_epochs(std::size_t length, std::size_t epoch_length);

/// View of epoch i under a grid (i < epoch_count).
std::span<const double> epoch_view(std::span<const double> values,
                                   const EpochGrid& grid, std::size_t i);

/// Population standard deviation (divisor N), two-pass accumulation.
double sd(std::span<const double> epoch);

/// sd / mean. Throws UndefinedDescriptorError when the mean is zero within
/// the accumulated rounding scale.
double cv(std::span<const double> epoch);

/// Root of the mean square; no mean subtraction.
double rms(std::span<const double> epoch);

/// Per-epoch values of one descriptor for one source series. Epochs whose
/// descriptor is undefined carry NaN sentinels; failed_epochs counts them.
struct DescriptorSeries {
  Descriptor descriptor = Descriptor::Sd;
  std::vector<double> values;
  EpochGrid grid;
  SeriesMeta source_meta;
  std::size_t failed_epochs = 0;
};

/// Parameters for the fractal/multifractal descriptors; ignored by sd/cv/rms.
struct DescriptorParams {
  dfa::ScaleSpec dfa_scales;
  surrogate::TmfParams tmf;  // tmf.spectrum is also used for DeltaAlpha
  std::uint64_t seed = 0;    // base seed for surrogate generation (per-epoch subseeds)
};

/// Applies the chosen descriptor to every epoch in order.
DescriptorSeries descriptor_series(const TimeSeries& series,
                                   std::size_t epoch_length, Descriptor d,
                                   const DescriptorParams& params = {});

}  // namespace ergo
