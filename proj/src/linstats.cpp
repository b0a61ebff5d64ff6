#include "ergo/linstats.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ergo/errors.hpp"
#include "ergo/multifractal.hpp"
#include "ergo/rng.hpp"

namespace ergo {

std::string_view descriptor_name(Descriptor d) {
  switch (d) {
    case Descriptor::Sd: return "sd";
    case Descriptor::Cv: return "cv";
    case Descriptor::Rms: return "rms";
    case Descriptor::Hfgn: return "hfgn";
    case Descriptor::DeltaAlpha: return "dalpha";
    case Descriptor::Tmf: return "tmf";
  }
  return "sd";
}

std::optional<Descriptor> descriptor_from_name(std::string_view name) {
  if (name == "sd") return Descriptor::Sd;
  if (name == "cv") return Descriptor::Cv;
  if (name == "rms") return Descriptor::Rms;
  if (name == "hfgn") return Descriptor::Hfgn;
  if (name == "dalpha") return Descriptor::DeltaAlpha;
  if (name == "tmf") return Descriptor::Tmf;
  return std::nullopt;
}

EpochGrid segment_epochs(std::size_t length, std::size_t epoch_length) {
  if (epoch_length == 0)
    throw std::invalid_argument("segment_epochs: epoch length must be >= 1");
  if (epoch_length > length)
    throw std::invalid_argument(
        "segment_epochs: epoch length exceeds series length");
  EpochGrid grid;
  grid.epoch_length = epoch_length;
  grid.epoch_count = length / epoch_length;
  grid.discarded_tail = length - grid.epoch_count * epoch_length;
  return grid;
}

std::span<const double> epoch_view(std::span<const double> values,
                                   const EpochGrid& grid, std::size_t i) {
  if (i >= grid.epoch_count)
    throw std::invalid_argument("epoch_view: index out of range");
  return values.subspan(i * grid.epoch_length, grid.epoch_length);
}

double sd(std::span<const double> epoch) {
  if (epoch.empty()) throw std::invalid_argument("sd: empty epoch");
  double m = 0.0;
  for (double v : epoch) m += v;
  m /= static_cast<double>(epoch.size());
  double ss = 0.0;
  for (double v : epoch) ss += (v - m) * (v - m);
  return std::sqrt(ss / static_cast<double>(epoch.size()));
}

double cv(std::span<const double> epoch) {
  if (epoch.empty()) throw std::invalid_argument("cv: empty epoch");
  double sum = 0.0, abs_sum = 0.0;
  for (double v : epoch) {
    sum += v;
    abs_sum += std::abs(v);
  }
  // Mean indistinguishable from zero at the rounding scale of the sum.
  if (std::abs(sum) <= abs_sum * 1e-14)
    throw UndefinedDescriptorError("cv: zero mean");
  const double m = sum / static_cast<double>(epoch.size());
  return sd(epoch) / m;
}

double rms(std::span<const double> epoch) {
  if (epoch.empty()) throw std::invalid_argument("rms: empty epoch");
  double ss = 0.0;
  for (double v : epoch) ss += v * v;
  return std::sqrt(ss / static_cast<double>(epoch.size()));
}

DescriptorSeries descriptor_series(const TimeSeries& series,
                                   std::size_t epoch_length, Descriptor d,
                                   const DescriptorParams& params) {
  validate(series);
  DescriptorSeries out;
  out.descriptor = d;
  out.grid = segment_epochs(series.size(), epoch_length);
  out.source_meta = series.meta;
  out.values.resize(out.grid.epoch_count);

  for (std::size_t i = 0; i < out.grid.epoch_count; ++i) {
    const auto epoch = epoch_view(series.values, out.grid, i);
    try {
      switch (d) {
        case Descriptor::Sd:
          out.values[i] = sd(epoch);
          break;
        case Descriptor::Cv:
          out.values[i] = cv(epoch);
          break;
        case Descriptor::Rms:
          out.values[i] = rms(epoch);
          break;
        case Descriptor::Hfgn:
          out.values[i] = dfa::hurst(epoch, params.dfa_scales).hurst;
          break;
        case Descriptor::DeltaAlpha:
          out.values[i] =
              mf::spectrum(epoch, params.tmf.spectrum).delta_alpha;
          break;
        case Descriptor::Tmf: {
          TimeSeries epoch_series;
          epoch_series.values.assign(epoch.begin(), epoch.end());
          epoch_series.meta = series.meta;
          out.values[i] =
              surrogate::t_mf(epoch_series, derive_seed(params.seed, i), params.tmf);
          break;
        }
      }
    } catch (const UndefinedDescriptorError&) {
      out.values[i] = std::numeric_limits<double>::quiet_NaN();
      ++out.failed_epochs;
    } catch (const InsufficientScalesError&) {
      out.values[i] = std::numeric_limits<double>::quiet_NaN();
      ++out.failed_epochs;
    } catch (const DegenerateInputError&) {
      out.values[i] = std::numeric_limits<double>::quiet_NaN();
      ++out.failed_epochs;
    }
  }
  return out;
}

}  // namespace ergo
