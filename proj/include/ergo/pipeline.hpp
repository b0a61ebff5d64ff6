#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "ergo/ergodicity.hpp"
#include "ergo/linstats.hpp"
#include "ergo/noise.hpp"

namespace ergo::pipeline {

// End-to-end experiment: per realization, generate white and pink noise,
// unsign both, shuffle each; compute every descriptor over every epoch
// length for the four conditions; write descriptor tables and E_B curves
// (lag 2 samples for raw series, lag 2 epochs for descriptor series).

inline constexpr const char* kConditions[4] = {"white_orig", "white_shuf",
                                               "pink_orig", "pink_shuf"};

struct ExperimentConfig {
  std::size_t n_realizations = 100;
  std::size_t series_length = 50000;
  std::vector<std::size_t> epoch_lengths = {250, 500, 1000, 2000};
  std::uint64_t master_seed = 42;
  std::size_t raw_lag = 2;    // samples
  std::size_t epoch_lag = 2;  // epochs
  DescriptorParams descriptor_params;  // q grid, scales, surrogates
  std::size_t jobs = 0;  // 0 = hardware concurrency
  std::filesystem::path output_dir = "out";
  std::string preset = "paper";  // "paper" or "desk"
};

ExperimentConfig paper_preset();
ExperimentConfig desk_preset();

/// Throws std::invalid_argument on violated config invariants (desk runtime
/// guard, epoch lengths vs series length).
void validate(const ExperimentConfig& config);

struct RunManifest {
  std::map<std::string, std::string> config;       // flat snapshot
  std::vector<std::string> files;                  // relative output paths
  std::map<std::string, double> stage_seconds;
  std::vector<std::string> warnings;
  std::vector<std::string> failed_cells;
  std::string version;

  bool ok() const { return failed_cells.empty(); }
};

/// Runs the full experiment, writes all outputs plus manifest.json under
/// config.output_dir, and returns the manifest. Partial failures are
/// recorded per cell rather than thrown.
RunManifest run_experiment(const ExperimentConfig& config);

void write_manifest(const std::filesystem::path& path, const RunManifest& m);
RunManifest read_manifest(const std::filesystem::path& path);

/// The four condition series for one realization, in kConditions order.
std::vector<TimeSeries> condition_series(const ExperimentConfig& config,
                                         std::size_t realization);

struct GambleStats {
  std::vector<double> round_mean;    // index = round, starting at 0
  std::vector<double> round_median;
  std::vector<double> round_q10;
  std::vector<double> round_q90;
};

/// Per-round ensemble statistics over n_players independent trajectories.
GambleStats gamble_ensemble_stats(const noise::GambleParams& params,
                                  std::size_t n_players, std::uint64_t seed);

/// Renders one of the ten figure reproductions (id in [1,10]) into
/// <output_dir>/figures/fig<id>.svg plus a CSV of the plotted numbers.
/// Experiment outputs are generated on demand if missing.
void reproduce_figure(int id, const ExperimentConfig& config);

}  // namespace ergo::pipeline
