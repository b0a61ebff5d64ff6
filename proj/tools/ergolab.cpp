// ergolab: noise ensembles, epoch descriptors, and ergodicity-breaking
// curves from the command line. See README.md for the subcommand tour.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "ergo/csv.hpp"
#include "ergo/dfa.hpp"
#include "ergo/ergodicity.hpp"
#include "ergo/linstats.hpp"
#include "ergo/multifractal.hpp"
#include "ergo/noise.hpp"
#include "ergo/pipeline.hpp"
#include "ergo/rng.hpp"
#include "ergo/surrogate.hpp"

namespace {

struct GlobalOpts {
  std::uint64_t seed = 42;
  std::size_t jobs = 0;
  std::string out = "out";
  std::string preset = "desk";
};

struct RunOverrides {
  std::size_t realizations = 0;
  std::size_t length = 0;
  std::vector<std::size_t> epoch_lengths;
  std::size_t surrogates = 0;
};

ergo::pipeline::ExperimentConfig build_config(const GlobalOpts& global,
                                              const RunOverrides& over) {
  auto config = global.preset == "paper" ? ergo::pipeline::paper_preset()
                                         : ergo::pipeline::desk_preset();
  config.preset = global.preset;
  config.master_seed = global.seed;
  config.jobs = global.jobs;
  config.output_dir = global.out;
  if (over.realizations) config.n_realizations = over.realizations;
  if (over.length) config.series_length = over.length;
  if (!over.epoch_lengths.empty()) config.epoch_lengths = over.epoch_lengths;
  if (over.surrogates)
    config.descriptor_params.tmf.n_surrogates = over.surrogates;
  return config;
}

int parse_figure_id(const std::string& text) {
  std::string digits = text;
  if (digits.rfind("fig", 0) == 0) digits = digits.substr(3);
  try {
    return std::stoi(digits);
  } catch (...) {
    throw std::invalid_argument("figure: unknown id '" + text + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ergolab: ergodicity analysis of synthetic noise ensembles"};
  app.require_subcommand(0, 1);

  GlobalOpts global;
  app.add_option("--seed", global.seed, "master seed");
  app.add_option("--jobs", global.jobs, "worker threads (0 = hardware)");
  app.add_option("--out", global.out, "output directory");
  app.add_option("--preset", global.preset, "scale preset")
      ->check(CLI::IsMember({"paper", "desk"}));
  app.set_config("--config", "", "flat key=value config file (flags win)");

  // generate -----------------------------------------------------------
  auto* cmd_generate = app.add_subcommand("generate", "synthesize one series");
  cmd_generate->fallthrough();
  std::string gen_kind = "white";
  std::size_t gen_n = 10000;
  bool gen_unsigned = false, gen_shuffled = false;
  std::string gen_out_file = "series.csv";
  cmd_generate->add_option("--kind", gen_kind, "white|pink|gamble")
      ->check(CLI::IsMember({"white", "pink", "gamble"}));
  cmd_generate->add_option("--n", gen_n, "length (rounds for gamble)");
  cmd_generate->add_flag("--unsigned", gen_unsigned, "take absolute values");
  cmd_generate->add_flag("--shuffled", gen_shuffled, "shuffle after transforms");
  cmd_generate->add_option("--out", gen_out_file, "output CSV path");

  // descriptors ----------------------------------------------------------
  auto* cmd_desc = app.add_subcommand(
      "descriptors", "per-epoch descriptor series from a CSV series");
  cmd_desc->fallthrough();
  std::string desc_in, desc_name = "sd", desc_out = "descriptors.csv";
  std::size_t desc_epoch_len = 1000;
  std::size_t desc_surrogates = 32;
  std::size_t desc_max_iter = 100;
  double desc_tol = 1e-8;
  cmd_desc->add_option("--in", desc_in, "input series CSV")->required();
  cmd_desc->add_option("--epoch-len", desc_epoch_len, "epoch length (samples)");
  cmd_desc->add_option("--descriptor", desc_name, "sd|cv|rms|hfgn|dalpha|tmf")
      ->check(CLI::IsMember({"sd", "cv", "rms", "hfgn", "dalpha", "tmf"}));
  cmd_desc->add_option("--surrogates", desc_surrogates, "IAAFT surrogates for tmf");
  cmd_desc->add_option("--max-iter", desc_max_iter, "IAAFT iteration cap");
  cmd_desc->add_option("--tol", desc_tol, "IAAFT spectral-change tolerance");
  cmd_desc->add_option("--out", desc_out, "output CSV path");

  // dfa-curve ------------------------------------------------------------
  auto* cmd_dfa = app.add_subcommand("dfa-curve",
                                     "DFA fluctuation function of a series");
  cmd_dfa->fallthrough();
  std::string dfa_in, dfa_out = "dfa_curve.csv";
  cmd_dfa->add_option("--in", dfa_in, "input series CSV")->required();
  cmd_dfa->add_option("--out", dfa_out, "output CSV path");

  // mf-spectrum ----------------------------------------------------------
  auto* cmd_mf = app.add_subcommand("mf-spectrum",
                                    "multifractal spectrum of a series");
  cmd_mf->fallthrough();
  std::string mf_in, mf_out = "mf_spectrum.csv";
  ergo::mf::MfParams mf_params;
  cmd_mf->add_option("--in", mf_in, "input series CSV")->required();
  cmd_mf->add_option("--q-min", mf_params.q_min, "lowest q");
  cmd_mf->add_option("--q-max", mf_params.q_max, "highest q");
  cmd_mf->add_option("--q-step", mf_params.q_step, "q grid step");
  cmd_mf->add_option("--r-threshold", mf_params.r_threshold,
                     "regression acceptance threshold");
  cmd_mf->add_option("--out", mf_out, "output CSV path");

  // iaaft ------------------------------------------------------------------
  auto* cmd_iaaft = app.add_subcommand("iaaft", "one IAAFT surrogate");
  cmd_iaaft->fallthrough();
  std::string iaaft_in, iaaft_out = "surrogate.csv";
  std::size_t iaaft_max_iter = 100;
  double iaaft_tol = 1e-8;
  cmd_iaaft->add_option("--in", iaaft_in, "input series CSV")->required();
  cmd_iaaft->add_option("--max-iter", iaaft_max_iter, "iteration cap");
  cmd_iaaft->add_option("--tol", iaaft_tol, "spectral-change tolerance");
  cmd_iaaft->add_option("--out", iaaft_out, "output CSV path");

  // eb ---------------------------------------------------------------------
  auto* cmd_eb = app.add_subcommand(
      "eb", "ergodicity-breaking curve over a directory of series CSVs");
  cmd_eb->fallthrough();
  std::string eb_in, eb_unit = "samples", eb_out = "eb.csv";
  std::size_t eb_lag = 2;
  bool eb_integrate = false;
  cmd_eb->add_option("--in", eb_in, "directory of series CSVs")->required();
  cmd_eb->add_option("--lag", eb_lag, "TAMSD lag");
  cmd_eb->add_option("--unit", eb_unit, "samples|epochs")
      ->check(CLI::IsMember({"samples", "epochs"}));
  cmd_eb->add_flag("--integrate-first", eb_integrate,
                   "cumulative-sum each trajectory before TAMSD");
  cmd_eb->add_option("--out", eb_out, "output CSV path");

  // run ----------------------------------------------------------------------
  auto* cmd_run = app.add_subcommand("run", "full four-condition experiment");
  cmd_run->fallthrough();
  RunOverrides run_over;
  cmd_run->add_option("--realizations", run_over.realizations,
                      "override ensemble size");
  cmd_run->add_option("--length", run_over.length, "override series length");
  cmd_run->add_option("--epoch-lens", run_over.epoch_lengths,
                      "override epoch lengths")
      ->delimiter(',');
  cmd_run->add_option("--surrogates", run_over.surrogates,
                      "override IAAFT surrogate count");

  // figure ---------------------------------------------------------------------
  auto* cmd_figure = app.add_subcommand("figure", "reproduce one figure");
  cmd_figure->fallthrough();
  std::string figure_id;
  RunOverrides figure_over;
  cmd_figure->add_option("--id", figure_id, "fig1..fig10")->required();
  cmd_figure->add_option("--realizations", figure_over.realizations,
                         "override ensemble size");
  cmd_figure->add_option("--length", figure_over.length,
                         "override series length");
  cmd_figure->add_option("--epoch-lens", figure_over.epoch_lengths,
                         "override epoch lengths")
      ->delimiter(',');
  cmd_figure->add_option("--surrogates", figure_over.surrogates,
                         "override IAAFT surrogate count");

  // gamble ------------------------------------------------------------------
  auto* cmd_gamble = app.add_subcommand(
      "gamble", "per-round ensemble statistics of the coin-flip gamble");
  cmd_gamble->fallthrough();
  std::size_t gamble_players = 10000, gamble_rounds = 50;
  ergo::noise::GambleParams gamble_params;
  std::string gamble_out = "gamble.csv";
  cmd_gamble->add_option("--players", gamble_players, "ensemble size");
  cmd_gamble->add_option("--rounds", gamble_rounds, "number of coin flips");
  cmd_gamble->add_option("--win", gamble_params.win_fraction,
                         "fraction won on heads");
  cmd_gamble->add_option("--loss", gamble_params.loss_fraction,
                         "fraction lost on tails");
  cmd_gamble->add_option("--initial", gamble_params.initial_wealth,
                         "starting wealth");
  cmd_gamble->add_option("--out", gamble_out, "output CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_generate->parsed()) {
      ergo::TimeSeries series;
      if (gen_kind == "gamble") {
        ergo::noise::GambleParams params;
        params.rounds = gen_n;
        series = ergo::noise::gamble_trajectory(params, global.seed);
      } else if (gen_kind == "pink") {
        series = ergo::noise::gen_pink(gen_n, global.seed);
      } else {
        series = ergo::noise::gen_white(gen_n, global.seed);
      }
      if (gen_unsigned) series = ergo::noise::unsign(series);
      if (gen_shuffled)
        series = ergo::noise::shuffle(series, ergo::derive_seed(global.seed, 99));
      ergo::csv::write_series(gen_out_file, series);
    } else if (cmd_desc->parsed()) {
      const auto series = ergo::csv::read_series(desc_in);
      const auto d = ergo::descriptor_from_name(desc_name);
      ergo::DescriptorParams params;
      params.tmf.n_surrogates = desc_surrogates;
      params.tmf.iaaft.max_iter = desc_max_iter;
      params.tmf.iaaft.tol = desc_tol;
      params.seed = global.seed;
      ergo::csv::write_descriptor(
          desc_out, ergo::descriptor_series(series, desc_epoch_len, *d, params));
    } else if (cmd_dfa->parsed()) {
      const auto series = ergo::csv::read_series(dfa_in);
      ergo::csv::write_dfa_curve(dfa_out, ergo::dfa::hurst(series.values));
    } else if (cmd_mf->parsed()) {
      const auto series = ergo::csv::read_series(mf_in);
      ergo::csv::write_mf_spectrum(
          mf_out, ergo::mf::spectrum(series.values, mf_params));
    } else if (cmd_iaaft->parsed()) {
      const auto series = ergo::csv::read_series(iaaft_in);
      ergo::surrogate::IaaftParams params{iaaft_max_iter, iaaft_tol};
      auto result = ergo::surrogate::iaaft(series, global.seed, params);
      ergo::csv::write_series(iaaft_out, result.series);
      std::fprintf(stderr, "iaaft: %zu iterations, spectral error %.3e%s\n",
                   result.iterations, result.spectral_error,
                   result.hit_max_iter ? " (hit max-iter)" : "");
    } else if (cmd_eb->parsed()) {
      std::vector<std::filesystem::path> files;
      for (const auto& entry : std::filesystem::directory_iterator(eb_in))
        if (entry.path().extension() == ".csv") files.push_back(entry.path());
      std::sort(files.begin(), files.end());
      if (files.size() < 2)
        throw std::invalid_argument("eb: need at least 2 CSV files in " + eb_in);
      std::vector<std::vector<double>> ensemble;
      for (const auto& f : files) {
        auto values = ergo::csv::read_series(f).values;
        if (eb_integrate) {
          double acc = 0.0;
          for (double& v : values) {
            acc += v;
            v = acc;
          }
        }
        ensemble.push_back(std::move(values));
      }
      const auto unit = eb_unit == "epochs" ? ergo::eb::LengthUnit::Epochs
                                            : ergo::eb::LengthUnit::Samples;
      ergo::csv::write_eb_curve(eb_out,
                                ergo::eb::eb_curve(ensemble, eb_lag, unit));
    } else if (cmd_run->parsed()) {
      const auto config = build_config(global, run_over);
      const auto manifest = ergo::pipeline::run_experiment(config);
      for (const auto& warning : manifest.warnings)
        std::fprintf(stderr, "warning: %s\n", warning.c_str());
      for (const auto& failure : manifest.failed_cells)
        std::fprintf(stderr, "failed cell: %s\n", failure.c_str());
      std::fprintf(stderr, "run: %zu files under %s\n", manifest.files.size(),
                   config.output_dir.string().c_str());
      return manifest.ok() ? 0 : 1;
    } else if (cmd_figure->parsed()) {
      const auto config = build_config(global, figure_over);
      ergo::pipeline::reproduce_figure(parse_figure_id(figure_id), config);
    } else if (cmd_gamble->parsed()) {
      gamble_params.rounds = gamble_rounds;
      const auto stats = ergo::pipeline::gamble_ensemble_stats(
          gamble_params, gamble_players, global.seed);
      std::vector<std::vector<double>> rows;
      for (std::size_t k = 0; k < stats.round_mean.size(); ++k)
        rows.push_back({static_cast<double>(k), stats.round_mean[k],
                        stats.round_median[k], stats.round_q10[k],
                        stats.round_q90[k]});
      ergo::csv::write_table(gamble_out,
                             {"round", "mean", "median", "q10", "q90"}, rows);
    } else {
      std::cout << app.help();
      return 2;
    }
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
