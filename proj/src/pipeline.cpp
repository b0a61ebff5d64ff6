#include "ergo/pipeline.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ergo/csv.hpp"
#include "ergo/rng.hpp"
#include "ergo/svg.hpp"

namespace ergo::pipeline {

namespace {

constexpr const char* kVersion = "0.1.0";

// Seed streams for the independent parts of a run.
constexpr std::uint64_t kWhiteStream = 1;
constexpr std::uint64_t kPinkStream = 2;
constexpr std::uint64_t kShufWhiteStream = 3;
constexpr std::uint64_t kShufPinkStream = 4;
constexpr std::uint64_t kTmfStream = 5;

constexpr Descriptor kDescriptors[6] = {
    Descriptor::Sd,  Descriptor::Cv,         Descriptor::Rms,
    Descriptor::Hfgn, Descriptor::DeltaAlpha, Descriptor::Tmf};

void parallel_for(std::size_t count, std::size_t jobs,
                  const std::function<void(std::size_t)>& body) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min(jobs, count);
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (std::size_t w = 0; w < jobs; ++w)
    workers.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        body(i);
      }
    });
  for (auto& t : workers) t.join();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

std::string join_sizes(const std::vector<std::size_t>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << v[i];
  }
  return out.str();
}

std::map<std::string, std::string> config_snapshot(
    const ExperimentConfig& c) {
  const auto& mf = c.descriptor_params.tmf.spectrum;
  const auto& ia = c.descriptor_params.tmf.iaaft;
  return {
      {"preset", c.preset},
      {"n_realizations", std::to_string(c.n_realizations)},
      {"series_length", std::to_string(c.series_length)},
      {"epoch_lengths", join_sizes(c.epoch_lengths)},
      {"master_seed", std::to_string(c.master_seed)},
      {"raw_lag", std::to_string(c.raw_lag)},
      {"epoch_lag", std::to_string(c.epoch_lag)},
      {"q_min", csv::format_double(mf.q_min)},
      {"q_max", csv::format_double(mf.q_max)},
      {"q_step", csv::format_double(mf.q_step)},
      {"r_threshold", csv::format_double(mf.r_threshold)},
      {"n_surrogates", std::to_string(c.descriptor_params.tmf.n_surrogates)},
      {"iaaft_max_iter", std::to_string(ia.max_iter)},
      {"iaaft_tol", csv::format_double(ia.tol)},
      {"jobs", std::to_string(c.jobs)},
      {"output_dir", c.output_dir.string()},
  };
}

}  // namespace

ExperimentConfig paper_preset() {
  ExperimentConfig c;
  c.preset = "paper";
  return c;
}

ExperimentConfig desk_preset() {
  ExperimentConfig c;
  c.preset = "desk";
  c.n_realizations = 20;
  c.series_length = 10000;
  return c;
}

void validate(const ExperimentConfig& config) {
  if (config.n_realizations < 2)
    throw std::invalid_argument("config: need at least 2 realizations");
  if (config.epoch_lengths.empty())
    throw std::invalid_argument("config: no epoch lengths");
  for (std::size_t L : config.epoch_lengths) {
    if (L < 48)
      throw std::invalid_argument(
          "config: epoch length too short for the fractal descriptors");
    if (L > config.series_length / 4)
      throw std::invalid_argument(
          "config: epoch length must be <= series_length / 4");
  }
  if (config.raw_lag == 0 || config.epoch_lag == 0)
    throw std::invalid_argument("config: lags must be >= 1");
  if (config.preset == "desk") {
    // Runtime guard for the CI-scale preset.
    if (config.n_realizations > 20 || config.series_length > 10000)
      throw std::invalid_argument(
          "config: desk preset caps at 20 realizations x 10000 samples");
  } else if (config.preset != "paper") {
    throw std::invalid_argument("config: preset must be 'paper' or 'desk'");
  }
}

std::vector<TimeSeries> condition_series(const ExperimentConfig& config,
                                         std::size_t realization) {
  const auto n = config.series_length;
  const auto seed = config.master_seed;
  auto white =
      noise::unsign(noise::gen_white(n, derive_seed(seed, kWhiteStream, realization)));
  auto pink =
      noise::unsign(noise::gen_pink(n, derive_seed(seed, kPinkStream, realization)));
  auto white_shuf =
      noise::shuffle(white, derive_seed(seed, kShufWhiteStream, realization));
  auto pink_shuf =
      noise::shuffle(pink, derive_seed(seed, kShufPinkStream, realization));
  std::vector<TimeSeries> out;
  out.push_back(std::move(white));
  out.push_back(std::move(white_shuf));
  out.push_back(std::move(pink));
  out.push_back(std::move(pink_shuf));
  return out;
}

RunManifest run_experiment(const ExperimentConfig& config) {
  validate(config);
  std::filesystem::create_directories(config.output_dir);

  RunManifest manifest;
  manifest.version = kVersion;
  manifest.config = config_snapshot(config);

  const std::size_t R = config.n_realizations;
  const std::size_t n_conds = 4;
  const std::size_t n_lens = config.epoch_lengths.size();
  const std::size_t n_descs = 6;

  // --- generation ---------------------------------------------------------
  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::vector<TimeSeries>> by_cond(n_conds);
  for (auto& v : by_cond) v.resize(R);
  parallel_for(R, config.jobs, [&](std::size_t r) {
    auto series = condition_series(config, r);
    for (std::size_t c = 0; c < n_conds; ++c)
      by_cond[c][r] = std::move(series[c]);
  });
  manifest.stage_seconds["generate"] = seconds_since(t0);

  // --- raw-series E_B -----------------------------------------------------
  t0 = std::chrono::steady_clock::now();
  for (std::size_t c = 0; c < n_conds; ++c) {
    std::vector<std::vector<double>> values;
    values.reserve(R);
    for (const auto& s : by_cond[c]) values.push_back(s.values);
    const auto curve =
        eb::eb_curve(values, config.raw_lag, eb::LengthUnit::Samples);
    const auto rel =
        std::filesystem::path(kConditions[c]) / "raw_eb.csv";
    csv::write_eb_curve(config.output_dir / rel, curve);
    manifest.files.push_back(rel.string());
    if (curve.unreliable_points > 0)
      manifest.warnings.push_back(rel.string() + ": " +
                                  std::to_string(curve.unreliable_points) +
                                  " unreliable points");
  }
  manifest.stage_seconds["raw_eb"] = seconds_since(t0);

  // --- descriptor cells ---------------------------------------------------
  t0 = std::chrono::steady_clock::now();
  const std::size_t n_cells = n_conds * n_lens * n_descs * R;
  std::vector<DescriptorSeries> cells(n_cells);
  std::vector<std::string> cell_errors(n_cells);
  auto cell_index = [&](std::size_t c, std::size_t l, std::size_t d,
                        std::size_t r) {
    return ((c * n_lens + l) * n_descs + d) * R + r;
  };
  parallel_for(n_cells, config.jobs, [&](std::size_t i) {
    const std::size_t r = i % R;
    const std::size_t d = (i / R) % n_descs;
    const std::size_t l = (i / (R * n_descs)) % n_lens;
    const std::size_t c = i / (R * n_descs * n_lens);
    DescriptorParams params = config.descriptor_params;
    params.seed = derive_seed(config.master_seed, kTmfStream, c, l, r);
    try {
      cells[i] = descriptor_series(by_cond[c][r], config.epoch_lengths[l],
                                   kDescriptors[d], params);
    } catch (const std::exception& e) {
      cell_errors[i] = std::string(kConditions[c]) + "/" +
                       std::to_string(config.epoch_lengths[l]) + "/" +
                       std::string(descriptor_name(kDescriptors[d])) + "/r" +
                       std::to_string(r) + ": " + e.what();
    }
  });
  manifest.stage_seconds["descriptors"] = seconds_since(t0);

  // --- tables and descriptor-series E_B, written in fixed order -----------
  t0 = std::chrono::steady_clock::now();
  for (std::size_t c = 0; c < n_conds; ++c) {
    for (std::size_t l = 0; l < n_lens; ++l) {
      for (std::size_t d = 0; d < n_descs; ++d) {
        std::vector<DescriptorSeries> ensemble;
        ensemble.reserve(R);
        bool failed = false;
        std::size_t failed_epochs = 0;
        for (std::size_t r = 0; r < R; ++r) {
          const std::size_t i = cell_index(c, l, d, r);
          if (!cell_errors[i].empty()) {
            manifest.failed_cells.push_back(cell_errors[i]);
            failed = true;
            continue;
          }
          failed_epochs += cells[i].failed_epochs;
          ensemble.push_back(cells[i]);
        }
        if (failed && ensemble.size() < 2) continue;

        const auto dir = std::filesystem::path(kConditions[c]) /
                         std::to_string(config.epoch_lengths[l]);
        const auto name = std::string(descriptor_name(kDescriptors[d]));
        const auto table_rel = dir / (name + ".csv");
        csv::write_descriptor_table(config.output_dir / table_rel, ensemble);
        manifest.files.push_back(table_rel.string());
        if (failed_epochs > 0)
          manifest.warnings.push_back(table_rel.string() + ": " +
                                      std::to_string(failed_epochs) +
                                      " failed epochs (NaN sentinels)");

        const auto curve = eb::eb_descriptor(ensemble, config.epoch_lag);
        const auto eb_rel = dir / (name + "_eb.csv");
        csv::write_eb_curve(config.output_dir / eb_rel, curve);
        manifest.files.push_back(eb_rel.string());
        if (curve.unreliable_points > 0)
          manifest.warnings.push_back(eb_rel.string() + ": " +
                                      std::to_string(curve.unreliable_points) +
                                      " unreliable points");
      }
    }
  }
  manifest.stage_seconds["tables_and_eb"] = seconds_since(t0);

  write_manifest(config.output_dir / "manifest.json", manifest);
  return manifest;
}

void write_manifest(const std::filesystem::path& path, const RunManifest& m) {
  nlohmann::json j;
  j["version"] = m.version;
  j["config"] = m.config;
  j["files"] = m.files;
  j["stage_seconds"] = m.stage_seconds;
  j["warnings"] = m.warnings;
  j["failed_cells"] = m.failed_cells;
  csv::write_text_atomic(path, j.dump(2) + "\n");
}

RunManifest read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  nlohmann::json j;
  in >> j;
  RunManifest m;
  m.version = j.value("version", "");
  if (j.contains("config"))
    m.config = j["config"].get<std::map<std::string, std::string>>();
  if (j.contains("files")) m.files = j["files"].get<std::vector<std::string>>();
  if (j.contains("stage_seconds"))
    m.stage_seconds = j["stage_seconds"].get<std::map<std::string, double>>();
  if (j.contains("warnings"))
    m.warnings = j["warnings"].get<std::vector<std::string>>();
  if (j.contains("failed_cells"))
    m.failed_cells = j["failed_cells"].get<std::vector<std::string>>();
  return m;
}

GambleStats gamble_ensemble_stats(const noise::GambleParams& params,
                                  std::size_t n_players, std::uint64_t seed) {
  if (n_players == 0)
    throw std::invalid_argument("gamble stats: need at least 1 player");
  if (params.rounds == 0)
    throw std::invalid_argument("gamble stats: rounds must be >= 1");

  const double up = 1.0 + params.win_fraction;
  const double down = 1.0 - params.loss_fraction;

  std::vector<std::uint64_t> streams(n_players);
  for (std::size_t i = 0; i < n_players; ++i)
    streams[i] = noise::gamble_flip_stream(derive_seed(seed, i));

  std::vector<double> wealth(n_players, params.initial_wealth);
  std::vector<double> scratch(n_players);

  GambleStats stats;
  const std::size_t rows = params.rounds + 1;
  stats.round_mean.reserve(rows);
  stats.round_median.reserve(rows);
  stats.round_q10.reserve(rows);
  stats.round_q90.reserve(rows);

  auto record = [&] {
    double sum = 0.0;
    for (double w : wealth) sum += w;
    stats.round_mean.push_back(sum / static_cast<double>(n_players));
    scratch = wealth;
    auto order_stat = [&](double p) {
      const auto k = static_cast<std::size_t>(
          p * static_cast<double>(n_players - 1) + 0.5);
      std::nth_element(scratch.begin(), scratch.begin() + k, scratch.end());
      return scratch[k];
    };
    stats.round_median.push_back(order_stat(0.5));
    stats.round_q10.push_back(order_stat(0.1));
    stats.round_q90.push_back(order_stat(0.9));
  };

  record();  // round 0
  for (std::size_t k = 0; k < params.rounds; ++k) {
    for (std::size_t i = 0; i < n_players; ++i)
      wealth[i] *= counter_uniform01(streams[i], k) < 0.5 ? up : down;
    record();
  }
  return stats;
}

// ---------------------------------------------------------------------------
// Figure reproduction
// ---------------------------------------------------------------------------

namespace {

struct PlottedPoint {
  std::string panel;
  std::string curve;
  double x;
  double y;
};

void write_plotted_csv(const std::filesystem::path& path,
                       const std::vector<PlottedPoint>& points) {
  std::ostringstream out;
  out << "panel,curve,x,y\n";
  for (const auto& p : points)
    out << p.panel << ',' << p.curve << ',' << csv::format_double(p.x) << ','
        << csv::format_double(p.y) << '\n';
  csv::write_text_atomic(path, out.str());
}

svg::Curve make_curve(const std::string& label, std::vector<double> xs,
                      std::vector<double> ys, std::size_t color_index,
                      double width = 1.2) {
  svg::Curve c;
  c.label = label;
  c.x = std::move(xs);
  c.y = std::move(ys);
  c.color = svg::palette()[color_index % svg::palette().size()];
  c.width = width;
  return c;
}

// Decimate long series for plotting; the backing CSV holds exactly the
// plotted points.
svg::Curve series_curve(const std::string& label,
                        const std::vector<double>& values,
                        std::size_t color_index, std::size_t max_points,
                        const std::string& panel,
                        std::vector<PlottedPoint>& points) {
  const std::size_t step = std::max<std::size_t>(1, values.size() / max_points);
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < values.size(); i += step) {
    xs.push_back(static_cast<double>(i));
    ys.push_back(values[i]);
    points.push_back({panel, label, static_cast<double>(i), values[i]});
  }
  return make_curve(label, std::move(xs), std::move(ys), color_index);
}

svg::Curve eb_curve_plot(const std::string& label, const eb::EBCurve& curve,
                         std::size_t color_index, const std::string& panel,
                         std::vector<PlottedPoint>& points) {
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < curve.lengths.size(); ++i) {
    xs.push_back(static_cast<double>(curve.lengths[i]));
    ys.push_back(curve.eb[i]);
    points.push_back({panel, label, xs.back(), ys.back()});
  }
  return make_curve(label, std::move(xs), std::move(ys), color_index, 1.5);
}

struct FigureContext {
  const ExperimentConfig& config;
  std::filesystem::path fig_dir;
  std::vector<PlottedPoint> points;

  std::filesystem::path run_path(const std::string& cond, std::size_t L,
                                 const std::string& file) const {
    return config.output_dir / cond / std::to_string(L) / file;
  }

  eb::EBCurve load_eb(const std::string& cond, std::size_t L,
                      const std::string& desc) const {
    return csv::read_eb_curve(run_path(cond, L, desc + "_eb.csv"));
  }

  eb::EBCurve load_raw_eb(const std::string& cond) const {
    return csv::read_eb_curve(config.output_dir / cond / "raw_eb.csv");
  }

  std::vector<std::size_t> mte_sizes() const {
    std::vector<std::size_t> sizes;
    for (std::size_t m : {std::size_t{10}, std::size_t{50}, std::size_t{100}})
      if (m <= config.n_realizations) sizes.push_back(m);
    if (sizes.empty() || sizes.back() != config.n_realizations)
      sizes.push_back(config.n_realizations);
    return sizes;
  }
};

// Panels (a),(b) of figures 2-8: one realization plus MTE averages.
svg::Panel mte_panel(FigureContext& ctx, const std::string& panel_id,
                     const std::string& title,
                     const std::vector<std::vector<double>>& ensemble,
                     const std::string& x_label, const std::string& y_label) {
  svg::Panel panel;
  panel.title = title;
  panel.x_label = x_label;
  panel.y_label = y_label;
  const std::size_t max_points = 1500;
  panel.curves.push_back(series_curve("single", ensemble.front(), 6,
                                      max_points, panel_id, ctx.points));
  panel.curves.back().width = 0.7;
  const auto sizes = ctx.mte_sizes();
  const auto mte = eb::mte_average(ensemble, sizes);
  for (std::size_t i = 0; i < sizes.size(); ++i)
    panel.curves.push_back(
        series_curve("MTE " + std::to_string(sizes[i]), mte.averaged[i], i,
                     max_points, panel_id, ctx.points));
  return panel;
}

svg::Panel eb_panel(FigureContext& ctx, const std::string& panel_id,
                    const std::string& title, const eb::EBCurve& orig,
                    const eb::EBCurve& shuf, const std::string& x_label) {
  svg::Panel panel;
  panel.title = title;
  panel.x_label = x_label;
  panel.y_label = "E_B";
  panel.log_x = true;
  panel.log_y = true;
  panel.curves.push_back(eb_curve_plot("original", orig, 1, panel_id, ctx.points));
  panel.curves.push_back(eb_curve_plot("shuffled", shuf, 6, panel_id, ctx.points));
  return panel;
}

void figure_gamble(FigureContext& ctx) {
  noise::GambleParams params;
  const bool paper_scale = ctx.config.preset == "paper";
  const std::size_t big = paper_scale ? 1000000 : 100000;
  const std::uint64_t seed = ctx.config.master_seed;

  std::vector<svg::Panel> panels;
  for (int panel_idx = 0; panel_idx < 2; ++panel_idx) {
    const bool log_axis = panel_idx == 1;
    const std::size_t rounds = log_axis ? 1000 : 50;
    params.rounds = rounds;
    svg::Panel panel;
    panel.title = log_axis ? "(b) wealth, log axis" : "(a) wealth, 50 rounds";
    panel.x_label = "round";
    panel.y_label = "wealth";
    panel.log_y = log_axis;
    const std::string pid = log_axis ? "b" : "a";

    const auto single = noise::gamble_trajectory(params, derive_seed(seed, 0));
    panel.curves.push_back(
        series_curve("single", single.values, 0, 1200, pid, ctx.points));
    std::size_t color = 1;
    for (std::size_t players : {std::size_t{100}, std::size_t{10000}, big}) {
      const auto stats = gamble_ensemble_stats(params, players, seed);
      panel.curves.push_back(series_curve(
          "mean of " + std::to_string(players), stats.round_mean, color++,
          1200, pid, ctx.points));
    }
    panels.push_back(std::move(panel));
  }

  // (c) ensemble mean vs the typical (median) individual, 100 x 1000.
  params.rounds = 1000;
  const auto stats = gamble_ensemble_stats(params, 100, derive_seed(seed, 7));
  svg::Panel panel;
  panel.title = "(c) ensemble mean vs typical player";
  panel.x_label = "round";
  panel.y_label = "wealth";
  panel.log_y = true;
  std::vector<double> expectation(params.rounds + 1);
  const double growth = 0.5 * (2.0 + params.win_fraction - params.loss_fraction);
  expectation[0] = params.initial_wealth;
  for (std::size_t k = 1; k < expectation.size(); ++k)
    expectation[k] = expectation[k - 1] * growth;
  panel.curves.push_back(
      series_curve("expected mean", expectation, 0, 1200, "c", ctx.points));
  panel.curves.push_back(
      series_curve("ensemble mean (100)", stats.round_mean, 1, 1200, "c", ctx.points));
  panel.curves.push_back(
      series_curve("median player", stats.round_median, 2, 1200, "c", ctx.points));
  panels.push_back(std::move(panel));

  svg::write_figure(ctx.fig_dir / "fig1.svg",
                    "Repeated multiplicative gamble", panels, 2);
  write_plotted_csv(ctx.fig_dir / "fig1.csv", ctx.points);
}

void figure_raw(FigureContext& ctx) {
  const std::size_t R = ctx.config.n_realizations;
  std::vector<std::vector<double>> white(R), pink(R);
  for (std::size_t r = 0; r < R; ++r) {
    auto series = condition_series(ctx.config, r);
    white[r] = std::move(series[0].values);
    pink[r] = std::move(series[2].values);
  }
  std::vector<svg::Panel> panels;
  panels.push_back(mte_panel(ctx, "a", "(a) unsigned white noise", white,
                             "sample", "value"));
  panels.push_back(mte_panel(ctx, "b", "(b) unsigned pink noise", pink,
                             "sample", "value"));
  panels.push_back(eb_panel(ctx, "c", "(c) E_B, white noise",
                            ctx.load_raw_eb("white_orig"),
                            ctx.load_raw_eb("white_shuf"), "t (samples)"));
  panels.push_back(eb_panel(ctx, "d", "(d) E_B, pink noise",
                            ctx.load_raw_eb("pink_orig"),
                            ctx.load_raw_eb("pink_shuf"), "t (samples)"));
  svg::write_figure(ctx.fig_dir / "fig2.svg",
                    "Ergodicity breaking in raw unsigned noise", panels, 2);
  write_plotted_csv(ctx.fig_dir / "fig2.csv", ctx.points);
}

void figure_descriptor(FigureContext& ctx, int fig_id, Descriptor d) {
  const std::size_t L = 500;
  const std::string name(descriptor_name(d));

  auto values_for = [&](const char* cond) {
    const auto ensemble =
        csv::read_descriptor_table(ctx.run_path(cond, L, name + ".csv"));
    std::vector<std::vector<double>> values;
    values.reserve(ensemble.size());
    for (const auto& s : ensemble) values.push_back(s.values);
    return values;
  };

  std::vector<svg::Panel> panels;
  panels.push_back(mte_panel(ctx, "a", "(a) " + name + ", white noise",
                             values_for("white_orig"), "epoch", name));
  panels.push_back(mte_panel(ctx, "b", "(b) " + name + ", pink noise",
                             values_for("pink_orig"), "epoch", name));
  panels.push_back(eb_panel(ctx, "c", "(c) E_B, white noise",
                            ctx.load_eb("white_orig", L, name),
                            ctx.load_eb("white_shuf", L, name), "t (epochs)"));
  panels.push_back(eb_panel(ctx, "d", "(d) E_B, pink noise",
                            ctx.load_eb("pink_orig", L, name),
                            ctx.load_eb("pink_shuf", L, name), "t (epochs)"));
  const auto base = "fig" + std::to_string(fig_id);
  svg::write_figure(ctx.fig_dir / (base + ".svg"),
                    "Ergodicity breaking in " + name + " series (" +
                        std::to_string(L) + "-sample epochs)",
                    panels, 2);
  write_plotted_csv(ctx.fig_dir / (base + ".csv"), ctx.points);
}

void figure_epoch_sizes(FigureContext& ctx, int fig_id,
                        const std::vector<Descriptor>& descriptors) {
  std::vector<svg::Panel> panels;
  const char* panel_ids = "abcdef";
  std::size_t panel_idx = 0;
  for (Descriptor d : descriptors) {
    const std::string name(descriptor_name(d));
    for (const char* noise_kind : {"white", "pink"}) {
      const std::string pid(1, panel_ids[panel_idx++]);
      svg::Panel panel;
      panel.title = "(" + pid + ") " + name + ", " + noise_kind + " noise";
      panel.x_label = "t (epochs)";
      panel.y_label = "E_B";
      panel.log_x = true;
      panel.log_y = true;
      std::size_t color = 0;
      for (std::size_t L : ctx.config.epoch_lengths) {
        const std::string orig = std::string(noise_kind) + "_orig";
        const std::string shuf = std::string(noise_kind) + "_shuf";
        panel.curves.push_back(
            eb_curve_plot("orig L=" + std::to_string(L),
                          ctx.load_eb(orig, L, name), color, pid, ctx.points));
        panel.curves.push_back(
            eb_curve_plot("shuf L=" + std::to_string(L),
                          ctx.load_eb(shuf, L, name), color + 4, pid, ctx.points));
        ++color;
      }
      panels.push_back(std::move(panel));
    }
  }
  const auto base = "fig" + std::to_string(fig_id);
  svg::write_figure(ctx.fig_dir / (base + ".svg"),
                    "E_B across epoch sizes", panels, 2);
  write_plotted_csv(ctx.fig_dir / (base + ".csv"), ctx.points);
}

}  // namespace

void reproduce_figure(int id, const ExperimentConfig& config) {
  if (id < 1 || id > 10)
    throw std::invalid_argument("figure: id must be in [1,10]");
  validate(config);

  // Figures 2-10 read experiment outputs; generate them on demand.
  if (id != 1 &&
      !std::filesystem::exists(config.output_dir / "manifest.json"))
    run_experiment(config);

  FigureContext ctx{config, config.output_dir / "figures", {}};
  std::filesystem::create_directories(ctx.fig_dir);

  switch (id) {
    case 1: figure_gamble(ctx); break;
    case 2: figure_raw(ctx); break;
    case 3: figure_descriptor(ctx, id, Descriptor::Sd); break;
    case 4: figure_descriptor(ctx, id, Descriptor::Cv); break;
    case 5: figure_descriptor(ctx, id, Descriptor::Rms); break;
    case 6: figure_descriptor(ctx, id, Descriptor::Hfgn); break;
    case 7: figure_descriptor(ctx, id, Descriptor::DeltaAlpha); break;
    case 8: figure_descriptor(ctx, id, Descriptor::Tmf); break;
    case 9:
      figure_epoch_sizes(ctx, id,
                         {Descriptor::Sd, Descriptor::Cv, Descriptor::Rms});
      break;
    case 10:
      figure_epoch_sizes(ctx, id,
                         {Descriptor::Hfgn, Descriptor::DeltaAlpha,
                          Descriptor::Tmf});
      break;
  }
}

}  // namespace ergo::pipeline
