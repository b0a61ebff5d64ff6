#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ergo/dfa.hpp"
#include "ergo/ergodicity.hpp"
#include "ergo/linstats.hpp"
#include "ergo/multifractal.hpp"
#include "ergo/time_series.hpp"

namespace ergo::csv {

// All CSV output uses '\n' newlines, '.' decimal separator, a header row,
// and an optional leading "# meta: ..." comment. Doubles are printed with
// 17 significant digits so files round-trip exactly. Writes are atomic
// (temp file + rename).

std::string format_double(double v);

void write_text_atomic(const std::filesystem::path& path,
                       const std::string& content);

/// One-column series file: "# meta: ...", "value", one value per row.
void write_series(const std::filesystem::path& path, const TimeSeries& series);
TimeSeries read_series(const std::filesystem::path& path);

/// Single descriptor series: "epoch_index,value".
void write_descriptor(const std::filesystem::path& path,
                      const DescriptorSeries& series);

/// Ensemble table: "epoch_index,r0,...,r{R-1}", one row per epoch.
void write_descriptor_table(const std::filesystem::path& path,
                            const std::vector<DescriptorSeries>& ensemble);
std::vector<DescriptorSeries> read_descriptor_table(
    const std::filesystem::path& path);

/// "t,eb,n_used".
void write_eb_curve(const std::filesystem::path& path, const eb::EBCurve& curve);
eb::EBCurve read_eb_curve(const std::filesystem::path& path);

/// "scale,fluctuation".
void write_dfa_curve(const std::filesystem::path& path,
                     const dfa::DfaResult& result);

/// "q,alpha,f,r_alpha,r_f,accepted".
void write_mf_spectrum(const std::filesystem::path& path,
                       const mf::MultifractalSpectrum& spectrum);

/// Generic numeric table with a header row; used by figure backing data.
void write_table(const std::filesystem::path& path,
                 const std::vector<std::string>& header,
                 const std::vector<std::vector<double>>& rows);

}  // namespace ergo::csv
