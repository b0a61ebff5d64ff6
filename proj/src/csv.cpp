#include "ergo/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ergo::csv {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(line.substr(start));
      return parts;
    }
    parts.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

double parse_double(const std::string& s) {
  if (s == "nan" || s == "-nan")
    return std::numeric_limits<double>::quiet_NaN();
  return std::stod(s);
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::string meta_comment(const std::string& body) {
  return "# meta: " + body + "\n";
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_text_atomic(const std::filesystem::path& path,
                       const std::string& content) {
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

void write_series(const std::filesystem::path& path,
                  const TimeSeries& series) {
  std::ostringstream out;
  out << meta_comment(series.meta.to_string()) << "value\n";
  for (double v : series.values) out << format_double(v) << '\n';
  write_text_atomic(path, out.str());
}

TimeSeries read_series(const std::filesystem::path& path) {
  TimeSeries series;
  bool header_seen = false;
  for (const auto& line : read_lines(path)) {
    if (line.empty()) continue;
    if (line.front() == '#') {
      const std::string prefix = "# meta:";
      if (line.rfind(prefix, 0) == 0)
        series.meta = parse_meta(line.substr(prefix.size()));
      continue;
    }
    if (!header_seen) {
      header_seen = true;  // "value" or "epoch_index,value"
      continue;
    }
    const auto parts = split(line, ',');
    series.values.push_back(parse_double(parts.back()));
  }
  if (series.meta.generator.empty()) series.meta.generator = "csv";
  if (series.values.empty())
    throw std::runtime_error("no values in " + path.string());
  return series;
}

void write_descriptor(const std::filesystem::path& path,
                      const DescriptorSeries& series) {
  std::ostringstream out;
  out << meta_comment("descriptor=" + std::string(descriptor_name(series.descriptor)) +
                      " epoch_length=" + std::to_string(series.grid.epoch_length) +
                      " discarded_tail=" + std::to_string(series.grid.discarded_tail) +
                      " failed_epochs=" + std::to_string(series.failed_epochs) +
                      " source=" + series.source_meta.to_string());
  out << "epoch_index,value\n";
  for (std::size_t i = 0; i < series.values.size(); ++i)
    out << i << ',' << format_double(series.values[i]) << '\n';
  write_text_atomic(path, out.str());
}

void write_descriptor_table(const std::filesystem::path& path,
                            const std::vector<DescriptorSeries>& ensemble) {
  if (ensemble.empty())
    throw std::invalid_argument("write_descriptor_table: empty ensemble");
  const auto& first = ensemble.front();
  std::ostringstream out;
  out << meta_comment(
      "descriptor=" + std::string(descriptor_name(first.descriptor)) +
      " epoch_length=" + std::to_string(first.grid.epoch_length) +
      " discarded_tail=" + std::to_string(first.grid.discarded_tail) +
      " source=" + first.source_meta.to_string());
  out << "# failed_epochs:";
  for (const auto& s : ensemble) out << ' ' << s.failed_epochs;
  out << '\n';
  out << "epoch_index";
  for (std::size_t r = 0; r < ensemble.size(); ++r) out << ",r" << r;
  out << '\n';
  for (std::size_t i = 0; i < first.grid.epoch_count; ++i) {
    out << i;
    for (const auto& s : ensemble) out << ',' << format_double(s.values[i]);
    out << '\n';
  }
  write_text_atomic(path, out.str());
}

std::vector<DescriptorSeries> read_descriptor_table(
    const std::filesystem::path& path) {
  SeriesMeta source;
  Descriptor descriptor = Descriptor::Sd;
  std::size_t epoch_length = 0, discarded_tail = 0;
  std::vector<std::size_t> failed;
  std::vector<std::vector<double>> columns;
  bool header_seen = false;

  for (const auto& line : read_lines(path)) {
    if (line.empty()) continue;
    if (line.front() == '#') {
      const std::string meta_prefix = "# meta:";
      const std::string failed_prefix = "# failed_epochs:";
      if (line.rfind(meta_prefix, 0) == 0) {
        std::istringstream in(line.substr(meta_prefix.size()));
        std::string token;
        std::string source_text;
        bool in_source = false;
        while (in >> token) {
          if (in_source) {
            source_text += ' ' + token;
            continue;
          }
          if (token.rfind("descriptor=", 0) == 0) {
            if (auto d = descriptor_from_name(token.substr(11))) descriptor = *d;
          } else if (token.rfind("epoch_length=", 0) == 0) {
            epoch_length = std::stoull(token.substr(13));
          } else if (token.rfind("discarded_tail=", 0) == 0) {
            discarded_tail = std::stoull(token.substr(15));
          } else if (token.rfind("source=", 0) == 0) {
            source_text = token.substr(7);
            in_source = true;
          }
        }
        source = parse_meta(source_text);
      } else if (line.rfind(failed_prefix, 0) == 0) {
        std::istringstream in(line.substr(failed_prefix.size()));
        std::size_t f;
        while (in >> f) failed.push_back(f);
      }
      continue;
    }
    if (!header_seen) {
      header_seen = true;
      columns.resize(split(line, ',').size() - 1);
      continue;
    }
    const auto parts = split(line, ',');
    if (parts.size() != columns.size() + 1)
      throw std::runtime_error("ragged descriptor table " + path.string());
    for (std::size_t c = 0; c < columns.size(); ++c)
      columns[c].push_back(parse_double(parts[c + 1]));
  }

  std::vector<DescriptorSeries> ensemble(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    auto& s = ensemble[c];
    s.descriptor = descriptor;
    s.values = std::move(columns[c]);
    s.grid.epoch_length = epoch_length;
    s.grid.epoch_count = s.values.size();
    s.grid.discarded_tail = discarded_tail;
    s.source_meta = source;
    s.failed_epochs = c < failed.size() ? failed[c] : 0;
  }
  return ensemble;
}

void write_eb_curve(const std::filesystem::path& path,
                    const eb::EBCurve& curve) {
  std::ostringstream out;
  out << meta_comment(
      "lag=" + std::to_string(curve.lag) + " unit=" +
      (curve.unit == eb::LengthUnit::Samples ? "samples" : "epochs") +
      " ensemble_size=" + std::to_string(curve.ensemble_size) +
      " unreliable_points=" + std::to_string(curve.unreliable_points));
  out << "t,eb,n_used\n";
  for (std::size_t i = 0; i < curve.lengths.size(); ++i)
    out << curve.lengths[i] << ',' << format_double(curve.eb[i]) << ','
        << curve.n_used[i] << '\n';
  write_text_atomic(path, out.str());
}

eb::EBCurve read_eb_curve(const std::filesystem::path& path) {
  eb::EBCurve curve;
  bool header_seen = false;
  for (const auto& line : read_lines(path)) {
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::istringstream in(line.substr(1));
      std::string token;
      while (in >> token) {
        if (token.rfind("lag=", 0) == 0) curve.lag = std::stoull(token.substr(4));
        else if (token == "unit=epochs") curve.unit = eb::LengthUnit::Epochs;
        else if (token.rfind("ensemble_size=", 0) == 0)
          curve.ensemble_size = std::stoull(token.substr(14));
        else if (token.rfind("unreliable_points=", 0) == 0)
          curve.unreliable_points = std::stoull(token.substr(18));
      }
      continue;
    }
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    const auto parts = split(line, ',');
    if (parts.size() != 3)
      throw std::runtime_error("bad eb row in " + path.string());
    curve.lengths.push_back(std::stoull(parts[0]));
    curve.eb.push_back(parse_double(parts[1]));
    curve.n_used.push_back(std::stoull(parts[2]));
  }
  return curve;
}

void write_dfa_curve(const std::filesystem::path& path,
                     const dfa::DfaResult& result) {
  std::ostringstream out;
  out << meta_comment("hurst=" + format_double(result.hurst) +
                      " fit_r2=" + format_double(result.fit_r2) +
                      " low_fit_warning=" +
                      (result.low_fit_warning ? "1" : "0"));
  out << "scale,fluctuation\n";
  for (std::size_t i = 0; i < result.scales.size(); ++i)
    out << result.scales[i] << ',' << format_double(result.fluctuations[i])
        << '\n';
  write_text_atomic(path, out.str());
}

void write_mf_spectrum(const std::filesystem::path& path,
                       const mf::MultifractalSpectrum& spectrum) {
  std::ostringstream out;
  out << meta_comment(
      "delta_alpha=" + format_double(spectrum.delta_alpha) +
      " dropped_q=" + std::to_string(spectrum.dropped_q) +
      " dropped_zero_bins=" + std::to_string(spectrum.dropped_zero_bins) +
      " monotonicity_warning=" + (spectrum.monotonicity_warning ? "1" : "0"));
  out << "q,alpha,f,r_alpha,r_f,accepted\n";
  for (std::size_t i = 0; i < spectrum.q_grid.size(); ++i)
    out << format_double(spectrum.q_grid[i]) << ','
        << format_double(spectrum.alpha[i]) << ','
        << format_double(spectrum.f_alpha[i]) << ','
        << format_double(spectrum.r_alpha[i]) << ','
        << format_double(spectrum.r_f[i]) << ','
        << (spectrum.accepted[i] ? 1 : 0) << '\n';
  write_text_atomic(path, out.str());
}

void write_table(const std::filesystem::path& path,
                 const std::vector<std::string>& header,
                 const std::vector<std::vector<double>>& rows) {
  std::ostringstream out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out << ',';
    out << header[i];
  }
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << format_double(row[i]);
    }
    out << '\n';
  }
  write_text_atomic(path, out.str());
}

}  // namespace ergo::csv
