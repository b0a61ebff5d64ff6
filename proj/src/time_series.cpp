#include "ergo/time_series.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ergo {

std::string SeriesMeta::to_string() const {
  std::ostringstream out;
  out << "generator=" << (generator.empty() ? "unknown" : generator)
      << " seed=" << seed;
  if (!tags.empty()) {
    out << " tags=";
    for (std::size_t i = 0; i < tags.size(); ++i) {
      if (i) out << ',';
      out << tags[i];
    }
  }
  return out.str();
}

SeriesMeta parse_meta(std::string_view text) {
  SeriesMeta meta;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (key == "generator") {
      meta.generator = value;
    } else if (key == "seed") {
      meta.seed = std::stoull(value);
    } else if (key == "tags") {
      std::size_t start = 0;
      while (start <= value.size()) {
        const auto comma = value.find(',', start);
        const auto end = comma == std::string::npos ? value.size() : comma;
        if (end > start) meta.tags.push_back(value.substr(start, end - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
  }
  return meta;
}

void validate(const TimeSeries& series) {
  if (series.values.empty())
    throw std::invalid_argument("time series: length must be >= 1");
  const bool must_be_nonnegative = series.meta.has_tag("unsigned");
  for (double v : series.values) {
    if (!std::isfinite(v))
      throw std::invalid_argument("time series: non-finite value");
    if (must_be_nonnegative && v < 0.0)
      throw std::invalid_argument(
          "time series: negative value in unsigned series");
  }
}

}  // namespace ergo
