#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ergo {

/// Provenance record carried along every generated or transformed series.
struct SeriesMeta {
  std::string generator;           // "white", "pink", "gamble", "csv", ...
  std::uint64_t seed = 0;
  std::vector<std::string> tags;   // transform chain: "unsigned", "shuffled"

  bool has_tag(std::string_view tag) const {
    for (const auto& t : tags)
      if (t == tag) return true;
    return false;
  }

  void add_tag(std::string_view tag) {
    if (!has_tag(tag)) tags.emplace_back(tag);
  }

  /// "generator=pink seed=42 tags=unsigned,shuffled" (for CSV comments).
  std::string to_string() const;
};

SeriesMeta parse_meta(std::string_view text);

/// A finite real-valued sequence with provenance.
struct TimeSeries {
  std::vector<double> values;
  SeriesMeta meta;

  std::size_t size() const { return values.size(); }
};

/// Throws std::invalid_argument if the series is empty, contains a
/// non-finite value, or carries the "unsigned" tag with a negative value.
void validate(const TimeSeries& series);

}  // namespace ergo
