#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace ergo::svg {

// Minimal static SVG line plots; enough for the figure reproductions.

struct Curve {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#1f77b4";
  double width = 1.2;
};

struct Panel {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
  std::vector<Curve> curves;
};

/// Renders panels on a grid with `columns` panels per row.
void write_figure(const std::filesystem::path& path, const std::string& title,
                  const std::vector<Panel>& panels, std::size_t columns = 2);

/// Default qualitative palette.
const std::vector<std::string>& palette();

}  // namespace ergo::svg
