#pragma once

#include <string>
#include <vector>

namespace symprobe::cli {

// Static SVG figures. Output depends only on the data, so reruns are byte-identical.

struct Sample {
  std::string name;
  std::vector<double> values;
};

struct Curve {
  std::string name;
  std::vector<double> x, y;
};

/// Step histograms of several distributions on a log-scaled value axis.
/// Values at or below `floor` are counted in the first bin.
std::string distribution_plot(const std::string& title, const std::string& xlabel, const std::vector<Sample>& samples,
                              double floor = 1e-16);

std::string bar_plot(const std::string& title, const std::string& ylabel, const std::vector<std::string>& labels,
                     const std::vector<double>& values);

/// Rows are labels, columns epochs on a log axis; HeatmapTable::kUntrained is drawn left of the first epoch as "U".
std::string heatmap_plot(const std::string& title, const std::vector<int>& epochs,
                         const std::vector<std::string>& rows, const std::vector<std::vector<double>>& values);

std::string line_plot(const std::string& title, const std::string& xlabel, const std::string& ylabel,
                      const std::vector<Curve>& curves, bool log_x, bool log_y);

}  // namespace symprobe::cli
