#pragma once

#include <string>
#include <vector>

#include "hpcproj/errors.hpp"

namespace hpcproj {

/// One labeled (x, y) series for a log-log plot.
struct svg_series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

/// Render a log-log line plot. Every data point carries a text label
/// with the same 6-significant-digit scientific formatting used by the
/// CSV writer, so plotted values can be diffed against CSV output.
std::string render_loglog_svg(const std::string& title,
                              const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<svg_series>& series);

void write_svg_file(const std::string& path, const std::string& svg);

} // namespace hpcproj
