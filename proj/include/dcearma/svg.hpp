#ifndef DCEARMA_SVG_HPP
#define DCEARMA_SVG_HPP

#include <string>
#include <utility>
#include <vector>

namespace dcearma {

// Dependency-light plotting: polylines and bars are all the figures need.
// CSV files are the contract; these are a convenience for eyeballing runs.

struct SvgSeries {
    std::vector<std::pair<double, double>> points;
    std::string color = "#1f77b4";
};

void write_svg_lines(const std::string& path, const std::vector<SvgSeries>& series,
                     const std::string& title);

void write_svg_bars(const std::string& path,
                    const std::vector<std::pair<double, double>>& bars,
                    const std::string& title);

} // namespace dcearma

#endif
