#include "dcearma/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "dcearma/csv.hpp"

namespace dcearma {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kMargin = 50.0;

struct Extent {
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;

    void grow(double x, double y) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }

    double px(double x) const {
        double span = xmax - xmin;
        if (span <= 0) span = 1;
        return kMargin + (x - xmin) / span * (kWidth - 2 * kMargin);
    }
    double py(double y) const {
        double span = ymax - ymin;
        if (span <= 0) span = 1;
        return kHeight - kMargin - (y - ymin) / span * (kHeight - 2 * kMargin);
    }
};

void open_svg(std::ofstream& out, const std::string& path, const std::string& title) {
    out.open(path, std::ios::binary);
    if (!out) throw std::runtime_error("svg: cannot open " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"15\">" << title << "</text>\n";
}

void axes(std::ofstream& out, const Extent& e) {
    out << "<line x1=\"" << kMargin << "\" y1=\"" << kHeight - kMargin << "\" x2=\""
        << kWidth - kMargin << "\" y2=\"" << kHeight - kMargin
        << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin
        << "\" y2=\"" << kHeight - kMargin << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << kMargin << "\" y=\"" << kHeight - kMargin + 18
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << csv_double(e.xmin)
        << "</text>\n";
    out << "<text x=\"" << kWidth - kMargin << "\" y=\"" << kHeight - kMargin + 18
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << csv_double(e.xmax) << "</text>\n";
    out << "<text x=\"" << kMargin - 4 << "\" y=\"" << kHeight - kMargin
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << csv_double(e.ymin) << "</text>\n";
    out << "<text x=\"" << kMargin - 4 << "\" y=\"" << kMargin
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << csv_double(e.ymax) << "</text>\n";
}

} // namespace

void write_svg_lines(const std::string& path, const std::vector<SvgSeries>& series,
                     const std::string& title) {
    Extent e;
    bool first = true;
    for (const auto& s : series) {
        for (const auto& [x, y] : s.points) {
            if (first) {
                e = Extent{x, x, y, y};
                first = false;
            } else {
                e.grow(x, y);
            }
        }
    }
    std::ofstream out;
    open_svg(out, path, title);
    axes(out, e);
    for (const auto& s : series) {
        out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : s.points) {
            out << e.px(x) << "," << e.py(y) << " ";
        }
        out << "\"/>\n";
    }
    out << "</svg>\n";
}

void write_svg_bars(const std::string& path,
                    const std::vector<std::pair<double, double>>& bars,
                    const std::string& title) {
    Extent e;
    bool first = true;
    for (const auto& [x, y] : bars) {
        if (first) {
            e = Extent{x, x, 0.0, y};
            first = false;
        } else {
            e.grow(x, y);
        }
    }
    std::ofstream out;
    open_svg(out, path, title);
    axes(out, e);
    double bw = bars.size() > 1 ? (kWidth - 2 * kMargin) / static_cast<double>(bars.size()) * 0.9
                                : 10.0;
    for (const auto& [x, y] : bars) {
        double x0 = e.px(x) - bw / 2;
        double y0 = e.py(y);
        out << "<rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << bw
            << "\" height=\"" << (kHeight - kMargin - y0) << "\" fill=\"#4682b4\"/>\n";
    }
    out << "</svg>\n";
}

} // namespace dcearma
