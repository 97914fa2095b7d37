#include "hpcproj/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "hpcproj/csv.hpp"

namespace hpcproj {

namespace {

constexpr double kWidth = 900.0;
constexpr double kHeight = 600.0;
constexpr double kMarginLeft = 90.0;
constexpr double kMarginRight = 40.0;
constexpr double kMarginTop = 50.0;
constexpr double kMarginBottom = 70.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

} // namespace

std::string render_loglog_svg(const std::string& title,
                              const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<svg_series>& series) {
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    bool any = false;
    for (const auto& s : series) {
        if (s.x.size() != s.y.size()) {
            throw domain_error("svg series '" + s.label +
                               "': x and y lengths differ");
        }
        for (size_t i = 0; i < s.x.size(); ++i) {
            if (s.x[i] <= 0 || s.y[i] <= 0) {
                throw domain_error("svg series '" + s.label +
                                   "': log-log plot needs positive values");
            }
            if (!any) {
                xmin = xmax = s.x[i];
                ymin = ymax = s.y[i];
                any = true;
            } else {
                xmin = std::min(xmin, s.x[i]);
                xmax = std::max(xmax, s.x[i]);
                ymin = std::min(ymin, s.y[i]);
                ymax = std::max(ymax, s.y[i]);
            }
        }
    }
    // Expand degenerate ranges so a single point still renders.
    double lx0 = any ? std::log10(xmin) : 0.0;
    double lx1 = any ? std::log10(xmax) : 1.0;
    double ly0 = any ? std::log10(ymin) : 0.0;
    double ly1 = any ? std::log10(ymax) : 1.0;
    if (lx1 - lx0 < 1e-12) { lx0 -= 0.5; lx1 += 0.5; }
    if (ly1 - ly0 < 1e-12) { ly0 -= 0.5; ly1 += 0.5; }

    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    auto px = [&](double v) {
        return kMarginLeft + (std::log10(v) - lx0) / (lx1 - lx0) * plot_w;
    };
    auto py = [&](double v) {
        return kMarginTop + (ly1 - std::log10(v)) / (ly1 - ly0) * plot_h;
    };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
       << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
       << kHeight << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << kWidth / 2 << "\" y=\"25\" text-anchor=\"middle\" "
          "font-size=\"18\">"
       << escape(title) << "</text>\n";
    os << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 15
       << "\" text-anchor=\"middle\" font-size=\"14\">" << escape(x_label)
       << " (log)</text>\n";
    os << "<text x=\"20\" y=\"" << kHeight / 2
       << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 "
          "20 "
       << kHeight / 2 << ")\">" << escape(y_label) << " (log)</text>\n";

    // Decade grid lines.
    for (int d = static_cast<int>(std::ceil(lx0));
         d <= static_cast<int>(std::floor(lx1)); ++d) {
        const double x = px(std::pow(10.0, d));
        os << "<line x1=\"" << x << "\" y1=\"" << kMarginTop << "\" x2=\"" << x
           << "\" y2=\"" << kMarginTop + plot_h
           << "\" stroke=\"#dddddd\"/>\n";
        os << "<text x=\"" << x << "\" y=\"" << kMarginTop + plot_h + 20
           << "\" text-anchor=\"middle\" font-size=\"12\">1e" << d
           << "</text>\n";
    }
    for (int d = static_cast<int>(std::ceil(ly0));
         d <= static_cast<int>(std::floor(ly1)); ++d) {
        const double y = py(std::pow(10.0, d));
        os << "<line x1=\"" << kMarginLeft << "\" y1=\"" << y << "\" x2=\""
           << kMarginLeft + plot_w << "\" y2=\"" << y
           << "\" stroke=\"#dddddd\"/>\n";
        os << "<text x=\"" << kMarginLeft - 8 << "\" y=\"" << y + 4
           << "\" text-anchor=\"end\" font-size=\"12\">1e" << d
           << "</text>\n";
    }
    os << "<rect x=\"" << kMarginLeft << "\" y=\"" << kMarginTop
       << "\" width=\"" << plot_w << "\" height=\"" << plot_h
       << "\" fill=\"none\" stroke=\"black\"/>\n";

    for (size_t si = 0; si < series.size(); ++si) {
        const auto& s = series[si];
        const char* color = kPalette[si % (sizeof kPalette / sizeof *kPalette)];
        if (s.x.size() > 1) {
            os << "<polyline fill=\"none\" stroke=\"" << color
               << "\" stroke-width=\"1.5\" points=\"";
            for (size_t i = 0; i < s.x.size(); ++i) {
                os << px(s.x[i]) << "," << py(s.y[i]) << " ";
            }
            os << "\"/>\n";
        }
        for (size_t i = 0; i < s.x.size(); ++i) {
            const double x = px(s.x[i]);
            const double y = py(s.y[i]);
            os << "<circle cx=\"" << x << "\" cy=\"" << y
               << "\" r=\"3\" fill=\"" << color << "\"/>\n";
            os << "<text x=\"" << x + 5 << "\" y=\"" << y - 5
               << "\" font-size=\"9\" fill=\"" << color << "\">"
               << csv_writer::num(s.x[i]) << "," << csv_writer::num(s.y[i])
               << "</text>\n";
        }
        os << "<text x=\"" << kMarginLeft + 10 << "\" y=\""
           << kMarginTop + 18 + 16 * static_cast<double>(si)
           << "\" font-size=\"13\" fill=\"" << color << "\">"
           << escape(s.label) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

void write_svg_file(const std::string& path, const std::string& svg) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot write '" + path + "'");
    out << svg;
}

} // namespace hpcproj
