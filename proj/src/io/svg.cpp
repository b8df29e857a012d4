#include "bubblestat/io/svg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "bubblestat/normal.hpp"
#include "bubblestat/rounding.hpp"

namespace bubblestat {

namespace {

constexpr double kWidth = 960.0;
constexpr double kMarginLeft = 60.0;
constexpr double kMarginRight = 20.0;
constexpr double kPlotWidth = kWidth - kMarginLeft - kMarginRight;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

// Maps data coordinates of one panel onto SVG pixels.
struct Panel {
    double top, height;
    double x_min, x_max, y_min, y_max;

    [[nodiscard]] double sx(double x) const {
        return kMarginLeft + (x - x_min) / (x_max - x_min) * kPlotWidth;
    }
    [[nodiscard]] double sy(double y) const {
        return top + (y_max - y) / (y_max - y_min) * height;
    }
};

void open_svg(std::ostream& out, double height) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << height << "\" viewBox=\"0 0 " << kWidth << ' ' << height << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void panel_frame(std::ostream& out, const Panel& p, const std::string& title) {
    out << "<rect x=\"" << num(kMarginLeft) << "\" y=\"" << num(p.top) << "\" width=\""
        << num(kPlotWidth) << "\" height=\"" << num(p.height)
        << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << num(kMarginLeft + 6) << "\" y=\"" << num(p.top + 16)
        << "\" font-family=\"sans-serif\" font-size=\"13\">" << title << "</text>\n";
    // y extremes
    out << "<text x=\"" << num(kMarginLeft - 6) << "\" y=\"" << num(p.top + 12)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">"
        << format_compact(round_half_even(p.y_max, 2)) << "</text>\n";
    out << "<text x=\"" << num(kMarginLeft - 6) << "\" y=\"" << num(p.top + p.height)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">"
        << format_compact(round_half_even(p.y_min, 2)) << "</text>\n";
}

// Polyline segments; breaks at non-finite values.
void polyline(std::ostream& out, const Panel& p, const std::vector<double>& ys,
              const std::string& color, double stroke = 1.0) {
    std::string points;
    auto flush = [&] {
        if (!points.empty()) {
            out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << stroke
                << "\" points=\"" << points << "\"/>\n";
            points.clear();
        }
    };
    for (std::size_t i = 0; i < ys.size(); ++i) {
        if (!std::isfinite(ys[i])) {
            flush();
            continue;
        }
        points += num(p.sx(static_cast<double>(i))) + "," + num(p.sy(ys[i])) + " ";
    }
    flush();
}

void hline(std::ostream& out, const Panel& p, double y, const std::string& color,
           bool dashed = true) {
    out << "<line x1=\"" << num(p.sx(p.x_min)) << "\" y1=\"" << num(p.sy(y)) << "\" x2=\""
        << num(p.sx(p.x_max)) << "\" y2=\"" << num(p.sy(y)) << "\" stroke=\"" << color
        << "\" stroke-width=\"1\"" << (dashed ? " stroke-dasharray=\"5,4\"" : "") << "/>\n";
}

void band(std::ostream& out, const Panel& p, double x0, double x1, const std::string& color) {
    out << "<rect x=\"" << num(p.sx(x0)) << "\" y=\"" << num(p.top) << "\" width=\""
        << num(std::max(1.0, p.sx(x1) - p.sx(x0))) << "\" height=\"" << num(p.height)
        << "\" fill=\"" << color << "\" fill-opacity=\"0.18\"/>\n";
}

void x_axis_dates(std::ostream& out, const Panel& p, const std::vector<Date>& dates) {
    const int ticks = 6;
    for (int k = 0; k <= ticks; ++k) {
        const auto i = static_cast<std::size_t>(
            std::llround(static_cast<double>(dates.size() - 1) * k / ticks));
        const double x = p.sx(static_cast<double>(i));
        out << "<line x1=\"" << num(x) << "\" y1=\"" << num(p.top + p.height) << "\" x2=\""
            << num(x) << "\" y2=\"" << num(p.top + p.height + 4)
            << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << num(x) << "\" y=\"" << num(p.top + p.height + 16)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">"
            << dates[i].to_string() << "</text>\n";
    }
}

double finite_min(const std::vector<double>& v, double fallback) {
    double m = fallback;
    bool any = false;
    for (double x : v) {
        if (std::isfinite(x)) {
            m = any ? std::min(m, x) : x;
            any = true;
        }
    }
    return any ? m : fallback;
}

double finite_max(const std::vector<double>& v, double fallback) {
    double m = fallback;
    bool any = false;
    for (double x : v) {
        if (std::isfinite(x)) {
            m = any ? std::max(m, x) : x;
            any = true;
        }
    }
    return any ? m : fallback;
}

std::size_t index_of_date(const std::vector<Date>& dates, Date d) {
    const auto it = std::lower_bound(dates.begin(), dates.end(), d);
    return static_cast<std::size_t>(it - dates.begin());
}

void period_bands(std::ostream& out, const Panel& p, const std::vector<Date>& dates,
                  const std::vector<ExceedancePeriod>& periods, const std::string& color) {
    for (const ExceedancePeriod& e : periods) {
        const auto i0 = index_of_date(dates, e.start_date);
        const auto i1 = index_of_date(dates, e.end_date);
        band(out, p, static_cast<double>(i0), static_cast<double>(i1), color);
    }
}

}  // namespace

void write_overview_svg(const PriceSeries& prices, const RollingStatistics& stats,
                        const DetectionReport& report, std::ostream& out) {
    const double panel_h = 190.0;
    const double gap = 42.0;
    const double total_h = 3 * panel_h + 3 * gap + 20.0;
    const auto n = static_cast<double>(stats.u.size() - 1);
    const double thr = report.threshold;

    open_svg(out, total_h);

    // Panel 1: normalized U and V.
    double z_lo = std::min({finite_min(stats.u.normalized, -thr),
                            finite_min(stats.v.normalized, -thr), -1.3 * thr});
    double z_hi = std::max({finite_max(stats.u.normalized, thr),
                            finite_max(stats.v.normalized, thr), 1.3 * thr});
    Panel p1{14.0, panel_h, 0.0, n, z_lo, z_hi};
    period_bands(out, p1, stats.u.dates, report.u_periods, "#4878cf");
    period_bands(out, p1, stats.v.dates, report.v_periods, "#d65f5f");
    hline(out, p1, thr, "red");
    hline(out, p1, -thr, "red");
    polyline(out, p1, stats.u.normalized, "#4878cf");
    polyline(out, p1, stats.v.normalized, "#d65f5f");
    panel_frame(out, p1, "normalized U (blue), V (red)");

    // Panel 2: normalized C.
    z_lo = std::min(finite_min(stats.c.normalized, -thr), -1.3 * thr);
    z_hi = std::max(finite_max(stats.c.normalized, thr), 1.3 * thr);
    Panel p2{14.0 + panel_h + gap, panel_h, 0.0, n, z_lo, z_hi};
    period_bands(out, p2, stats.c.dates, report.c_periods, "#6d4fa1");
    hline(out, p2, thr, "red");
    hline(out, p2, -thr, "red");
    polyline(out, p2, stats.c.normalized, "#6d4fa1");
    panel_frame(out, p2, "normalized C");

    // Panel 3: price level (aligned on return dates: one leading price dropped).
    std::vector<double> price_tail(prices.closes.begin() + 1, prices.closes.end());
    Panel p3{14.0 + 2 * (panel_h + gap), panel_h, 0.0, n,
             finite_min(price_tail, 0.0) * 0.98, finite_max(price_tail, 1.0) * 1.02};
    polyline(out, p3, price_tail, "#333333");
    panel_frame(out, p3, "price");
    x_axis_dates(out, p3, stats.u.dates);

    out << "</svg>\n";
}

void write_null_density_svg(const NullSimulation& sim, int bins, std::ostream& out) {
    const double height = 420.0;
    const double panel_h = 360.0;
    open_svg(out, height);

    const std::map<StatisticKind, std::string> colors{
        {StatisticKind::U, "#4878cf"},
        {StatisticKind::V, "#ee854a"},
        {StatisticKind::C, "#6d4fa1"},
    };

    Panel p{14.0, panel_h, -4.5, 4.5, 0.0, 0.55};
    // standard normal reference
    {
        std::string points;
        for (int i = 0; i <= 300; ++i) {
            const double x = -4.5 + 9.0 * i / 300.0;
            points += num(p.sx(x)) + "," + num(p.sy(normal_pdf(x))) + " ";
        }
        out << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" "
               "stroke-dasharray=\"5,4\" points=\""
            << points << "\"/>\n";
    }
    for (const NullSample* sample : {&sim.u, &sim.v, &sim.c}) {
        const Histogram h = histogram(sample->normalized, bins);
        std::string points;
        for (std::size_t b = 0; b < h.centers.size(); ++b) {
            if (h.centers[b] < p.x_min || h.centers[b] > p.x_max) continue;
            points += num(p.sx(h.centers[b])) + "," +
                      num(p.sy(std::min(h.densities[b], p.y_max))) + " ";
        }
        out << "<polyline fill=\"none\" stroke=\"" << colors.at(sample->kind)
            << "\" stroke-width=\"1.5\" points=\"" << points << "\"/>\n";
    }
    panel_frame(out, p, "null densities: U (blue), V (orange), C (purple), N(0,1) dashed");
    out << "</svg>\n";
}

}  // namespace bubblestat
