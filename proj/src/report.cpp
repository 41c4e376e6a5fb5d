#include "ntnsim/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <vector>

namespace ntnsim {

namespace {

std::string fmt9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::string fmt3(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

double metric_value(const MetricsRecord& rec, Metric metric) {
    switch (metric) {
        case Metric::sum_rate: return rec.sum_rate_mean;
        case Metric::energy_efficiency: return rec.energy_efficiency;
        case Metric::coverage: return rec.coverage_all_users;
    }
    return 0.0;
}

const char* metric_label(Metric metric) {
    switch (metric) {
        case Metric::sum_rate: return "sum rate [bit/s/Hz]";
        case Metric::energy_efficiency: return "energy efficiency [bit/J]";
        case Metric::coverage: return "coverage probability";
    }
    return "";
}

const char* scheme_color(Scheme s) {
    switch (s) {
        case Scheme::I: return "#1f77b4";
        case Scheme::II: return "#ff7f0e";
        case Scheme::III: return "#2ca02c";
        case Scheme::IV: return "#d62728";
    }
    return "#000000";
}

}  // namespace

const char* to_string(Metric metric) {
    switch (metric) {
        case Metric::sum_rate: return "sum_rate";
        case Metric::energy_efficiency: return "energy_efficiency";
        case Metric::coverage: return "coverage";
    }
    return "?";
}

std::string to_csv(std::span<const MetricsRecord> records) {
    std::ostringstream out;
    out << "scheme,condition,axis,axis_value,sum_rate_mean,sum_rate_ci95,energy_efficiency,"
           "coverage_all_users,coverage_per_user_mean,trials,master_seed\n";
    for (const MetricsRecord& r : records) {
        out << to_string(r.scheme) << ',' << to_string(r.condition) << ',' << to_string(r.axis)
            << ',' << fmt9(r.axis_value) << ',' << fmt9(r.sum_rate_mean) << ','
            << fmt9(r.sum_rate_ci95) << ',' << fmt9(r.energy_efficiency) << ','
            << fmt9(r.coverage_all_users) << ',' << fmt9(r.coverage_per_user_mean) << ','
            << r.trials << ',' << r.master_seed << '\n';
    }
    return out.str();
}

std::string to_svg(std::span<const MetricsRecord> records, Metric metric) {
    // Series keyed (scheme, condition); points stay in record order, which
    // run_sweep emits sorted by axis value.
    std::map<std::pair<Scheme, Condition>, std::vector<std::pair<double, double>>> series;
    double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
    bool first = true;
    for (const MetricsRecord& r : records) {
        const double y = metric_value(r, metric);
        series[{r.scheme, r.condition}].push_back({r.axis_value, y});
        if (first) {
            x_min = x_max = r.axis_value;
            y_min = y_max = y;
            first = false;
        } else {
            x_min = std::min(x_min, r.axis_value);
            x_max = std::max(x_max, r.axis_value);
            y_min = std::min(y_min, y);
            y_max = std::max(y_max, y);
        }
    }
    if (x_max == x_min) x_max = x_min + 1.0;
    y_min = std::min(y_min, 0.0);
    if (y_max <= y_min) y_max = y_min + 1.0;
    y_max *= 1.05;

    const double width = 880, height = 560;
    const double left = 90, right = 680, top = 40, bottom = 500;
    auto sx = [&](double x) { return left + (x - x_min) / (x_max - x_min) * (right - left); };
    auto sy = [&](double y) { return bottom - (y - y_min) / (y_max - y_min) * (bottom - top); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    const std::string axis_name =
        records.empty() ? "axis" : to_string(records.front().axis);
    svg << "<text x=\"" << (left + right) / 2 << "\" y=\"" << height - 14
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" << axis_name
        << "</text>\n";
    svg << "<text x=\"22\" y=\"" << (top + bottom) / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
           "transform=\"rotate(-90 22 "
        << (top + bottom) / 2 << ")\">" << metric_label(metric) << "</text>\n";

    // Gridlines and tick labels.
    for (int i = 0; i <= 5; ++i) {
        const double xv = x_min + (x_max - x_min) * i / 5.0;
        const double yv = y_min + (y_max - y_min) * i / 5.0;
        svg << "<line x1=\"" << sx(xv) << "\" y1=\"" << top << "\" x2=\"" << sx(xv) << "\" y2=\""
            << bottom << "\" stroke=\"#dddddd\"/>\n";
        svg << "<line x1=\"" << left << "\" y1=\"" << sy(yv) << "\" x2=\"" << right << "\" y2=\""
            << sy(yv) << "\" stroke=\"#dddddd\"/>\n";
        svg << "<text x=\"" << sx(xv) << "\" y=\"" << bottom + 20
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << fmt3(xv)
            << "</text>\n";
        svg << "<text x=\"" << left - 8 << "\" y=\"" << sy(yv) + 4
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" << fmt3(yv)
            << "</text>\n";
    }
    svg << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << right - left
        << "\" height=\"" << bottom - top << "\" fill=\"none\" stroke=\"#333333\"/>\n";

    double legend_y = top + 10;
    for (const auto& [key, points] : series) {
        const auto& [scheme, condition] = key;
        const char* color = scheme_color(scheme);
        const char* dash = condition == Condition::impaired ? "6,4" : "";

        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\"";
        if (*dash) svg << " stroke-dasharray=\"" << dash << "\"";
        svg << " points=\"";
        for (const auto& [x, y] : points) svg << sx(x) << ',' << sy(y) << ' ';
        svg << "\"/>\n";

        for (const auto& [x, y] : points) {
            svg << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"3\" fill=\"" << color
                << "\"><title>scheme " << to_string(scheme) << ' ' << to_string(condition) << ": ("
                << fmt9(x) << ", " << fmt9(y) << ")</title></circle>\n";
        }

        svg << "<line x1=\"" << right + 14 << "\" y1=\"" << legend_y << "\" x2=\"" << right + 46
            << "\" y2=\"" << legend_y << "\" stroke=\"" << color << "\" stroke-width=\"2\"";
        if (*dash) svg << " stroke-dasharray=\"" << dash << "\"";
        svg << "/>\n";
        svg << "<text x=\"" << right + 52 << "\" y=\"" << legend_y + 4
            << "\" font-family=\"sans-serif\" font-size=\"12\">scheme " << to_string(scheme) << ' '
            << to_string(condition) << "</text>\n";
        legend_y += 20;
    }

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace ntnsim
