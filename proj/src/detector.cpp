#include "bubblestat/detector.hpp"

#include <cmath>
#include <string>

#include "bubblestat/errors.hpp"
#include "bubblestat/normal.hpp"

namespace bubblestat {

void validate(const DetectionConfig& cfg) {
    if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) {
        throw ConfigError("alpha must lie strictly between 0 and 1, got " +
                          std::to_string(cfg.alpha));
    }
    if (cfg.min_run < 1) throw ConfigError("min_run must be at least 1");
}

const char* to_string(Direction d) noexcept {
    return d == Direction::upper ? "upper" : "lower";
}

double two_sided_threshold(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw ConfigError("alpha must lie strictly between 0 and 1, got " +
                          std::to_string(alpha));
    }
    return normal_quantile(1.0 - alpha / 2.0);
}

double tail_p_value(double z) noexcept {
    return z >= 0.0 ? normal_cdf_complement(z) : normal_cdf(z);
}

namespace {

// A run over the valid-index subsequence. start/end are positions into that
// subsequence; marked counts exceeding observations inside the run.
struct Run {
    std::size_t start;
    std::size_t end;
    double extremum;
    std::size_t marked;

    [[nodiscard]] bool upper() const noexcept { return extremum > 0.0; }
};

}  // namespace

std::vector<ExceedancePeriod> extract_periods(const StatisticSeries& series,
                                              const DetectionConfig& cfg) {
    validate(cfg);
    const double threshold = two_sided_threshold(cfg.alpha);

    // Invalid indices carry no information: work on the valid subsequence.
    std::vector<std::size_t> valid_index;
    valid_index.reserve(series.size());
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (series.valid[i]) valid_index.push_back(i);
    }

    // Maximal streaks of consecutive exceeding positions.
    std::vector<Run> runs;
    for (std::size_t pos = 0; pos < valid_index.size(); ++pos) {
        const double z = series.normalized[valid_index[pos]];
        if (std::fabs(z) <= threshold) continue;
        if (!runs.empty() && runs.back().end + 1 == pos) {
            Run& r = runs.back();
            r.end = pos;
            ++r.marked;
            if (std::fabs(z) > std::fabs(r.extremum)) r.extremum = z;
        } else {
            runs.push_back({pos, pos, z, 1});
        }
    }

    // Bridge nearby same-direction runs.
    std::vector<Run> merged;
    for (const Run& r : runs) {
        if (!merged.empty()) {
            Run& prev = merged.back();
            const std::size_t gap = r.start - prev.end - 1;
            if (gap <= cfg.merge_gap && prev.upper() == r.upper()) {
                prev.end = r.end;
                prev.marked += r.marked;
                if (std::fabs(r.extremum) > std::fabs(prev.extremum)) prev.extremum = r.extremum;
                continue;
            }
        }
        merged.push_back(r);
    }

    std::vector<ExceedancePeriod> periods;
    for (const Run& r : merged) {
        if (r.marked < cfg.min_run) continue;
        ExceedancePeriod p;
        p.statistic = series.kind;
        p.start_date = series.dates[valid_index[r.start]];
        p.end_date = series.dates[valid_index[r.end]];
        p.extremum_z = r.extremum;
        p.p_value = tail_p_value(r.extremum);
        p.direction = r.upper() ? Direction::upper : Direction::lower;
        periods.push_back(p);
    }
    return periods;
}

DetectionReport build_report(const RollingStatistics& stats, const SigmaEstimate& sigma,
                             const DetectionConfig& cfg) {
    validate(cfg);
    const std::size_t len = stats.u.size();
    if (stats.v.size() != len || stats.c.size() != len || stats.u.dates.size() != len) {
        throw InternalError("statistic series disagree in length");
    }

    DetectionReport report;
    report.u_periods = extract_periods(stats.u, cfg);
    report.v_periods = extract_periods(stats.v, cfg);
    report.c_periods = extract_periods(stats.c, cfg);
    report.config = cfg;
    report.window_n = stats.window_n;
    report.threshold = two_sided_threshold(cfg.alpha);
    report.sigma = sigma;
    report.returns_count = len;
    report.edge_invalid = stats.edge_invalid;
    report.degenerate_windows = stats.degenerate_windows;
    return report;
}

}  // namespace bubblestat
