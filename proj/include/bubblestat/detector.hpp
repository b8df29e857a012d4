#pragma once

#include <cstddef>
#include <vector>

#include "bubblestat/date.hpp"
#include "bubblestat/sigma.hpp"
#include "bubblestat/stats.hpp"

namespace bubblestat {

struct DetectionConfig {
    double alpha = 0.05;        ///< two-sided significance level
    std::size_t merge_gap = 10; ///< max sub-threshold valid observations bridged between runs
    std::size_t min_run = 1;    ///< minimum exceeding observations per reported period
};

/// Throws ConfigError unless 0 < alpha < 1 and min_run ≥ 1.
void validate(const DetectionConfig& cfg);

enum class Direction { upper, lower };

[[nodiscard]] const char* to_string(Direction d) noexcept;

/// One maximal (merge-smoothed) run of window centers beyond the confidence band.
struct ExceedancePeriod {
    StatisticKind statistic = StatisticKind::U;
    Date start_date;
    Date end_date;
    double extremum_z = 0.0;  ///< signed normalized value of largest magnitude
    double p_value = 0.0;     ///< one-sided tail probability of the extremum
    Direction direction = Direction::upper;
};

/// Detection output for one series: periods per statistic plus run metadata.
struct DetectionReport {
    std::vector<ExceedancePeriod> u_periods;
    std::vector<ExceedancePeriod> v_periods;
    std::vector<ExceedancePeriod> c_periods;
    DetectionConfig config;
    int window_n = 0;
    double threshold = 0.0;  ///< z bound actually applied
    SigmaEstimate sigma;
    std::size_t returns_count = 0;
    std::size_t edge_invalid = 0;
    std::size_t degenerate_windows = 0;
};

/// z_{1−α/2}: |z| beyond this bound is an exceedance. Throws ConfigError
/// for alpha outside (0, 1).
[[nodiscard]] double two_sided_threshold(double alpha);

/// One-sided tail probability: 1 − Φ(z) for z ≥ 0, Φ(z) for z < 0.
[[nodiscard]] double tail_p_value(double z) noexcept;

/**
 * @brief Extract exceedance periods from a normalized statistic series.
 *
 * Valid indices with |z| above the threshold form runs; runs separated by at
 * most merge_gap sub-threshold valid indices merge when they exceed in the
 * same direction (invalid indices are skipped, they neither break nor count).
 * Runs with fewer than min_run exceeding observations are dropped.
 */
[[nodiscard]] std::vector<ExceedancePeriod> extract_periods(const StatisticSeries& series,
                                                            const DetectionConfig& cfg);

/// Run extract_periods on all three statistics and aggregate with the
/// configuration and σ estimate echoed for reproducibility.
[[nodiscard]] DetectionReport build_report(const RollingStatistics& stats,
                                           const SigmaEstimate& sigma,
                                           const DetectionConfig& cfg);

}  // namespace bubblestat
