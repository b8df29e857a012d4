#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bubblestat/stats.hpp"

namespace bubblestat {

struct SimulationConfig {
    int window_n = 100;
    int replications = 10000;
    std::uint64_t seed = 0;
    double sigma = 1.0;  ///< innovation standard deviation (known, not estimated)
};

/// Throws ConfigError unless replications ≥ 100, window_n ≥ 4 and sigma > 0.
void validate(const SimulationConfig& cfg);

struct MomentSummary {
    double mean = 0.0;
    double variance = 0.0;
    double skewness = 0.0;
    double excess_kurtosis = 0.0;
};

[[nodiscard]] MomentSummary moment_summary(std::span<const double> values);

/// Draws of one statistic under the i.i.d. normal null, one per replication.
struct NullSample {
    StatisticKind kind = StatisticKind::U;
    std::vector<double> raw;         ///< raw statistic values
    std::vector<double> normalized;  ///< z-scores under the analytic null moments
    MomentSummary summary;           ///< moments of the normalized draws
};

struct NullSimulation {
    NullSample u, v, c;
    std::vector<int> positive_counts;      ///< realized n⁺ per replication
    std::size_t degenerate_redraws = 0;    ///< single-sign windows replaced
    SimulationConfig config;
};

/**
 * @brief The null-distribution experiment: independent N(0, σ²) windows,
 * one U/V/C evaluation each, normalized with the analytic moments.
 *
 * Deterministic given the seed; replication k draws from an independent
 * subseeded stream, and single-sign windows are redrawn (counted) so every
 * replication yields all three statistics.
 */
[[nodiscard]] NullSimulation simulate_null(const SimulationConfig& cfg);

/// Density-normalized histogram: Σ density·bin_width = 1.
struct Histogram {
    std::vector<double> centers;
    std::vector<double> densities;
    double bin_width = 0.0;
};

/// Throws ConfigError for bins < 2 or an empty sample.
[[nodiscard]] Histogram histogram(std::span<const double> values, int bins);

/// Kolmogorov–Smirnov distance between the sample and the standard normal CDF.
[[nodiscard]] double ks_statistic_vs_normal(std::span<const double> values);

/// KS critical value at the 1% level for sample size n (asymptotic 1.63/√n).
[[nodiscard]] double ks_critical_1pct(std::size_t n) noexcept;

/// Window statistics by literal summation. Kept deliberately independent of
/// the stats module so it can serve as an oracle for it.
struct OracleStatistics {
    double u = 0.0;
    std::optional<double> v;
    std::optional<double> c;
};

[[nodiscard]] OracleStatistics brute_force_window_oracle(std::span<const double> window);

}  // namespace bubblestat
