#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bubblestat/date.hpp"
#include "bubblestat/timeseries.hpp"

namespace bubblestat {

/**
 * @brief Sliding-window geometry. Alignment is always centered: the window
 * for index t covers offsets −⌊n/2⌋ … n−⌊n/2⌋−1.
 */
struct WindowConfig {
    int n = 100;

    /// Offsets below/above the center; span is [t − lead(), t + trail()].
    [[nodiscard]] int lead() const noexcept { return n / 2; }
    [[nodiscard]] int trail() const noexcept { return n - n / 2 - 1; }
};

/// Throws ConfigError unless n ≥ 4.
void validate(const WindowConfig& cfg);

/// Split of one window into positive and non-positive returns.
/// Mean fields are empty when the corresponding set is empty.
struct WindowDecomposition {
    int n_pos = 0;  ///< count of strictly positive returns
    int n_neg = 0;  ///< count of non-positive returns (zeros included)
    std::optional<double> mean_pos;
    std::optional<double> mean_neg;
};

/// Up-move indicator: 1 for r > 0, 0 for r ≤ 0.
[[nodiscard]] constexpr int indicator_u(double r) noexcept { return r > 0.0 ? 1 : 0; }

[[nodiscard]] WindowDecomposition decompose_window(std::span<const double> window);

/// Fraction of strictly positive returns in the window; always in [0, 1].
[[nodiscard]] double statistic_u(std::span<const double> window);

/// Mean positive return plus mean non-positive return; empty when either set is.
[[nodiscard]] std::optional<double> statistic_v(std::span<const double> window);

/// Composite mean⁺·U + mean⁻·(1−U); empty when either set is.
[[nodiscard]] std::optional<double> statistic_c(std::span<const double> window);

/// Window of `cfg.n` returns centered at index t. Throws WindowBoundsError
/// when the window does not fit inside the series.
[[nodiscard]] std::span<const double> window_at(const ReturnSeries& returns, std::size_t t,
                                                const WindowConfig& cfg);

[[nodiscard]] WindowDecomposition decompose_window(const ReturnSeries& returns, std::size_t t,
                                                   const WindowConfig& cfg);
[[nodiscard]] double statistic_u(const ReturnSeries& returns, std::size_t t,
                                 const WindowConfig& cfg);
[[nodiscard]] std::optional<double> statistic_v(const ReturnSeries& returns, std::size_t t,
                                                const WindowConfig& cfg);
[[nodiscard]] std::optional<double> statistic_c(const ReturnSeries& returns, std::size_t t,
                                                const WindowConfig& cfg);

/// Mean and variance of a statistic under the i.i.d. N(0, σ²) null.
struct NullMoments {
    double mean = 0.0;
    double variance = 0.0;
};

/// E(U) = 1/2, Var(U) = 1/(4n).
[[nodiscard]] NullMoments null_moments_u(const WindowConfig& cfg);

/// E(V) = 0, Var(V) = (1/n⁺ + 1/n⁻)·((π−2)/π)·σ².
[[nodiscard]] NullMoments null_moments_v(int n_pos, int n_neg, double sigma);

/// E(C) = 0, Var(C) = [(π−2)(n+1)/(4π n⁺ n⁻) + 2/(nπ)]·σ².
[[nodiscard]] NullMoments null_moments_c(const WindowConfig& cfg, int n_pos, int n_neg,
                                         double sigma);

enum class StatisticKind { U, V, C };

[[nodiscard]] const char* to_string(StatisticKind kind) noexcept;

/**
 * @brief One statistic evaluated at every return index.
 *
 * raw/normalized hold NaN where valid is false: at the ⌊n/2⌋ leading and
 * n−⌊n/2⌋−1 trailing edge indices for all statistics, and additionally at
 * degenerate windows (empty positive or non-positive set) for V and C.
 */
struct StatisticSeries {
    StatisticKind kind = StatisticKind::U;
    std::vector<Date> dates;  ///< window-center dates (the return dates)
    std::vector<double> raw;
    std::vector<double> normalized;
    std::vector<char> valid;

    [[nodiscard]] std::size_t size() const noexcept { return raw.size(); }
    [[nodiscard]] std::size_t valid_count() const noexcept;
};

struct RollingStatistics {
    StatisticSeries u, v, c;
    int window_n = 0;
    std::size_t edge_invalid = 0;        ///< indices without a full window
    std::size_t degenerate_windows = 0;  ///< full windows where V/C are undefined
};

/**
 * @brief Evaluate U, V, C over every center index and normalize to z-scores.
 *
 * Normalization uses the analytic null moments with per-window positive and
 * non-positive counts and the supplied series-level σ. Throws
 * InsufficientDataError when the series is shorter than the window.
 */
[[nodiscard]] RollingStatistics rolling_statistics(const ReturnSeries& returns,
                                                   const WindowConfig& cfg, double sigma);

}  // namespace bubblestat
