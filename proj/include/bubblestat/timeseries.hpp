#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "bubblestat/date.hpp"

namespace bubblestat {

/**
 * @brief Daily closing prices, ordered by strictly increasing date.
 *
 * Invariants (enforced by make_price_series / load_prices): at least two
 * observations, every close positive, dates strictly increasing.
 */
struct PriceSeries {
    std::vector<Date> dates;
    std::vector<double> closes;

    [[nodiscard]] std::size_t size() const noexcept { return dates.size(); }
};

/// Daily returns; entry i belongs to the date of the later price of pair (i, i+1).
struct ReturnSeries {
    std::vector<Date> dates;
    std::vector<double> values;

    [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
};

enum class ReturnMode {
    simple,  ///< (P_{t+1} − P_t) / P_t
    log,     ///< ln(P_{t+1} / P_t)
};

/// Descriptive statistics of a return sample (kurtosis is raw: normal = 3).
struct SummaryStats {
    std::size_t count = 0;
    double mean = 0.0;
    double std_dev = 0.0;  ///< sample standard deviation (divisor L−1)
    double skewness = 0.0;
    double kurtosis = 0.0;
    double jarque_bera = 0.0;
    bool jb_reject_at_1pct = false;
};

/// Chi-square(2) critical value at the 1% level, used by the Jarque-Bera flag.
inline constexpr double kJarqueBeraCritical1pct = 9.2103;

/// Validate and assemble a price series; rows are sorted by date first.
[[nodiscard]] PriceSeries make_price_series(std::vector<Date> dates, std::vector<double> closes);

/**
 * @brief Load a price series from CSV text.
 *
 * Requires a header row naming `date` and `close` columns (case-insensitive,
 * extra columns ignored). Throws ParseError with the offending line number,
 * ValidationError for duplicate dates or non-positive closes, and
 * InsufficientDataError for fewer than two data rows.
 */
[[nodiscard]] PriceSeries load_prices(std::istream& source);
[[nodiscard]] PriceSeries load_prices_file(const std::filesystem::path& path);

/// Write a series in the same `date,close` CSV format load_prices reads.
void write_prices_csv(const PriceSeries& prices, std::ostream& out);

[[nodiscard]] ReturnSeries compute_returns(const PriceSeries& prices,
                                           ReturnMode mode = ReturnMode::simple);

/// Optional ingestion filter: remove exact-zero returns (stale quotes). Default off.
[[nodiscard]] ReturnSeries drop_zero_returns(const ReturnSeries& returns);

/// Jarque-Bera statistic from precomputed moments: (L/6)·(skew² + (kurt−3)²/4).
[[nodiscard]] double jarque_bera(std::size_t count, double skewness, double kurtosis_raw) noexcept;

/**
 * @brief Mean, std, skewness, raw kurtosis and Jarque-Bera of a return sample.
 *
 * Needs at least 4 observations; throws DegenerateSeriesError when the
 * sample variance is zero.
 */
[[nodiscard]] SummaryStats summary_stats(std::span<const double> returns);
[[nodiscard]] SummaryStats summary_stats(const ReturnSeries& returns);

}  // namespace bubblestat
