#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bubblestat/timeseries.hpp"

namespace bubblestat {

enum class BurstMode {
    none,     ///< bubble level freezes at its peak; no crash
    instant,  ///< bubble collapses to zero on the step after `end`
    linear,   ///< bubble declines to zero linearly over `burst_length` steps
};

[[nodiscard]] const char* to_string(BurstMode mode) noexcept;
[[nodiscard]] std::optional<BurstMode> burst_mode_from_string(std::string_view name) noexcept;

/// One injected bubble: geometric growth of the additive component over
/// [start, end], then the configured burst.
struct BubbleEpisode {
    std::size_t start = 0;
    std::size_t end = 0;
    double theta_inv = 1.0;       ///< per-period growth factor, ≥ 1
    double initial_bubble = 0.0;  ///< starting level as a fraction of the initial price
    BurstMode burst = BurstMode::none;
    std::size_t burst_length = 0;  ///< for BurstMode::linear
};

/**
 * @brief Recipe for a synthetic daily price series.
 *
 * The fundamental component is a driftless multiplicative random walk
 * (log-steps N(0, base_sigma²), starting at 100); each episode adds a
 * deterministic geometric bubble on top. Dates are consecutive weekdays
 * from a fixed epoch. Fully reproducible from the seed.
 */
struct BubbleScenario {
    std::size_t length = 1000;
    double base_sigma = 0.01;
    std::uint64_t seed = 0;
    std::vector<BubbleEpisode> episodes;

    /// Convenience for the common single-episode case.
    [[nodiscard]] static BubbleScenario single(std::size_t length, double base_sigma,
                                               double theta_inv, std::size_t bubble_start,
                                               std::size_t bubble_end, double initial_bubble,
                                               BurstMode burst, std::size_t burst_length,
                                               std::uint64_t seed);
};

/// Throws ConfigError when the scenario violates its invariants.
void validate(const BubbleScenario& scenario);

/// Generate the price series for a scenario. Prices are positive by
/// construction (bubble components never go below zero).
[[nodiscard]] PriceSeries generate_series(const BubbleScenario& scenario);

/// Named entry of the fixed scenario collection.
struct NamedScenario {
    std::string name;
    BubbleScenario scenario;
};

/// Fixed, fully pinned scenarios: "null", "bloom", "bloom-and-crash",
/// "double-bubble". Used by tests and CLI demos.
[[nodiscard]] const std::vector<NamedScenario>& scenario_library();

/// Lookup by name; empty optional when absent.
[[nodiscard]] std::optional<BubbleScenario> find_scenario(std::string_view name);

}  // namespace bubblestat
