#include "bubblestat/synthetic.hpp"

#include <cmath>
#include <string>

#include "bubblestat/errors.hpp"
#include "bubblestat/rng.hpp"

namespace bubblestat {

namespace {

constexpr double kInitialPrice = 100.0;

// First weekday of 2005; synthetic series are anchored here.
const Date kEpoch{2005, 1, 3};

}  // namespace

const char* to_string(BurstMode mode) noexcept {
    switch (mode) {
        case BurstMode::none: return "none";
        case BurstMode::instant: return "instant";
        case BurstMode::linear: return "linear";
    }
    return "?";
}

std::optional<BurstMode> burst_mode_from_string(std::string_view name) noexcept {
    if (name == "none") return BurstMode::none;
    if (name == "instant") return BurstMode::instant;
    if (name == "linear") return BurstMode::linear;
    return std::nullopt;
}

BubbleScenario BubbleScenario::single(std::size_t length, double base_sigma, double theta_inv,
                                      std::size_t bubble_start, std::size_t bubble_end,
                                      double initial_bubble, BurstMode burst,
                                      std::size_t burst_length, std::uint64_t seed) {
    BubbleScenario s;
    s.length = length;
    s.base_sigma = base_sigma;
    s.seed = seed;
    if (initial_bubble > 0.0) {
        s.episodes.push_back(
            {bubble_start, bubble_end, theta_inv, initial_bubble, burst, burst_length});
    }
    return s;
}

void validate(const BubbleScenario& scenario) {
    if (scenario.length < 2) throw ConfigError("scenario length must be at least 2");
    if (!(scenario.base_sigma > 0.0)) throw ConfigError("base_sigma must be positive");
    std::size_t previous_end = 0;
    bool first = true;
    for (const BubbleEpisode& e : scenario.episodes) {
        if (!(e.start < e.end) || e.end > scenario.length) {
            throw ConfigError("episode interval [" + std::to_string(e.start) + ", " +
                              std::to_string(e.end) + ") must satisfy 0 <= start < end <= length");
        }
        if (!(e.theta_inv >= 1.0)) throw ConfigError("theta_inv must be at least 1");
        if (e.initial_bubble < 0.0) throw ConfigError("initial_bubble must be non-negative");
        if (e.burst == BurstMode::linear && e.burst_length == 0) {
            throw ConfigError("linear burst needs burst_length >= 1");
        }
        if (!first && e.start < previous_end) {
            throw ConfigError("episodes must be ordered and non-overlapping");
        }
        previous_end = e.end + (e.burst == BurstMode::linear ? e.burst_length : 0);
        first = false;
    }
}

PriceSeries generate_series(const BubbleScenario& scenario) {
    validate(scenario);
    Rng rng(scenario.seed);

    // Fundamental: driftless geometric random walk.
    std::vector<double> fundamental(scenario.length);
    fundamental[0] = kInitialPrice;
    for (std::size_t t = 1; t < scenario.length; ++t) {
        fundamental[t] = fundamental[t - 1] * std::exp(rng.normal(scenario.base_sigma));
    }

    // Additive bubble components, deterministic expectation paths. Each
    // episode contributes its own component; components sum.
    std::vector<double> bubble(scenario.length, 0.0);
    for (const BubbleEpisode& e : scenario.episodes) {
        if (e.initial_bubble <= 0.0) continue;
        double level = e.initial_bubble * kInitialPrice;
        double peak = level;
        for (std::size_t t = e.start; t <= e.end && t < scenario.length; ++t) {
            bubble[t] += level;
            peak = level;
            level *= e.theta_inv;
        }
        switch (e.burst) {
            case BurstMode::none:
                for (std::size_t t = e.end + 1; t < scenario.length; ++t) bubble[t] += peak;
                break;
            case BurstMode::instant:
                break;  // component is zero past the interval
            case BurstMode::linear:
                for (std::size_t k = 1; k <= e.burst_length; ++k) {
                    const std::size_t t = e.end + k;
                    if (t >= scenario.length) break;
                    bubble[t] += peak * (1.0 - static_cast<double>(k) /
                                                   static_cast<double>(e.burst_length));
                }
                break;
        }
    }

    PriceSeries prices;
    prices.dates.reserve(scenario.length);
    prices.closes.reserve(scenario.length);
    Date date = kEpoch;
    for (std::size_t t = 0; t < scenario.length; ++t) {
        prices.dates.push_back(date);
        prices.closes.push_back(fundamental[t] + bubble[t]);
        date = date.next_weekday();
    }
    return prices;
}

const std::vector<NamedScenario>& scenario_library() {
    static const std::vector<NamedScenario> library = [] {
        std::vector<NamedScenario> lib;

        BubbleScenario null_scenario;
        null_scenario.length = 1000;
        null_scenario.base_sigma = 0.01;
        null_scenario.seed = 20050103;
        lib.push_back({"null", null_scenario});

        // Growth strong enough that the upside drift dominates the noise
        // near the end of the episode.
        BubbleScenario bloom = BubbleScenario::single(
            /*length=*/1000, /*base_sigma=*/0.01, /*theta_inv=*/1.01,
            /*bubble_start=*/350, /*bubble_end=*/650, /*initial_bubble=*/0.05,
            BurstMode::none, 0, /*seed=*/20050103);
        lib.push_back({"bloom", bloom});

        BubbleScenario crash = BubbleScenario::single(
            /*length=*/1000, /*base_sigma=*/0.01, /*theta_inv=*/1.01,
            /*bubble_start=*/300, /*bubble_end=*/600, /*initial_bubble=*/0.05,
            BurstMode::instant, 0, /*seed=*/20050103);
        lib.push_back({"bloom-and-crash", crash});

        BubbleScenario twin;
        twin.length = 1600;
        twin.base_sigma = 0.01;
        twin.seed = 20050103;
        twin.episodes.push_back({200, 480, 1.01, 0.05, BurstMode::instant, 0});
        twin.episodes.push_back({900, 1180, 1.01, 0.05, BurstMode::linear, 60});
        lib.push_back({"double-bubble", twin});

        return lib;
    }();
    return library;
}

std::optional<BubbleScenario> find_scenario(std::string_view name) {
    for (const NamedScenario& entry : scenario_library()) {
        if (entry.name == name) return entry.scenario;
    }
    return std::nullopt;
}

}  // namespace bubblestat
