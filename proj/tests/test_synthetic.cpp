#include <doctest.h>

#include <cmath>
#include <vector>

#include "bubblestat/errors.hpp"
#include "bubblestat/synthetic.hpp"

using namespace bubblestat;

TEST_SUITE("synthetic") {

TEST_CASE("scenario validation") {
    BubbleScenario s;
    s.length = 1;
    CHECK_THROWS_AS(validate(s), ConfigError);

    s.length = 100;
    s.base_sigma = -0.01;
    CHECK_THROWS_AS(validate(s), ConfigError);
    s.base_sigma = 0.01;

    s.episodes.push_back({50, 40, 1.01, 0.05, BurstMode::none, 0});
    CHECK_THROWS_AS(validate(s), ConfigError);  // start >= end
    s.episodes[0] = {10, 200, 1.01, 0.05, BurstMode::none, 0};
    CHECK_THROWS_AS(validate(s), ConfigError);  // end > length
    s.episodes[0] = {10, 50, 0.99, 0.05, BurstMode::none, 0};
    CHECK_THROWS_AS(validate(s), ConfigError);  // shrinking bubble
    s.episodes[0] = {10, 50, 1.01, -0.1, BurstMode::none, 0};
    CHECK_THROWS_AS(validate(s), ConfigError);  // negative level
    s.episodes[0] = {10, 50, 1.01, 0.05, BurstMode::linear, 0};
    CHECK_THROWS_AS(validate(s), ConfigError);  // linear burst without length
    s.episodes[0] = {10, 50, 1.01, 0.05, BurstMode::instant, 0};
    s.episodes.push_back({40, 80, 1.01, 0.05, BurstMode::instant, 0});
    CHECK_THROWS_AS(validate(s), ConfigError);  // overlap
    s.episodes[1].start = 60;
    CHECK_NOTHROW(validate(s));
}

TEST_CASE("null scenario is a bare random walk") {
    const auto null_scenario = find_scenario("null");
    REQUIRE(null_scenario.has_value());
    CHECK(null_scenario->episodes.empty());

    BubbleScenario bare;
    bare.length = null_scenario->length;
    bare.base_sigma = null_scenario->base_sigma;
    bare.seed = null_scenario->seed;
    const PriceSeries a = generate_series(*null_scenario);
    const PriceSeries b = generate_series(bare);
    CHECK(a.closes == b.closes);  // bit-identical
    CHECK(a.dates == b.dates);
}

TEST_CASE("zero initial bubble leaves the walk untouched") {
    const BubbleScenario with = BubbleScenario::single(500, 0.01, 1.0, 100, 300, 0.0,
                                                       BurstMode::none, 0, 77);
    BubbleScenario without;
    without.length = 500;
    without.base_sigma = 0.01;
    without.seed = 77;
    CHECK(generate_series(with).closes == generate_series(without).closes);
}

TEST_CASE("determinism in the seed") {
    const auto bloom = find_scenario("bloom");
    REQUIRE(bloom.has_value());
    const PriceSeries a = generate_series(*bloom);
    const PriceSeries b = generate_series(*bloom);
    CHECK(a.closes == b.closes);

    BubbleScenario other = *bloom;
    other.seed += 1;
    CHECK(generate_series(other).closes != a.closes);
}

TEST_CASE("bubble component grows geometrically and bursts as configured") {
    // With a vanishing base_sigma the fundamental is exactly 100, so the
    // bubble path is observable as price - 100.
    auto scenario = BubbleScenario::single(400, 1e-300, 1.01, 100, 200, 0.05,
                                           BurstMode::instant, 0, 1);
    PriceSeries p = generate_series(scenario);
    for (std::size_t t = 0; t < 100; ++t) CHECK(p.closes[t] == doctest::Approx(100.0));
    CHECK(p.closes[100] == doctest::Approx(105.0));  // initial bubble 5% of 100
    for (std::size_t t = 100; t < 200; ++t) {
        const double b0 = p.closes[t] - 100.0;
        const double b1 = p.closes[t + 1] - 100.0;
        CHECK(b1 / b0 == doctest::Approx(1.01).epsilon(1e-12));
    }
    for (std::size_t t = 201; t < 400; ++t) CHECK(p.closes[t] == doctest::Approx(100.0));

    scenario.episodes[0].burst = BurstMode::none;
    p = generate_series(scenario);
    const double peak = p.closes[200] - 100.0;
    CHECK(peak == doctest::Approx(5.0 * std::pow(1.01, 100)).epsilon(1e-9));
    for (std::size_t t = 201; t < 400; ++t) {
        CHECK(p.closes[t] - 100.0 == doctest::Approx(peak));
    }

    scenario.episodes[0].burst = BurstMode::linear;
    scenario.episodes[0].burst_length = 50;
    p = generate_series(scenario);
    CHECK(p.closes[225] - 100.0 == doctest::Approx(peak / 2.0).epsilon(1e-9));
    for (std::size_t t = 250; t < 400; ++t) CHECK(p.closes[t] == doctest::Approx(100.0));
}

TEST_CASE("dates are consecutive weekdays from the epoch") {
    const auto null_scenario = find_scenario("null");
    const PriceSeries p = generate_series(*null_scenario);
    CHECK(p.dates.front() == Date::parse("2005-01-03"));
    for (std::size_t i = 0; i < p.size(); ++i) {
        CHECK(p.dates[i].is_weekday());
        if (i > 0) {
            CHECK(p.dates[i - 1].next_weekday() == p.dates[i]);
        }
    }
}

TEST_CASE("scenario library names") {
    CHECK(scenario_library().size() == 4);
    for (const char* name : {"null", "bloom", "bloom-and-crash", "double-bubble"}) {
        CHECK(find_scenario(name).has_value());
    }
    CHECK_FALSE(find_scenario("no-such-scenario").has_value());

    const auto twin = find_scenario("double-bubble");
    REQUIRE(twin.has_value());
    CHECK(twin->episodes.size() == 2);
    const auto crash = find_scenario("bloom-and-crash");
    REQUIRE(crash.has_value());
    REQUIRE(crash->episodes.size() == 1);
    CHECK(crash->episodes[0].burst == BurstMode::instant);
}

TEST_CASE("library scenarios keep prices positive across 1000 seeds") {
    for (const NamedScenario& entry : scenario_library()) {
        BubbleScenario s = entry.scenario;
        for (std::uint64_t seed = 0; seed < 1000; ++seed) {
            s.seed = seed;
            const PriceSeries p = generate_series(s);
            double min_close = p.closes[0];
            for (double c : p.closes) min_close = std::min(min_close, c);
            CHECK(min_close > 0.0);
        }
    }
}

TEST_CASE("generated csv is loadable") {
    const auto bloom = find_scenario("bloom");
    const PriceSeries p = generate_series(*bloom);
    std::ostringstream out;
    write_prices_csv(p, out);
    std::istringstream in(out.str());
    const PriceSeries q = load_prices(in);
    CHECK(q.size() == p.size());
}

}  // TEST_SUITE
